#include "json_io.hpp"

#include <set>

namespace cmdihedral::json_io {

json integer(Integer const & x)
{
    if (x.fits_slong_p())
        return x.get_si();
    return x.get_str();
}

json ideal(IdealRep const & I)
{
    return {{"b", integer(I.b)}, {"content", integer(I.content)}, {"n", integer(I.n)}, {"norm", integer(I.norm())}};
}

json prediction(SerrePrediction const & p)
{
    return {{"ell_relation", p.ell_relation},
            {"local_case", to_string(p.local_case)},
            {"mdk", integer(p.mdk)},
            {"n_prime", integer(p.n_prime)},
            {"n_rho", integer(p.n_rho)},
            {"nebentypus_conductor", p.nebentypus_conductor},
            {"weight", p.weight}};
}

json report(CongruenceReport const & r)
{
    json mism = json::array();
    for (auto const & m : r.mismatches)
        mism.push_back({{"left", m.left}, {"n", m.n}, {"right", m.right}});
    return {{"bound", r.bound},   {"checked", r.checked},     {"degree", r.degree},
            {"ell", r.ell},       {"mismatches", mism},       {"reduction", r.reduction},
            {"scope", r.scope},   {"verdict", r.verdict}};
}

json character(HeckeSpec const & s)
{
    return {{"class_part", s.class_part}, {"conductor", ideal(s.conductor)}, {"finite_part", s.finite_part}};
}

namespace {

json target(Scenario const & s)
{
    if (std::holds_alternative<TauTarget>(s.target))
        return "tau";
    EllipticCurve const & E = std::get<EllipticCurve>(s.target);
    return {{"curve", {integer(E.a1), integer(E.a2), integer(E.a3), integer(E.a4), integer(E.a6)}}};
}

json header(Scenario const & s)
{
    return {{"bound_mode", to_string(s.bound_mode)},
            {"disc", s.disc},
            {"ell", s.ell},
            {"name", s.name},
            {"target", target(s)},
            {"weight", s.weight}};
}

}  // namespace

json scenario_result(Scenario const & s, ScenarioResult const & r)
{
    json out = {{"candidates", r.candidates},
                {"delta_conductor", ideal(r.delta_conductor)},
                {"prediction", prediction(r.prediction)},
                {"report", report(r.report)},
                {"scenario", header(s)},
                {"verdict", r.report.verdict}};
    out["character"] = r.character ? character(*r.character) : json(nullptr);
    out["reduction_index"] = r.reduction_index ? json(*r.reduction_index) : json(nullptr);
    return out;
}

json search_result(Scenario const & s, SearchResult const & r)
{
    json matches = json::array();
    for (auto const & m : r.matches)
        matches.push_back({{"character", character(m.character->spec())},
                           {"order", m.character->w()},
                           {"reduction_index", m.reduction_index},
                           {"report", report(m.report)}});
    return {{"candidates", r.candidates}, {"diagnostics", r.diagnostics}, {"maps_tried", r.maps_tried},
            {"matches", matches},         {"rejected", r.rejected},       {"scenario", header(s)}};
}

json class_group(QuadraticField const & K)
{
    ClassGroup const cl = K.class_group();
    json forms = json::array();
    for (auto const & f : cl.forms())
        forms.push_back({integer(f.a), integer(f.b), integer(f.c)});
    json gens = json::array();
    for (auto g : cl.structure().generators)
        gens.push_back(g);
    return {{"class_number", cl.size()},
            {"disc", integer(K.D())},
            {"forms", forms},
            {"generators", gens},
            {"structure", cl.cyclic_orders()}};
}

// ---------------------------------------------------------------------------
// parsing

namespace {

[[noreturn]] void fail(std::string const & what)
{
    throw domain_error("scenario: " + what);
}

void only_keys(json const & obj, std::set<std::string> const & allowed, std::string const & where)
{
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            fail("unknown field \"" + it.key() + "\" in " + where);
}

std::int64_t get_int(json const & v, std::string const & what)
{
    if (!v.is_number_integer())
        fail(what + " must be an integer");
    return v.get<std::int64_t>();
}

Integer get_big(json const & v, std::string const & what)
{
    if (v.is_number_integer())
        return Integer(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_string()) {
        Integer x;
        if (x.set_str(v.get<std::string>(), 10) != 0)
            fail(what + " is not a decimal integer");
        return x;
    }
    fail(what + " must be an integer or a decimal string");
}

std::vector<std::int64_t> get_int_list(json const & v, std::string const & what)
{
    if (!v.is_array())
        fail(what + " must be an array of integers");
    std::vector<std::int64_t> out;
    for (auto const & x : v)
        out.push_back(get_int(x, what + " entry"));
    return out;
}

IdealRep get_ideal(json const & v, QuadraticField const & K, std::string const & what)
{
    if (!v.is_object())
        fail(what + " must be an object {n, b[, content]}");
    only_keys(v, {"b", "content", "n", "norm"}, what);
    if (!v.contains("n") || !v.contains("b"))
        fail(what + " needs fields n and b");
    Integer const content = v.contains("content") ? get_big(v["content"], what + ".content") : Integer(1);
    IdealRep const I = K.make_ideal(content, get_big(v["n"], what + ".n"), get_big(v["b"], what + ".b"));
    if (v.contains("norm") && get_big(v["norm"], what + ".norm") != I.norm())
        fail(what + ".norm does not match n and content");
    return I;
}

}  // namespace

Scenario parse_scenario(json const & doc)
{
    if (!doc.is_object())
        fail("document must be a JSON object");
    only_keys(doc,
              {"bound", "bound_mode", "char", "disc", "ell", "name", "perturb", "phi_conductor", "target", "weight"},
              "scenario");
    for (char const * key : {"disc", "weight", "ell", "char", "target"})
        if (!doc.contains(key))
            fail(std::string("missing field \"") + key + "\"");

    Scenario s;
    s.name = doc.value("name", std::string("custom"));
    s.disc = get_int(doc["disc"], "disc");
    s.weight = static_cast<int>(get_int(doc["weight"], "weight"));
    s.ell = get_int(doc["ell"], "ell");
    check_hypotheses(s.ell, s.disc, s.weight);
    QuadraticField const K(s.disc);

    json const & ch = doc["char"];
    if (ch.is_string()) {
        if (ch.get<std::string>() != "search")
            fail("char must be \"search\" or an object");
    } else if (ch.is_object()) {
        only_keys(ch, {"class_part", "conductor", "finite_part", "reduction"}, "char");
        if (!ch.contains("conductor") || !ch.contains("finite_part"))
            fail("char needs conductor and finite_part");
        CharacterChoice c;
        c.conductor = get_ideal(ch["conductor"], K, "char.conductor");
        c.finite_part = get_int_list(ch["finite_part"], "char.finite_part");
        if (ch.contains("class_part"))
            c.class_part = get_int_list(ch["class_part"], "char.class_part");
        if (ch.contains("reduction")) {
            std::int64_t const r = get_int(ch["reduction"], "char.reduction");
            if (r < 0)
                fail("char.reduction must be non-negative");
            c.reduction = static_cast<std::size_t>(r);
        }
        s.character = std::move(c);
    } else {
        fail("char must be \"search\" or an object");
    }

    json const & tg = doc["target"];
    if (tg.is_string() && tg.get<std::string>() == "tau") {
        s.target = TauTarget{};
    } else if (tg.is_object() && tg.size() == 1 && tg.contains("curve")) {
        json const & a = tg["curve"];
        if (!a.is_array() || a.size() != 5)
            fail("target.curve must list [a1, a2, a3, a4, a6]");
        s.target = EllipticCurve{get_big(a[0], "a1"), get_big(a[1], "a2"), get_big(a[2], "a3"), get_big(a[3], "a4"),
                                 get_big(a[4], "a6")};
    } else {
        fail("target must be \"tau\" or {\"curve\": [a1, a2, a3, a4, a6]}");
    }

    if (doc.contains("bound_mode")) {
        if (!doc["bound_mode"].is_string())
            fail("bound_mode must be a string");
        s.bound_mode = parse_bound_mode(doc["bound_mode"].get<std::string>());
    }
    if (doc.contains("phi_conductor"))
        s.phi_conductor = get_ideal(doc["phi_conductor"], K, "phi_conductor");
    if (doc.contains("bound"))
        s.bound = get_int(doc["bound"], "bound");
    if (doc.contains("perturb"))
        s.perturb = get_int(doc["perturb"], "perturb");
    validate(s);
    return s;
}

Scenario parse_scenario_text(std::string const & text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (json::parse_error const & e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
    return parse_scenario(doc);
}

}  // namespace cmdihedral::json_io

#include "cmdihedral/congruence.hpp"

#include "cmdihedral/kernels.hpp"

#include <algorithm>
#include <numeric>

namespace cmdihedral {

Integer EllipticCurve::discriminant() const
{
    Integer const b2 = a1 * a1 + 4 * a2;
    Integer const b4 = 2 * a4 + a1 * a3;
    Integer const b6 = a3 * a3 + 4 * a6;
    Integer const b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

namespace {

struct CurveModP {
    std::int64_t p, a1, a2, a3, a4, a6;

    CurveModP(EllipticCurve const & E, std::int64_t prime) : p(prime)
    {
        if (prime < 2 || prime > 100000 || !is_prime(prime))
            throw domain_error("curve_ap: p must be a prime <= 10^5");
        Integer const disc = E.discriminant();
        if (disc == 0)
            throw domain_error("curve_ap: singular curve");
        if (mpz_divisible_ui_p(disc.get_mpz_t(), static_cast<unsigned long>(prime)))
            throw domain_error("curve_ap: bad reduction at p = " + std::to_string(prime));
        auto r = [&](Integer const & a) {
            Integer m = a % static_cast<unsigned long>(prime);
            return mod_floor(to_i64(m), prime);
        };
        a1 = r(E.a1), a2 = r(E.a2), a3 = r(E.a3), a4 = r(E.a4), a6 = r(E.a6);
    }

    std::int64_t rhs(std::int64_t x) const { return ((((x + a2) * x + a4) % p) * x + a6) % p; }
};

}  // namespace

std::int64_t curve_ap(EllipticCurve const & E, std::int64_t p)
{
    CurveModP const c(E, p);
    if (p == 2)
        return curve_ap_naive(E, p);
    std::vector<signed char> chi(static_cast<std::size_t>(p), -1);
    chi[0] = 0;
    for (std::int64_t y = 1; y < p; ++y)
        chi[static_cast<std::size_t>(y * y % p)] = 1;
    // y^2 + b y = r has 1 + chi(b^2 + 4 r) solutions, so a_p = -sum chi(...)
    std::int64_t s = 0;
    for (std::int64_t x = 0; x < p; ++x) {
        std::int64_t const b = (c.a1 * x + c.a3) % p;
        s += chi[static_cast<std::size_t>((b * b + 4 * c.rhs(x)) % p)];
    }
    return -s;
}

std::int64_t curve_ap_naive(EllipticCurve const & E, std::int64_t p)
{
    CurveModP const c(E, p);
    std::int64_t points = 1;  // the point at infinity
    for (std::int64_t x = 0; x < p; ++x) {
        std::int64_t const r = c.rhs(x);
        std::int64_t const b = (c.a1 * x + c.a3) % p;
        for (std::int64_t y = 0; y < p; ++y)
            if ((y * y + b * y) % p == r)
                ++points;
    }
    return p + 1 - points;
}

std::vector<std::int64_t> frobenius_traces(EllipticCurve const & E, std::vector<std::int64_t> const & primes,
                                           int threads)
{
    std::vector<std::int64_t> out(primes.size());
    detail::parallel_for(0, static_cast<std::int64_t>(primes.size()), threads, [&](std::int64_t i) {
        out[static_cast<std::size_t>(i)] = curve_ap(E, primes[static_cast<std::size_t>(i)]);
    });
    return out;
}

std::vector<std::int64_t> frobenius_traces_serial(EllipticCurve const & E, std::vector<std::int64_t> const & primes)
{
    std::vector<std::int64_t> out;
    out.reserve(primes.size());
    for (std::int64_t p : primes)
        out.push_back(curve_ap(E, p));
    return out;
}

FFSeries reduce_expansion(ValueSeries const & f, ReductionMap const & m)
{
    if (!m.field)
        throw domain_error("reduce_expansion: invalid reduction map");
    FFSeries out;
    out.ring.field = m.field;
    out.coeffs = reduce_coefficients(f.coeffs, m, configured_threads());
    out.weight = f.weight;
    out.level = f.level;
    out.character = f.character;
    return out;
}

FFSeries reduce_int_expansion(IntSeries const & f, std::shared_ptr<FiniteField const> F)
{
    FFSeries out;
    out.coeffs.reserve(f.coeffs.size());
    for (auto const & c : f.coeffs)
        out.coeffs.push_back(F->from_integer(c));
    out.ring.field = std::move(F);
    out.weight = f.weight;
    out.level = f.level;
    out.character = f.character;
    return out;
}

FFSeries reduce_int_expansion(IntSeries const & f, std::int64_t ell)
{
    return reduce_int_expansion(f, std::make_shared<FiniteField const>(ell, 1));
}

CongruenceReport compare_at(FFSeries const & f, FFSeries const & g, std::vector<std::int64_t> const & indices)
{
    if (!(f.ring == g.ring))
        throw domain_error("compare: series live over different fields");
    CongruenceReport r;
    r.ell = f.ring.field->characteristic();
    r.degree = f.ring.field->degree();
    for (std::int64_t n : indices) {
        if (n < 1 || static_cast<std::size_t>(n) > f.prec() || static_cast<std::size_t>(n) > g.prec())
            throw domain_error("compare: insufficient precision for index " + std::to_string(n));
        auto const i = static_cast<std::size_t>(n);
        if (f.coeffs[i] != g.coeffs[i])
            r.mismatches.push_back({n, f.coeffs[i], g.coeffs[i]});
        r.bound = std::max(r.bound, n);
    }
    r.checked = static_cast<std::int64_t>(indices.size());
    r.verdict = r.mismatches.empty();
    return r;
}

CongruenceReport compare(FFSeries const & f, FFSeries const & g, std::int64_t bound)
{
    if (bound < 1)
        throw domain_error("compare: bound must be positive");
    std::vector<std::int64_t> idx(static_cast<std::size_t>(bound));
    std::iota(idx.begin(), idx.end(), 1);
    CongruenceReport r = compare_at(f, g, idx);
    r.bound = bound;
    return r;
}

// ---------------------------------------------------------------------------
// scenarios

Scenario builtin_scenario(std::string const & name)
{
    Scenario s;
    s.name = name;
    if (name == "delta23") {
        QuadraticField const K(-23);
        s.disc = -23;
        s.weight = 12;
        s.ell = 23;
        s.character = CharacterChoice{K.splitting_type(23).primes.at(0), {11}, {}, std::nullopt};
        s.target = TauTarget{};
        s.bound_mode = BoundMode::standard;
        return s;
    }
    if (name == "curve65533") {
        QuadraticField const K(-71);
        s.disc = -71;
        s.weight = 2;
        s.ell = 7;
        s.target = EllipticCurve{0, -1, 1, -18507, -989382};
        s.phi_conductor = K.splitting_type(71).primes.at(0);
        return s;
    }
    throw domain_error("unknown builtin scenario \"" + name + "\"");
}

std::vector<std::string> builtin_names()
{
    return {"curve65533", "delta23"};
}

void validate(Scenario const & s)
{
    check_hypotheses(s.ell, s.disc, s.weight);
    if (std::holds_alternative<TauTarget>(s.target) && s.weight != 12)
        throw domain_error("scenario: the tau target has weight 12");
    if (auto const * E = std::get_if<EllipticCurve>(&s.target)) {
        if (s.weight != 2)
            throw domain_error("scenario: a curve target has weight 2");
        if (E->discriminant() == 0)
            throw domain_error("scenario: singular curve");
    }
    if (s.bound && (*s.bound < 1 || *s.bound > 100000))
        throw domain_error("scenario: bound must lie in [1, 10^5]");
    if (s.perturb && *s.perturb < 1)
        throw domain_error("scenario: perturbation index must be positive");
}

namespace {

DihedralDatum datum_of(Scenario const & s)
{
    QuadraticField const K(s.disc);
    return {s.ell, s.disc, s.weight, s.phi_conductor.value_or(K.unit_ideal())};
}

/// Target coefficients as integers together with the indices to compare.
struct Target {
    IntSeries series;
    std::vector<std::int64_t> indices;
    std::string scope;
    std::int64_t bound = 0;
};

Target build_target(Scenario const & s, SerrePrediction const & pred)
{
    Target t;
    if (std::holds_alternative<TauTarget>(s.target)) {
        t.bound = s.bound ? *s.bound : to_i64(sturm_bound(s.weight, pred.n_prime, s.bound_mode));
        t.series = drop_multiples(delta_qexp(static_cast<std::size_t>(t.bound)), s.ell);
        t.indices.resize(static_cast<std::size_t>(t.bound));
        std::iota(t.indices.begin(), t.indices.end(), 1);
        t.scope = "all";
    } else {
        EllipticCurve const & E = std::get<EllipticCurve>(s.target);
        t.bound = s.bound.value_or(500);
        Integer const bad = E.discriminant() * s.ell * pred.n_prime;
        for (std::int64_t p : primes_up_to(t.bound))
            if (!mpz_divisible_ui_p(bad.get_mpz_t(), static_cast<unsigned long>(p)))
                t.indices.push_back(p);
        t.series.coeffs.assign(static_cast<std::size_t>(t.bound) + 1, 0);
        auto const ap = frobenius_traces(E, t.indices, configured_threads());
        for (std::size_t i = 0; i < ap.size(); ++i)
            t.series.coeffs[static_cast<std::size_t>(t.indices[i])] = static_cast<long>(ap[i]);
        t.series.weight = 2;
        t.scope = "good_primes";
    }
    if (s.perturb) {
        if (*s.perturb > t.bound)
            throw domain_error("scenario: perturbation index exceeds the bound");
        t.series.coeffs[static_cast<std::size_t>(*s.perturb)] += 1;
    }
    return t;
}

/// Reports for every reduction map of chi, in map order.
std::vector<std::pair<ReductionMap, CongruenceReport>> check_character(HeckeChar const & chi, Scenario const & s,
                                                                       Target const & t)
{
    ValueSeries const theta = theta_series(chi, static_cast<std::size_t>(t.bound));
    std::vector<std::pair<ReductionMap, CongruenceReport>> out;
    for (auto & m : build_reductions(chi.ring(), s.ell, chi.spec().class_part, max_reduction_fanout)) {
        FFSeries const lhs = reduce_int_expansion(t.series, m.field);
        CongruenceReport r = compare_at(lhs, reduce_expansion(theta, m), t.indices);
        r.bound = t.bound;
        r.scope = t.scope;
        r.reduction = m.images;
        out.emplace_back(std::move(m), std::move(r));
    }
    return out;
}

/// Index of the report with fewest mismatches (first on ties); size() if empty.
std::size_t closest(std::vector<std::pair<ReductionMap, CongruenceReport>> const & checked)
{
    std::size_t best = checked.size();
    for (std::size_t i = 0; i < checked.size(); ++i)
        if (best == checked.size() || checked[i].second.mismatches.size() < checked[best].second.mismatches.size())
            best = i;
    return best;
}

HeckeSpec spec_of(Scenario const & s, CharacterChoice const & c)
{
    return {s.disc, s.weight, c.conductor, c.finite_part, c.class_part, {s.ell}};
}

}  // namespace

namespace {

struct Candidates {
    std::vector<std::shared_ptr<HeckeChar const>> chars;
    std::int64_t rejected = 0;
};

/// Valid characters of conductor exactly f, order <= max_search_order and
/// prime to ell, in residue-group exponent order.
Candidates enumerate_candidates(Scenario const & s, IdealRep const & f)
{
    Candidates out;
    QuadraticField const K(s.disc);
    ResidueGroup const G(K, f);
    std::vector<std::int64_t> const & orders = G.orders();
    std::vector<std::int64_t> e(orders.size(), 0);
    for (std::int64_t code = 0; code < G.order(); ++code) {
        std::int64_t c = code;
        std::int64_t w = 1;
        for (std::size_t i = 0; i < orders.size(); ++i) {
            e[i] = c % orders[i];
            c /= orders[i];
            w = lcm_i64(w, orders[i] / gcd_i64(e[i], orders[i]));
        }
        if (w > max_search_order || w % s.ell == 0) {
            ++out.rejected;
            continue;
        }
        try {
            out.chars.push_back(std::make_shared<HeckeChar const>(HeckeSpec{s.disc, s.weight, f, e, {}, {s.ell}}));
        } catch (domain_error const &) {
            ++out.rejected;
        }
    }
    return out;
}

}  // namespace

SearchResult search_matching_char(Scenario const & s)
{
    validate(s);
    SearchResult out;
    SerrePrediction const pred = predict(datum_of(s));
    Target const t = build_target(s, pred);
    Candidates const cand = enumerate_candidates(s, delta_conductor(datum_of(s)));
    out.candidates = static_cast<std::int64_t>(cand.chars.size());
    out.rejected = cand.rejected;
    for (auto const & chi : cand.chars) {
        auto checked = check_character(*chi, s, t);
        out.maps_tried += static_cast<std::int64_t>(checked.size());
        for (std::size_t i = 0; i < checked.size(); ++i)
            if (checked[i].second.verdict)
                out.matches.push_back({chi, i, std::move(checked[i].first), std::move(checked[i].second)});
    }
    if (out.candidates == 0)
        out.diagnostics.push_back("no finite part gives a valid character of order <= " +
                                  std::to_string(max_search_order) + " prime to ell");
    else if (out.matches.empty())
        out.diagnostics.push_back("no candidate character reduces to the target up to the bound");
    return out;
}

ScenarioResult run_scenario(Scenario const & s)
{
    validate(s);
    ScenarioResult out;
    out.prediction = predict(datum_of(s));
    out.delta_conductor = delta_conductor(datum_of(s));

    if (!s.character) {
        SearchResult sr = search_matching_char(s);
        out.candidates = sr.candidates;
        if (!sr.matches.empty()) {
            Match const & m = sr.matches.front();
            out.character = m.character->spec();
            out.reduction_index = m.reduction_index;
            out.report = m.report;
            return out;
        }
        // nothing verifies: report the closest (character, map), first on ties
        Target const t = build_target(s, out.prediction);
        for (auto const & chi : enumerate_candidates(s, out.delta_conductor).chars) {
            auto checked = check_character(*chi, s, t);
            std::size_t const i = closest(checked);
            if (i < checked.size() &&
                (!out.character || checked[i].second.mismatches.size() < out.report.mismatches.size())) {
                out.character = chi->spec();
                out.reduction_index = i;
                out.report = checked[i].second;
            }
        }
        if (out.character)
            return out;
        throw domain_error("scenario: no valid candidate character" +
                           (sr.diagnostics.empty() ? std::string() : "; " + sr.diagnostics.front()));
    }

    HeckeChar const chi(spec_of(s, *s.character));
    if (!(chi.conductor() == out.delta_conductor))
        throw domain_error("scenario: character conductor " + chi.conductor().str() +
                           " differs from the predicted " + out.delta_conductor.str());
    Target const t = build_target(s, out.prediction);
    auto checked = check_character(chi, s, t);
    if (checked.empty())
        throw domain_error("scenario: no reduction map for the character");
    std::size_t idx = 0;
    if (s.character->reduction) {
        idx = *s.character->reduction;
        if (idx >= checked.size())
            throw domain_error("scenario: reduction index out of range");
    } else {
        idx = closest(checked);
    }
    out.character = chi.spec();
    out.reduction_index = idx;
    out.report = checked[idx].second;
    out.candidates = 1;
    return out;
}

}  // namespace cmdihedral

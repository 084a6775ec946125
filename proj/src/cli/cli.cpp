#include "cmdihedral/cli.hpp"

#include "cmdihedral/kernels.hpp"
#include "json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace cmdihedral::cli {

namespace {

using json_io::json;

struct Options {
    std::string output;
    // classgroup / predict
    std::int64_t disc = 0;
    std::int64_t ell = 0;
    int weight = 0;
    std::string cond_norm;
    // tau
    std::int64_t prec = 0;
    // verify / search
    std::string scenario_path;
    std::string builtin;
    std::optional<std::int64_t> perturb;
    std::string bound_mode;
};

void emit(json const & doc, Options const & o, std::ostream & out)
{
    std::string const text = doc.dump(2) + "\n";
    if (o.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.output, std::ios::binary);
    if (!f || !(f << text))
        throw domain_error("cannot write " + o.output);
}

Scenario load_scenario(Options const & o)
{
    Scenario s;
    if (!o.builtin.empty()) {
        s = builtin_scenario(o.builtin);
    } else {
        std::ifstream f(o.scenario_path, std::ios::binary);
        if (!f)
            throw domain_error("cannot read scenario file " + o.scenario_path);
        std::stringstream buf;
        buf << f.rdbuf();
        s = json_io::parse_scenario_text(buf.str());
    }
    if (o.perturb)
        s.perturb = *o.perturb;
    if (!o.bound_mode.empty())
        s.bound_mode = parse_bound_mode(o.bound_mode);
    validate(s);
    return s;
}

int cmd_classgroup(Options const & o, std::ostream & out, std::ostream & err)
{
    QuadraticField const K(o.disc);
    json const doc = json_io::class_group(K);
    err << "h(" << o.disc << ") = " << doc["class_number"].get<std::size_t>() << "\n";
    emit(doc, o, out);
    return ok;
}

int cmd_predict(Options const & o, std::ostream & out, std::ostream & err)
{
    Integer n_rho;
    if (n_rho.set_str(o.cond_norm, 10) != 0 || n_rho < 1)
        throw domain_error("--cond-norm must be a positive integer");
    SerrePrediction const p = predict_from_level(o.disc, o.ell, o.weight, n_rho);
    json doc = json_io::prediction(p);
    doc["disc"] = o.disc;
    doc["ell"] = o.ell;
    err << "N' = " << p.n_prime << "\n";
    emit(doc, o, out);
    return ok;
}

int cmd_tau(Options const & o, std::ostream & out, std::ostream & err)
{
    if (o.prec < 1 || o.prec > 100000)
        throw domain_error("--prec must lie in [1, 10^5]");
    IntSeries const d = delta_qexp(static_cast<std::size_t>(o.prec));
    json doc = {{"coefficients", d.coefficient_strings()}, {"level", 1}, {"prec", o.prec}, {"weight", 12}};
    err << "tau(1.." << o.prec << ")\n";
    emit(doc, o, out);
    return ok;
}

int cmd_verify(Options const & o, std::ostream & out, std::ostream & err)
{
    Scenario const s = load_scenario(o);
    ScenarioResult const r = run_scenario(s);
    err << s.name << ": N' = " << r.prediction.n_prime << ", checked " << r.report.checked << " up to "
        << r.report.bound << ", " << r.report.mismatches.size() << " mismatches, verdict "
        << (r.report.verdict ? "true" : "false") << "\n";
    emit(json_io::scenario_result(s, r), o, out);
    return r.report.verdict ? ok : mismatch;
}

int cmd_search(Options const & o, std::ostream & out, std::ostream & err)
{
    Scenario s = load_scenario(o);
    s.character.reset();
    SearchResult const r = search_matching_char(s);
    err << s.name << ": " << r.candidates << " candidate characters, " << r.maps_tried << " reductions, "
        << r.matches.size() << " matches\n";
    for (auto const & d : r.diagnostics)
        err << "  " << d << "\n";
    emit(json_io::search_result(s, r), o, out);
    return r.matches.empty() ? mismatch : ok;
}

}  // namespace

int run(std::vector<std::string> const & args, std::ostream & out, std::ostream & err)
{
    Options o;
    CLI::App app{"CM theta series and dihedral mod-ell congruences", "cmdihedral"};
    app.require_subcommand(1);
    app.add_option("-o,--output", o.output, "Write the JSON result to this file instead of stdout");

    auto * classgroup = app.add_subcommand("classgroup", "Reduced forms and class group structure");
    classgroup->add_option("--disc", o.disc, "Negative fundamental discriminant")->required();

    auto * predict = app.add_subcommand("predict", "Serre weight and level prediction");
    predict->add_option("--disc", o.disc, "Negative fundamental discriminant")->required();
    predict->add_option("--ell", o.ell, "Prime ell >= 5")->required();
    predict->add_option("--weight", o.weight, "Weight k, 2 <= k <= ell - 1")->required();
    predict->add_option("--cond-norm", o.cond_norm, "N(rho), the prime-to-ell conductor")->required();

    auto * tau = app.add_subcommand("tau", "Ramanujan tau(1..prec)");
    tau->add_option("--prec", o.prec, "Number of coefficients, at most 10^5")->required();

    auto add_scenario = [&](CLI::App * sub) {
        auto * file = sub->add_option("--scenario", o.scenario_path, "Scenario JSON file");
        auto * builtin = sub->add_option("--builtin", o.builtin, "Builtin scenario")
                             ->check(CLI::IsMember(builtin_names()));
        file->excludes(builtin);
        builtin->excludes(file);
        sub->add_option("--bound-mode", o.bound_mode, "standard or paper")
            ->check(CLI::IsMember({"standard", "paper"}));
        sub->add_option("--perturb", o.perturb, "Test hook: add 1 to the target coefficient at this index");
        sub->callback([&, file, builtin] {
            if (file->count() + builtin->count() != 1)
                throw CLI::ValidationError("exactly one of --scenario and --builtin is required");
        });
    };
    auto * verify = app.add_subcommand("verify", "Run a scenario and report the congruence check");
    add_scenario(verify);
    auto * search = app.add_subcommand("search", "List every matching character of a scenario");
    add_scenario(search);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (CLI::ParseError const & e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return ok;
        }
        err << "error: " << e.what() << "\n";
        return invalid_input;
    }

    try {
        configured_threads();  // reject a bad CM_DIHEDRAL_THREADS before any work
        if (*classgroup)
            return cmd_classgroup(o, out, err);
        if (*predict)
            return cmd_predict(o, out, err);
        if (*tau)
            return cmd_tau(o, out, err);
        if (*verify)
            return cmd_verify(o, out, err);
        return cmd_search(o, out, err);
    } catch (domain_error const & e) {
        err << "error: " << e.what() << "\n";
    } catch (json::exception const & e) {
        err << "error: " << e.what() << "\n";
    }
    return invalid_input;
}

}  // namespace cmdihedral::cli

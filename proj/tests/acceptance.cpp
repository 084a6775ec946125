// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "cmdihedral/cli.hpp"
#include "cmdihedral/congruence.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace cmdihedral;

namespace {

/// Collects failed checks of one criterion.
struct Check {
    std::vector<std::string> failures;

    void operator()(bool ok, std::string const & what)
    {
        if (!ok)
            failures.push_back(what);
    }
};

struct Criterion {
    std::string id;
    std::string title;
    double limit_seconds;  // 0: no runtime requirement
    std::function<void(Check &)> body;
};

/// Reduced forms of discriminant D counted by scanning (a, b) with c = (b^2 - D) / 4a.
std::size_t brute_class_number(long D)
{
    std::size_t h = 0;
    for (long a = 1; 3 * a * a <= -D; ++a)
        for (long b = -a + 1; b <= a; ++b) {
            long const num = b * b - D;
            if (num % (4 * a) != 0)
                continue;
            long const c = num / (4 * a);
            if (c < a || (c == a && b < 0))
                continue;
            if (std::gcd(std::gcd(a, std::labs(b)), c) != 1)
                continue;
            ++h;
        }
    return h;
}

void class_group_axioms(Check & check, long D)
{
    ClassGroup const cl = QuadraticField(D).class_group();
    std::size_t const h = cl.size();
    for (std::size_t x = 0; x < h; ++x) {
        check(cl.compose(x, cl.identity()) == x, "identity");
        check(cl.compose(x, cl.inverse(x)) == cl.identity(), "inverse");
        for (std::size_t y = 0; y < h; ++y) {
            check(cl.compose(x, y) == cl.compose(y, x), "commutativity");
            for (std::size_t z = 0; z < h; ++z)
                check(cl.compose(cl.compose(x, y), z) == cl.compose(x, cl.compose(y, z)), "associativity");
        }
    }
}

void ac1(Check & check)
{
    for (auto [D, h] : {std::pair{-23L, 3UL}, std::pair{-71L, 7UL}}) {
        ClassGroup const cl = QuadraticField(D).class_group();
        check(cl.size() == h, "h(" + std::to_string(D) + ") = " + std::to_string(h));
        check(brute_class_number(D) == h, "brute-force count for " + std::to_string(D));
        check(cl.cyclic_orders() == std::vector<std::int64_t>{static_cast<std::int64_t>(h)},
              "cyclic structure for " + std::to_string(D));
        class_group_axioms(check, D);
    }
}

void ac2(Check & check)
{
    IntSeries const d = delta_qexp(2000);
    std::vector<long> const expected{1, -24, 252, -1472, 4830};
    for (std::size_t n = 1; n <= 5; ++n)
        check(d[n] == expected[n - 1], "tau(" + std::to_string(n) + ")");
    IntSeries const p = delta_qexp_product(2000);
    check(d.coeffs == p.coeffs, "pentagonal and product expansions agree to 2000");
}

void ac3(Check & check)
{
    // exact c_2 = -21a^2 - 4a + 84 and c_3 = 53a^2 + 251a - 212 reduced at a = 5 in F_23
    check(mod_floor(-21 * 25 - 4 * 5 + 84, 23) == 22, "reference c_2 reduces to 22");
    check(mod_floor(53 * 25 + 251 * 5 - 212, 23) == 22, "reference c_3 reduces to 22");

    Scenario s = builtin_scenario("delta23");
    s.character.reset();
    SearchResult const found = search_matching_char(s);
    check(!found.matches.empty(), "search finds a character");

    for (BoundMode mode : {BoundMode::paper, BoundMode::standard}) {
        Scenario e = builtin_scenario("delta23");
        e.bound_mode = mode;
        ScenarioResult const r = run_scenario(e);
        std::int64_t const bound = mode == BoundMode::paper ? 92 : 552;
        check(r.report.bound == bound && r.report.checked == bound, "bound " + std::to_string(bound));
        check(r.report.verdict, "tau'(n) = c_n for n <= " + std::to_string(bound));
        if (!r.character || !r.reduction_index)
            continue;
        HeckeChar const chi(*r.character);
        auto const maps = build_reductions(chi.ring(), 23);
        FFSeries const red = reduce_expansion(theta_series(chi, 3), maps.at(*r.reduction_index));
        check(red[2] == 22 && red[3] == 22, "reduced c_2 = c_3 = 22");
    }
    for (auto const & m : found.matches) {
        FFSeries const red = reduce_expansion(theta_series(*m.character, 3), m.map);
        check(red[2] == 22 && red[3] == 22, "every match has c_2 = c_3 = 22");
    }
}

void ac4(Check & check)
{
    SerrePrediction const a = predict_from_level(-23, 23, 12, 1);
    check(a.n_prime == 529 && a.ell_relation == "2k-1", "(-23, 23, 12) -> 529 with ell = 2k - 1");
    QuadraticField const K23(-23);
    SerrePrediction const a2 = predict({23, -23, 12, K23.unit_ideal()});
    check(a2.n_prime == 529, "Delta datum -> 529");
    SerrePrediction const b = predict_from_level(-71, 7, 2, 5041);
    check(b.n_prime == 5041, "(-71, 7, 2, 5041) -> 5041");
    QuadraticField const K71(-71);
    check(predict({7, -71, 2, K71.splitting_type(71).primes.at(0)}).n_prime == 5041, "curve datum -> 5041");
    int split_cases = 0;
    for (long D : {-23L, -71L, -7L, -8L, -11L})
        for (std::int64_t ell : primes_up_to(61)) {
            if (ell < 5 || kronecker(D, ell) != 1)
                continue;
            for (long n_rho : {1L, -D, 4L * -D, 9L})
                for (int k : {2, 3}) {
                    check(predict_from_level(D, ell, k, n_rho).n_prime == n_rho,
                          "split (" + std::to_string(D) + ", " + std::to_string(ell) + ") keeps N(rho)");
                    ++split_cases;
                }
        }
    check(split_cases > 50, "enough split cases");
}

void ac5(Check & check)
{
    check(predict_conductor_at_v(0, 23, 12, 1, false) == 1, "(0, 23, 12, 1) -> 1");
    for (std::int64_t ell : primes_up_to(97)) {
        if (ell < 5)
            continue;
        for (int k = 2; k <= ell - 1; ++k)
            for (int f : {1, 2})
                for (int ord = 0; ord <= 3; ++ord)
                    for (bool match : {false, true}) {
                        int expect;
                        if (ord >= 2)
                            expect = ord;
                        else if (ord == 1)
                            expect = match ? 0 : 1;
                        else {
                            std::int64_t const q = f == 1 ? ell : ell * ell;
                            expect = (k - 1) % (q - 1) == 0 ? 0 : 1;
                        }
                        check(predict_conductor_at_v(ord, ell, k, f, match) == expect,
                              "table entry ell=" + std::to_string(ell) + " k=" + std::to_string(k));
                    }
    }
}

void ac6(Check & check)
{
    QuadraticField const K(-23);
    HeckeChar const chi({-23, 12, K.splitting_type(23).primes.at(0), {11}, {}, {23}});
    Nebentypus const n = nebentypus(chi);
    check(n.eta == DirichletChar::kronecker_char(-23, 23), "eta = (-23/.)");
    check(n.eps.conductor() == 1, "eps has conductor 1");
    DirichletChar const mu = twist_char(n.eps, 23);
    check(mu.is_trivial(), "mu trivial");
    check(twisted_level(529, mu.conductor()) == 529, "twisted level 529");

    // characters of orders 7 and 49 modulo 343 (3 generates (Z/343)^x)
    std::vector<std::int64_t> t(343, -1);
    for (std::int64_t i = 0, x = 1; i < 294; ++i, x = x * 3 % 343)
        t[static_cast<std::size_t>(x)] = i;
    DirichletChar const g(343, 294, t);
    for (std::int64_t e : {42, 6}) {
        DirichletChar const eps = g.pow(e);
        DirichletChar const m = twist_char(eps, 7);
        check(eps.order() == 294 / e, "eps of order " + std::to_string(294 / e));
        check(m.mul(m).mul(eps).is_trivial(), "mu^2 eps = 1 for order " + std::to_string(eps.order()));
    }
}

void ac7(Check & check)
{
    Scenario const s = builtin_scenario("curve65533");
    EllipticCurve const & E = std::get<EllipticCurve>(s.target);
    SearchResult const found = search_matching_char(s);
    check(!found.matches.empty(), "search finds a character");
    QuadraticField const K(-71);
    IdealRep const p71 = K.splitting_type(71).primes.at(0);
    std::vector<std::int64_t> good;
    for (std::int64_t p : primes_up_to(500))
        if (p != 7 && p != 13 && p != 71)
            good.push_back(p);
    for (auto const & m : found.matches) {
        check(m.character->weight() == 2, "weight 2");
        check(m.character->conductor() == p71, "conductor (sqrt -71)");
        check(m.report.verdict && m.report.checked == static_cast<std::int64_t>(good.size()),
              "a_p = c_p at every good p <= 500");
        // recheck coefficientwise from scratch
        FFSeries const red = reduce_expansion(theta_series(*m.character, 500), m.map);
        for (std::int64_t p : good) {
            FiniteField::elem const ap = m.map.field->from_int(curve_ap(E, p));
            check(red[p] == ap, "a_p = c_p at p = " + std::to_string(p));
            if (kronecker(-71, p) == -1)
                check(ap == 0 && red[p] == 0, "inert p = " + std::to_string(p) + " gives 0");
        }
    }
}

void ac8(Check & check)
{
    for (long D : {-23L, -71L, -4L, -7L, -8L, -11L}) {
        QuadraticField const K(D);
        for (std::int64_t n = 1; n <= 200; ++n) {
            long expected = 0;
            for (std::int64_t d : divisors(n))
                expected += kronecker(D, d);
            check(static_cast<long>(K.ideals_of_norm(n).size()) == expected,
                  "D=" + std::to_string(D) + " n=" + std::to_string(n));
        }
    }
}

int run_cli(std::vector<std::string> const & args, std::string * out = nullptr)
{
    std::ostringstream o, e;
    int const code = cli::run(args, o, e);
    if (out)
        *out = o.str();
    return code;
}

void ac9(Check & check)
{
    for (std::string const name : {"delta23", "curve65533"}) {
        std::string first, second;
        check(run_cli({"verify", "--builtin", name}, &first) == 0, name + " exits 0");
        check(run_cli({"verify", "--builtin", name}, &second) == 0, name + " exits 0 again");
        check(!first.empty() && first == second, name + " report is byte-identical");
    }
    check(run_cli({"verify", "--builtin", "delta23", "--perturb", "5"}) == 1, "perturbed target exits 1");

    std::string const dir = std::filesystem::temp_directory_path().string();
    std::string const corrupt = dir + "/cmdihedral_acceptance_corrupt.json";
    std::string const valid = dir + "/cmdihedral_acceptance_valid.json";
    std::ofstream(corrupt) << "{\"disc\": -23, \"weight\": 12, \"ell\":";
    std::ofstream(valid) << R"({"disc": -23, "weight": 12, "ell": 23, "target": "tau", "bound_mode": "paper",
        "char": {"conductor": {"n": 23, "b": 23}, "finite_part": [11]}})";
    check(run_cli({"verify", "--scenario", valid}) == 0, "valid scenario file exits 0");
    check(run_cli({"verify", "--scenario", corrupt}) == 2, "corrupted scenario exits 2");
    check(run_cli({"verify", "--scenario", dir + "/cmdihedral_missing.json"}) == 2, "missing file exits 2");
    check(run_cli({"verify"}) == 2, "no scenario exits 2");
    check(run_cli({"verify", "--builtin", "delta24"}) == 2, "unknown builtin exits 2");
    check(run_cli({"predict", "--disc", "-23", "--ell", "23", "--weight", "23", "--cond-norm", "1"}) == 2,
          "k = ell exits 2");
    check(run_cli({"classgroup", "--disc", "-20"}) == 0, "classgroup exits 0");
    check(run_cli({"classgroup", "--disc", "-12"}) == 2, "non-fundamental discriminant exits 2");
    check(run_cli({"tau", "--prec", "0"}) == 2, "tau --prec 0 exits 2");
    std::remove(corrupt.c_str());
    std::remove(valid.c_str());
}

}  // namespace

int main()
{
    std::vector<Criterion> const criteria{
        {"AC1", "class groups h(-23) = 3, h(-71) = 7, group axioms", 1.0, ac1},
        {"AC2", "Delta coefficients and two expansion routes to 2000", 5.0, ac2},
        {"AC3", "Delta mod 23 congruence to 92 and 552, c_2 = c_3 = 22", 30.0, ac3},
        {"AC4", "level, weight and ell relation predictions", 0.0, ac4},
        {"AC5", "conductor case rules on the exhaustive sweep", 0.0, ac5},
        {"AC6", "nebentypus and twisting", 0.0, ac6},
        {"AC7", "curve 65533 mod 7 matches a CM form at good p <= 500", 120.0, ac7},
        {"AC8", "ideal counts equal divisor sums of kronecker(D, .)", 1.0, ac8},
        {"AC9", "deterministic reports and exit-code contract", 0.0, ac9},
    };
    int failed = 0;
    for (auto const & c : criteria) {
        Check check;
        auto const t0 = std::chrono::steady_clock::now();
        try {
            c.body(check);
        } catch (std::exception const & e) {
            check(false, std::string("exception: ") + e.what());
        }
        double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_seconds > 0 && secs > c.limit_seconds)
            check(false, "runtime " + std::to_string(secs) + " s exceeds " + std::to_string(c.limit_seconds) + " s");
        bool const ok = check.failures.empty();
        failed += ok ? 0 : 1;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.3f s", secs);
        std::cout << c.id << ' ' << (ok ? "PASS" : "FAIL") << "  " << c.title << "  (" << timing << ")\n";
        std::set<std::string> shown;
        for (auto const & f : check.failures)
            if (shown.insert(f).second && shown.size() <= 5)
                std::cout << "    failed: " << f << "\n";
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
    return failed == 0 ? 0 : 1;
}

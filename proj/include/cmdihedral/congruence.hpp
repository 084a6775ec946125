#pragma once

// Mod-ell comparison of theta series with target eigenforms: the Ramanujan
// Delta function or the newform of an elliptic curve over Q.

#include "cmdihedral/qseries.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace cmdihedral {

/// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct EllipticCurve {
    Integer a1, a2, a3, a4, a6;

    Integer discriminant() const;
    friend bool operator==(EllipticCurve const &, EllipticCurve const &) = default;
};

/// a_p = p + 1 - #E(F_p) by counting, per x, the roots of the quadratic in y.
/// Requires p prime, p <= 10^5 and p not dividing the discriminant.
std::int64_t curve_ap(EllipticCurve const & E, std::int64_t p);
/// Same count by a double loop over all (x, y); O(p^2), for cross-checks.
std::int64_t curve_ap_naive(EllipticCurve const & E, std::int64_t p);

std::vector<std::int64_t> frobenius_traces(EllipticCurve const & E, std::vector<std::int64_t> const & primes,
                                           int threads);
std::vector<std::int64_t> frobenius_traces_serial(EllipticCurve const & E, std::vector<std::int64_t> const & primes);

FFSeries reduce_expansion(ValueSeries const & f, ReductionMap const & m);
/// Coefficients mod ell, placed in the prime field of F (default F_ell).
FFSeries reduce_int_expansion(IntSeries const & f, std::shared_ptr<FiniteField const> F);
FFSeries reduce_int_expansion(IntSeries const & f, std::int64_t ell);

struct Mismatch {
    std::int64_t n;
    FiniteField::elem left;
    FiniteField::elem right;

    friend bool operator==(Mismatch const &, Mismatch const &) = default;
};

struct CongruenceReport {
    std::int64_t ell = 0;
    int degree = 1;
    /// Generator images of the reduction map (empty for integer-only comparisons).
    std::vector<FiniteField::elem> reduction;
    std::int64_t bound = 0;
    /// "all" (every 1 <= n <= bound) or "good_primes".
    std::string scope = "all";
    std::int64_t checked = 0;
    std::vector<Mismatch> mismatches;
    bool verdict = true;
};

/// Coefficientwise comparison for 1 <= n <= bound.
CongruenceReport compare(FFSeries const & f, FFSeries const & g, std::int64_t bound);
/// Comparison at the listed indices only (each <= both precisions).
CongruenceReport compare_at(FFSeries const & f, FFSeries const & g, std::vector<std::int64_t> const & indices);

struct TauTarget {
    friend bool operator==(TauTarget const &, TauTarget const &) = default;
};

struct CharacterChoice {
    IdealRep conductor;
    std::vector<std::int64_t> finite_part;
    std::vector<std::int64_t> class_part;
    /// Index into build_reductions; unset means the first map that verifies.
    std::optional<std::size_t> reduction;
};

struct Scenario {
    std::string name;
    std::int64_t disc = 0;
    int weight = 2;
    std::int64_t ell = 0;
    /// Unset: search all candidate characters.
    std::optional<CharacterChoice> character;
    std::variant<TauTarget, EllipticCurve> target;
    BoundMode bound_mode = BoundMode::standard;
    /// Prime-to-ell conductor of phi; defaults to the unit ideal.
    std::optional<IdealRep> phi_conductor;
    /// Overrides the Sturm bound (Delta) or the prime bound 500 (curves).
    std::optional<std::int64_t> bound;
    /// Test hook: add 1 to the target coefficient at this index.
    std::optional<std::int64_t> perturb;
};

Scenario builtin_scenario(std::string const & name);
std::vector<std::string> builtin_names();
void validate(Scenario const & s);

struct Match {
    std::shared_ptr<HeckeChar const> character;
    std::size_t reduction_index = 0;
    ReductionMap map;
    CongruenceReport report;
};

struct SearchResult {
    std::vector<Match> matches;
    std::int64_t candidates = 0;   // finite parts giving a valid character
    std::int64_t rejected = 0;     // finite parts failing a character check or the caps
    std::int64_t maps_tried = 0;
    std::vector<std::string> diagnostics;
};

constexpr std::int64_t max_search_order = 500;
constexpr std::size_t max_reduction_fanout = 100;

/// Every (character, reduction) pair whose report verifies.  Never throws for
/// an empty result; the reason is recorded in diagnostics.
SearchResult search_matching_char(Scenario const & s);

struct ScenarioResult {
    SerrePrediction prediction;
    IdealRep delta_conductor;
    std::optional<HeckeSpec> character;
    std::optional<std::size_t> reduction_index;
    CongruenceReport report;
    std::int64_t candidates = 0;
};

ScenarioResult run_scenario(Scenario const & s);

}  // namespace cmdihedral

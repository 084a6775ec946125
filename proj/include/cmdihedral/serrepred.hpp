#pragma once

// Serre weight/level/character bookkeeping for dihedral mod-ell data.

#include "cmdihedral/charmod.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cmdihedral {

enum class LocalCase { SplitTame, RamifiedLevel1, InertLevel2, RamifiedLevel2 };

std::string to_string(LocalCase c);

/// ell >= 5 prime, 2 <= k <= ell - 1, D a negative fundamental discriminant.
void check_hypotheses(std::int64_t ell, std::int64_t disc, int k);

LocalCase ramification_case(std::int64_t ell, SplitKind splitting, int k);
int delta_conductor_at_ell(LocalCase c);
Integer taguchi_level(QuadraticField const & K, IdealRep const & f_phi, std::int64_t ell);
Integer predicted_level(Integer const & n_rho, std::int64_t ell, bool ramified);

/// Character modulo M with values zeta_N^e; table[n] = e, or -1 when gcd(n, M) > 1.
class DirichletChar
{
public:
    DirichletChar(std::int64_t modulus, std::int64_t root_order, std::vector<std::int64_t> table);

    static DirichletChar trivial(std::int64_t modulus);
    /// n -> kronecker(D, n) as a character modulo a multiple of |D|.
    static DirichletChar kronecker_char(std::int64_t disc, std::int64_t modulus);

    std::int64_t modulus() const { return modulus_; }
    std::int64_t root_order() const { return root_order_; }
    /// Exponent of zeta_N at n, or -1 for zero.
    std::int64_t exponent(std::int64_t n) const { return table_[static_cast<std::size_t>(mod_floor(n, modulus_))]; }
    bool is_zero_at(std::int64_t n) const { return exponent(n) < 0; }
    /// Value as an integer when it is +-1 or 0.
    int sign_value(std::int64_t n) const;

    DirichletChar mul(DirichletChar const & o) const;
    DirichletChar pow(std::int64_t e) const;
    DirichletChar inverse() const { return pow(-1); }
    std::int64_t order() const;
    std::int64_t conductor() const;
    bool is_trivial() const { return order() == 1; }
    /// Same character viewed modulo a multiple of the modulus.
    DirichletChar extend(std::int64_t modulus) const;
    bool operator==(DirichletChar const & o) const;

private:
    std::int64_t modulus_;
    std::int64_t root_order_;
    std::vector<std::int64_t> table_;
};

struct Nebentypus {
    DirichletChar eta;  // modulo M = Norm(f_delta)
    DirichletChar eps;  // modulo M |D|
};

Nebentypus nebentypus(HeckeChar const & chi);
Integer m_prime(Integer const & M, QuadraticField const & K);
DirichletChar twist_char(DirichletChar const & eps, std::int64_t ell);
Integer twisted_level(Integer const & mdk, Integer const & r);

struct CharPoly {
    ValueElem trace;
    ValueElem det;
};

/// Characteristic polynomial data X^2 - trace X + det of Frob_q.
CharPoly charpoly_data(std::int64_t q, HeckeChar const & chi, DirichletChar const & eps, int k);

struct SerrePrediction {
    Integer n_rho;
    Integer n_prime;
    Integer mdk;
    int weight = 2;
    std::string ell_relation;  // "2k-1", "2k-3" or "none"
    std::int64_t nebentypus_conductor = 1;
    LocalCase local_case = LocalCase::SplitTame;
};

struct DihedralDatum {
    std::int64_t ell;
    std::int64_t disc;
    int k;
    /// Prime-to-ell part of the conductor of phi.
    IdealRep f_phi_away;
};

/// Conductor of delta: f_phi_away times p_v^{ord_v} at the prime above ell.
IdealRep delta_conductor(DihedralDatum const & d);
SerrePrediction predict(DihedralDatum const & d);
/// Prediction from N(rho) alone (nebentypus conductor 1: trivial Serre character).
SerrePrediction predict_from_level(std::int64_t disc, std::int64_t ell, int k, Integer const & n_rho);

}  // namespace cmdihedral

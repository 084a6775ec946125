#pragma once

// Residue groups (O_K/f)^x, Hecke characters of infinity type (k-1, 0), and
// reduction of their values to finite fields.

#include "cmdihedral/finite_field.hpp"
#include "cmdihedral/qfield.hpp"
#include "cmdihedral/value_ring.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace cmdihedral {

class ResidueGroup
{
public:
    static constexpr std::int64_t max_modulus_norm = 1000000;

    ResidueGroup(QuadraticField const & K, IdealRep const & modulus);

    IdealRep const & modulus() const { return modulus_; }
    std::vector<PrimeFactor> const & primes() const { return primes_; }
    std::int64_t residue_count() const { return A_ * C_; }
    std::int64_t order() const { return static_cast<std::int64_t>(units_.size()); }
    std::vector<std::int64_t> const & orders() const { return structure_.orders; }
    std::vector<QuadInt> generators() const;

    /// Canonical residue index of x modulo the modulus.
    std::int64_t residue(QuadInt const & x) const;
    QuadInt element(std::int64_t residue) const;
    bool is_unit(QuadInt const & x) const { return unit_pos_[static_cast<std::size_t>(residue(x))] >= 0; }
    /// Discrete log: exponents on generators() (throws for non-units).
    std::vector<std::int64_t> log(QuadInt const & x) const;
    /// Position of a unit residue in the enumeration used by log tables.
    std::int64_t unit_position(QuadInt const & x) const;
    std::vector<std::int64_t> const & unit_residues() const { return units_; }
    abelian_structure const & structure() const { return structure_; }

private:
    QuadraticField K_;
    IdealRep modulus_;
    std::int64_t A_, B_, C_;
    std::vector<PrimeFactor> primes_;
    std::vector<std::int64_t> units_;     // residue indices of units
    std::vector<std::int64_t> unit_pos_;  // residue -> position in units_, or -1
    abelian_structure structure_;
};

/// Conductor exponent of delta at v from that of alpha.
/// local_match: alpha_v(u) = lift(u)^{1-k} for all local units u.
int predict_conductor_at_v(int ord_alpha, std::int64_t ell, int k, int f, bool local_match);

struct ClassExtension {
    IdealRep prime;        // b_j, a prime ideal in the j-th generator class
    std::int64_t order;    // h_j
    QuadInt beta;          // (beta) = b_j^{h_j}
    std::int64_t eps_beta; // eps_f(beta) as a zeta_w exponent
};

struct HeckeSpec {
    std::int64_t disc = 0;
    int weight = 2;
    IdealRep conductor;
    /// Exponent e_i on the i-th residue-group generator g_i: eps_f(g_i) = zeta_{o_i}^{e_i}.
    std::vector<std::int64_t> finite_part;
    /// Empty: canonical.  Otherwise root index per class-group generator,
    /// restricting reductions to that root of t_j^{h_j} = c_j.
    std::vector<std::int64_t> class_part;
    /// Primes the class-extension ideals must avoid (e.g. the working prime).
    std::vector<std::int64_t> avoid;
};

class HeckeChar
{
public:
    explicit HeckeChar(HeckeSpec spec);

    HeckeSpec const & spec() const { return spec_; }
    QuadraticField const & field() const { return K_; }
    int weight() const { return spec_.weight; }
    IdealRep const & conductor() const { return spec_.conductor; }
    ResidueGroup const & residue_group() const { return G_; }
    ClassGroup const & class_group() const { return cl_; }
    std::vector<ClassExtension> const & class_extension() const { return ext_; }
    ValueRing const & ring() const { return *ring_; }
    std::shared_ptr<ValueRing const> const & ring_ptr() const { return ring_; }
    /// Order of eps_f.
    std::int64_t w() const { return w_; }

    /// eps_f(x) as a zeta_w exponent; x must be a unit modulo the conductor.
    std::int64_t eps_exponent(QuadInt const & x) const;
    ValueElem eps(QuadInt const & x) const { return ring_->zeta_power(eps_exponent(x)); }

    /// delta_H of an ideal coprime to the conductor.  shifts[j] = q_j selects
    /// the decomposition a * prod b_j^{q_j h_j - e_j} = (gamma).
    ValueElem evaluate(IdealRep const & a, std::optional<std::vector<std::int64_t>> shifts = std::nullopt) const;

private:
    HeckeSpec spec_;
    QuadraticField K_;
    ResidueGroup G_;
    ClassGroup cl_;
    std::int64_t w_ = 1;
    std::vector<std::int64_t> eps_table_;  // by unit position
    std::vector<ClassExtension> ext_;
    std::shared_ptr<ValueRing const> ring_;
    std::vector<ValueElem> c_inv_;  // c_j^{-1}
};

struct ReductionMap {
    std::int64_t ell = 0;
    int degree = 1;
    std::shared_ptr<FiniteField const> field;
    /// Image of each layer generator of the ring, in layer order.
    std::vector<FiniteField::elem> images;
    /// Image of each basis monomial.
    std::vector<FiniteField::elem> monomials;
};

/// All assignments of generator images into the smallest F_{ell^r} that
/// contains the w-th roots of unity, the roots of the minimal polynomial of
/// omega and all roots of every t_j^{h_j} = c_j.  Ordered lexicographically by
/// image codes and truncated at max_maps.  root_choice (optional) restricts
/// t_j to its root_choice[j]-th root in code order.
std::vector<ReductionMap> build_reductions(ValueRing const & R, std::int64_t ell,
                                           std::vector<std::int64_t> const & root_choice = {},
                                           std::size_t max_maps = 100);

FiniteField::elem reduce(ValueElem const & x, ReductionMap const & m);

}  // namespace cmdihedral

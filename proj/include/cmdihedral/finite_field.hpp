#pragma once

#include "cmdihedral/integer.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cmdihedral {

/// F_{p^r} with elements encoded as integers sum a_i p^i (a_i the coefficients
/// in the power basis of x).  The modulus is the first primitive monic
/// polynomial in code order, so x generates the multiplicative group.
class FiniteField
{
public:
    using elem = std::uint32_t;

    static constexpr std::uint64_t max_order = std::uint64_t{1} << 22;

    FiniteField(std::int64_t p, int r);

    std::int64_t characteristic() const { return p_; }
    int degree() const { return r_; }
    std::uint32_t order() const { return q_; }
    /// Monic modulus, constant term first.
    std::vector<std::int64_t> const & modulus() const { return modulus_; }

    elem zero() const { return 0; }
    elem one() const { return 1; }
    /// The fixed multiplicative generator (the class of x, or a primitive root when r = 1).
    elem generator() const { return exp_[1 % (q_ - 1)]; }
    elem from_int(std::int64_t a) const { return static_cast<elem>(mod_floor(a, p_)); }
    elem from_integer(Integer const & a) const;

    elem add(elem a, elem b) const;
    elem neg(elem a) const;
    elem sub(elem a, elem b) const { return add(a, neg(b)); }
    elem mul(elem a, elem b) const
    {
        if (a == 0 || b == 0)
            return 0;
        return exp_[log_[a] + log_[b]];
    }
    elem inv(elem a) const;
    elem div(elem a, elem b) const { return mul(a, inv(b)); }
    elem pow(elem a, std::int64_t e) const;

    /// Discrete log to the base generator(); a != 0.
    std::uint32_t log(elem a) const;
    elem exp(std::int64_t e) const { return exp_[static_cast<std::size_t>(mod_floor(e, q_ - 1))]; }

    /// Digits a_0..a_{r-1}.
    std::vector<std::int64_t> digits(elem a) const;
    elem from_digits(std::vector<std::int64_t> const & d) const;
    std::string str(elem a) const { return std::to_string(a); }

    friend bool operator==(FiniteField const & a, FiniteField const & b)
    {
        return a.p_ == b.p_ && a.r_ == b.r_;
    }

private:
    std::int64_t p_;
    int r_;
    std::uint32_t q_;
    std::vector<std::int64_t> modulus_;
    std::vector<elem> exp_;           // size 2(q-1) so products need no reduction
    std::vector<std::uint32_t> log_;  // log_[0] unused
};

/// Root of unity zeta_m^e of order m prime to the characteristic.  zeta_m is
/// the lift of generator()^((q-1)/m).
struct TeichRep {
    std::int64_t order = 1;
    std::int64_t exponent = 0;

    friend bool operator==(TeichRep const &, TeichRep const &) = default;
};

TeichRep teichmuller_lift(FiniteField const & F, FiniteField::elem x);
FiniteField::elem teichmuller_reduce(FiniteField const & F, TeichRep const & t);
TeichRep teich_mul(TeichRep const & a, TeichRep const & b);

}  // namespace cmdihedral

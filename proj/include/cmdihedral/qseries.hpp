#pragma once

// Truncated q-expansions c_1 q + ... + c_prec q^prec over a coefficient ring.

#include "cmdihedral/charmod.hpp"
#include "cmdihedral/serrepred.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace cmdihedral {

struct IntegerRing {
    using value_type = Integer;
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type add(value_type const & a, value_type const & b) const { return a + b; }
    value_type mul(value_type const & a, value_type const & b) const { return a * b; }
    bool equal(value_type const & a, value_type const & b) const { return a == b; }
    std::string str(value_type const & a) const { return a.get_str(); }
    std::string name() const { return "Z"; }
    bool operator==(IntegerRing const &) const { return true; }
};

struct FiniteFieldRing {
    using value_type = FiniteField::elem;
    std::shared_ptr<FiniteField const> field;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type add(value_type a, value_type b) const { return field->add(a, b); }
    value_type mul(value_type a, value_type b) const { return field->mul(a, b); }
    bool equal(value_type a, value_type b) const { return a == b; }
    std::string str(value_type a) const { return field->str(a); }
    std::string name() const
    {
        return "F_" + std::to_string(field->characteristic()) + "^" + std::to_string(field->degree());
    }
    bool operator==(FiniteFieldRing const & o) const { return *field == *o.field; }
};

struct ValueRingRef {
    using value_type = ValueElem;
    std::shared_ptr<ValueRing const> ring;

    value_type zero() const { return ring->zero(); }
    value_type one() const { return ring->one(); }
    value_type add(value_type const & a, value_type const & b) const { return ring->add(a, b); }
    value_type mul(value_type const & a, value_type const & b) const { return ring->mul(a, b); }
    bool equal(value_type const & a, value_type const & b) const { return a == b; }
    std::string str(value_type const & a) const { return ring->str(a); }
    std::string name() const { return "value_ring"; }
    bool operator==(ValueRingRef const & o) const { return ring == o.ring; }
};

template <class Ring>
struct QExpansion {
    using value_type = typename Ring::value_type;

    Ring ring;
    /// coeffs[0] = c_0 = 0, coeffs[n] = c_n for n <= prec.
    std::vector<value_type> coeffs;
    int weight = 0;
    Integer level = 1;
    std::string character = "trivial";

    std::size_t prec() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    value_type const & operator[](std::size_t n) const { return coeffs.at(n); }

    std::vector<std::string> coefficient_strings() const
    {
        std::vector<std::string> out;
        for (std::size_t n = 1; n < coeffs.size(); ++n)
            out.push_back(ring.str(coeffs[n]));
        return out;
    }
};

using IntSeries = QExpansion<IntegerRing>;
using FFSeries = QExpansion<FiniteFieldRing>;
using ValueSeries = QExpansion<ValueRingRef>;

/// Theta series of chi over its value ring; weight k, level Norm(f) |D|.
ValueSeries theta_series(HeckeChar const & chi, std::size_t prec);

/// q prod (1 - q^n)^24 up to q^prec, via Euler's pentagonal series and the
/// power recurrence for P^24 (prec <= 10^5).
IntSeries delta_qexp(std::size_t prec);
/// Same series by expanding the product and squaring series directly.
IntSeries delta_qexp_product(std::size_t prec);

template <class Ring>
QExpansion<Ring> drop_multiples(QExpansion<Ring> f, std::int64_t p)
{
    if (p < 1)
        throw domain_error("drop_multiples: p must be positive");
    for (std::size_t n = static_cast<std::size_t>(p); n < f.coeffs.size(); n += static_cast<std::size_t>(p))
        f.coeffs[n] = f.ring.zero();
    return f;
}

IntSeries twist(IntSeries const & f, DirichletChar const & mu);
ValueSeries twist(ValueSeries const & f, DirichletChar const & mu);
/// zeta_N maps to generator^((q-1)/N); N must divide q - 1.
FFSeries twist(FFSeries const & f, DirichletChar const & mu);

Integer sturm_index(Integer const & N);
/// standard: floor(k m / 12).  paper: floor(m / 6), the weaker cutoff.
enum class BoundMode { standard, paper };
BoundMode parse_bound_mode(std::string const & s);
std::string to_string(BoundMode m);
Integer sturm_bound(int k, Integer const & N, BoundMode mode);

}  // namespace cmdihedral

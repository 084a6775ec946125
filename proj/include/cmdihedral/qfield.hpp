#pragma once

// Exact arithmetic in an imaginary quadratic field K = Q(sqrt D): elements of
// O_K, binary quadratic forms, integral ideals in Hermite form and the class
// group.

#include "cmdihedral/abelian_group.hpp"
#include "cmdihedral/integer.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cmdihedral {

/// Negative fundamental discriminant.
class Discriminant
{
    Integer d_;

public:
    explicit Discriminant(Integer const & d);
    explicit Discriminant(long d) : Discriminant(Integer(d)) {}

    Integer const & value() const { return d_; }
    /// D mod 2; O_K = Z[omega] with omega = (delta + sqrt D) / 2.
    long delta() const { return mpz_odd_p(d_.get_mpz_t()) ? 1 : 0; }
    Integer magnitude() const { return -d_; }

    static bool is_fundamental(Integer const & d);

    friend bool operator==(Discriminant const &, Discriminant const &) = default;
};

/// a + b * omega.
struct QuadInt {
    Integer a{0};
    Integer b{0};

    friend bool operator==(QuadInt const &, QuadInt const &) = default;
    std::string str() const;
};

struct QuadForm {
    Integer a, b, c;

    friend bool operator==(QuadForm const &, QuadForm const &) = default;
    std::string str() const;
};

/// content * (Z n + Z (b + sqrt D)/2), b normalised to (-n, n].
struct IdealRep {
    Integer content{1};
    Integer n{1};
    Integer b{0};

    friend bool operator==(IdealRep const &, IdealRep const &) = default;
    friend auto operator<=>(IdealRep const & x, IdealRep const & y)
    {
        if (auto c = cmp(x.n, y.n); c != 0)
            return c <=> 0;
        if (auto c = cmp(x.b, y.b); c != 0)
            return c <=> 0;
        return cmp(x.content, y.content) <=> 0;
    }
    Integer norm() const { return content * content * n; }
    std::string str() const;
};

/// Lattice basis {A, B + C omega} of an ideal; C divides A and B.
struct IdealHnf {
    Integer A, B, C;
};

enum class SplitKind { split, inert, ramified };

struct Splitting {
    SplitKind kind;
    /// split: {p, conj p} with p of positive b first; ramified: {p}; inert: {}.
    std::vector<IdealRep> primes;
};

struct PrimeFactor {
    IdealRep prime;
    Integer p;  // rational prime below
    int exponent;
};

class ClassGroup
{
    std::vector<QuadForm> forms_;
    std::map<std::pair<Integer, Integer>, std::size_t> index_;
    std::vector<std::size_t> table_;
    abelian_structure structure_;

public:
    ClassGroup(std::vector<QuadForm> forms, std::vector<std::size_t> table);

    std::size_t size() const { return forms_.size(); }
    std::vector<QuadForm> const & forms() const { return forms_; }
    QuadForm const & form(std::size_t i) const { return forms_.at(i); }
    std::size_t index_of(QuadForm const & reduced) const;
    std::size_t compose(std::size_t i, std::size_t j) const { return table_[i * forms_.size() + j]; }
    std::size_t identity() const { return 0; }
    std::size_t inverse(std::size_t i) const;

    abelian_structure const & structure() const { return structure_; }
    std::vector<std::int64_t> const & cyclic_orders() const { return structure_.orders; }
    std::vector<std::int64_t> exponents(std::size_t i) const { return structure_.exponents(i); }
    std::size_t from_exponents(std::vector<std::int64_t> const & e) const;
};

class QuadraticField
{
    Discriminant disc_;

public:
    explicit QuadraticField(Discriminant d) : disc_(std::move(d)) {}
    explicit QuadraticField(long d) : disc_(d) {}

    Discriminant const & discriminant() const { return disc_; }
    Integer const & D() const { return disc_.value(); }
    long delta() const { return disc_.delta(); }
    /// omega^2 = delta * omega + omega_sq_const()
    Integer omega_sq_const() const { return (D() - delta()) / 4; }

    // elements
    QuadInt add(QuadInt const & x, QuadInt const & y) const { return {x.a + y.a, x.b + y.b}; }
    QuadInt sub(QuadInt const & x, QuadInt const & y) const { return {x.a - y.a, x.b - y.b}; }
    QuadInt mul(QuadInt const & x, QuadInt const & y) const;
    QuadInt pow(QuadInt x, unsigned e) const;
    QuadInt conj(QuadInt const & x) const { return {x.a + x.b * delta(), -x.b}; }
    Integer norm(QuadInt const & x) const;
    Integer trace(QuadInt const & x) const { return 2 * x.a + x.b * delta(); }
    /// Roots of unity of O_K: {+-1}, or the 4 resp. 6 units for D = -4, -3.
    std::vector<QuadInt> units() const;

    // forms and classes
    std::vector<QuadForm> reduced_forms() const;
    QuadForm reduce(QuadForm f) const;
    QuadForm compose(QuadForm const & f, QuadForm const & g) const;
    ClassGroup class_group() const;
    QuadForm associated_form(IdealRep const & I) const;
    IdealRep ideal_of_form(QuadForm const & f) const;
    std::size_t ideal_class(ClassGroup const & cl, IdealRep const & I) const;

    // ideals
    IdealRep unit_ideal() const { return make_ideal(1, 1, delta()); }
    IdealRep make_ideal(Integer const & content, Integer const & n, Integer const & b) const;
    IdealRep from_hnf(IdealHnf const & h) const;
    IdealHnf hnf(IdealRep const & I) const;
    IdealRep principal_ideal(QuadInt const & x) const;
    IdealRep rational_ideal(Integer const & m) const;
    IdealRep ideal_multiply(IdealRep const & I, IdealRep const & J) const;
    IdealRep ideal_pow(IdealRep const & I, unsigned e) const;
    IdealRep conjugate(IdealRep const & I) const;
    /// I / m for an integer m dividing I.
    IdealRep divide_exact(IdealRep const & I, Integer const & m) const;
    bool contains(IdealRep const & I, QuadInt const & x) const;
    bool is_subset(IdealRep const & I, IdealRep const & J) const;
    bool coprime(IdealRep const & I, IdealRep const & J) const;

    Splitting splitting_type(std::int64_t p) const;
    std::vector<IdealRep> ideals_of_norm(std::int64_t n) const;
    std::vector<PrimeFactor> prime_factorization(IdealRep const & I) const;
    int ideal_valuation(IdealRep I, IdealRep const & P) const;
    std::optional<QuadInt> principal_generator(IdealRep const & I) const;
};

}  // namespace cmdihedral

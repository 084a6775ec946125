#pragma once

// Exact ring holding Hecke character values: a tower
//   Z  <  Z[omega]  <  Z[omega][zeta_w]  <  ...[t_1]  <  ...[t_s]
// with relations omega^2 = delta*omega + (D - delta)/4, Phi_w(zeta) = 0 and
// t_j^{h_j} = c_j.  When |D| divides w the omega layer is dropped and omega is
// written in Z[zeta_w] through the quadratic Gauss sum.  Elements are dense
// integer vectors over the monomial basis with one positive common denominator.

#include "cmdihedral/qfield.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cmdihedral {

struct ValueElem {
    std::vector<Integer> coeffs;
    Integer den{1};

    friend bool operator==(ValueElem const &, ValueElem const &) = default;
};

class ValueRing
{
public:
    enum class LayerKind { omega, zeta, root };

    struct Layer {
        LayerKind kind;
        int degree;
        /// x^degree = sum_i relation[i] * x^i; each entry is an element of the
        /// layers below (length = product of lower degrees, integral).
        std::vector<std::vector<Integer>> relation;
        std::int64_t root_index = -1;  // t_j: j
    };

    ValueRing(QuadraticField const & K, std::int64_t w);

    /// This ring extended by t with t^h = c; c must lie in this ring and be integral.
    ValueRing with_root(std::int64_t h, ValueElem const & c) const;

    QuadraticField const & field() const { return K_; }
    std::int64_t w() const { return w_; }
    bool embedded() const { return embedded_; }
    std::size_t dim() const { return dims_.back(); }
    std::vector<Layer> const & layers() const { return layers_; }
    /// Position of the zeta layer in layers().
    std::size_t zeta_layer() const { return embedded_ ? 0 : 1; }
    std::size_t root_count() const { return layers_.size() - zeta_layer() - 1; }
    /// Root exponent bound h_j of t_j.
    std::int64_t root_degree(std::size_t j) const { return layers_.at(zeta_layer() + 1 + j).degree; }
    /// Basis index -> exponent of each layer generator.
    std::vector<int> monomial_exponents(std::size_t index) const;

    ValueElem zero() const;
    ValueElem one() const { return from_int(1); }
    ValueElem from_int(Integer const & a) const;
    ValueElem from_quadint(QuadInt const & x) const;
    ValueElem omega() const { return omega_; }
    ValueElem zeta_power(std::int64_t e) const;
    /// zeta_N^e for N | w, or N | 2w when w is odd.
    ValueElem root_of_unity(std::int64_t N, std::int64_t e) const;
    /// t_j^e, 0 <= e < h_j.
    ValueElem t_power(std::size_t j, std::int64_t e) const;
    /// Element of a ring this one was built from by with_root().
    ValueElem lift(ValueElem const & x) const;

    ValueElem add(ValueElem const & x, ValueElem const & y) const;
    ValueElem sub(ValueElem const & x, ValueElem const & y) const;
    ValueElem neg(ValueElem const & x) const;
    ValueElem mul(ValueElem const & x, ValueElem const & y) const;
    ValueElem pow(ValueElem x, std::uint64_t e) const;
    ValueElem scale(ValueElem const & x, Integer const & a) const;
    ValueElem div_int(ValueElem const & x, Integer const & a) const;
    bool equal(ValueElem const & x, ValueElem const & y) const { return x == y; }
    bool is_zero(ValueElem const & x) const;
    std::string str(ValueElem const & x) const;

private:
    ValueRing(QuadraticField K) : K_(std::move(K)) {}

    void push_layer(Layer layer);
    void normalize(ValueElem & x) const;
    void check(ValueElem const & x) const;
    void mul_level(std::size_t level, Integer const * a, Integer const * b, Integer * out) const;
    bool is_scalar(std::vector<Integer> const & v) const;

    QuadraticField K_;
    std::int64_t w_ = 1;
    bool embedded_ = false;
    std::vector<Layer> layers_;
    std::vector<std::size_t> dims_{1};  // dims_[i] = product of degrees of layers below i
    ValueElem omega_;
    ValueElem zeta_;
};

}  // namespace cmdihedral

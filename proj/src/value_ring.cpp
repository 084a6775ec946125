#include "cmdihedral/value_ring.hpp"

#include <numeric>
#include <sstream>

namespace cmdihedral {

namespace {

bool all_zero(Integer const * p, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        if (p[i] != 0)
            return false;
    return true;
}

}  // namespace

ValueRing::ValueRing(QuadraticField const & K, std::int64_t w) : K_(K), w_(w)
{
    if (w < 1)
        throw domain_error("ValueRing: root-of-unity order must be positive");
    std::int64_t const absd = to_i64(K.discriminant().magnitude());
    embedded_ = w % absd == 0;

    if (!embedded_)
        push_layer({LayerKind::omega, 2, {{K.omega_sq_const()}, {Integer(K.delta())}}});

    auto const phi = cyclotomic_polynomial(w);
    Layer z{LayerKind::zeta, static_cast<int>(phi.size()) - 1, {}};
    for (int i = 0; i < z.degree; ++i) {
        std::vector<Integer> r(dims_.back(), 0);
        r[0] = -phi[i];
        z.relation.push_back(std::move(r));
    }
    push_layer(std::move(z));

    auto generator = [&](std::size_t L) {
        ValueElem g = zero();
        if (layers_[L].degree >= 2)
            g.coeffs[dims_[L]] = 1;
        else
            g = lift({layers_[L].relation[0], 1});
        return g;
    };
    zeta_ = generator(zeta_layer());
    if (!embedded_) {
        omega_ = generator(0);
        return;
    }
    // sqrt(D) = sum_a (D/a) zeta_|D|^a, then omega = (delta + sqrt D)/2
    ValueElem s = zero();
    for (std::int64_t a = 1; a < absd; ++a) {
        int const k = kronecker(K.D(), Integer(static_cast<long>(a)));
        if (k != 0)
            s = add(s, scale(zeta_power(a * (w / absd)), k));
    }
    if (!(mul(s, s) == from_int(K.D())))
        throw domain_error("ValueRing: Gauss sum does not square to D");
    omega_ = div_int(add(s, from_int(K.delta())), 2);
    if (omega_.den != 1)
        throw domain_error("ValueRing: omega is not integral in Z[zeta]");
}

void ValueRing::push_layer(Layer layer)
{
    dims_.push_back(dims_.back() * static_cast<std::size_t>(layer.degree));
    layers_.push_back(std::move(layer));
}

ValueRing ValueRing::with_root(std::int64_t h, ValueElem const & c) const
{
    check(c);
    if (h < 1)
        throw domain_error("ValueRing::with_root: degree must be positive");
    if (c.den != 1)
        throw domain_error("ValueRing::with_root: relation constant must be integral");
    ValueRing out = *this;
    Layer t{LayerKind::root, static_cast<int>(h), {}, static_cast<std::int64_t>(root_count())};
    t.relation.assign(static_cast<std::size_t>(h), std::vector<Integer>(dim(), 0));
    t.relation[0] = c.coeffs;
    out.push_layer(std::move(t));
    out.omega_ = out.lift(omega_);
    out.zeta_ = out.lift(zeta_);
    return out;
}

std::vector<int> ValueRing::monomial_exponents(std::size_t index) const
{
    std::vector<int> e(layers_.size());
    for (std::size_t i = 0; i < layers_.size(); ++i)
        e[i] = static_cast<int>((index / dims_[i]) % static_cast<std::size_t>(layers_[i].degree));
    return e;
}

ValueElem ValueRing::zero() const
{
    return {std::vector<Integer>(dim(), 0), 1};
}

ValueElem ValueRing::from_int(Integer const & a) const
{
    ValueElem x = zero();
    x.coeffs[0] = a;
    return x;
}

ValueElem ValueRing::from_quadint(QuadInt const & x) const
{
    return add(from_int(x.a), scale(omega_, x.b));
}

ValueElem ValueRing::zeta_power(std::int64_t e) const
{
    return pow(zeta_, static_cast<std::uint64_t>(mod_floor(e, w_)));
}

ValueElem ValueRing::root_of_unity(std::int64_t N, std::int64_t e) const
{
    if (N <= 0)
        throw domain_error("root_of_unity: order must be positive");
    if (w_ % N == 0)
        return zeta_power(e * (w_ / N));
    if (w_ % 2 == 1 && (2 * w_) % N == 0) {
        // zeta_{2w} = -zeta_w^{(w+1)/2}
        std::int64_t const m = mod_floor(e * (2 * w_ / N), 2 * w_);
        ValueElem z = zeta_power(m * ((w_ + 1) / 2));
        return m % 2 == 0 ? z : neg(z);
    }
    throw domain_error("root_of_unity: order " + std::to_string(N) + " not available");
}

ValueElem ValueRing::t_power(std::size_t j, std::int64_t e) const
{
    if (j >= root_count())
        throw domain_error("t_power: no such root generator");
    std::size_t const L = zeta_layer() + 1 + j;
    if (e < 0)
        throw domain_error("t_power: negative exponent");
    ValueElem g = zero();
    if (layers_[L].degree >= 2)
        g.coeffs[dims_[L]] = 1;
    else
        g = lift({layers_[L].relation[0], 1});
    if (e < layers_[L].degree && layers_[L].degree >= 2) {
        ValueElem x = zero();
        x.coeffs[static_cast<std::size_t>(e) * dims_[L]] = 1;
        return x;
    }
    return pow(g, static_cast<std::uint64_t>(e));
}

ValueElem ValueRing::lift(ValueElem const & x) const
{
    if (x.coeffs.empty() || dim() % x.coeffs.size() != 0)
        throw domain_error("ValueRing::lift: element is not from a subring");
    ValueElem out = x;
    out.coeffs.resize(dim(), 0);
    return out;
}

void ValueRing::check(ValueElem const & x) const
{
    if (x.coeffs.size() != dim())
        throw domain_error("ValueRing: element belongs to a different ring");
}

void ValueRing::normalize(ValueElem & x) const
{
    if (x.den == 0)
        throw domain_error("ValueRing: zero denominator");
    if (x.den < 0) {
        x.den = -x.den;
        for (auto & c : x.coeffs)
            c = -c;
    }
    if (x.den == 1)
        return;
    Integer g = x.den;
    for (auto const & c : x.coeffs) {
        if (g == 1)
            return;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (g == 1)
        return;
    x.den /= g;
    for (auto & c : x.coeffs)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ValueElem ValueRing::add(ValueElem const & x, ValueElem const & y) const
{
    check(x);
    check(y);
    ValueElem out;
    out.coeffs.resize(dim());
    if (x.den == y.den) {
        for (std::size_t i = 0; i < dim(); ++i)
            out.coeffs[i] = x.coeffs[i] + y.coeffs[i];
        out.den = x.den;
    } else {
        for (std::size_t i = 0; i < dim(); ++i)
            out.coeffs[i] = x.coeffs[i] * y.den + y.coeffs[i] * x.den;
        out.den = x.den * y.den;
    }
    normalize(out);
    return out;
}

ValueElem ValueRing::neg(ValueElem const & x) const
{
    check(x);
    ValueElem out = x;
    for (auto & c : out.coeffs)
        c = -c;
    return out;
}

ValueElem ValueRing::sub(ValueElem const & x, ValueElem const & y) const
{
    return add(x, neg(y));
}

ValueElem ValueRing::scale(ValueElem const & x, Integer const & a) const
{
    check(x);
    ValueElem out = x;
    for (auto & c : out.coeffs)
        c *= a;
    normalize(out);
    return out;
}

ValueElem ValueRing::div_int(ValueElem const & x, Integer const & a) const
{
    check(x);
    if (a == 0)
        throw domain_error("ValueRing: division by zero");
    ValueElem out = x;
    out.den *= a;
    normalize(out);
    return out;
}

bool ValueRing::is_zero(ValueElem const & x) const
{
    check(x);
    return all_zero(x.coeffs.data(), x.coeffs.size());
}

bool ValueRing::is_scalar(std::vector<Integer> const & v) const
{
    return v.size() <= 1 || all_zero(v.data() + 1, v.size() - 1);
}

void ValueRing::mul_level(std::size_t level, Integer const * a, Integer const * b, Integer * out) const
{
    if (level == 0) {
        out[0] = a[0] * b[0];
        return;
    }
    Layer const & L = layers_[level - 1];
    std::size_t const d = static_cast<std::size_t>(L.degree);
    std::size_t const s = dims_[level - 1];
    std::vector<Integer> tmp((2 * d - 1) * s, 0);
    std::vector<Integer> prod(s);
    for (std::size_t i = 0; i < d; ++i) {
        if (all_zero(a + i * s, s))
            continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (all_zero(b + j * s, s))
                continue;
            mul_level(level - 1, a + i * s, b + j * s, prod.data());
            for (std::size_t t = 0; t < s; ++t)
                tmp[(i + j) * s + t] += prod[t];
        }
    }
    for (std::size_t k = 2 * d - 1; k-- > d;) {
        Integer const * P = tmp.data() + k * s;
        if (all_zero(P, s))
            continue;
        for (std::size_t i = 0; i < d; ++i) {
            auto const & r = L.relation[i];
            if (all_zero(r.data(), s))
                continue;
            Integer * dst = tmp.data() + (k - d + i) * s;
            if (is_scalar(r)) {
                for (std::size_t t = 0; t < s; ++t)
                    dst[t] += P[t] * r[0];
            } else {
                mul_level(level - 1, P, r.data(), prod.data());
                for (std::size_t t = 0; t < s; ++t)
                    dst[t] += prod[t];
            }
        }
    }
    for (std::size_t t = 0; t < d * s; ++t)
        out[t] = std::move(tmp[t]);
}

ValueElem ValueRing::mul(ValueElem const & x, ValueElem const & y) const
{
    check(x);
    check(y);
    ValueElem out;
    out.coeffs.resize(dim());
    mul_level(layers_.size(), x.coeffs.data(), y.coeffs.data(), out.coeffs.data());
    out.den = x.den * y.den;
    normalize(out);
    return out;
}

ValueElem ValueRing::pow(ValueElem x, std::uint64_t e) const
{
    ValueElem r = one();
    while (e > 0) {
        if (e & 1U)
            r = mul(r, x);
        e >>= 1U;
        if (e > 0)
            x = mul(x, x);
    }
    return r;
}

std::string ValueRing::str(ValueElem const & x) const
{
    check(x);
    std::ostringstream o;
    bool first = true;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x.coeffs[i] == 0)
            continue;
        if (!first)
            o << (x.coeffs[i] < 0 ? " - " : " + ");
        else if (x.coeffs[i] < 0)
            o << "-";
        first = false;
        Integer const a = abs(x.coeffs[i]);
        auto const e = monomial_exponents(i);
        bool mono = false;
        for (std::size_t L = 0; L < layers_.size(); ++L) {
            if (e[L] == 0)
                continue;
            o << (mono ? "*" : (a == 1 ? "" : (a.get_str() + "*")));
            mono = true;
            switch (layers_[L].kind) {
            case LayerKind::omega: o << "w"; break;
            case LayerKind::zeta: o << "z"; break;
            case LayerKind::root: o << "t" << (layers_[L].root_index + 1); break;
            }
            if (e[L] > 1)
                o << "^" << e[L];
        }
        if (!mono)
            o << a;
    }
    if (first)
        o << "0";
    if (x.den != 1)
        return "(" + o.str() + ")/" + x.den.get_str();
    return o.str();
}

}  // namespace cmdihedral

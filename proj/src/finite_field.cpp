#include "cmdihedral/finite_field.hpp"

#include <numeric>

namespace cmdihedral {

namespace {

/// Multiplication by x modulo a monic polynomial, on digit vectors.
void times_x(std::vector<std::int64_t> & v, std::vector<std::int64_t> const & modulus, std::int64_t p)
{
    std::size_t const r = v.size();
    std::int64_t const top = v[r - 1];
    for (std::size_t i = r - 1; i > 0; --i)
        v[i] = v[i - 1];
    v[0] = 0;
    for (std::size_t i = 0; i < r; ++i)
        v[i] = mod_floor(v[i] - top * modulus[i], p);
}

}  // namespace

FiniteField::FiniteField(std::int64_t p, int r) : p_(p), r_(r)
{
    if (!is_prime(p) || r < 1)
        throw domain_error("FiniteField: need a prime p and r >= 1");
    std::uint64_t q = 1;
    for (int i = 0; i < r; ++i) {
        q *= static_cast<std::uint64_t>(p);
        if (q > max_order)
            throw domain_error("FiniteField: order exceeds 2^22");
    }
    q_ = static_cast<std::uint32_t>(q);
    std::uint32_t const n = q_ - 1;

    exp_.assign(2 * static_cast<std::size_t>(n), 0);
    log_.assign(q_, 0);
    auto const code_of = [&](std::vector<std::int64_t> const & v) {
        std::uint64_t c = 0;
        for (std::size_t i = v.size(); i-- > 0;)
            c = c * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(v[i]);
        return static_cast<elem>(c);
    };

    // candidate moduli x^r + sum c_i x^i in code order of (c_0, ..., c_{r-1})
    for (std::uint32_t cand = 1; cand < q_; ++cand) {
        modulus_.assign(static_cast<std::size_t>(r) + 1, 0);
        std::uint32_t t = cand;
        for (int i = 0; i < r; ++i) {
            modulus_[i] = t % p;
            t /= static_cast<std::uint32_t>(p);
        }
        modulus_[r] = 1;
        std::vector<std::int64_t> v(static_cast<std::size_t>(r), 0);
        v[0] = 1;
        bool primitive = true;
        for (std::uint32_t i = 0; i < n; ++i) {
            elem const c = code_of(v);
            if (i > 0 && c == 1) {
                primitive = false;
                break;
            }
            exp_[i] = c;
            times_x(v, modulus_, p);
        }
        if (!primitive || code_of(v) != 1)
            continue;
        for (std::uint32_t i = 0; i < n; ++i) {
            exp_[i + n] = exp_[i];
            log_[exp_[i]] = i;
        }
        return;
    }
    throw domain_error("FiniteField: no primitive polynomial found");
}

FiniteField::elem FiniteField::from_integer(Integer const & a) const
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(p_));
    return static_cast<elem>(r.get_ui());
}

std::vector<std::int64_t> FiniteField::digits(elem a) const
{
    std::vector<std::int64_t> d(static_cast<std::size_t>(r_));
    for (int i = 0; i < r_; ++i) {
        d[i] = a % p_;
        a /= static_cast<elem>(p_);
    }
    return d;
}

FiniteField::elem FiniteField::from_digits(std::vector<std::int64_t> const & d) const
{
    std::uint64_t c = 0;
    for (std::size_t i = d.size(); i-- > 0;)
        c = c * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(mod_floor(d[i], p_));
    return static_cast<elem>(c);
}

FiniteField::elem FiniteField::add(elem a, elem b) const
{
    if (r_ == 1) {
        elem s = a + b;
        return s >= p_ ? s - static_cast<elem>(p_) : s;
    }
    elem out = 0;
    elem scale = 1;
    auto const P = static_cast<elem>(p_);
    while (a != 0 || b != 0) {
        elem d = a % P + b % P;
        if (d >= P)
            d -= P;
        out += d * scale;
        scale *= P;
        a /= P;
        b /= P;
    }
    return out;
}

FiniteField::elem FiniteField::neg(elem a) const
{
    elem out = 0;
    elem scale = 1;
    auto const P = static_cast<elem>(p_);
    while (a != 0) {
        elem const d = a % P;
        out += (d == 0 ? 0 : P - d) * scale;
        scale *= P;
        a /= P;
    }
    return out;
}

FiniteField::elem FiniteField::inv(elem a) const
{
    if (a == 0)
        throw domain_error("FiniteField: inverse of zero");
    std::uint32_t const n = q_ - 1;
    return exp_[(n - log_[a]) % n];
}

FiniteField::elem FiniteField::pow(elem a, std::int64_t e) const
{
    if (a == 0) {
        if (e < 0)
            throw domain_error("FiniteField: negative power of zero");
        return e == 0 ? 1 : 0;
    }
    std::int64_t const n = q_ - 1;
    std::int64_t const l = static_cast<std::int64_t>(static_cast<__int128>(log_[a]) * mod_floor(e, n) % n);
    return exp_[static_cast<std::size_t>(l)];
}

std::uint32_t FiniteField::log(elem a) const
{
    if (a == 0 || a >= q_)
        throw domain_error("FiniteField: log of zero or out-of-range element");
    return log_[a];
}

TeichRep teichmuller_lift(FiniteField const & F, FiniteField::elem x)
{
    if (x == 0)
        throw domain_error("teichmuller_lift: zero has no lift");
    std::int64_t const n = F.order() - 1;
    std::int64_t const L = F.log(x);
    std::int64_t const g = std::gcd(L, n);
    return {n / g, L / g};
}

FiniteField::elem teichmuller_reduce(FiniteField const & F, TeichRep const & t)
{
    std::int64_t const n = F.order() - 1;
    if (t.order <= 0 || n % t.order != 0)
        throw domain_error("teichmuller_reduce: order does not divide q - 1");
    return F.exp((n / t.order) * t.exponent);
}

TeichRep teich_mul(TeichRep const & a, TeichRep const & b)
{
    std::int64_t const m = std::lcm(a.order, b.order);
    std::int64_t e = mod_floor(a.exponent * (m / a.order) + b.exponent * (m / b.order), m);
    std::int64_t const g = std::gcd(e, m);
    return {m / g, e / g};
}

}  // namespace cmdihedral

#include "cmdihedral/integer.hpp"

#include <algorithm>
#include <numeric>

namespace cmdihedral {

std::vector<prime_power> factor(std::int64_t n)
{
    if (n <= 0)
        throw domain_error("factor: argument must be positive");
    std::vector<prime_power> out;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0)
            continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1)
        out.push_back({n, 1});
    return out;
}

std::vector<prime_power> factor(Integer const & n)
{
    return factor(to_i64(n));
}

std::vector<std::int64_t> divisors(std::int64_t n)
{
    std::vector<std::int64_t> out{1};
    for (auto [p, e] : factor(n)) {
        std::size_t const base = out.size();
        std::int64_t pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j)
                out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return false;
    return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound)
{
    std::vector<std::int64_t> out;
    if (bound < 2)
        return out;
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    for (std::int64_t i = 2; i <= bound; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j <= bound; j += i)
            composite[j] = true;
    }
    return out;
}

std::int64_t to_i64(Integer const & x)
{
    if (!x.fits_slong_p())
        throw domain_error("integer too large: " + x.get_str());
    return x.get_si();
}

std::int64_t gcd_i64(std::int64_t a, std::int64_t b)
{
    return std::gcd(a, b);
}

std::int64_t lcm_i64(std::int64_t a, std::int64_t b)
{
    return std::lcm(a, b);
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t powmod(std::int64_t base, std::uint64_t e, std::int64_t m)
{
    __int128 result = 1 % m;
    __int128 b = mod_floor(base, m);
    while (e > 0) {
        if (e & 1U)
            result = result * b % m;
        b = b * b % m;
        e >>= 1U;
    }
    return static_cast<std::int64_t>(result);
}

std::int64_t invmod(std::int64_t a, std::int64_t m)
{
    std::int64_t g = m, x = 0, x1 = 1, a1 = mod_floor(a, m);
    while (a1 != 0) {
        std::int64_t q = g / a1;
        std::tie(g, a1) = std::make_pair(a1, g - q * a1);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    if (g != 1)
        throw domain_error("invmod: not invertible");
    return mod_floor(x, m);
}

std::int64_t sqrt_mod_prime(std::int64_t a, std::int64_t p)
{
    a = mod_floor(a, p);
    if (a == 0 || p == 2)
        return a;
    if (powmod(a, (p - 1) / 2, p) != 1)
        throw domain_error("sqrt_mod_prime: not a quadratic residue");
    std::int64_t q = p - 1;
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    std::int64_t z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1)
        ++z;
    std::int64_t m = s;
    std::int64_t c = powmod(z, q, p);
    std::int64_t t = powmod(a, q, p);
    std::int64_t r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        std::int64_t i = 0;
        std::int64_t tt = t;
        while (tt != 1) {
            tt = static_cast<std::int64_t>(static_cast<__int128>(tt) * tt % p);
            ++i;
        }
        std::int64_t b = c;
        for (std::int64_t j = 0; j < m - i - 1; ++j)
            b = static_cast<std::int64_t>(static_cast<__int128>(b) * b % p);
        m = i;
        c = static_cast<std::int64_t>(static_cast<__int128>(b) * b % p);
        t = static_cast<std::int64_t>(static_cast<__int128>(t) * c % p);
        r = static_cast<std::int64_t>(static_cast<__int128>(r) * b % p);
    }
    return r;
}

int kronecker(Integer const & d, Integer const & n)
{
    return mpz_kronecker(d.get_mpz_t(), n.get_mpz_t());
}

int kronecker(std::int64_t d, std::int64_t n)
{
    return kronecker(Integer(static_cast<long>(d)), Integer(static_cast<long>(n)));
}

Integer prime_to_part(Integer n, std::int64_t p)
{
    if (n < 0)
        n = -n;
    if (n == 0)
        throw domain_error("prime_to_part: zero");
    Integer const pp(static_cast<long>(p));
    while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t()))
        n /= pp;
    return n;
}

int valuation(Integer n, std::int64_t p)
{
    if (n == 0)
        throw domain_error("valuation of zero");
    int v = 0;
    Integer const pp(static_cast<long>(p));
    while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
        n /= pp;
        ++v;
    }
    return v;
}

std::int64_t euler_phi(std::int64_t n)
{
    std::int64_t r = n;
    for (auto [p, e] : factor(n))
        r = r / p * (p - 1);
    return r;
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t m)
{
    if (m == 1)
        return 1;
    if (gcd_i64(a, m) != 1)
        throw domain_error("multiplicative_order: not a unit");
    std::int64_t ord = euler_phi(m);
    for (auto [p, e] : factor(ord)) {
        for (int i = 0; i < e && ord % p == 0; ++i) {
            if (powmod(a, static_cast<std::uint64_t>(ord / p), m) == 1)
                ord /= p;
            else
                break;
        }
    }
    return ord;
}

namespace {

std::vector<std::int64_t> poly_divexact(std::vector<std::int64_t> num, std::vector<std::int64_t> const & den)
{
    // den is monic
    std::size_t const dn = den.size() - 1;
    std::vector<std::int64_t> q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        std::int64_t c = num[i];
        q[i - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j)
            num[i - dn + j] -= c * den[j];
    }
    return q;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n)
{
    if (n <= 0)
        throw domain_error("cyclotomic_polynomial: n must be positive");
    // x^n - 1 divided by Phi_d for every proper divisor d
    std::vector<std::int64_t> poly(static_cast<std::size_t>(n) + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (std::int64_t d : divisors(n)) {
        if (d == n)
            continue;
        poly = poly_divexact(poly, cyclotomic_polynomial(d));
    }
    return poly;
}

Integer isqrt(Integer const & n)
{
    if (n < 0)
        throw domain_error("isqrt of negative");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(Integer const & n, Integer & root)
{
    if (n < 0)
        return false;
    root = isqrt(n);
    return root * root == n;
}

}  // namespace cmdihedral

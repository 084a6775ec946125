#include "cmdihedral/qseries.hpp"

#include "cmdihedral/kernels.hpp"

namespace cmdihedral {

ValueSeries theta_series(HeckeChar const & chi, std::size_t prec)
{
    if (prec < 1)
        throw domain_error("theta_series: prec must be >= 1");
    ValueSeries f;
    f.ring.ring = chi.ring_ptr();
    f.coeffs = theta_coefficients(chi, prec, configured_threads());
    f.weight = chi.weight();
    f.level = chi.conductor().norm() * chi.field().discriminant().magnitude();
    f.character = "hecke";
    return f;
}

namespace {

/// Coefficients of prod_{n>=1} (1 - q^n) up to q^prec (Euler's pentagonal theorem).
std::vector<Integer> euler_product(std::size_t prec)
{
    std::vector<Integer> g(prec + 1, 0);
    g[0] = 1;
    for (std::int64_t m = 1;; ++m) {
        std::int64_t const p1 = m * (3 * m - 1) / 2, p2 = m * (3 * m + 1) / 2;
        if (p1 > static_cast<std::int64_t>(prec))
            break;
        int const s = (m % 2 == 1) ? -1 : 1;
        g[static_cast<std::size_t>(p1)] = s;
        if (p2 <= static_cast<std::int64_t>(prec))
            g[static_cast<std::size_t>(p2)] = s;
    }
    return g;
}

IntSeries wrap_delta(std::vector<Integer> const & p24, std::size_t prec)
{
    IntSeries f;
    f.coeffs.assign(prec + 1, 0);
    for (std::size_t n = 1; n <= prec; ++n)
        f.coeffs[n] = p24[n - 1];
    f.weight = 12;
    f.level = 1;
    return f;
}

}  // namespace

IntSeries delta_qexp(std::size_t prec)
{
    if (prec > 100000)
        throw domain_error("delta_qexp: prec must be <= 10^5");
    if (prec == 0)
        return wrap_delta({}, 0);
    std::size_t const m = prec - 1;
    std::vector<Integer> const g = euler_product(m);
    std::vector<std::size_t> support;
    for (std::size_t j = 1; j <= m; ++j)
        if (g[j] != 0)
            support.push_back(j);
    // F = G^24: n F_n = sum_{j=1}^n (25 j - n) G_j F_{n-j}
    std::vector<Integer> F(m + 1, 0);
    F[0] = 1;
    for (std::size_t n = 1; n <= m; ++n) {
        Integer s = 0;
        for (std::size_t j : support) {
            if (j > n)
                break;
            long const coef = 25 * static_cast<long>(j) - static_cast<long>(n);
            if (g[j] > 0)
                s += coef * F[n - j];
            else
                s -= coef * F[n - j];
        }
        mpz_divexact_ui(F[n].get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(n));
    }
    return wrap_delta(F, prec);
}

IntSeries delta_qexp_product(std::size_t prec)
{
    if (prec == 0)
        return wrap_delta({}, 0);
    std::size_t const m = prec - 1;
    int const threads = configured_threads();
    // prod_{n <= m} (1 - q^n), one factor at a time
    std::vector<Integer> p(m + 1, 0);
    p[0] = 1;
    for (std::size_t n = 1; n <= m; ++n)
        for (std::size_t i = m; i >= n; --i)
            p[i] -= p[i - n];
    // P^24 = ((P^2 * P)^2)^2^2 ... via 24 = 16 + 8
    std::vector<Integer> p2 = series_mul(p, p, m, threads);
    std::vector<Integer> p4 = series_mul(p2, p2, m, threads);
    std::vector<Integer> p8 = series_mul(p4, p4, m, threads);
    std::vector<Integer> p16 = series_mul(p8, p8, m, threads);
    return wrap_delta(series_mul(p16, p8, m, threads), prec);
}

IntSeries twist(IntSeries const & f, DirichletChar const & mu)
{
    IntSeries out = f;
    for (std::size_t n = 1; n < out.coeffs.size(); ++n) {
        std::int64_t const e = mu.exponent(static_cast<std::int64_t>(n));
        if (e < 0)
            out.coeffs[n] = 0;
        else if (2 * e == mu.root_order())
            out.coeffs[n] = -out.coeffs[n];
        else if (e != 0)
            throw domain_error("twist: character values are not integers (ring mismatch)");
    }
    out.character = f.character + "*mu";
    return out;
}

ValueSeries twist(ValueSeries const & f, DirichletChar const & mu)
{
    ValueSeries out = f;
    ValueRing const & R = *f.ring.ring;
    for (std::size_t n = 1; n < out.coeffs.size(); ++n) {
        std::int64_t const e = mu.exponent(static_cast<std::int64_t>(n));
        if (e < 0)
            out.coeffs[n] = R.zero();
        else if (e != 0)
            out.coeffs[n] = R.mul(out.coeffs[n], R.root_of_unity(mu.root_order(), e));
    }
    out.character = f.character + "*mu";
    return out;
}

FFSeries twist(FFSeries const & f, DirichletChar const & mu)
{
    FiniteField const & F = *f.ring.field;
    std::int64_t const n1 = F.order() - 1;
    if (n1 % mu.root_order() != 0)
        throw domain_error("twist: character values do not lie in the coefficient field (ring mismatch)");
    FFSeries out = f;
    for (std::size_t n = 1; n < out.coeffs.size(); ++n) {
        std::int64_t const e = mu.exponent(static_cast<std::int64_t>(n));
        out.coeffs[n] = e < 0 ? 0 : F.mul(out.coeffs[n], F.exp(e * (n1 / mu.root_order())));
    }
    out.character = f.character + "*mu";
    return out;
}

Integer sturm_index(Integer const & N)
{
    if (N < 1)
        throw domain_error("sturm_index: N must be positive");
    Integer m = N;
    for (auto [p, e] : factor(N))
        m = m / p * (p + 1);
    return m;
}

BoundMode parse_bound_mode(std::string const & s)
{
    if (s == "standard")
        return BoundMode::standard;
    if (s == "paper")
        return BoundMode::paper;
    throw domain_error("bound mode must be \"standard\" or \"paper\"");
}

std::string to_string(BoundMode m)
{
    return m == BoundMode::standard ? "standard" : "paper";
}

Integer sturm_bound(int k, Integer const & N, BoundMode mode)
{
    if (k < 2)
        throw domain_error("sturm_bound: weight must be >= 2");
    Integer const m = sturm_index(N);
    if (mode == BoundMode::paper)
        return m / 6;
    return k * m / 12;
}

}  // namespace cmdihedral

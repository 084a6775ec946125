#include "cmdihedral/kernels.hpp"
#include "cmdihedral/qseries.hpp"

#include <gtest/gtest.h>

using namespace cmdihedral;

namespace {

HeckeChar delta_char()
{
    QuadraticField K(-23);
    return HeckeChar({-23, 12, K.splitting_type(23).primes.at(0), {11}, {}, {23}});
}

Integer pow_int(long b, unsigned long e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), e);
    return r;
}

}  // namespace

TEST(Delta, KnownCoefficients)
{
    IntSeries const f = delta_qexp(30);
    EXPECT_EQ(f[1], 1);
    EXPECT_EQ(f[2], -24);
    EXPECT_EQ(f[3], 252);
    EXPECT_EQ(f[4], -1472);
    EXPECT_EQ(f[5], 4830);
    EXPECT_EQ(f[7], -16744);
    EXPECT_EQ(f[11], 534612);
    EXPECT_EQ(f[23], 18643272);
    EXPECT_EQ(f.weight, 12);
}

TEST(Delta, RoutesAgree)
{
    IntSeries const a = delta_qexp(2000);
    IntSeries const b = delta_qexp_product(2000);
    ASSERT_EQ(a.prec(), 2000U);
    ASSERT_EQ(b.prec(), 2000U);
    for (std::size_t n = 1; n <= 2000; ++n)
        ASSERT_EQ(a[n], b[n]) << n;
}

TEST(Delta, HeckeRelations)
{
    IntSeries const f = delta_qexp(1000);
    // multiplicative, and tau(p^2) = tau(p)^2 - p^11
    for (std::int64_t m = 2; m <= 30; ++m)
        for (std::int64_t n = 2; n * m <= 1000; ++n)
            if (gcd_i64(m, n) == 1)
                ASSERT_EQ(f[m * n], f[m] * f[n]);
    for (std::int64_t p : primes_up_to(31))
        EXPECT_EQ(f[p * p], f[p] * f[p] - pow_int(p, 11));
}

TEST(Delta, PrecisionLimits)
{
    EXPECT_EQ(delta_qexp(0).prec(), 0U);
    EXPECT_THROW(delta_qexp(100001), domain_error);
}

TEST(Theta, HeckeRelationsAndMultiplicativity)
{
    HeckeChar const chi = delta_char();
    ValueRing const & R = chi.ring();
    QuadraticField const & K = chi.field();
    ValueSeries const f = theta_series(chi, 300);
    EXPECT_EQ(f.level, 529);
    EXPECT_TRUE(R.equal(f[1], R.one()));
    for (std::int64_t m = 2; m <= 17; ++m)
        for (std::int64_t n = 2; n * m <= 300; ++n)
            if (gcd_i64(m, n) == 1)
                ASSERT_TRUE(R.equal(f[m * n], R.mul(f[m], f[n]))) << m << "," << n;
    for (std::int64_t p : primes_up_to(17)) {
        Splitting const s = K.splitting_type(p);
        ValueElem const chi_p = chi.evaluate(K.rational_ideal(p));
        if (s.kind == SplitKind::split) {
            EXPECT_TRUE(R.equal(f[p], R.add(chi.evaluate(s.primes[0]), chi.evaluate(s.primes[1]))));
            EXPECT_TRUE(R.equal(f[p * p], R.sub(R.mul(f[p], f[p]), chi_p)));
        } else if (s.kind == SplitKind::inert) {
            EXPECT_TRUE(R.is_zero(f[p]));
            EXPECT_TRUE(R.equal(f[p * p], chi_p));
        }
    }
    EXPECT_TRUE(R.is_zero(f[23]));
}

TEST(Theta, DeltaCongruence)
{
    HeckeChar const chi = delta_char();
    ValueSeries const f = theta_series(chi, 552);
    IntSeries const d = delta_qexp(552);
    int good_maps = 0;
    for (auto const & m : build_reductions(chi.ring(), 23)) {
        auto const red = reduce_coefficients(f.coeffs, m, 1);
        bool ok = true;
        for (std::size_t n = 1; n <= 552; ++n) {
            if (n % 23 == 0)
                continue;
            Integer const t = ((d[n] % 23) + 23) % 23;
            if (m.field->from_integer(t) != red[n])
                ok = false;
        }
        good_maps += ok ? 1 : 0;
    }
    EXPECT_EQ(good_maps, 2);
}

TEST(Kernels, ParallelMatchesSerial)
{
    std::vector<Integer> a(400), b(300);
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] = static_cast<long>(i * i) - 77;
    for (std::size_t i = 0; i < b.size(); ++i)
        b[i] = static_cast<long>(3 * i) - 500;
    auto const serial = series_mul_serial(a, b, 500);
    HeckeChar const chi = delta_char();
    auto const theta_serial = theta_coefficients_serial(chi, 200);
    auto const maps = build_reductions(chi.ring(), 23);
    auto const red_serial = reduce_coefficients_serial(theta_serial, maps.at(0));
    for (int threads : {1, 2, 4}) {
        EXPECT_EQ(series_mul(a, b, 500, threads), serial);
        auto const t = theta_coefficients(chi, 200, threads);
        ASSERT_EQ(t.size(), theta_serial.size());
        for (std::size_t n = 0; n < t.size(); ++n)
            EXPECT_TRUE(chi.ring().equal(t[n], theta_serial[n]));
        EXPECT_EQ(reduce_coefficients(theta_serial, maps.at(0), threads), red_serial);
    }
}

TEST(Kernels, SeriesMulSmall)
{
    // (1 + q)^2 = 1 + 2q + q^2, truncated
    std::vector<Integer> const a{1, 1};
    EXPECT_EQ(series_mul_serial(a, a, 1), (std::vector<Integer>{1, 2}));
    EXPECT_EQ(series_mul_serial(a, a, 3), (std::vector<Integer>{1, 2, 1, 0}));
}

TEST(Kernels, ThreadsFromEnvironment)
{
    setenv("CM_DIHEDRAL_THREADS", "3", 1);
    EXPECT_EQ(configured_threads(), 3);
    setenv("CM_DIHEDRAL_THREADS", "zero", 1);
    EXPECT_THROW(configured_threads(), domain_error);
    unsetenv("CM_DIHEDRAL_THREADS");
    EXPECT_EQ(configured_threads(), 1);
}

TEST(Series, DropMultiples)
{
    IntSeries const f = drop_multiples(delta_qexp(50), 23);
    EXPECT_EQ(f[23], 0);
    EXPECT_EQ(f[46], 0);
    EXPECT_EQ(f[22], delta_qexp(50)[22]);
    EXPECT_THROW(drop_multiples(f, 0), domain_error);
}

TEST(Series, TwistIntegerAndInverse)
{
    IntSeries const f = delta_qexp(200);
    DirichletChar const mu = DirichletChar::kronecker_char(-23, 23);
    IntSeries const g = twist(f, mu);
    for (std::size_t n = 1; n <= 200; ++n)
        EXPECT_EQ(g[n], kronecker(-23, static_cast<std::int64_t>(n)) * f[n]);
    // twisting twice by a quadratic character restores coprime coefficients
    IntSeries const h = twist(g, mu);
    for (std::size_t n = 1; n <= 200; ++n)
        EXPECT_EQ(h[n], n % 23 == 0 ? Integer(0) : f[n]);
}

TEST(Series, TwistRingMismatch)
{
    // a character of order 4 mod 5 has values +-i
    DirichletChar const mu(5, 4, {-1, 0, 1, 3, 2});
    EXPECT_THROW(twist(delta_qexp(10), mu), domain_error);
}

TEST(Series, TwistFiniteFieldInverse)
{
    auto const F = std::make_shared<FiniteField const>(41, 1);
    FFSeries f;
    f.ring.field = F;
    f.coeffs.resize(101);
    for (std::size_t n = 1; n <= 100; ++n)
        f.coeffs[n] = F->from_int(static_cast<std::int64_t>(n * 7 + 1));
    DirichletChar const mu(5, 4, {-1, 0, 1, 3, 2});
    FFSeries const h = twist(twist(f, mu), mu.inverse());
    for (std::size_t n = 1; n <= 100; ++n)
        EXPECT_EQ(h[n], n % 5 == 0 ? 0U : f[n]);
    // the image of zeta_4 squares to -1
    FFSeries const g = twist(f, mu);
    EXPECT_EQ(F->mul(g[2], g[2]), F->neg(F->mul(f[2], f[2])));
    DirichletChar const mu3(7, 3, {-1, 0, 2, 1, 1, 2, 0});
    auto const F5 = std::make_shared<FiniteField const>(5, 1);
    FFSeries small;
    small.ring.field = F5;
    small.coeffs.assign(3, 1);
    EXPECT_THROW(twist(small, mu3), domain_error);
}

TEST(Series, TwistValueRing)
{
    HeckeChar const chi = delta_char();
    ValueSeries const f = theta_series(chi, 60);
    DirichletChar const mu = DirichletChar::kronecker_char(-23, 23);
    ValueSeries const h = twist(twist(f, mu), mu);
    for (std::size_t n = 1; n <= 60; ++n)
        EXPECT_TRUE(chi.ring().equal(h[n], n % 23 == 0 ? chi.ring().zero() : f[n]));
}

TEST(Sturm, Values)
{
    EXPECT_EQ(sturm_index(1), 1);
    EXPECT_EQ(sturm_index(529), 552);
    EXPECT_EQ(sturm_index(5041), 5112);
    EXPECT_EQ(sturm_index(12), 24);
    EXPECT_EQ(sturm_bound(12, 529, BoundMode::standard), 552);
    EXPECT_EQ(sturm_bound(12, 529, BoundMode::paper), 92);
    EXPECT_EQ(sturm_bound(2, 11, BoundMode::standard), 2);
    EXPECT_EQ(sturm_bound(2, 5041, BoundMode::standard), 852);
    EXPECT_THROW(sturm_bound(1, 11, BoundMode::standard), domain_error);
    EXPECT_EQ(parse_bound_mode("paper"), BoundMode::paper);
    EXPECT_THROW(parse_bound_mode("loose"), domain_error);
}

TEST(Delta, FullPrecisionMultiplicativity)
{
    IntSeries const f = delta_qexp(100000);
    ASSERT_EQ(f.prec(), 100000U);
    EXPECT_EQ(f[100000], f[32] * f[3125]);
    EXPECT_EQ(f[99999], f[9] * f[11111]);
    // tau(p^2) = tau(p)^2 - p^11 at p = 313 (p^2 = 97969)
    Integer p11;
    mpz_ui_pow_ui(p11.get_mpz_t(), 313, 11);
    EXPECT_EQ(f[97969], f[313] * f[313] - p11);
}

TEST(Series, TwistByCharacterModThree)
{
    IntSeries const f = delta_qexp(10);
    IntSeries const g = twist(f, DirichletChar::kronecker_char(-3, 3));
    EXPECT_EQ(g[3], 0);
    EXPECT_EQ(g[2], 24);
    EXPECT_EQ(g[4], f[4]);
    IntSeries const same = twist(f, DirichletChar::trivial(1));
    EXPECT_EQ(same.coeffs, f.coeffs);
}

TEST(Series, DropMultiplesIdempotent)
{
    IntSeries const f = delta_qexp(300);
    IntSeries const once = drop_multiples(f, 7);
    EXPECT_EQ(drop_multiples(once, 7).coeffs, once.coeffs);
    EXPECT_EQ(drop_multiples(delta_qexp(22), 23).coeffs, delta_qexp(22).coeffs);
}

TEST(Sturm, IndexMultiplicative)
{
    for (std::int64_t a = 1; a <= 60; ++a)
        for (std::int64_t b = 1; b <= 60; ++b)
            if (gcd_i64(a, b) == 1)
                ASSERT_EQ(sturm_index(a * b), sturm_index(a) * sturm_index(b));
}

#include "cmdihedral/value_ring.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cmdihedral;

namespace {

ValueElem random_elem(ValueRing const & R, std::mt19937 & rng)
{
    std::uniform_int_distribution<int> u(-5, 5);
    ValueElem x = R.zero();
    for (auto & c : x.coeffs)
        c = u(rng);
    return x;
}

}  // namespace

TEST(ValueRing, TensorRelations)
{
    QuadraticField K(-23);
    ValueRing R(K, 22);
    EXPECT_FALSE(R.embedded());
    EXPECT_EQ(R.dim(), 20U);
    EXPECT_EQ(R.pow(R.zeta_power(1), 22), R.one());
    EXPECT_NE(R.pow(R.zeta_power(1), 11), R.one());
    EXPECT_EQ(R.pow(R.zeta_power(1), 11), R.from_int(-1));
    // omega^2 = omega - 6 for D = -23
    EXPECT_EQ(R.mul(R.omega(), R.omega()), R.sub(R.omega(), R.from_int(6)));
    QuadInt const a{3, -2}, b{-1, 5};
    EXPECT_EQ(R.mul(R.from_quadint(a), R.from_quadint(b)), R.from_quadint(K.mul(a, b)));
}

TEST(ValueRing, EmbeddedGaussSum)
{
    for (auto [d, w] : {std::pair{-4L, 4L}, std::pair{-3L, 6L}, std::pair{-3L, 3L}, std::pair{-7L, 14L},
                        std::pair{-8L, 8L}, std::pair{-23L, 46L}}) {
        QuadraticField K(d);
        ValueRing R(K, w);
        EXPECT_TRUE(R.embedded()) << d;
        // omega satisfies its minimal polynomial
        ValueElem const w2 = R.mul(R.omega(), R.omega());
        EXPECT_EQ(w2, R.add(R.scale(R.omega(), K.delta()), R.from_int(K.omega_sq_const()))) << d;
    }
    QuadraticField K(-4);
    ValueRing R(K, 4);
    // omega = i is a primitive fourth root of unity, so it is zeta or zeta^3
    EXPECT_TRUE(R.omega() == R.zeta_power(1) || R.omega() == R.zeta_power(3));
}

TEST(ValueRing, RootOfUnityOddW)
{
    ValueRing R(QuadraticField(-23), 5);
    ValueElem const z10 = R.root_of_unity(10, 1);
    EXPECT_EQ(R.pow(z10, 10), R.one());
    EXPECT_NE(R.pow(z10, 5), R.one());
    EXPECT_EQ(R.root_of_unity(2, 1), R.from_int(-1));
    EXPECT_THROW(R.root_of_unity(3, 1), domain_error);
}

TEST(ValueRing, RingAxiomsWithRootLayer)
{
    QuadraticField K(-23);
    ValueRing base(K, 22);
    ValueElem const c = base.mul(base.zeta_power(3), base.from_quadint({2, 1}));
    ValueRing R = base.with_root(3, c);
    EXPECT_EQ(R.root_count(), 1U);
    EXPECT_EQ(R.pow(R.t_power(0, 1), 3), R.lift(c));
    EXPECT_EQ(R.t_power(0, 4), R.mul(R.lift(c), R.t_power(0, 1)));
    std::mt19937 rng(11);
    for (int i = 0; i < 40; ++i) {
        ValueElem const x = random_elem(R, rng), y = random_elem(R, rng), z = random_elem(R, rng);
        EXPECT_EQ(R.mul(R.mul(x, y), z), R.mul(x, R.mul(y, z)));
        EXPECT_EQ(R.mul(x, y), R.mul(y, x));
        EXPECT_EQ(R.mul(x, R.add(y, z)), R.add(R.mul(x, y), R.mul(x, z)));
        EXPECT_EQ(R.mul(x, R.one()), x);
    }
    EXPECT_THROW(R.add(R.one(), base.one()), domain_error);
}

TEST(ValueRing, DenominatorsNormalize)
{
    ValueRing R(QuadraticField(-71), 2);
    ValueElem const x = R.div_int(R.from_int(6), 4);
    EXPECT_EQ(x.den, 2);
    EXPECT_EQ(R.scale(x, 2), R.from_int(3));
    EXPECT_EQ(R.str(R.div_int(R.add(R.omega(), R.one()), 3)), "(1 + w)/3");
    EXPECT_EQ(R.str(R.zero()), "0");
}

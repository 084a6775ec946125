#include "cmdihedral/finite_field.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

using namespace cmdihedral;

class FieldAxioms : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(FieldAxioms, Exhaustive)
{
    auto [p, r] = GetParam();
    FiniteField F(p, r);
    std::uint32_t const q = F.order();
    // the modulus is irreducible: x has order q - 1
    std::set<FiniteField::elem> powers;
    for (std::uint32_t i = 0; i < q - 1; ++i)
        powers.insert(F.pow(F.generator(), i));
    EXPECT_EQ(powers.size(), q - 1);
    for (FiniteField::elem a = 0; a < q; ++a) {
        EXPECT_EQ(F.add(a, F.neg(a)), 0U);
        if (a != 0)
            EXPECT_EQ(F.mul(a, F.inv(a)), 1U);
        for (FiniteField::elem b = 0; b < q; b += 3) {
            EXPECT_EQ(F.add(a, b), F.add(b, a));
            EXPECT_EQ(F.mul(a, b), F.mul(b, a));
            for (FiniteField::elem c = 1; c < q; c += 7)
                EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
        }
    }
    // digit round trip
    for (FiniteField::elem a = 0; a < q; ++a)
        EXPECT_EQ(F.from_digits(F.digits(a)), a);
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Values(std::pair{23, 1}, std::pair{7, 2}, std::pair{5, 2}, std::pair{3, 3},
                                           std::pair{2, 4}, std::pair{7, 3}));

TEST(FiniteField, PrimeFieldMatchesIntegers)
{
    FiniteField F(23, 1);
    for (int a = 0; a < 23; ++a)
        for (int b = 0; b < 23; ++b) {
            EXPECT_EQ(F.mul(a, b), static_cast<unsigned>(a * b % 23));
            EXPECT_EQ(F.add(a, b), static_cast<unsigned>((a + b) % 23));
        }
    EXPECT_EQ(F.from_int(-24), 22U);
    EXPECT_THROW(F.inv(0), domain_error);
    EXPECT_THROW(FiniteField(4, 1), domain_error);
    EXPECT_THROW(FiniteField(2, 30), domain_error);
}

TEST(Teichmuller, Examples)
{
    FiniteField F(23, 1);
    EXPECT_EQ(teichmuller_lift(F, 1), (TeichRep{1, 0}));
    EXPECT_EQ(teichmuller_lift(F, 22).order, 2);
    TeichRep const t2 = teichmuller_lift(F, 2);
    EXPECT_EQ(t2.order, 11);
    EXPECT_EQ(teichmuller_reduce(F, t2), 2U);
    EXPECT_THROW(teichmuller_lift(F, 0), domain_error);
}

class TeichHom : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(TeichHom, InjectiveHomomorphism)
{
    auto [p, r] = GetParam();
    FiniteField F(p, r);
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (FiniteField::elem x = 1; x < F.order(); ++x) {
        TeichRep const tx = teichmuller_lift(F, x);
        EXPECT_EQ(teichmuller_reduce(F, tx), x);
        EXPECT_EQ(std::gcd(tx.order, static_cast<std::int64_t>(p)), 1);
        EXPECT_TRUE(seen.insert({tx.order, tx.exponent}).second);
        for (FiniteField::elem y = 1; y < F.order(); ++y)
            EXPECT_EQ(teichmuller_lift(F, F.mul(x, y)), teich_mul(tx, teichmuller_lift(F, y)));
    }
}

INSTANTIATE_TEST_SUITE_P(F23AndF49, TeichHom, ::testing::Values(std::pair{23, 1}, std::pair{7, 2}));

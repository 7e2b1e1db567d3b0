#include <mder/laguerre.hpp>

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

using namespace mder;
using mder::testing::poly;

namespace {

// L_k^{(beta)}(x) by the three-term recurrence
//   (j+1) L_{j+1} = (2j + 1 + beta - x) L_j - (j + beta) L_{j-1}
// in exact rationals.
Rational laguerre_numeric(std::size_t k, const Integer& beta, const Integer& x) {
    Rational prev = 1;
    if (k == 0) return prev;
    Rational cur = Rational(1 + beta - x);
    for (std::size_t j = 1; j < k; ++j) {
        const Rational jj(static_cast<unsigned long>(j));
        Rational next = ((2 * jj + 1 + Rational(beta) - Rational(x)) * cur - (jj + Rational(beta)) * prev) / (jj + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace

TEST(ScaledLaguerre, SmallK) {
    EXPECT_EQ(scaled_laguerre(0), XPolynomial::one());
    EXPECT_EQ(scaled_laguerre(1), (XPolynomial{poly({0, 1}), poly({-1})}));
    // a(a+1) - 2(a+1) x + x^2
    EXPECT_EQ(scaled_laguerre(2), (XPolynomial{poly({0, 1, 1}), poly({-2, -2}), poly({1})}));
}

TEST(ScaledLaguerre, DegreeLeadingAndConstantTerm) {
    for (std::size_t k = 0; k <= 15; ++k) {
        const auto l = scaled_laguerre(k);
        ASSERT_EQ(l.degree(), static_cast<std::ptrdiff_t>(k));
        EXPECT_EQ(l.leading(), poly({k % 2 ? -1 : 1}));
        EXPECT_EQ(l[0], rising_factorial(k));
    }
}

TEST(ScaledLaguerre, AgreesWithNumericRecurrence) {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> a_dist(2, 12), x_dist(-10, 25);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t k = static_cast<std::size_t>(trial % 11);
        const Integer a0 = a_dist(rng), x0 = x_dist(rng);
        Integer kfact;
        mpz_fac_ui(kfact.get_mpz_t(), k);
        const Rational expected = Rational(kfact) * laguerre_numeric(k, a0 - 1, x0);
        EXPECT_EQ(Rational(evaluate(scaled_laguerre(k), a0, x0)), expected) << "k=" << k << " a=" << a0 << " x=" << x0;
    }
}

TEST(LaguerreProduct, Examples) {
    EXPECT_EQ(laguerre_product(std::vector<std::size_t>{}), XPolynomial::one());
    EXPECT_EQ(laguerre_product(std::vector<std::size_t>{1}), scaled_laguerre(1));
    EXPECT_EQ(laguerre_product(std::vector<std::size_t>{1, 1}),
              (XPolynomial{poly({0, 0, 1}), poly({0, -2}), poly({1})}));
}

TEST(LaguerreProduct, DegreeIsTotalAndOrderIrrelevant) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto shape = mder::testing::random_shape(rng, 10);
        const auto p = laguerre_product(shape.blocks);
        EXPECT_EQ(p.degree(), static_cast<std::ptrdiff_t>(shape.total()));
        std::shuffle(shape.blocks.begin(), shape.blocks.end(), rng);
        EXPECT_EQ(laguerre_product(shape.blocks), p);
        shape.blocks.push_back(0);
        EXPECT_EQ(laguerre_product(shape.blocks), p);
    }
}

TEST(LaguerreTable, MemoMatchesDirectConstruction) {
    LaguerreTable table;
    for (std::size_t k : {3u, 1u, 3u, 7u, 0u}) EXPECT_EQ(table.get(k), scaled_laguerre(k));
    EXPECT_EQ(&table.get(3), &table.get(3));
}

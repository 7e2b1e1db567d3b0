#include <mder/exactcore.hpp>

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mder;
using mder::testing::poly;

namespace {

const AlphaPolynomial alpha = poly({0, 1});

} // namespace

TEST(AlphaPolynomial, AddExamples) {
    EXPECT_TRUE((alpha + poly({0, -1})).is_zero());
    EXPECT_TRUE((alpha + poly({0, -1})).coeffs().empty());
    EXPECT_EQ(poly({0, 1, 1}) + alpha, poly({0, 2, 1}));
    EXPECT_EQ(poly({0, 6, 3}) + AlphaPolynomial{}, poly({0, 6, 3}));
}

TEST(AlphaPolynomial, MulExamples) {
    EXPECT_EQ(alpha * poly({1, 1}), poly({0, 1, 1}));
    EXPECT_TRUE((poly({5, -3, 7}) * AlphaPolynomial{}).is_zero());
    EXPECT_EQ(poly({-1, 1}) * poly({1, 1}), poly({-1, 0, 1}));
}

TEST(AlphaPolynomial, CanonicalZero) {
    EXPECT_EQ(poly({0, 0, 0}), AlphaPolynomial{});
    EXPECT_EQ(AlphaPolynomial{}.degree(), -1);
    EXPECT_EQ(poly({3, 0, 0}).degree(), 0);
    EXPECT_EQ(poly({1, 2}) - poly({1, 2}), AlphaPolynomial{});
}

TEST(XPolynomial, MulExamples) {
    // (a - x)^2 = x^2 - 2a x + a^2
    const XPolynomial a_minus_x{alpha, poly({-1})};
    const XPolynomial sq = a_minus_x * a_minus_x;
    EXPECT_EQ(sq, (XPolynomial{poly({0, 0, 1}), poly({0, -2}), poly({1})}));
    EXPECT_EQ(evaluate(sq, Integer(3), Integer(2)), 1);

    EXPECT_EQ(a_minus_x * XPolynomial::one(), a_minus_x);
    const XPolynomial x{AlphaPolynomial{}, poly({1})};
    EXPECT_EQ(x * x, XPolynomial::monomial(poly({1}), 2));
}

TEST(RisingFactorial, Examples) {
    EXPECT_EQ(rising_factorial(0), poly({1}));
    EXPECT_EQ(rising_factorial(1), alpha);
    EXPECT_EQ(rising_factorial(3), poly({0, 2, 3, 1}));
}

TEST(RisingFactorial, ShapeOfCoefficients) {
    for (std::size_t m = 1; m <= 30; ++m) {
        const auto r = rising_factorial(m);
        EXPECT_EQ(r.degree(), static_cast<std::ptrdiff_t>(m));
        EXPECT_EQ(r.leading(), 1);
        EXPECT_EQ(r[0], 0);
    }
}

TEST(RisingFactorial, MatchesStirlingFirstKind) {
    // c(m+1, j) = c(m, j-1) + m c(m, j), c(0, 0) = 1
    std::vector<std::vector<Integer>> c(22, std::vector<Integer>(22, Integer(0)));
    c[0][0] = 1;
    for (std::size_t m = 0; m + 1 < c.size(); ++m)
        for (std::size_t j = 0; j <= m + 1; ++j)
            c[m + 1][j] = (j ? c[m][j - 1] : Integer(0)) + Integer(static_cast<unsigned long>(m)) * c[m][j];
    for (std::size_t m = 0; m <= 20; ++m) {
        const auto r = rising_factorial(m);
        for (std::size_t j = 0; j <= m; ++j) EXPECT_EQ(r[j], c[m][j]) << "m=" << m << " j=" << j;
    }
}

TEST(Evaluate, Examples) {
    EXPECT_EQ(evaluate(poly({0, 6, 3}), Integer(1)), 9);
    EXPECT_EQ(evaluate(AlphaPolynomial{}, Integer(17)), 0);
    EXPECT_EQ(evaluate(alpha, Integer(5)), 5);
    EXPECT_EQ(evaluate(poly({1, 1, 1}), Integer(-2)), 3);
}

TEST(AlphaPolynomial, RingAxiomsRandomized) {
    std::mt19937_64 rng(20240107);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = mder::testing::random_poly(rng, 6);
        const auto q = mder::testing::random_poly(rng, 6);
        const auto r = mder::testing::random_poly(rng, 6);
        EXPECT_EQ(p + q, q + p);
        EXPECT_EQ(p * q, q * p);
        EXPECT_EQ((p + q) + r, p + (q + r));
        EXPECT_EQ((p * q) * r, p * (q * r));
        EXPECT_EQ(p * (q + r), p * q + p * r);
        EXPECT_EQ(p - p, AlphaPolynomial{});
        if (!p.is_zero() && !q.is_zero()) EXPECT_EQ((p * q).degree(), p.degree() + q.degree());
    }
}

TEST(Evaluate, IsMultiplicative) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = mder::testing::random_poly(rng, 8);
        const auto q = mder::testing::random_poly(rng, 8);
        const Integer v = mder::testing::random_integer(rng, 40);
        EXPECT_EQ(evaluate(p * q, v), evaluate(p, v) * evaluate(q, v));
        EXPECT_EQ(evaluate(p + q, v), evaluate(p, v) + evaluate(q, v));
    }
}

TEST(DivideExact, QuotientAndRemainder) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const auto q = mder::testing::random_poly(rng, 6);
        auto d = mder::testing::random_poly(rng, 3);
        if (d.is_zero()) d = poly({3});
        auto got = divide_exact(q * d, d);
        ASSERT_TRUE(got.has_value());
        EXPECT_EQ(*got, q);
    }
    EXPECT_FALSE(divide_exact(poly({1, 1}), poly({0, 2})).has_value()); // (a+1)/(2a)
    EXPECT_FALSE(divide_exact(poly({1, 0, 1}), poly({1, 1})).has_value()); // remainder 2
    EXPECT_FALSE(divide_exact(poly({1}), poly({0, 1})).has_value());
    EXPECT_EQ(*divide_exact(AlphaPolynomial{}, poly({0, 1})), AlphaPolynomial{});
}

TEST(AlphaPolynomial, BeyondMachineWords) {
    const Integer big("626486325682388256883179081695232");
    const auto p = AlphaPolynomial::monomial(big, 3);
    const auto sq = p * p;
    EXPECT_EQ(sq.degree(), 6);
    EXPECT_EQ(sq[6], big * big);
    EXPECT_EQ(sq[6].get_str(), "392485116267019448021451367548304934772187066334817279166931533824");
}

TEST(Content, Basics) {
    EXPECT_EQ(content(poly({0, 6, -9, 12})), 3);
    EXPECT_EQ(content(AlphaPolynomial{}), 0);
}

TEST(BivariatePolynomial, ArithmeticAndSubstitution) {
    const auto n = BivariatePolynomial::n();
    const auto a = BivariatePolynomial::a();
    const auto p = (n + 1) * (a + 2); // n a + 2n + a + 2
    EXPECT_EQ(p.terms().size(), 4u);
    EXPECT_EQ(p.coefficient(1, 1), 1);
    EXPECT_EQ(p.coefficient(1, 0), 2);
    EXPECT_EQ(p.at_n(Integer(3)), poly({8, 4}));
    EXPECT_EQ(p.leading_coefficient(), 1); // term n a
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_TRUE((p - p).terms().empty());
    EXPECT_EQ(pow(a + 1, 2), a * a + 2 * a + 1);
    EXPECT_EQ(p.degree_n(), 1u);
    EXPECT_EQ(p.degree_a(), 1u);
}

TEST(Formatting, DescendingWithSigns) {
    EXPECT_EQ(to_string(poly({0, 6, 3})), "3*a^2 + 6*a");
    EXPECT_EQ(to_string(poly({-1, 0, 1})), "a^2 - 1");
    EXPECT_EQ(to_string(poly({0, -1})), "-a");
    EXPECT_EQ(to_string(AlphaPolynomial{}), "0");
    const auto n = BivariatePolynomial::n();
    const auto a = BivariatePolynomial::a();
    EXPECT_EQ(to_string(-a * (n + 1)), "-n*a - a");
}

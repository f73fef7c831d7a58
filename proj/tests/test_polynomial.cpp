#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "prescribed/polynomial.hpp"

using namespace prescribed;

namespace {
const Polynomial X = Polynomial::x();
Polynomial c(long v) { return Polynomial::constant(v); }
}  // namespace

TEST(Polynomial, CanonicalForm) {
    EXPECT_TRUE(Polynomial({0, 0, 0}).is_zero());
    EXPECT_EQ(Polynomial({0, 0, 0}).degree(), Polynomial::kZeroDegree);
    EXPECT_EQ(Polynomial({1, 2, 0}).degree(), 1);
    EXPECT_EQ(Polynomial(std::vector<Rational>{Rational(2, 4)}).coefficient(0), make_rational(1, 2));
}

TEST(Polynomial, Evaluate) {
    EXPECT_EQ(evaluate(X * X + c(1), Rational(2)), 5);
    EXPECT_EQ(evaluate(Polynomial(), make_rational(7, 3)), 0);
    EXPECT_EQ(evaluate(Polynomial({-1, 3}), make_rational(1, 3)), 0);
}

TEST(Polynomial, RingOperations) {
    EXPECT_EQ((X + c(1)) * (X - c(1)), X * X - c(1));
    EXPECT_EQ(compose(X * X, X + c(1)), Polynomial({1, 2, 1}));
    const Polynomial f({3, -1, 4, 1});
    EXPECT_TRUE((f + (-f)).is_zero());
    EXPECT_EQ(pow(X + c(1), 3), Polynomial({1, 3, 3, 1}));
}

TEST(Polynomial, Derivative) {
    EXPECT_EQ(derivative(pow(X, 3)), Polynomial({0, 0, 3}));
    EXPECT_TRUE(derivative(c(7)).is_zero());
    EXPECT_EQ(derivative(X * X + X), Polynomial({1, 2}));
}

TEST(Polynomial, DivMod) {
    const Polynomial f({5, 0, 3, 2});
    const Polynomial g({1, 2});
    const DivMod qr = divmod(f, g);
    EXPECT_EQ(qr.quotient * g + qr.remainder, f);
    EXPECT_LT(qr.remainder.degree(), g.degree());
    EXPECT_THROW(divmod(f, Polynomial()), std::domain_error);
}

TEST(Polynomial, Gcd) {
    EXPECT_EQ(gcd(X * X - c(1), X - c(1)), X - c(1));
    EXPECT_EQ(gcd(X * X + c(1), X * X - c(1)), c(1));
    const Polynomial a = pow(X - c(1), 2) * (X + c(2));
    const Polynomial b = (X - c(1)) * (X + c(3));
    EXPECT_EQ(gcd(a, b), X - c(1));
    EXPECT_EQ(gcd(Polynomial(), Polynomial({2, 4})), Polynomial(std::vector<Rational>{make_rational(1, 2), Rational(1)}));
    EXPECT_THROW(gcd(Polynomial(), Polynomial()), std::invalid_argument);
}

TEST(Polynomial, GcdRationalCoefficients) {
    const Polynomial half = Polynomial(std::vector<Rational>{make_rational(1, 2), make_rational(-3, 7)});
    const Polynomial a = half * (X * X + c(5));
    const Polynomial b = half * (X - c(4));
    EXPECT_EQ(gcd(a, b), monic(half));
}

TEST(Resultant, Examples) {
    EXPECT_EQ(resultant(X - c(2), X - c(3)), -1);
    EXPECT_EQ(oracle::sylvester_resultant({-2, 1}, {-3, 1}), -1);
    EXPECT_EQ(resultant(X * X - c(1), X - c(1)), 0);
    EXPECT_EQ(resultant(X * X, X + c(1)), 1);
    EXPECT_EQ(oracle::sylvester_resultant({0, 0, 1}, {1, 1}), 1);
    EXPECT_THROW(resultant(Polynomial(), X), std::invalid_argument);
}

TEST(Resultant, ConstantsAndScaling) {
    EXPECT_EQ(resultant(c(3), X * X + c(1)), 9);
    EXPECT_EQ(resultant(X * X + c(1), c(3)), 9);
    // Res(f/2, g) = 2^-deg(g) Res(f, g)
    const Polynomial f({1, 0, 1});
    const Polynomial g({-2, 1, 1});
    EXPECT_EQ(resultant(f * make_rational(1, 2), g), resultant(f, g) / 4);
}

TEST(Resultant, MatchesSylvesterOnRandomPairs) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> deg(0, 6);
    int zero_count = 0;
    for (int i = 0; i < 500; ++i) {
        Polynomial f = oracle::random_integer_polynomial(rng, deg(rng), 9);
        Polynomial g = oracle::random_integer_polynomial(rng, deg(rng), 9);
        if (i % 5 == 0) {
            const Polynomial common = oracle::random_integer_polynomial(rng, 1 + deg(rng) % 2, 5);
            f *= common;
            g *= common;
        }
        const Rational res = resultant(f, g);
        const Integer syl = oracle::sylvester_resultant(oracle::integer_coefficients(f), oracle::integer_coefficients(g));
        ASSERT_EQ(res, Rational(syl)) << to_string(f) << " | " << to_string(g);
        EXPECT_EQ(res == 0, gcd(f, g).degree() > 0);
        if (res == 0) ++zero_count;
    }
    EXPECT_GE(zero_count, 100);
}

TEST(Discriminant, Examples) {
    EXPECT_EQ(discriminant(X * X - c(1)), 4);
    EXPECT_EQ(discriminant(Polynomial({1, 2, 1})), 0);
    EXPECT_EQ(discriminant(pow(X, 3) - c(1)), -27);
    // -4p^3 - 27q^2 for X^3 + pX + q
    EXPECT_EQ(discriminant(Polynomial({5, -2, 0, 1})), -4 * -8 - 27 * 25);
    EXPECT_THROW(discriminant(c(3)), std::invalid_argument);
}

TEST(Discriminant, Separability) {
    EXPECT_TRUE(is_separable(X * X - c(1)));
    EXPECT_FALSE(is_separable(pow(X - c(1), 2)));
    EXPECT_TRUE(is_separable(pow(X, 5) - c(2)));
    // X^n + a: (-1)^(n(n-1)/2) n^n a^(n-1) = 3125 * 16
    EXPECT_EQ(discriminant(pow(X, 5) - c(2)), 50000);
    EXPECT_EQ(oracle::sylvester_resultant({-2, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 5}), 50000);
}

TEST(Discriminant, ProductRule) {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> deg(1, 4);
    for (int i = 0; i < 200; ++i) {
        Polynomial f = oracle::random_integer_polynomial(rng, deg(rng), 4);
        Polynomial g = oracle::random_integer_polynomial(rng, deg(rng), 4);
        const bool lhs = discriminant(f * g) != 0;
        const bool rhs = discriminant(f) != 0 && discriminant(g) != 0 && resultant(f, g) != 0;
        EXPECT_EQ(lhs, rhs);
        // disc(fg) = disc(f) disc(g) Res(f,g)^2
        EXPECT_EQ(discriminant(f * g), discriminant(f) * discriminant(g) * resultant(f, g) * resultant(f, g));
    }
}

TEST(Polynomial, EvaluationIsRingHomomorphism) {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> n(-20, 20);
    std::uniform_int_distribution<long> d(1, 20);
    for (int i = 0; i < 200; ++i) {
        const Polynomial f = oracle::random_integer_polynomial(rng, 4, 10);
        const Polynomial g = oracle::random_integer_polynomial(rng, 3, 10);
        const Rational x = make_rational(n(rng), d(rng));
        EXPECT_EQ(evaluate(f * g, x), evaluate(f, x) * evaluate(g, x));
        EXPECT_EQ(evaluate(f + g, x), evaluate(f, x) + evaluate(g, x));
        EXPECT_EQ(evaluate(compose(f, g), x), evaluate(f, evaluate(g, x)));
    }
}

TEST(RationalRoots, FindsAllRoots) {
    const Polynomial f = (Polynomial({-1, 2})) * (Polynomial({3, 1})) * (X * X + c(1));
    const RationalRoots roots = rational_roots(f);
    EXPECT_TRUE(roots.exhaustive);
    EXPECT_EQ(roots.roots, (std::vector<Rational>{Rational(-3), make_rational(1, 2)}));
    EXPECT_TRUE(rational_roots(X * X + c(1)).roots.empty());
    EXPECT_EQ(rational_roots(X * X * (X - c(5))).roots, (std::vector<Rational>{Rational(0), Rational(5)}));
}

TEST(RationalRoots, PartialWhenUnfactored) {
    const Integer big = Integer("1000000007") * Integer("1000000009");
    const Polynomial f = from_integers({big, 0, 1});
    const RationalRoots roots = rational_roots(f, 100);
    EXPECT_FALSE(roots.exhaustive);
    EXPECT_TRUE(roots.roots.empty());
}

TEST(Polynomial, TextForm) {
    EXPECT_EQ(to_string(Polynomial({1, 0, -3})), "1 + -3*X^2");
    EXPECT_EQ(to_string(Polynomial()), "0");
    EXPECT_EQ(to_string(Polynomial(std::vector<Rational>{0, make_rational(1, 2)})), "1/2*X");
}

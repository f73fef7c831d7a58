#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "prescribed/modular.hpp"

using namespace prescribed;

namespace {
FiniteFieldPolynomial fp(std::vector<std::uint64_t> c, std::uint64_t p) { return {std::move(c), p}; }

// Exhaustive: no monic factor of degree 1..n/2 over F_p.
bool brute_force_irreducible(const FiniteFieldPolynomial& f) {
    const int n = f.degree();
    const std::uint64_t p = f.modulus();
    if (n < 1) return false;
    for (int k = 1; 2 * k <= n; ++k) {
        std::vector<std::uint64_t> c(k + 1, 0);
        c[k] = 1;
        std::uint64_t count = 1;
        for (int i = 0; i < k; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t v = idx;
            for (int i = 0; i < k; ++i) {
                c[i] = v % p;
                v /= p;
            }
            if (remainder(f, FiniteFieldPolynomial(c, p)).is_zero()) return false;
        }
    }
    return true;
}
}  // namespace

TEST(ReduceModP, Examples) {
    const Polynomial f(std::vector<Rational>{make_rational(1, 2), 0, 1});
    EXPECT_EQ(reduce_mod_p(f, Integer(3)), fp({2, 0, 1}, 3));
    EXPECT_THROW(reduce_mod_p(f, Integer(2)), BadReduction);
    EXPECT_EQ(reduce_mod_p(Polynomial::x(), Integer(5)), fp({0, 1}, 5));
    EXPECT_THROW(reduce_mod_p(Polynomial::x(), Integer(4)), std::invalid_argument);
    EXPECT_EQ(reduce_mod_p(Polynomial({-1, 5}), Integer(5)), fp({4}, 5));
}

TEST(IrreducibleModP, Examples) {
    EXPECT_TRUE(is_irreducible_mod_p(fp({1, 0, 1}, 3)));
    for (std::uint64_t x = 0; x < 3; ++x) EXPECT_NE(fp({1, 0, 1}, 3)(x), 0U);
    EXPECT_FALSE(is_irreducible_mod_p(fp({2, 0, 1}, 3)));
    EXPECT_TRUE(is_irreducible_mod_p(fp({1, 1, 0, 1}, 2)));
    EXPECT_FALSE(is_irreducible_mod_p(fp({5}, 7)));
    EXPECT_TRUE(is_irreducible_mod_p(fp({3, 1}, 7)));
    // (X^2 + X + 1)^2 over F_2: no roots, still reducible
    EXPECT_FALSE(is_irreducible_mod_p(fp({1, 0, 1, 0, 1}, 2)));
    // product of two irreducible quadratics over F_3
    EXPECT_FALSE(is_irreducible_mod_p(fp({1, 0, 1}, 3) * fp({2, 1, 1}, 3)));
}

TEST(IrreducibleModP, MatchesBruteForceSmallFields) {
    std::mt19937_64 rng(41);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) {
        for (int deg = 1; deg <= 6; ++deg) {
            for (int trial = 0; trial < 40; ++trial) {
                std::vector<std::uint64_t> c(deg + 1);
                for (auto& x : c) x = rng() % p;
                c[deg] = 1 + rng() % (p - 1);
                const FiniteFieldPolynomial f(c, p);
                ASSERT_EQ(is_irreducible_mod_p(f), brute_force_irreducible(f)) << to_string(f);
            }
        }
    }
}

TEST(IrreducibleModP, MatchesBerlekampLargerDegrees) {
    std::mt19937_64 rng(43);
    for (std::uint64_t p : {11ULL, 101ULL, 997ULL}) {
        for (int trial = 0; trial < 30; ++trial) {
            const int deg = 8 + static_cast<int>(rng() % 10);
            std::vector<std::uint64_t> c(deg + 1);
            for (auto& x : c) x = rng() % p;
            c[deg] = 1;
            const FiniteFieldPolynomial f(c, p);
            oracle::ModPoly m(c.begin(), c.end());
            EXPECT_EQ(is_irreducible_mod_p(f), oracle::berlekamp_irreducible(m, static_cast<std::int64_t>(p)));
        }
    }
}

TEST(FiniteField, DivisionAndGcd) {
    const std::uint64_t p = 13;
    const auto a = fp({1, 2, 3, 4, 5}, p);
    const auto b = fp({7, 0, 1}, p);
    const auto qr = divmod(a, b);
    EXPECT_EQ(qr.quotient * b + qr.remainder, a);
    EXPECT_EQ(gcd(a * b, b * fp({1, 1}, p)), monic(b));
}

TEST(FiniteField, ResultantMatchesIntegerResultant) {
    std::mt19937_64 rng(12);
    const Integer p(1000003);
    for (int i = 0; i < 100; ++i) {
        const Polynomial f = oracle::random_integer_polynomial(rng, 1 + static_cast<int>(rng() % 6), 50);
        const Polynomial g = oracle::random_integer_polynomial(rng, 1 + static_cast<int>(rng() % 6), 50);
        const Integer exact = oracle::sylvester_resultant(oracle::integer_coefficients(f), oracle::integer_coefficients(g));
        const std::uint64_t r = resultant(reduce_mod_p(f, p), reduce_mod_p(g, p));
        EXPECT_EQ(Integer(r), mod_floor(exact, p));
    }
}

TEST(FiniteField, RootDetection) {
    EXPECT_TRUE(has_root_mod_p(fp({2, 0, 1}, 3)));
    EXPECT_FALSE(has_root_mod_p(fp({1, 0, 1}, 3)));
    EXPECT_FALSE(has_root_mod_p(fp({4}, 7)));
    std::mt19937_64 rng(4);
    for (int i = 0; i < 100; ++i) {
        std::vector<std::uint64_t> c(5);
        for (auto& x : c) x = rng() % 11;
        c[4] = 1;
        const FiniteFieldPolynomial f(c, 11);
        bool brute = false;
        for (std::uint64_t x = 0; x < 11; ++x) brute = brute || f(x) == 0;
        EXPECT_EQ(has_root_mod_p(f), brute);
    }
}

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "prescribed/arith.hpp"

using namespace prescribed;

TEST(Valuation, Examples) {
    EXPECT_EQ(valuation(Rational(12), Integer(2)).value(), 2);
    EXPECT_EQ(valuation(make_rational(5, 8), Integer(2)).value(), -3);
    EXPECT_TRUE(valuation(Rational(0), Integer(7)).infinite());
}

TEST(Valuation, RejectsNonPrime) {
    EXPECT_THROW(valuation(Rational(12), Integer(4)), std::invalid_argument);
    EXPECT_THROW(valuation(Rational(12), Integer(1)), std::invalid_argument);
}

TEST(Valuation, AdditiveOnProducts) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-5000, 5000);
    std::uniform_int_distribution<long> den(1, 5000);
    const Integer primes[] = {2, 3, 5, 7, 101};
    for (int i = 0; i < 500; ++i) {
        Rational a = make_rational(num(rng), den(rng));
        Rational b = make_rational(num(rng), den(rng));
        if (a == 0 || b == 0) continue;
        for (const auto& p : primes) {
            EXPECT_EQ(valuation(Rational(a * b), p), valuation(a, p) + valuation(b, p));
        }
    }
}

TEST(Primality, Examples) {
    EXPECT_TRUE(is_prime(Integer(29)));
    EXPECT_FALSE(is_prime(Integer(1)));
    EXPECT_FALSE(is_prime(Integer(0)));
    EXPECT_FALSE(is_prime(Integer(561)));
    EXPECT_FALSE(oracle::trial_division_is_prime(561));
}

TEST(Primality, AgreesWithSieveUpToMillion) {
    const auto prime = oracle::sieve(1'000'000);
    for (unsigned long n = 0; n <= 1'000'000; ++n) {
        ASSERT_EQ(is_prime(Integer(n)), prime[n]) << n;
    }
}

TEST(Primality, LargeValues) {
    // 2^127 - 1 is prime; 2^128 + 1 = 59649589127497217 * 5704689200685129054721.
    EXPECT_TRUE(is_prime(pow(Integer(2), 127) - 1));
    EXPECT_FALSE(is_prime(pow(Integer(2), 128) + 1));
    // strong pseudoprime to bases 2..37 (Sorenson-Webster), caught by base 41
    EXPECT_FALSE(is_prime(Integer("318665857834031151167461")));
    EXPECT_TRUE(is_prime(Integer("18446744073709551557")));  // largest prime below 2^64
}

TEST(Radical, Examples) {
    EXPECT_EQ(radical(Integer(-48)), 6);
    EXPECT_EQ(oracle::trial_radical(-48), 6);
    EXPECT_EQ(radical(Integer(-1)), 1);
    EXPECT_EQ(radical(Integer(30)), 30);
    EXPECT_THROW(radical(Integer(0)), std::invalid_argument);
}

TEST(Radical, SquarefreeAndDividesRandom) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> dist(-10'000'000, 10'000'000);
    for (int i = 0; i < 1000; ++i) {
        std::int64_t m = dist(rng);
        if (m == 0) m = 1;
        const Integer rad = radical(Integer(static_cast<long>(m)));
        EXPECT_EQ(rad, oracle::trial_radical(m));
        EXPECT_EQ(Integer(static_cast<long>(m)) * m % (rad * rad), 0);
        for (const auto& [p, e] : trial_factor(rad).factors) EXPECT_EQ(e, 1UL);
    }
}

TEST(Radical, PrimePowerCofactor) {
    const Integer p("1000000007");
    EXPECT_EQ(radical(p * p * p * 12, 1000), p * 6);
    const Factorization fac = trial_factor(Integer("1000000007") * Integer("1000000009"), 1000);
    EXPECT_FALSE(fac.complete);
    EXPECT_THROW(radical(Integer("1000000007") * Integer("1000000009"), 1000), std::runtime_error);
}

TEST(Roots, IntegerNthRoot) {
    EXPECT_EQ(integer_nth_root(Integer(512), 3), Integer(8));
    EXPECT_EQ(integer_nth_root(Integer(-32), 5), Integer(-2));
    EXPECT_FALSE(integer_nth_root(Integer(10), 2).has_value());
    EXPECT_FALSE(integer_nth_root(Integer(-4), 2).has_value());
}

TEST(Roots, RationalDthPower) {
    EXPECT_EQ(rational_dth_power_root(make_rational(8, 27), 3), make_rational(2, 3));
    EXPECT_EQ(rational_dth_power_root(Rational(pow(Integer(2), 39)), 39), Rational(2));
    EXPECT_FALSE(rational_dth_power_root(make_rational(4, 9), 3).has_value());
    EXPECT_EQ(rational_dth_power_root(Rational(0), 5), Rational(0));
}

TEST(Roots, RootPowersBack) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 40);
    for (int i = 0; i < 300; ++i) {
        const Rational y = make_rational(num(rng), den(rng));
        for (unsigned long d : {2UL, 3UL, 7UL}) {
            const Rational q = pow(y, d);
            auto root = rational_dth_power_root(q, d);
            ASSERT_TRUE(root.has_value());
            EXPECT_EQ(pow(*root, d), q);
            const Rational bumped = q + 1;
            if (auto r2 = rational_dth_power_root(bumped, d)) EXPECT_EQ(pow(*r2, d), bumped);
        }
    }
}

TEST(PrimeInClass, Examples) {
    EXPECT_EQ(next_prime_in_class(Integer(2), Integer(5), Integer(12)), 5);
    EXPECT_EQ(next_prime_in_class(Integer(6), Integer(5), Integer(12)), 17);
    EXPECT_EQ(next_prime_in_class(Integer(30), Integer(5), Integer(12)), 41);
    EXPECT_THROW(next_prime_in_class(Integer(2), Integer(4), Integer(12)), std::invalid_argument);
}

TEST(PrimeInClass, MatchesScanOracle) {
    for (long start = 0; start < 300; ++start) {
        long expect = start < 2 ? 2 : start;
        while (!(expect % 12 == 5 && oracle::trial_division_is_prime(expect))) ++expect;
        EXPECT_EQ(next_prime_in_class(Integer(start), Integer(5), Integer(12)), expect);
    }
}

TEST(Serialization, DecimalRoundTrip) {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
        Integer z = pow(Integer(3), rng() % 200) * (rng() % 2 ? 1 : -1) + Integer(static_cast<unsigned long>(rng() % 1000));
        EXPECT_EQ(parse_integer(to_string(z)), z);
        Rational q = make_rational(z, Integer(static_cast<unsigned long>(rng() % 97 + 1)));
        EXPECT_EQ(parse_rational(to_string(q)), q);
    }
    EXPECT_EQ(to_string(Integer(0)), "0");
    EXPECT_EQ(to_string(parse_integer("-0")), "0");
    EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
    EXPECT_THROW(parse_integer(""), std::invalid_argument);
}

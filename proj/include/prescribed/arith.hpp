#pragma once

// Exact integer and rational arithmetic on top of GMP, plus the handful of
// number-theoretic primitives the construction needs: p-adic valuations,
// primality, radicals, exact roots and primes in residue classes.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace prescribed {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a reduced rational num/den. Throws std::invalid_argument if den is 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "n" or "n/d" (optional leading '-'), returning the reduced value.
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

/// p-adic valuation; `infinite()` stands for v_p(0).
class Valuation {
public:
    static Valuation infinity() { return Valuation(); }
    static Valuation finite(long v) { return Valuation(v); }

    bool infinite() const { return !value_.has_value(); }
    long value() const;  // throws std::logic_error when infinite

    friend bool operator==(const Valuation&, const Valuation&) = default;
    Valuation operator+(const Valuation& other) const;

private:
    Valuation() = default;
    explicit Valuation(long v) : value_(v) {}
    std::optional<long> value_;
};

/// v_p(q). Throws std::invalid_argument when p is not prime.
Valuation valuation(const Rational& q, const Integer& p);
Valuation valuation(const Integer& z, const Integer& p);

/// Same as valuation() but trusts the caller that p is prime.
long valuation_unchecked(const Integer& z, const Integer& p);  // z != 0

/// Deterministic Miller-Rabin below 3.3e24 (first 13 prime bases), 64
/// seeded strong-probable-prime rounds above that.
bool is_prime(const Integer& n);

/// Smallest prime >= n.
Integer next_prime(const Integer& n);

/// Prime factorization by trial division up to `bound`; a leftover cofactor
/// is accepted when it is prime or a perfect power of a prime.
struct Factorization {
    std::vector<std::pair<Integer, unsigned long>> factors;  // ascending primes
    bool complete = true;  // false when an unsplit composite cofactor remains
    Integer cofactor = 1;  // the unsplit composite, when incomplete
};
Factorization trial_factor(const Integer& n, unsigned long bound = 1'000'000);

/// Product of the distinct primes dividing |m|. Throws std::invalid_argument
/// for m = 0 and std::runtime_error if |m| resists trial division.
Integer radical(const Integer& m, unsigned long bound = 1'000'000);

/// r with r^n = a exactly, if one exists (negative root for odd n, a < 0).
std::optional<Integer> integer_nth_root(const Integer& a, unsigned long n);

/// y with y^d = q exactly, if q is a d-th power in the rationals.
std::optional<Rational> rational_dth_power_root(const Rational& q, unsigned long d);

/// Smallest prime p >= start with p = residue (mod modulus).
/// Throws std::invalid_argument unless gcd(residue, modulus) = 1.
Integer next_prime_in_class(const Integer& start, const Integer& residue, const Integer& modulus);

Integer pow(const Integer& base, unsigned long exp);
Rational pow(const Rational& base, unsigned long exp);

/// Reduces x into [0, p); p must be > 0.
Integer mod_floor(const Integer& x, const Integer& p);

/// Fits-in-64-bit accessor (throws std::overflow_error otherwise).
std::uint64_t to_u64(const Integer& z);

}  // namespace prescribed

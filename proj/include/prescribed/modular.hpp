#pragma once

// Polynomials over the prime field F_p, p < 2^63.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "prescribed/polynomial.hpp"

namespace prescribed {

/// Raised when a prime divides a coefficient denominator, i.e. the
/// polynomial has no reduction at that prime.
class BadReduction : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class FiniteFieldPolynomial {
public:
    FiniteFieldPolynomial(std::vector<std::uint64_t> residues, std::uint64_t p);
    static FiniteFieldPolynomial x(std::uint64_t p) { return FiniteFieldPolynomial({0, 1}, p); }
    static FiniteFieldPolynomial constant(std::uint64_t c, std::uint64_t p) { return FiniteFieldPolynomial({c}, p); }

    std::uint64_t modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<std::uint64_t>& residues() const { return c_; }
    std::uint64_t leading() const { return c_.back(); }
    std::uint64_t operator()(std::uint64_t x) const;

    friend FiniteFieldPolynomial operator+(const FiniteFieldPolynomial& a, const FiniteFieldPolynomial& b);
    friend FiniteFieldPolynomial operator-(const FiniteFieldPolynomial& a, const FiniteFieldPolynomial& b);
    friend FiniteFieldPolynomial operator*(const FiniteFieldPolynomial& a, const FiniteFieldPolynomial& b);
    friend bool operator==(const FiniteFieldPolynomial&, const FiniteFieldPolynomial&) = default;

private:
    void trim();
    std::vector<std::uint64_t> c_;
    std::uint64_t p_;
};

namespace modp {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inverse(std::uint64_t a, std::uint64_t p);  // a != 0 mod p

}  // namespace modp

struct FiniteFieldDivMod {
    FiniteFieldPolynomial quotient;
    FiniteFieldPolynomial remainder;
};
FiniteFieldDivMod divmod(const FiniteFieldPolynomial& f, const FiniteFieldPolynomial& g);
FiniteFieldPolynomial remainder(const FiniteFieldPolynomial& f, const FiniteFieldPolynomial& g);
FiniteFieldPolynomial monic(const FiniteFieldPolynomial& f);
FiniteFieldPolynomial gcd(const FiniteFieldPolynomial& f, const FiniteFieldPolynomial& g);  // monic
FiniteFieldPolynomial derivative(const FiniteFieldPolynomial& f);
/// base^exp mod modulus, by repeated squaring.
FiniteFieldPolynomial powmod(const FiniteFieldPolynomial& base, const Integer& exp, const FiniteFieldPolynomial& modulus);

/// Resultant over F_p for the actual degrees of f and g.
std::uint64_t resultant(const FiniteFieldPolynomial& f, const FiniteFieldPolynomial& g);

/// Coefficientwise reduction. Throws BadReduction when p divides a
/// denominator, std::invalid_argument when p is not a prime below 2^63.
FiniteFieldPolynomial reduce_mod_p(const Polynomial& f, const Integer& p);

/// Rabin's test: f of degree n is irreducible iff f | X^(p^n) - X and
/// gcd(f, X^(p^(n/q)) - X) = 1 for every prime q | n.
bool is_irreducible_mod_p(const FiniteFieldPolynomial& f);

/// True iff f has a root in F_p (gcd with X^p - X is nontrivial).
bool has_root_mod_p(const FiniteFieldPolynomial& f);

std::string to_string(const FiniteFieldPolynomial& f);

}  // namespace prescribed

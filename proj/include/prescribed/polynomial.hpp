#pragma once

// Dense univariate polynomials with rational coefficients.

#include <initializer_list>
#include <string>
#include <vector>

#include "prescribed/arith.hpp"

namespace prescribed {

class Polynomial {
public:
    /// Degree reported for the zero polynomial (stands in for -infinity).
    static constexpr int kZeroDegree = -1;

    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<long> coefficients);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, unsigned k);
    static Polynomial x() { return monomial(1, 1); }
    /// X - root
    static Polynomial linear_factor(const Rational& root);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(unsigned i) const;
    const Rational& leading() const;  // throws on the zero polynomial

    Rational operator()(const Rational& x) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

Rational evaluate(const Polynomial& f, const Rational& x);
Polynomial compose(const Polynomial& outer, const Polynomial& inner);
Polynomial derivative(const Polynomial& f);
Polynomial pow(const Polynomial& f, unsigned exp);
Polynomial monic(const Polynomial& f);

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};
/// Euclidean division over the rationals; throws std::domain_error for divisor 0.
DivMod divmod(const Polynomial& f, const Polynomial& g);

/// f = scale * primitive, where primitive has coprime integer coefficients
/// and positive leading coefficient.
struct IntegerForm {
    std::vector<Integer> primitive;
    Rational scale;
};
IntegerForm integer_form(const Polynomial& f);  // f nonzero
Polynomial from_integers(const std::vector<Integer>& coeffs);

/// Least common multiple of the coefficient denominators.
Integer denominator_lcm(const Polynomial& f);
bool has_integer_coefficients(const Polynomial& f);

/// Monic gcd over the rationals (subresultant sequence on primitive parts).
/// Throws std::invalid_argument when both inputs are zero.
Polynomial gcd(const Polynomial& f, const Polynomial& g);

/// Resultant via the subresultant pseudo-remainder sequence.
/// Throws std::invalid_argument on a zero input.
Rational resultant(const Polynomial& f, const Polynomial& g);

/// (-1)^(d(d-1)/2) Res(f, f') / lc(f). Throws std::invalid_argument if deg f < 1.
Rational discriminant(const Polynomial& f);

/// gcd(f, f') = 1. Throws std::invalid_argument if deg f < 1.
bool is_separable(const Polynomial& f);

/// Rational roots by the rational root theorem. Divisors of the extreme
/// coefficients come from trial division up to `factor_bound`; `exhaustive`
/// is false when a coefficient could not be fully factored, in which case
/// `roots` holds only what the partial divisor set found.
struct RationalRoots {
    std::vector<Rational> roots;  // ascending, distinct
    bool exhaustive = true;
};
RationalRoots rational_roots(const Polynomial& f, unsigned long factor_bound = 1'000'000);

/// "c0 + c1*X + ... + cd*X^d", zero terms omitted, "0" for the zero polynomial.
std::string to_string(const Polynomial& f);

}  // namespace prescribed

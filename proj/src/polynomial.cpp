#include "prescribed/polynomial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "int_poly.hpp"

namespace prescribed {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients) coeffs_.emplace_back(c);
    trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, unsigned k) {
    std::vector<Rational> coeffs(k + 1);
    coeffs[k] = c;
    return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::linear_factor(const Rational& root) {
    return Polynomial(std::vector<Rational>{-root, Rational(1)});
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Rational evaluate(const Polynomial& f, const Rational& x) { return f(x); }

Polynomial compose(const Polynomial& outer, const Polynomial& inner) {
    Polynomial acc;
    const auto& c = outer.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + Polynomial::constant(*it);
    return acc;
}

Polynomial derivative(const Polynomial& f) {
    const auto& c = f.coefficients();
    if (c.size() <= 1) return {};
    std::vector<Rational> out(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * static_cast<unsigned long>(i);
    return Polynomial(std::move(out));
}

Polynomial pow(const Polynomial& f, unsigned exp) {
    Polynomial result = Polynomial::constant(1);
    Polynomial base = f;
    while (exp > 0) {
        if (exp & 1U) result *= base;
        exp >>= 1U;
        if (exp > 0) base *= base;
    }
    return result;
}

Polynomial monic(const Polynomial& f) {
    if (f.is_zero()) return f;
    return f * Rational(1 / f.leading());
}

DivMod divmod(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = f.coefficients();
    const int dg = g.degree();
    if (f.degree() < dg) return {Polynomial(), f};
    std::vector<Rational> quot(f.degree() - dg + 1);
    const Rational inv = 1 / g.leading();
    const auto& gc = g.coefficients();
    for (int k = f.degree() - dg; k >= 0; --k) {
        const Rational q = rem[k + dg] * inv;
        quot[k] = q;
        if (q == 0) continue;
        for (int j = 0; j <= dg; ++j) rem[k + j] -= q * gc[j];
    }
    rem.resize(dg);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

IntegerForm integer_form(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("integer_form of the zero polynomial");
    const Integer den = denominator_lcm(f);
    std::vector<Integer> coeffs;
    coeffs.reserve(f.coefficients().size());
    for (const auto& c : f.coefficients()) coeffs.push_back(c.get_num() * (den / c.get_den()));
    Integer cont = detail::content(coeffs);
    if (coeffs.back() < 0) cont = -cont;
    for (auto& c : coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cont.get_mpz_t());
    return {std::move(coeffs), make_rational(cont, den)};
}

Polynomial from_integers(const std::vector<Integer>& coeffs) {
    std::vector<Rational> q;
    q.reserve(coeffs.size());
    for (const auto& c : coeffs) q.emplace_back(c);
    return Polynomial(std::move(q));
}

Integer denominator_lcm(const Polynomial& f) {
    Integer l = 1;
    for (const auto& c : f.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

bool has_integer_coefficients(const Polynomial& f) {
    return std::all_of(f.coefficients().begin(), f.coefficients().end(), [](const Rational& c) { return is_integral(c); });
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
    if (f.is_zero()) return monic(g);
    if (g.is_zero()) return monic(f);
    return monic(from_integers(detail::subresultant_gcd(integer_form(f).primitive, integer_form(g).primitive)));
}

Rational resultant(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant with a zero polynomial");
    const IntegerForm F = integer_form(f);
    const IntegerForm G = integer_form(g);
    const Integer r = detail::subresultant_resultant(F.primitive, G.primitive);
    return pow(F.scale, g.degree()) * pow(G.scale, f.degree()) * Rational(r);
}

Rational discriminant(const Polynomial& f) {
    const int d = f.degree();
    if (d < 1) throw std::invalid_argument("discriminant needs degree >= 1");
    if (d == 1) return 1;
    Rational disc = resultant(f, derivative(f)) / f.leading();
    if ((static_cast<long>(d) * (d - 1) / 2) % 2 != 0) disc = -disc;
    return disc;
}

bool is_separable(const Polynomial& f) {
    if (f.degree() < 1) throw std::invalid_argument("is_separable needs degree >= 1");
    return gcd(f, derivative(f)).degree() == 0;
}

namespace {

std::vector<Integer> divisors(const Factorization& fac) {
    std::vector<Integer> out{1};
    auto extend = [&out](const Integer& p, unsigned long e) {
        const std::size_t base = out.size();
        Integer pk = 1;
        for (unsigned long k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    };
    for (const auto& [p, e] : fac.factors) extend(p, e);
    if (!fac.complete) extend(fac.cofactor, 1);
    return out;
}

}  // namespace

RationalRoots rational_roots(const Polynomial& f, unsigned long factor_bound) {
    if (f.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
    RationalRoots out;
    std::vector<Integer> F = integer_form(f).primitive;
    std::set<Rational> found;
    std::size_t shift = 0;
    while (shift < F.size() && F[shift] == 0) ++shift;
    if (shift > 0) {
        found.insert(Rational(0));
        F.erase(F.begin(), F.begin() + static_cast<long>(shift));
    }
    if (F.size() > 1) {
        const Factorization c0 = trial_factor(F.front(), factor_bound);
        const Factorization cn = trial_factor(F.back(), factor_bound);
        out.exhaustive = c0.complete && cn.complete;
        const auto us = divisors(c0);
        const auto vs = divisors(cn);
        for (const auto& v : vs) {
            for (const auto& u : us) {
                for (const Integer& signed_u : {Integer(u), Integer(-u)}) {
                    if (gcd(signed_u, v) != 1) continue;
                    if (detail::evaluate_homogeneous(F, signed_u, v) == 0) found.insert(make_rational(signed_u, v));
                }
            }
        }
    }
    out.roots.assign(found.begin(), found.end());
    return out;
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    const auto& c = f.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += " + ";
        out += to_string(c[i]);
        if (i == 1) out += "*X";
        if (i > 1) out += "*X^" + std::to_string(i);
    }
    return out;
}

}  // namespace prescribed

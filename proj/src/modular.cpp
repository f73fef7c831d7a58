#include "prescribed/modular.hpp"

#include <utility>

namespace prescribed {

namespace modp {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1U) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1U;
    }
    return r;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("inverse of zero modulo p");
    return pow(a, p - 2, p);
}

}  // namespace modp

namespace {

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    const std::uint64_t s = a + b;  // p < 2^63, no overflow
    return s >= p ? s - p : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }

void check_same_field(const FiniteFieldPolynomial& a, const FiniteFieldPolynomial& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("polynomials over different prime fields");
}

}  // namespace

FiniteFieldPolynomial::FiniteFieldPolynomial(std::vector<std::uint64_t> residues, std::uint64_t p)
    : c_(std::move(residues)), p_(p) {
    if (p < 2) throw std::invalid_argument("finite field modulus must be >= 2");
    for (auto& r : c_) r %= p_;
    trim();
}

void FiniteFieldPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t FiniteFieldPolynomial::operator()(std::uint64_t x) const {
    std::uint64_t acc = 0;
    x %= p_;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = add_mod(modp::mul(acc, x, p_), *it, p_);
    return acc;
}

FiniteFieldPolynomial operator+(const FiniteFieldPolynomial& a, const FiniteFieldPolynomial& b) {
    check_same_field(a, b);
    std::vector<std::uint64_t> out(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] = add_mod(out[i], b.c_[i], a.p_);
    return {std::move(out), a.p_};
}

FiniteFieldPolynomial operator-(const FiniteFieldPolynomial& a, const FiniteFieldPolynomial& b) {
    check_same_field(a, b);
    std::vector<std::uint64_t> out(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] = sub_mod(out[i], b.c_[i], a.p_);
    return {std::move(out), a.p_};
}

FiniteFieldPolynomial operator*(const FiniteFieldPolynomial& a, const FiniteFieldPolynomial& b) {
    check_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return {{}, a.p_};
    std::vector<std::uint64_t> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            out[i + j] = add_mod(out[i + j], modp::mul(a.c_[i], b.c_[j], a.p_), a.p_);
        }
    }
    return {std::move(out), a.p_};
}

FiniteFieldDivMod divmod(const FiniteFieldPolynomial& f, const FiniteFieldPolynomial& g) {
    check_same_field(f, g);
    const std::uint64_t p = f.modulus();
    if (g.is_zero()) throw std::domain_error("division by the zero polynomial mod p");
    if (f.degree() < g.degree()) return {FiniteFieldPolynomial({}, p), f};
    std::vector<std::uint64_t> rem = f.residues();
    const auto& gc = g.residues();
    const int dg = g.degree();
    std::vector<std::uint64_t> quot(f.degree() - dg + 1, 0);
    const std::uint64_t inv = modp::inverse(g.leading(), p);
    for (int k = f.degree() - dg; k >= 0; --k) {
        const std::uint64_t q = modp::mul(rem[k + dg], inv, p);
        quot[k] = q;
        if (q == 0) continue;
        for (int j = 0; j <= dg; ++j) rem[k + j] = sub_mod(rem[k + j], modp::mul(q, gc[j], p), p);
    }
    rem.resize(dg);
    return {FiniteFieldPolynomial(std::move(quot), p), FiniteFieldPolynomial(std::move(rem), p)};
}

FiniteFieldPolynomial remainder(const FiniteFieldPolynomial& f, const FiniteFieldPolynomial& g) {
    return divmod(f, g).remainder;
}

FiniteFieldPolynomial monic(const FiniteFieldPolynomial& f) {
    if (f.is_zero()) return f;
    const std::uint64_t inv = modp::inverse(f.leading(), f.modulus());
    std::vector<std::uint64_t> out = f.residues();
    for (auto& r : out) r = modp::mul(r, inv, f.modulus());
    return {std::move(out), f.modulus()};
}

FiniteFieldPolynomial gcd(const FiniteFieldPolynomial& f, const FiniteFieldPolynomial& g) {
    check_same_field(f, g);
    FiniteFieldPolynomial a = f;
    FiniteFieldPolynomial b = g;
    while (!b.is_zero()) {
        FiniteFieldPolynomial r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

FiniteFieldPolynomial derivative(const FiniteFieldPolynomial& f) {
    const auto& c = f.residues();
    if (c.size() <= 1) return {{}, f.modulus()};
    std::vector<std::uint64_t> out(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = modp::mul(c[i], i % f.modulus(), f.modulus());
    return {std::move(out), f.modulus()};
}

FiniteFieldPolynomial powmod(const FiniteFieldPolynomial& base, const Integer& exp, const FiniteFieldPolynomial& modulus) {
    check_same_field(base, modulus);
    if (exp < 0) throw std::invalid_argument("powmod with a negative exponent");
    const std::uint64_t p = modulus.modulus();
    FiniteFieldPolynomial result = remainder(FiniteFieldPolynomial::constant(1, p), modulus);
    FiniteFieldPolynomial b = remainder(base, modulus);
    const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = remainder(result * result, modulus);
        if (mpz_tstbit(exp.get_mpz_t(), i)) result = remainder(result * b, modulus);
    }
    return result;
}

std::uint64_t resultant(const FiniteFieldPolynomial& f, const FiniteFieldPolynomial& g) {
    check_same_field(f, g);
    const std::uint64_t p = f.modulus();
    if (f.is_zero() || g.is_zero()) return 0;
    FiniteFieldPolynomial a = f;
    FiniteFieldPolynomial b = g;
    std::uint64_t acc = 1;
    while (true) {
        const auto m = static_cast<std::uint64_t>(a.degree());
        const auto n = static_cast<std::uint64_t>(b.degree());
        if (n == 0) return modp::mul(acc, modp::pow(b.leading(), m, p), p);
        // Res(a, b) = (-1)^(mn) lc(b)^(m - deg r) Res(b, r), r = a mod b
        FiniteFieldPolynomial r = remainder(a, b);
        if (r.is_zero()) return 0;
        if ((m * n) % 2 == 1) acc = sub_mod(0, acc, p);
        acc = modp::mul(acc, modp::pow(b.leading(), m - static_cast<std::uint64_t>(r.degree()), p), p);
        a = std::move(b);
        b = std::move(r);
    }
}

FiniteFieldPolynomial reduce_mod_p(const Polynomial& f, const Integer& p) {
    if (p >= Integer(1) << 63 || !is_prime(p)) {
        throw std::invalid_argument("reduce_mod_p: " + to_string(p) + " is not a prime below 2^63");
    }
    const std::uint64_t pp = p.get_ui();
    std::vector<std::uint64_t> out;
    out.reserve(f.coefficients().size());
    for (const auto& c : f.coefficients()) {
        if (mpz_divisible_ui_p(c.get_den_mpz_t(), pp)) {
            throw BadReduction("bad reduction: " + to_string(p) + " divides a coefficient denominator");
        }
        const std::uint64_t num = mpz_fdiv_ui(c.get_num_mpz_t(), pp);
        const std::uint64_t den = mpz_fdiv_ui(c.get_den_mpz_t(), pp);
        out.push_back(modp::mul(num, modp::inverse(den, pp), pp));
    }
    return {std::move(out), pp};
}

bool is_irreducible_mod_p(const FiniteFieldPolynomial& f) {
    const int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const std::uint64_t p = f.modulus();
    const FiniteFieldPolynomial g = monic(f);
    const FiniteFieldPolynomial x = FiniteFieldPolynomial::x(p);

    // frob[k] = X^(p^k) mod g
    std::vector<FiniteFieldPolynomial> frob;
    frob.reserve(n + 1);
    frob.push_back(remainder(x, g));
    for (int k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), Integer(p), g));
    if (frob[n] != remainder(x, g)) return false;

    int rest = n;
    for (int q = 2; q <= rest; ++q) {
        if (rest % q != 0) continue;
        while (rest % q == 0) rest /= q;
        if (gcd(g, frob[n / q] - x).degree() != 0) return false;
    }
    return true;
}

bool has_root_mod_p(const FiniteFieldPolynomial& f) {
    if (f.is_zero()) return true;
    if (f.degree() == 0) return false;
    const std::uint64_t p = f.modulus();
    const FiniteFieldPolynomial x = FiniteFieldPolynomial::x(p);
    const FiniteFieldPolynomial xp = powmod(x, Integer(p), f);
    return gcd(f, xp - x).degree() > 0;
}

std::string to_string(const FiniteFieldPolynomial& f) {
    std::vector<Rational> q;
    for (auto r : f.residues()) q.emplace_back(Integer(r));
    return to_string(Polynomial(std::move(q))) + " (mod " + std::to_string(f.modulus()) + ")";
}

}  // namespace prescribed

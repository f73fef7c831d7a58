#include "prescribed/arith.hpp"

#include <array>
#include <cctype>
#include <random>
#include <stdexcept>

namespace prescribed {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// Strong probable-prime test to base a; n odd, n > a.
bool strong_probable_prime(const Integer& n, const Integer& a, const Integer& d, unsigned long s) {
    Integer x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    const Integer n_minus_1 = n - 1;
    if (x == 1 || x == n_minus_1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n_minus_1) return true;
        if (x == 1) return false;
    }
    return false;
}

// Bases 2..41 are a deterministic witness set below this bound.
const Integer& deterministic_bound() {
    static const Integer bound("3317044064679887385961981");
    return bound;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (!all_digits(digits)) {
        throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
    }
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const Integer num = parse_integer(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
        throw std::invalid_argument("bad rational denominator: '" + std::string(text) + "'");
    }
    return make_rational(num, Integer(std::string(den_text), 10));
}

std::string to_string(const Integer& z) { return z.get_str(10); }
std::string to_string(const Rational& q) { return q.get_str(10); }

long Valuation::value() const {
    if (!value_) throw std::logic_error("valuation is infinite");
    return *value_;
}

Valuation Valuation::operator+(const Valuation& other) const {
    if (infinite() || other.infinite()) return infinity();
    return finite(*value_ + *other.value_);
}

long valuation_unchecked(const Integer& z, const Integer& p) {
    long v = 0;
    Integer rest = abs(z);
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

Valuation valuation(const Integer& z, const Integer& p) {
    if (!is_prime(p)) throw std::invalid_argument("valuation: " + to_string(p) + " is not prime");
    if (z == 0) return Valuation::infinity();
    return Valuation::finite(valuation_unchecked(z, p));
}

Valuation valuation(const Rational& q, const Integer& p) {
    if (!is_prime(p)) throw std::invalid_argument("valuation: " + to_string(p) + " is not prime");
    if (q == 0) return Valuation::infinity();
    return Valuation::finite(valuation_unchecked(q.get_num(), p) - valuation_unchecked(q.get_den(), p));
}

bool is_prime(const Integer& n) {
    static constexpr std::array<unsigned long, 13> small_primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    if (n < 2) return false;
    for (unsigned long p : small_primes) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    if (n < 43 * 43) return true;

    Integer d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    if (n < deterministic_bound()) {
        for (unsigned long p : small_primes) {
            if (!strong_probable_prime(n, Integer(p), d, s)) return false;
        }
        return true;
    }

    // Bases drawn from a fixed-seed generator so the verdict is reproducible.
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(0x5eed);
    const Integer span = n - 3;
    for (int round = 0; round < 64; ++round) {
        const Integer a = rng.get_z_range(span) + 2;
        if (!strong_probable_prime(n, a, d, s)) return false;
    }
    return true;
}

Integer next_prime(const Integer& n) {
    Integer p = n < 2 ? Integer(2) : n;
    while (!is_prime(p)) ++p;
    return p;
}

Factorization trial_factor(const Integer& n, unsigned long bound) {
    if (n == 0) throw std::invalid_argument("trial_factor: zero has no factorization");
    Factorization out;
    Integer rest = abs(n);
    auto take = [&](unsigned long p) {
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) return;
        unsigned long e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        out.factors.emplace_back(Integer(p), e);
    };
    take(2);
    for (unsigned long p = 3; p <= bound; p += 2) {
        if (rest == 1) break;
        if (mpz_cmp_ui(rest.get_mpz_t(), p * p) < 0) break;
        take(p);
    }
    if (rest == 1) return out;
    if (is_prime(rest)) {
        out.factors.emplace_back(rest, 1);
        return out;
    }
    // A composite cofactor may still be a prime power.
    const bool power = mpz_perfect_power_p(rest.get_mpz_t()) != 0;
    for (unsigned long k = mpz_sizeinbase(rest.get_mpz_t(), 2); power && k >= 2; --k) {
        if (auto root = integer_nth_root(rest, k); root && is_prime(*root)) {
            out.factors.emplace_back(*root, k);
            return out;
        }
    }
    out.complete = false;
    out.cofactor = rest;
    return out;
}

Integer radical(const Integer& m, unsigned long bound) {
    if (m == 0) throw std::invalid_argument("radical of zero");
    const Factorization fac = trial_factor(m, bound);
    if (!fac.complete) {
        throw std::runtime_error("radical: cofactor " + to_string(fac.cofactor) + " resists trial division");
    }
    Integer rad = 1;
    for (const auto& [p, e] : fac.factors) rad *= p;
    return rad;
}

std::optional<Integer> integer_nth_root(const Integer& a, unsigned long n) {
    if (n == 0) throw std::invalid_argument("integer_nth_root: n must be positive");
    if (a < 0 && n % 2 == 0) return std::nullopt;
    Integer r;
    const Integer mag = abs(a);
    if (mpz_root(r.get_mpz_t(), mag.get_mpz_t(), n) == 0) return std::nullopt;
    if (a < 0) r = -r;
    return r;
}

std::optional<Rational> rational_dth_power_root(const Rational& q, unsigned long d) {
    if (d < 2) throw std::invalid_argument("rational_dth_power_root: d must be >= 2");
    auto num = integer_nth_root(q.get_num(), d);
    if (!num) return std::nullopt;
    auto den = integer_nth_root(q.get_den(), d);
    if (!den) return std::nullopt;
    return make_rational(*num, *den);
}

Integer next_prime_in_class(const Integer& start, const Integer& residue, const Integer& modulus) {
    if (modulus <= 0) throw std::invalid_argument("next_prime_in_class: modulus must be positive");
    Integer g;
    mpz_gcd(g.get_mpz_t(), residue.get_mpz_t(), modulus.get_mpz_t());
    if (g != 1) throw std::invalid_argument("next_prime_in_class: residue and modulus not coprime");
    const Integer r = mod_floor(residue, modulus);
    Integer p = start < 2 ? Integer(2) : start;
    p += mod_floor(r - p, modulus);
    while (!is_prime(p)) p += modulus;
    return p;
}

Integer pow(const Integer& base, unsigned long exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Rational pow(const Rational& base, unsigned long exp) {
    return make_rational(pow(base.get_num(), exp), pow(base.get_den(), exp));
}

Integer mod_floor(const Integer& x, const Integer& p) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    return r;
}

std::uint64_t to_u64(const Integer& z) {
    if (z < 0 || !z.fits_ulong_p()) throw std::overflow_error("value does not fit 64 bits: " + to_string(z));
    return z.get_ui();
}

}  // namespace prescribed

#include "prescribed/witness.hpp"

#include <stdexcept>

#include "prescribed/modular.hpp"

namespace prescribed {

namespace {

constexpr int kQuickAttempts = 12;

bool admissible(const Polynomial& f, const Integer& q) {
    if (mpz_divisible_p(f.leading().get_num_mpz_t(), q.get_mpz_t())) return false;
    for (const auto& c : f.coefficients()) {
        if (mpz_divisible_p(c.get_den_mpz_t(), q.get_mpz_t())) return false;
    }
    return true;
}

template <typename ResidueFn, typename ExactFn>
std::optional<ModularWitness> search(const Integer& start, ResidueFn residue, ExactFn exact) {
    Integer q = next_prime(start);
    for (int attempt = 0; attempt < kQuickAttempts; ++attempt, q = next_prime(q + 1)) {
        if (auto r = residue(q); r && *r != 0) return ModularWitness{q, *r};
    }
    // Every quick prime divided the value; settle it exactly.
    const Rational value = exact();
    if (value == 0) return std::nullopt;
    for (;; q = next_prime(q + 1)) {
        if (auto r = residue(q); r && *r != 0) return ModularWitness{q, *r};
    }
}

}  // namespace

const Integer& default_witness_start() {
    static const Integer start = Integer(1) << 31;
    return start;
}

std::optional<Integer> resultant_mod(const Polynomial& f, const Polynomial& g, const Integer& q) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant_mod with a zero polynomial");
    if (!admissible(f, q) || !admissible(g, q)) return std::nullopt;
    return Integer(resultant(reduce_mod_p(f, q), reduce_mod_p(g, q)));
}

std::optional<ModularWitness> find_resultant_witness(const Polynomial& f, const Polynomial& g, const Integer& start) {
    return search(
        start, [&](const Integer& q) { return resultant_mod(f, g, q); }, [&] { return resultant(f, g); });
}

bool check_resultant_witness(const Polynomial& f, const Polynomial& g, const ModularWitness& w) {
    if (f.is_zero() || g.is_zero() || w.residue == 0 || !is_prime(w.prime)) return false;
    const auto r = resultant_mod(f, g, w.prime);
    return r && *r == w.residue;
}

std::optional<ModularWitness> find_discriminant_witness(const Polynomial& f, const Integer& start) {
    if (f.degree() < 1) throw std::invalid_argument("discriminant witness needs degree >= 1");
    if (f.degree() == 1) return ModularWitness{next_prime(start), 1};
    auto residue = [&](const Integer& q) -> std::optional<Integer> {
        if (!admissible(f, q)) return std::nullopt;
        const auto fq = reduce_mod_p(f, q);
        const auto dq = derivative(fq);
        return Integer(resultant(fq, dq));
    };
    return search(start, residue, [&] { return discriminant(f); });
}

bool check_discriminant_witness(const Polynomial& f, const ModularWitness& w) {
    if (f.degree() < 1 || w.residue == 0 || !is_prime(w.prime)) return false;
    if (f.degree() == 1) return w.residue == 1;
    if (!admissible(f, w.prime)) return false;
    const auto fq = reduce_mod_p(f, w.prime);
    return Integer(resultant(fq, derivative(fq))) == w.residue;
}

}  // namespace prescribed

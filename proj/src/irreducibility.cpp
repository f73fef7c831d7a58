#include "prescribed/irreducibility.hpp"

#include <set>
#include <stdexcept>

#include "prescribed/modular.hpp"

namespace prescribed {

std::string to_string(IrreducibilityKind kind) {
    switch (kind) {
        case IrreducibilityKind::none: return "none";
        case IrreducibilityKind::mod_p_irreducible: return "mod-p-irreducible";
        case IrreducibilityKind::pure_slope_eisenstein: return "pure-slope-eisenstein";
        case IrreducibilityKind::rational_factor_found: return "rational-factor-found";
    }
    return "none";
}

std::string to_string(IrreducibilityVerdict verdict) {
    switch (verdict) {
        case IrreducibilityVerdict::irreducible: return "irreducible";
        case IrreducibilityVerdict::reducible: return "reducible";
        case IrreducibilityVerdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

IrreducibilityKind parse_irreducibility_kind(const std::string& text) {
    for (auto k : {IrreducibilityKind::none, IrreducibilityKind::mod_p_irreducible,
                   IrreducibilityKind::pure_slope_eisenstein, IrreducibilityKind::rational_factor_found}) {
        if (to_string(k) == text) return k;
    }
    throw std::invalid_argument("unknown irreducibility kind '" + text + "'");
}

namespace {

bool mod_p_witness_holds(const Polynomial& f, const Integer& p) {
    try {
        const FiniteFieldPolynomial fp = reduce_mod_p(f, p);
        return fp.degree() == f.degree() && is_irreducible_mod_p(fp);
    } catch (const BadReduction&) {
        return false;
    }
}

// Small primes dividing the numerator or denominator of c0 or cn.
std::set<unsigned long> extreme_primes(const Polynomial& f, unsigned long bound) {
    std::set<unsigned long> out;
    const Rational& c0 = f.coefficients().front();
    const Rational& cn = f.leading();
    for (const Integer* z : {&c0.get_num(), &c0.get_den(), &cn.get_num(), &cn.get_den()}) {
        if (*z == 0) continue;
        for (unsigned long p = 2; p <= bound; ++p) {
            if (mpz_divisible_ui_p(z->get_mpz_t(), p) && is_prime(Integer(p))) out.insert(p);
        }
    }
    return out;
}

}  // namespace

IrreducibilityCertificate certify_irreducible_over_Q(const Polynomial& f, const IrreducibilityEffort& effort) {
    if (f.degree() < 1) throw std::invalid_argument("certify_irreducible_over_Q needs degree >= 1");
    IrreducibilityCertificate cert;

    if (f.degree() >= 2 && f.degree() <= 3) {
        const RationalRoots roots = rational_roots(f, effort.factor_bound);
        if (!roots.roots.empty()) {
            cert.kind = IrreducibilityKind::rational_factor_found;
            cert.verdict = IrreducibilityVerdict::reducible;
            cert.factor = Polynomial::linear_factor(roots.roots.front());
            return cert;
        }
    }
    if (f.coefficients().front() == 0 && f.degree() >= 2) {
        cert.kind = IrreducibilityKind::rational_factor_found;
        cert.verdict = IrreducibilityVerdict::reducible;
        cert.factor = Polynomial::x();
        return cert;
    }

    for (unsigned long p : extreme_primes(f, effort.witness_prime_bound)) {
        if (is_pure_slope_irreducible(f, Integer(p))) {
            cert.kind = IrreducibilityKind::pure_slope_eisenstein;
            cert.verdict = IrreducibilityVerdict::irreducible;
            cert.prime = Integer(p);
            cert.polygon = newton_polygon(f, Integer(p));
            return cert;
        }
    }

    for (Integer p = 2; p <= effort.witness_prime_bound; p = next_prime(p + 1)) {
        if (mod_p_witness_holds(f, p)) {
            cert.kind = IrreducibilityKind::mod_p_irreducible;
            cert.verdict = IrreducibilityVerdict::irreducible;
            cert.prime = p;
            return cert;
        }
    }
    return cert;
}

bool recheck(const IrreducibilityCertificate& cert, const Polynomial& f) {
    switch (cert.kind) {
        case IrreducibilityKind::mod_p_irreducible:
            return cert.verdict == IrreducibilityVerdict::irreducible && cert.prime && mod_p_witness_holds(f, *cert.prime);
        case IrreducibilityKind::pure_slope_eisenstein:
            return cert.verdict == IrreducibilityVerdict::irreducible && cert.prime && is_prime(*cert.prime) &&
                   is_pure_slope_irreducible(f, *cert.prime) &&
                   (!cert.polygon || *cert.polygon == newton_polygon(f, *cert.prime));
        case IrreducibilityKind::rational_factor_found: {
            if (cert.verdict != IrreducibilityVerdict::reducible || !cert.factor) return false;
            const int k = cert.factor->degree();
            return k >= 1 && k < f.degree() && divmod(f, *cert.factor).remainder.is_zero();
        }
        case IrreducibilityKind::none:
            return cert.verdict == IrreducibilityVerdict::inconclusive;
    }
    return false;
}

}  // namespace prescribed

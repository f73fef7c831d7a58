#pragma once

// Sufficient-condition irreducibility certificates over the rationals.

#include <optional>
#include <string>

#include "prescribed/newton.hpp"

namespace prescribed {

enum class IrreducibilityKind { none, mod_p_irreducible, pure_slope_eisenstein, rational_factor_found };
enum class IrreducibilityVerdict { irreducible, reducible, inconclusive };

std::string to_string(IrreducibilityKind kind);
std::string to_string(IrreducibilityVerdict verdict);
IrreducibilityKind parse_irreducibility_kind(const std::string& text);

struct IrreducibilityCertificate {
    IrreducibilityKind kind = IrreducibilityKind::none;
    IrreducibilityVerdict verdict = IrreducibilityVerdict::inconclusive;
    std::optional<Integer> prime;           // mod-p or pure-slope witness
    std::optional<NewtonPolygon> polygon;   // pure-slope witness
    std::optional<Polynomial> factor;       // nontrivial rational factor
};

struct IrreducibilityEffort {
    unsigned long witness_prime_bound = 1000;
    unsigned long factor_bound = 1'000'000;
};

/// Tries, in order: rational roots (degree <= 3, reducibility only), a
/// pure-slope Newton polygon at small primes dividing the extreme
/// coefficients, then irreducibility modulo primes up to the bound that
/// keep the degree. Never claims irreducible without a witness.
IrreducibilityCertificate certify_irreducible_over_Q(const Polynomial& f, const IrreducibilityEffort& effort = {});

/// Re-derives the certificate's claim for f from its witness.
bool recheck(const IrreducibilityCertificate& cert, const Polynomial& f);

}  // namespace prescribed

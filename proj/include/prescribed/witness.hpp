#pragma once

// Modular certificates that a resultant or discriminant is nonzero.
//
// If q does not divide any coefficient denominator nor the leading
// numerators, then Res(f, g) mod q = Res(f mod q, g mod q); a nonzero
// residue proves Res(f, g) != 0 without computing the exact value.

#include <optional>

#include "prescribed/polynomial.hpp"

namespace prescribed {

struct ModularWitness {
    Integer prime;
    Integer residue;
    friend bool operator==(const ModularWitness&, const ModularWitness&) = default;
};

/// First prime tried when searching for witnesses.
const Integer& default_witness_start();

/// Searches primes >= start for a nonzero residue of Res(f, g). Returns
/// nullopt only when the exact resultant is zero. f, g nonzero.
std::optional<ModularWitness> find_resultant_witness(const Polynomial& f, const Polynomial& g,
                                                     const Integer& start = default_witness_start());
bool check_resultant_witness(const Polynomial& f, const Polynomial& g, const ModularWitness& w);

/// Same for Res(f, f'), i.e. the discriminant up to a unit. deg f >= 1.
std::optional<ModularWitness> find_discriminant_witness(const Polynomial& f,
                                                        const Integer& start = default_witness_start());
bool check_discriminant_witness(const Polynomial& f, const ModularWitness& w);

/// Residue of Res(f, g) mod q, or nullopt when q is not admissible for
/// f and g (bad reduction or a leading coefficient vanishing mod q).
std::optional<Integer> resultant_mod(const Polynomial& f, const Polynomial& g, const Integer& q);

}  // namespace prescribed

#pragma once

// Integer-coefficient dense polynomial kernels (internal). Vectors are
// indexed by degree and kept trimmed: no trailing zeros, empty for zero.

#include <vector>

#include "prescribed/arith.hpp"

namespace prescribed::detail {

using IntPoly = std::vector<Integer>;

inline int degree(const IntPoly& a) { return static_cast<int>(a.size()) - 1; }
void trim(IntPoly& a);

/// Positive gcd of the coefficients; 0 for the zero polynomial.
Integer content(const IntPoly& a);
void divide_exact(IntPoly& a, const Integer& c);

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient; inputs nonzero.
IntPoly subresultant_gcd(IntPoly a, IntPoly b);
/// Resultant of nonzero integer polynomials.
Integer subresultant_resultant(IntPoly a, IntPoly b);

/// sum a_i u^i v^(deg - i)
Integer evaluate_homogeneous(const IntPoly& a, const Integer& u, const Integer& v);

}  // namespace prescribed::detail

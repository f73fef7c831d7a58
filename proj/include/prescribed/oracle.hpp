#pragma once

// Exhaustive bounded-height rational point searches.
//
// Candidates are x = u/v in lowest terms with |u| <= H and 1 <= v <= H;
// y is then determined exactly from x.

#include <optional>
#include <string>
#include <vector>

#include "prescribed/projective.hpp"

namespace prescribed {

/// Reduced fractions u/v with |u| <= H, 1 <= v <= H, ordered by v, then u.
std::vector<Rational> enumerate_window(long height);

enum class SearchVerdict { exact_match, extra_points, missing_points };
std::string to_string(SearchVerdict verdict);

/// Found points are sorted coordinate tuples. For glued systems they are
/// the primitive homogeneous coordinates in the original P^n.
struct SearchReport {
    long height = 0;
    std::size_t candidates = 0;
    std::vector<RationalVector> found;
    std::vector<RationalVector> expected;
    SearchVerdict verdict = SearchVerdict::exact_match;
    double seconds = 0;
    bool hypothesis_warning = false;
    std::vector<std::string> notes;
};

/// extra_points if anything unexpected was found, else missing_points if
/// an expected point is absent, else exact_match.
SearchVerdict compare_point_sets(const std::vector<RationalVector>& found, const std::vector<RationalVector>& expected);

/// Affine points of y^d = f(x); both signs of y when d is even. Work is
/// split over `threads` contiguous partitions of the window.
SearchReport search_superelliptic(const Polynomial& f, long d, long height,
                                  const std::vector<RationalVector>& expected = {}, unsigned threads = 1);

/// Affine points of ell Y^2 = X^3 - 1; expected {(1, 0)}. Flags a warning
/// unless ell is a prime = 5 mod 12.
SearchReport search_twist(const Integer& ell, long height, unsigned threads = 1);

/// Points of the glued system, mapped back to the original coordinates
/// and compared with system.points.
SearchReport search_glued(const ProjectiveCurveSystem& system, long height, unsigned threads = 1);

struct RootCheck {
    bool no_roots = false;
    bool exhaustive = false;
    std::string method;  // "mod-p-root-free", "rational-root-theorem", "window"
    std::optional<Integer> prime;
    std::optional<Rational> root;
};

/// Exhaustive when some prime p not dividing lc has no root of f mod p,
/// or when the rational root theorem candidates can all be enumerated.
/// Otherwise falls back to the window and reports a partial result.
RootCheck no_rational_roots_check(const Polynomial& f, long height, unsigned long factor_bound = 1'000'000);

}  // namespace prescribed

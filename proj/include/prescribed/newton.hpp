#pragma once

// p-adic Newton polygons.
//
// Convention: the polygon is the lower convex hull of {(i, v_p(c_i))},
// scanned left to right. A segment of slope s and horizontal length k
// accounts for k roots of valuation -s.

#include <vector>

#include "prescribed/polynomial.hpp"

namespace prescribed {

struct PolygonVertex {
    long index;
    long valuation;
    friend bool operator==(const PolygonVertex&, const PolygonVertex&) = default;
};

struct PolygonSegment {
    Rational slope;
    long length;
    friend bool operator==(const PolygonSegment&, const PolygonSegment&) = default;
};

struct NewtonPolygon {
    Integer prime;
    std::vector<PolygonVertex> vertices;
    std::vector<PolygonSegment> segments;
    friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;
};

/// Throws std::invalid_argument for the zero polynomial or a non-prime p.
NewtonPolygon newton_polygon(const Polynomial& f, const Integer& p);

/// Single segment whose reduced slope has denominator equal to deg f.
/// Such f is irreducible over Q_p, hence over Q.
bool is_pure_slope_irreducible(const Polynomial& f, const Integer& p);

/// True iff the polygon at p starts at (0, 0) and consists of a slope-0
/// segment of length n followed by a slope 1/sixr segment of length sixr.
/// Throws std::invalid_argument unless sixr > 0, n >= 0, deg f = n + sixr.
bool check_two_segment_shape(const Polynomial& f, const Integer& p, long n, long sixr);

}  // namespace prescribed

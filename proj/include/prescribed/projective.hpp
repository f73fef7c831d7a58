#pragma once

// Prescribed point sets in projective space: chart selection, a generic
// linear change of coordinates, and gluing one superelliptic equation per
// extra coordinate into a curve in affine n-space.

#include <cstdint>
#include <map>
#include <vector>

#include "prescribed/construction.hpp"
#include "prescribed/projective_point.hpp"

namespace prescribed {

using IntMatrix = std::vector<std::vector<Integer>>;
using RationalVector = std::vector<Rational>;

IntMatrix identity_matrix(std::size_t n);
Integer determinant(const IntMatrix& m);
/// Throws std::domain_error for a singular matrix.
std::vector<RationalVector> inverse(const IntMatrix& m);
std::vector<Integer> multiply(const IntMatrix& m, const std::vector<Integer>& v);
RationalVector multiply(const IntMatrix& m, const RationalVector& v);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Integer w with <w, P> != 0 for all P: coordinate hyperplanes from the
/// last coordinate down, then vectors by increasing max-norm.
std::vector<Integer> find_affine_chart(const std::vector<ProjectivePoint>& S);

/// Invertible matrix whose last row is w and whose other rows are unit
/// vectors, so the affine coordinates of P are (MP)_i / <w, P>.
struct Chart {
    std::vector<Integer> w;
    IntMatrix matrix;
};
Chart make_chart(const std::vector<Integer>& w);

/// Throws std::invalid_argument when P lies on the chart's hyperplane.
RationalVector dehomogenize(const ProjectivePoint& P, const Chart& chart);
ProjectivePoint rehomogenize(const RationalVector& affine, const Chart& chart);

/// x -> scale * A x
struct CoordinateChange {
    IntMatrix matrix;
    Integer scale = 1;
};

/// (a): every coordinate of every image nonzero. (b): the n*r image
/// coordinates pairwise distinct.
bool satisfies_generic_position(const std::vector<RationalVector>& images);

struct CoordinateSearch {
    std::uint64_t seed = 1;
    long initial_box = 2;
    long attempts_per_box = 64;
    long max_attempts = 4096;
};

struct Normalization {
    CoordinateChange change;
    std::vector<std::vector<Integer>> images;
    std::vector<AcceptableSet> pair_sets;  // {(x_1, x_j)} for j = 2..n
};

/// Points must be distinct and nonzero. Tries the identity, then seeded
/// random integer matrices in a box doubling every attempts_per_box
/// failures. Throws EffortExhausted when the budget runs out.
Normalization normalize_coordinates(const std::vector<RationalVector>& points, const CoordinateSearch& search = {});

struct GlueConfig {
    ConstructionEffort effort;
    CoordinateSearch search;
};

/// Curve V(x_j^d - f_j(x_1), j = 2..n) in the coordinates
/// x = scale * A * (chart(P) + translation).
struct ProjectiveCurveSystem {
    long d = 0;
    std::vector<ProjectivePoint> points;
    std::vector<Integer> chart;
    std::vector<Integer> translation;
    CoordinateChange change;
    IntMatrix transform;  // homogeneous form of the whole map
    std::vector<ConstructionCertificate> components;
    std::map<std::string, ModularWitness> witnesses;
    std::vector<Check> checks;
};

/// |S| >= 2, common dimension n >= 2. Throws std::invalid_argument on
/// bad input and EffortExhausted from the inner searches.
ProjectiveCurveSystem glue(const std::vector<ProjectivePoint>& S, const GlueConfig& config = {});

std::vector<Check> recheck(const ProjectiveCurveSystem& system);

/// Maps an affine point in the system's coordinates back to P^n.
ProjectivePoint to_original(const ProjectiveCurveSystem& system, const RationalVector& affine);

}  // namespace prescribed

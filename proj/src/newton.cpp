#include "prescribed/newton.hpp"

#include <stdexcept>

namespace prescribed {

namespace {

// Cross product of (b - a) and (c - a); <= 0 means b is not strictly below
// the chord from a to c.
Integer turn(const PolygonVertex& a, const PolygonVertex& b, const PolygonVertex& c) {
    return Integer(b.index - a.index) * (c.valuation - a.valuation) -
           Integer(b.valuation - a.valuation) * (c.index - a.index);
}

}  // namespace

NewtonPolygon newton_polygon(const Polynomial& f, const Integer& p) {
    if (f.is_zero()) throw std::invalid_argument("newton_polygon of the zero polynomial");
    if (!is_prime(p)) throw std::invalid_argument("newton_polygon: " + to_string(p) + " is not prime");

    NewtonPolygon poly{p, {}, {}};
    auto& hull = poly.vertices;
    const auto& c = f.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        const PolygonVertex pt{static_cast<long>(i), valuation_unchecked(c[i].get_num(), p) -
                                                         valuation_unchecked(c[i].get_den(), p)};
        while (hull.size() >= 2 && turn(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
        hull.push_back(pt);
    }
    for (std::size_t k = 1; k < hull.size(); ++k) {
        const long run = hull[k].index - hull[k - 1].index;
        poly.segments.push_back({make_rational(hull[k].valuation - hull[k - 1].valuation, run), run});
    }
    return poly;
}

bool is_pure_slope_irreducible(const Polynomial& f, const Integer& p) {
    const NewtonPolygon poly = newton_polygon(f, p);
    if (poly.segments.size() != 1) return false;
    return poly.segments.front().length == f.degree() && poly.segments.front().slope.get_den() == f.degree();
}

bool check_two_segment_shape(const Polynomial& f, const Integer& p, long n, long sixr) {
    if (sixr <= 0) throw std::invalid_argument("check_two_segment_shape: sixr must be positive");
    if (n < 0) throw std::invalid_argument("check_two_segment_shape: n must be non-negative");
    if (f.degree() != n + sixr) throw std::invalid_argument("check_two_segment_shape: degree mismatch");

    const NewtonPolygon poly = newton_polygon(f, p);
    if (poly.vertices.empty() || poly.vertices.front() != PolygonVertex{0, 0}) return false;
    std::vector<PolygonSegment> expected;
    if (n > 0) expected.push_back({Rational(0), n});
    expected.push_back({make_rational(1, sixr), sixr});
    return poly.segments == expected;
}

}  // namespace prescribed

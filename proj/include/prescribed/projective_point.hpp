#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "prescribed/arith.hpp"

namespace prescribed {

/// Point of P^n with primitive integer coordinates whose first nonzero
/// entry is positive.
class ProjectivePoint {
public:
    /// Throws std::invalid_argument for an empty or all-zero vector.
    explicit ProjectivePoint(std::vector<Integer> coords);
    static ProjectivePoint from_rationals(const std::vector<Rational>& coords);

    const std::vector<Integer>& coordinates() const { return coords_; }
    std::size_t dimension() const { return coords_.size() - 1; }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
    friend auto operator<=>(const ProjectivePoint& a, const ProjectivePoint& b) {
        return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                                      b.coords_.end(), [](const Integer& x, const Integer& y) {
                                                          const int c = cmp(x, y);
                                                          return c < 0 ? std::strong_ordering::less
                                                                 : c > 0 ? std::strong_ordering::greater
                                                                         : std::strong_ordering::equal;
                                                      });
    }

private:
    std::vector<Integer> coords_;
};

std::string to_string(const ProjectivePoint& p);

}  // namespace prescribed

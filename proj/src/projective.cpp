#include "prescribed/projective.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

namespace prescribed {

// --- ProjectivePoint -------------------------------------------------------

ProjectivePoint::ProjectivePoint(std::vector<Integer> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("projective point needs at least one coordinate");
    Integer g = 0;
    for (const auto& c : coords_) g = gcd(g, c);
    if (g == 0) throw std::invalid_argument("projective point cannot be the zero vector");
    const auto first = std::find_if(coords_.begin(), coords_.end(), [](const Integer& c) { return c != 0; });
    if (*first < 0) g = -g;
    for (auto& c : coords_) c /= g;
}

ProjectivePoint ProjectivePoint::from_rationals(const std::vector<Rational>& coords) {
    Integer l = 1;
    for (const auto& c : coords) l = lcm(l, Integer(c.get_den()));
    std::vector<Integer> out;
    out.reserve(coords.size());
    for (const auto& c : coords) out.push_back(Integer(c * l));
    return ProjectivePoint(std::move(out));
}

std::string to_string(const ProjectivePoint& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.coordinates().size(); ++i) {
        if (i) out += ":";
        out += to_string(p[i]);
    }
    return out + "]";
}

// --- matrices --------------------------------------------------------------

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Integer determinant(const IntMatrix& m) {
    // Bareiss fraction-free elimination
    std::vector<std::vector<Integer>> a = m;
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

std::vector<RationalVector> inverse(const IntMatrix& m) {
    const std::size_t n = m.size();
    std::vector<RationalVector> a(n, RationalVector(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("inverse of a non-square matrix");
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        std::swap(a[piv], a[col]);
        const Rational inv = 1 / a[col][col];
        for (auto& x : a[col]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational factor = a[r][col];
            for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    for (auto& row : a) row.erase(row.begin(), row.begin() + static_cast<long>(n));
    return a;
}

std::vector<Integer> multiply(const IntMatrix& m, const std::vector<Integer>& v) {
    std::vector<Integer> out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != v.size()) throw std::invalid_argument("matrix-vector size mismatch");
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    }
    return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.size(), std::vector<Integer>(b.empty() ? 0 : b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b.size()) throw std::invalid_argument("matrix size mismatch");
        for (std::size_t k = 0; k < b.size(); ++k) {
            for (std::size_t j = 0; j < b[k].size(); ++j) out[i][j] += a[i][k] * b[k][j];
        }
    }
    return out;
}

RationalVector multiply(const IntMatrix& m, const RationalVector& v) {
    RationalVector out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    }
    return out;
}

namespace {

Integer inner(const std::vector<Integer>& w, const ProjectivePoint& P) {
    if (w.size() != P.coordinates().size()) throw std::invalid_argument("chart and point dimensions differ");
    Integer s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * P[i];
    return s;
}

bool nonvanishing(const std::vector<Integer>& w, const std::vector<ProjectivePoint>& S) {
    return std::all_of(S.begin(), S.end(), [&](const ProjectivePoint& P) { return inner(w, P) != 0; });
}

// digit order 0, 1, -1, 2, -2, ...
long digit_value(long t) { return t % 2 == 1 ? (t + 1) / 2 : -(t / 2); }

bool is_zero_vector(const RationalVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace

// --- charts ----------------------------------------------------------------

std::vector<Integer> find_affine_chart(const std::vector<ProjectivePoint>& S) {
    if (S.empty()) throw std::invalid_argument("empty point set");
    const std::size_t len = S.front().coordinates().size();
    for (std::size_t i = len; i-- > 0;) {
        std::vector<Integer> w(len, 0);
        w[i] = 1;
        if (nonvanishing(w, S)) return w;
    }
    for (long k = 1;; ++k) {
        std::vector<long> digits(len, 0);
        const long base = 2 * k + 1;
        while (true) {
            std::vector<Integer> w(len);
            long norm = 0;
            for (std::size_t i = 0; i < len; ++i) {
                const long v = digit_value(digits[i]);
                w[i] = v;
                norm = std::max(norm, std::abs(v));
            }
            const auto first = std::find_if(w.begin(), w.end(), [](const Integer& c) { return c != 0; });
            if (norm == k && *first > 0 && nonvanishing(w, S)) return w;
            std::size_t pos = 0;
            while (pos < len && ++digits[pos] == base) digits[pos++] = 0;
            if (pos == len) break;
        }
    }
}

Chart make_chart(const std::vector<Integer>& w) {
    const std::size_t len = w.size();
    std::size_t pivot = len;
    for (std::size_t i = len; i-- > 0;) {
        if (w[i] != 0) {
            pivot = i;
            break;
        }
    }
    if (pivot == len) throw std::invalid_argument("chart vector is zero");
    Chart chart{w, {}};
    for (std::size_t i = 0; i < len; ++i) {
        if (i == pivot) continue;
        std::vector<Integer> row(len, 0);
        row[i] = 1;
        chart.matrix.push_back(std::move(row));
    }
    chart.matrix.push_back(w);
    return chart;
}

RationalVector dehomogenize(const ProjectivePoint& P, const Chart& chart) {
    const std::vector<Integer> image = multiply(chart.matrix, P.coordinates());
    const Integer z = image.back();
    if (z == 0) throw std::invalid_argument("point lies on the chart hyperplane");
    RationalVector out;
    for (std::size_t i = 0; i + 1 < image.size(); ++i) out.push_back(make_rational(image[i], z));
    return out;
}

ProjectivePoint rehomogenize(const RationalVector& affine, const Chart& chart) {
    RationalVector v = affine;
    v.push_back(1);
    const auto inv = inverse(chart.matrix);
    RationalVector out(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += inv[i][j] * v[j];
    }
    return ProjectivePoint::from_rationals(out);
}

// --- coordinate change -----------------------------------------------------

bool satisfies_generic_position(const std::vector<RationalVector>& images) {
    std::set<Rational> seen;
    std::size_t total = 0;
    for (const auto& img : images) {
        for (const auto& x : img) {
            if (x == 0) return false;
            seen.insert(x);
            ++total;
        }
    }
    return seen.size() == total;
}

Normalization normalize_coordinates(const std::vector<RationalVector>& points, const CoordinateSearch& search) {
    if (points.empty()) throw std::invalid_argument("empty point set");
    const std::size_t n = points.front().size();
    if (n == 0) throw std::invalid_argument("points need at least one coordinate");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != n) throw std::invalid_argument("points have different dimensions");
        if (is_zero_vector(points[i])) throw std::invalid_argument("points must be nonzero");
        for (std::size_t j = 0; j < i; ++j) {
            if (points[i] == points[j]) throw std::invalid_argument("points must be distinct");
        }
    }

    std::mt19937_64 rng(search.seed);
    long box = search.initial_box;
    IntMatrix A = identity_matrix(n);
    for (long attempt = 0; attempt < search.max_attempts; ++attempt) {
        if (attempt > 0) {
            if (attempt % search.attempts_per_box == 0) box *= 2;
            const auto span = static_cast<std::uint64_t>(2 * box + 1);
            for (auto& row : A) {
                for (auto& x : row) x = static_cast<long>(rng() % span) - box;
            }
        }
        if (determinant(A) == 0) continue;
        std::vector<RationalVector> images;
        images.reserve(points.size());
        for (const auto& p : points) images.push_back(multiply(A, p));
        if (!satisfies_generic_position(images)) continue;

        Normalization out;
        Integer scale = 1;
        for (const auto& img : images) {
            for (const auto& x : img) scale = lcm(scale, Integer(x.get_den()));
        }
        out.change = {A, scale};
        for (const auto& img : images) {
            std::vector<Integer> row;
            for (const auto& x : img) row.push_back(Integer(x * scale));
            out.images.push_back(std::move(row));
        }
        for (std::size_t j = 1; j < n; ++j) {
            std::vector<IntegralPoint> pairs;
            for (const auto& img : out.images) pairs.push_back({img[0], img[j]});
            out.pair_sets.push_back(validate_acceptable(pairs));
        }
        return out;
    }
    throw EffortExhausted("coordinate-change", "no matrix in " + std::to_string(search.max_attempts) +
                                                   " attempts; retry with a larger box");
}

// --- gluing ----------------------------------------------------------------

namespace {

IntMatrix compose_transform(const Chart& chart, const std::vector<Integer>& t, const CoordinateChange& change) {
    const std::size_t n = t.size();
    IntMatrix affine(n + 1, std::vector<Integer>(n + 1, 0));
    const std::vector<Integer> shift = multiply(change.matrix, t);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) affine[i][j] = change.scale * change.matrix[i][j];
        affine[i][n] = change.scale * shift[i];
    }
    affine[n][n] = 1;
    return multiply(affine, chart.matrix);
}

RationalVector affine_image(const IntMatrix& transform, const ProjectivePoint& P) {
    const std::vector<Integer> v = multiply(transform, P.coordinates());
    if (v.back() == 0) throw std::invalid_argument("point maps to infinity");
    RationalVector out;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) out.push_back(make_rational(v[i], v.back()));
    return out;
}

std::string pair_key(std::size_t j, std::size_t k) { return "pair." + std::to_string(j) + "." + std::to_string(k); }

}  // namespace

ProjectiveCurveSystem glue(const std::vector<ProjectivePoint>& input, const GlueConfig& config) {
    std::vector<ProjectivePoint> S;
    for (const auto& P : input) {
        if (std::find(S.begin(), S.end(), P) == S.end()) S.push_back(P);
    }
    if (S.size() < 2) throw std::invalid_argument("gluing needs at least two distinct points");
    const std::size_t n = S.front().dimension();
    if (n < 2) throw std::invalid_argument("gluing needs ambient dimension at least 2");
    for (const auto& P : S) {
        if (P.dimension() != n) throw std::invalid_argument("points have different dimensions");
    }

    ProjectiveCurveSystem sys;
    sys.points = S;
    sys.chart = find_affine_chart(S);
    const Chart chart = make_chart(sys.chart);
    std::vector<RationalVector> affine;
    for (const auto& P : S) affine.push_back(dehomogenize(P, chart));

    sys.translation.assign(n, 0);
    auto shifted = [&] {
        std::vector<RationalVector> out = affine;
        for (auto& v : out) {
            for (std::size_t i = 0; i < n; ++i) v[i] += sys.translation[i];
        }
        return out;
    };
    while (std::any_of(affine.begin(), affine.end(), [&](const RationalVector& v) {
        RationalVector w = v;
        for (std::size_t i = 0; i < n; ++i) w[i] += sys.translation[i];
        return is_zero_vector(w);
    })) {
        sys.translation[0] += 1;
    }

    const Normalization norm = normalize_coordinates(shifted(), config.search);
    sys.change = norm.change;
    sys.transform = compose_transform(chart, sys.translation, sys.change);
    sys.d = 18 * static_cast<long>(S.size()) + 3;

    ForbiddenRootSet B;
    for (const auto& Sj : norm.pair_sets) {
        sys.components.push_back(construct(Sj, B, config.effort));
        B.add(sys.components.back().f);
    }
    for (std::size_t j = 0; j < sys.components.size(); ++j) {
        for (std::size_t k = j + 1; k < sys.components.size(); ++k) {
            auto w = find_resultant_witness(sys.components[j].f, sys.components[k].f);
            if (!w) throw InternalInconsistency("glued components share a root");
            sys.witnesses[pair_key(j + 2, k + 2)] = *w;
        }
    }

    sys.checks = recheck(sys);
    for (const auto& c : sys.checks) {
        if (!c.pass) throw InternalInconsistency("system check failed: " + c.name + " (" + c.witness + ")");
    }
    return sys;
}

std::vector<Check> recheck(const ProjectiveCurveSystem& sys) {
    std::vector<Check> checks;
    auto add = [&](const std::string& name, const std::function<std::pair<bool, std::string>()>& fn) {
        try {
            auto [pass, witness] = fn();
            checks.push_back({name, pass, std::move(witness)});
        } catch (const std::exception& e) {
            checks.push_back({name, false, std::string("error: ") + e.what()});
        }
    };
    const std::size_t n = sys.points.empty() ? 0 : sys.points.front().dimension();
    const long r = static_cast<long>(sys.points.size());

    add("points", [&] {
        std::set<ProjectivePoint> distinct(sys.points.begin(), sys.points.end());
        bool same_dim = std::all_of(sys.points.begin(), sys.points.end(),
                                    [&](const ProjectivePoint& P) { return P.dimension() == n; });
        return std::pair{same_dim && n >= 2 && r >= 2 && distinct.size() == sys.points.size(),
                         std::to_string(r) + " points in P^" + std::to_string(n)};
    });
    add("chart", [&] {
        return std::pair{sys.chart.size() == n + 1 && nonvanishing(sys.chart, sys.points), std::string("<w, P> != 0")};
    });
    add("change.invertible", [&] {
        const Integer det = determinant(sys.change.matrix);
        return std::pair{sys.change.matrix.size() == n && det != 0 && sys.change.scale > 0, "det = " + to_string(det)};
    });
    add("transform", [&] {
        const IntMatrix expect = compose_transform(make_chart(sys.chart), sys.translation, sys.change);
        return std::pair{sys.transform == expect && determinant(sys.transform) != 0, std::string("chart, shift, scale*A")};
    });

    std::vector<RationalVector> images;
    add("change.generic_position", [&] {
        for (const auto& P : sys.points) images.push_back(affine_image(sys.transform, P));
        bool integral = true;
        for (const auto& v : images) {
            for (const auto& x : v) integral = integral && is_integral(x);
        }
        return std::pair{integral && satisfies_generic_position(images), std::string("nonzero, distinct, integral")};
    });

    add("components.count", [&] {
        return std::pair{sys.components.size() + 1 == n, std::to_string(sys.components.size())};
    });
    add("components.degree", [&] {
        bool ok = sys.d == 18 * r + 3;
        for (const auto& c : sys.components) ok = ok && c.params.d == sys.d && c.f.degree() == sys.d;
        return std::pair{ok, "d = " + std::to_string(sys.d)};
    });
    for (std::size_t j = 0; j < sys.components.size(); ++j) {
        const auto& comp = sys.components[j];
        const std::string key = "component." + std::to_string(j + 2);
        add(key + ".points", [&, j] {
            if (images.size() != sys.points.size()) return std::pair{false, std::string("images unavailable")};
            std::vector<IntegralPoint> expect;
            for (const auto& v : images) expect.push_back({v.at(0).get_num(), v.at(j + 1).get_num()});
            return std::pair{comp.points == expect, std::string("(x_1, x_j) of the images")};
        });
        add(key + ".forbidden", [&, j] {
            std::vector<Polynomial> expect;
            for (std::size_t k = 0; k < j; ++k) expect.push_back(sys.components[k].f);
            return std::pair{comp.forbidden == expect, std::to_string(j) + " earlier components"};
        });
        add(key + ".certificate", [&] {
            const auto sub = recheck(comp);
            const auto bad = std::find_if(sub.begin(), sub.end(), [](const Check& c) { return !c.pass; });
            return std::pair{bad == sub.end(), bad == sub.end() ? std::to_string(sub.size()) + " checks" : "failed " + bad->name};
        });
        for (std::size_t k = j + 1; k < sys.components.size(); ++k) {
            const std::string pk = pair_key(j + 2, k + 2);
            add(pk, [&, k, pk] {
                const auto& w = sys.witnesses.at(pk);
                return std::pair{check_resultant_witness(comp.f, sys.components[k].f, w),
                                 "Res(f_j, f_k) mod " + to_string(w.prime) + " = " + to_string(w.residue)};
            });
        }
    }
    return checks;
}

ProjectivePoint to_original(const ProjectiveCurveSystem& system, const RationalVector& affine) {
    RationalVector v = affine;
    v.push_back(1);
    const auto inv = inverse(system.transform);
    RationalVector out(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += inv[i][j] * v[j];
    }
    return ProjectivePoint::from_rationals(out);
}

}  // namespace prescribed

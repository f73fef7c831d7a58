#include "prescribed/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <thread>

#include "prescribed/modular.hpp"

namespace prescribed {

namespace {

constexpr std::size_t kWarmupCandidates = 64;
constexpr unsigned long kRootFreePrimeBound = 1000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Runs fn over contiguous slices of xs and concatenates the results in
/// slice order.
std::vector<RationalVector> partitioned(const std::vector<Rational>& xs, unsigned threads,
                                        const std::function<void(const Rational&, std::vector<RationalVector>&)>& fn) {
    const std::size_t parts = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(xs.size(), 1))));
    std::vector<std::vector<RationalVector>> results(parts);
    auto work = [&](std::size_t part) {
        const std::size_t begin = xs.size() * part / parts;
        const std::size_t end = xs.size() * (part + 1) / parts;
        for (std::size_t i = begin; i < end; ++i) fn(xs[i], results[part]);
    };
    if (parts == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t p = 0; p < parts; ++p) pool.emplace_back(work, p);
        for (auto& t : pool) t.join();
    }
    std::vector<RationalVector> out;
    for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
    return out;
}

void finish(SearchReport& report) {
    std::sort(report.found.begin(), report.found.end());
    report.found.erase(std::unique(report.found.begin(), report.found.end()), report.found.end());
    std::sort(report.expected.begin(), report.expected.end());
    report.verdict = compare_point_sets(report.found, report.expected);
}

RationalVector as_vector(const ProjectivePoint& P) { return RationalVector(P.coordinates().begin(), P.coordinates().end()); }

}  // namespace

std::vector<Rational> enumerate_window(long height) {
    std::vector<Rational> out;
    for (long v = 1; v <= height; ++v) {
        for (long u = -height; u <= height; ++u) {
            if (std::gcd(u, v) == 1) out.push_back(make_rational(u, v));
        }
    }
    return out;
}

std::string to_string(SearchVerdict verdict) {
    switch (verdict) {
        case SearchVerdict::exact_match: return "exact-match";
        case SearchVerdict::extra_points: return "extra-points";
        case SearchVerdict::missing_points: return "missing-points";
    }
    return "?";
}

SearchVerdict compare_point_sets(const std::vector<RationalVector>& found, const std::vector<RationalVector>& expected) {
    auto contains = [](const std::vector<RationalVector>& set, const RationalVector& p) {
        return std::find(set.begin(), set.end(), p) != set.end();
    };
    for (const auto& p : found) {
        if (!contains(expected, p)) return SearchVerdict::extra_points;
    }
    for (const auto& p : expected) {
        if (!contains(found, p)) return SearchVerdict::missing_points;
    }
    return SearchVerdict::exact_match;
}

SearchReport search_superelliptic(const Polynomial& f, long d, long height, const std::vector<RationalVector>& expected,
                                  unsigned threads) {
    if (d < 2) throw std::invalid_argument("exponent must be at least 2");
    if (f.is_zero()) throw std::invalid_argument("search on the zero polynomial");
    const auto start = Clock::now();
    SearchReport report;
    report.height = height;
    report.expected = expected;
    const std::vector<Rational> xs = enumerate_window(height);
    report.candidates = xs.size();
    const auto ud = static_cast<unsigned long>(d);
    report.found = partitioned(xs, threads, [&](const Rational& x, std::vector<RationalVector>& out) {
        const auto y = rational_dth_power_root(evaluate(f, x), ud);
        if (!y) return;
        out.push_back({x, *y});
        if (d % 2 == 0 && *y != 0) out.push_back({x, -*y});
    });
    report.notes.push_back("points at infinity are not enumerated");
    finish(report);
    report.seconds = seconds_since(start);
    return report;
}

SearchReport search_twist(const Integer& ell, long height, unsigned threads) {
    if (ell <= 0) throw std::invalid_argument("twist parameter must be positive");
    const auto start = Clock::now();
    SearchReport report;
    report.height = height;
    report.expected = {{Rational(1), Rational(0)}};
    report.hypothesis_warning = !(is_prime(ell) && mod_floor(ell, Integer(12)) == 5);
    if (report.hypothesis_warning) report.notes.push_back("ell is not a prime = 5 mod 12");
    const std::vector<Rational> xs = enumerate_window(height);
    report.candidates = xs.size();
    const Rational l(ell);
    report.found = partitioned(xs, threads, [&](const Rational& x, std::vector<RationalVector>& out) {
        const auto y = rational_dth_power_root((x * x * x - 1) / l, 2);
        if (!y) return;
        out.push_back({x, *y});
        if (*y != 0) out.push_back({x, -*y});
    });
    finish(report);
    report.seconds = seconds_since(start);
    return report;
}

SearchReport search_glued(const ProjectiveCurveSystem& system, long height, unsigned threads) {
    const auto start = Clock::now();
    SearchReport report;
    report.height = height;
    for (const auto& P : system.points) report.expected.push_back(as_vector(P));
    const std::vector<Rational> xs = enumerate_window(height);
    report.candidates = xs.size();
    const std::size_t k = system.components.size();
    const auto ud = static_cast<unsigned long>(system.d);

    // Test first the equations that failed most often on a warmup prefix.
    std::vector<std::size_t> fails(k, 0);
    for (std::size_t i = 0; i < std::min(kWarmupCandidates, xs.size()); ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (!rational_dth_power_root(evaluate(system.components[j].f, xs[i]), ud)) ++fails[j];
        }
    }
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fails[a] > fails[b]; });

    report.found = partitioned(xs, threads, [&](const Rational& x, std::vector<RationalVector>& out) {
        RationalVector affine(k + 1);
        affine[0] = x;
        for (std::size_t j : order) {
            const auto y = rational_dth_power_root(evaluate(system.components[j].f, x), ud);
            if (!y) return;
            affine[j + 1] = *y;
        }
        out.push_back(as_vector(to_original(system, affine)));
    });
    report.notes.push_back("points at infinity are not enumerated");
    finish(report);
    report.seconds = seconds_since(start);
    return report;
}

RootCheck no_rational_roots_check(const Polynomial& f, long height, unsigned long factor_bound) {
    if (f.is_zero()) throw std::invalid_argument("root check on the zero polynomial");
    if (f.degree() == 0) return {true, true, "constant", std::nullopt, std::nullopt};

    const Integer lc = integer_form(f).primitive.back();
    const Integer den = denominator_lcm(f);
    for (Integer p = 2; p <= kRootFreePrimeBound; p = next_prime(p + 1)) {
        if (mpz_divisible_p(lc.get_mpz_t(), p.get_mpz_t()) || mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) continue;
        if (!has_root_mod_p(reduce_mod_p(f, p))) return {true, true, "mod-p-root-free", p, std::nullopt};
    }

    const RationalRoots rr = rational_roots(f, factor_bound);
    if (!rr.roots.empty()) return {false, true, "rational-root-theorem", std::nullopt, rr.roots.front()};
    if (rr.exhaustive) return {true, true, "rational-root-theorem", std::nullopt, std::nullopt};

    for (const auto& x : enumerate_window(height)) {
        if (evaluate(f, x) == 0) return {false, true, "window", std::nullopt, x};
    }
    return {true, false, "window", std::nullopt, std::nullopt};
}

}  // namespace prescribed

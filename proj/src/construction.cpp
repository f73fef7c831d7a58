#include "prescribed/construction.hpp"

#include <functional>

#include "prescribed/modular.hpp"
#include "prescribed/newton.hpp"

namespace prescribed {

namespace {

const Integer kTwelve = 12;
const Integer kFive = 5;

std::string witness_text(const ModularWitness& w) {
    return "q=" + to_string(w.prime) + " residue=" + to_string(w.residue);
}

Integer difference_product(const std::vector<IntegralPoint>& pts) {
    Integer m = 1;
    for (std::size_t j = 0; j < pts.size(); ++j) {
        for (std::size_t k = j + 1; k < pts.size(); ++k) m *= pts[j].a - pts[k].a;
    }
    return m;
}

bool interpolates(const Polynomial& f, const std::vector<IntegralPoint>& pts, long d) {
    for (const auto& p : pts) {
        if (evaluate(f, Rational(p.a)) != Rational(pow(p.b, static_cast<unsigned long>(d)))) return false;
    }
    return true;
}

bool ell_integral(const Polynomial& h, const Integer& ell) {
    for (const auto& c : h.coefficients()) {
        if (mpz_divisible_p(c.get_den_mpz_t(), ell.get_mpz_t())) return false;
    }
    return true;
}

bool leading_is_unit(const Polynomial& h, const Integer& ell) {
    return !mpz_divisible_p(h.leading().get_num_mpz_t(), ell.get_mpz_t());
}

std::uint64_t discriminant_residue(const Polynomial& h, const Integer& ell) {
    const auto hb = reduce_mod_p(h, ell);
    return resultant(hb, derivative(hb));
}

Polynomial shifted_power(const Integer& s, long k) {
    return pow(Polynomial::x() - Polynomial::constant(Rational(s)), static_cast<unsigned>(k));
}

Integer superelliptic_genus(long d) { return Integer((d - 1) * (d - 2) / 2); }

class CheckList {
public:
    void add(const std::string& name, const std::function<std::pair<bool, std::string>()>& fn) {
        try {
            auto [pass, witness] = fn();
            checks_.push_back({name, pass, std::move(witness)});
        } catch (const std::exception& e) {
            checks_.push_back({name, false, std::string("error: ") + e.what()});
        }
    }
    std::vector<Check> release() { return std::move(checks_); }

private:
    std::vector<Check> checks_;
};

}  // namespace

std::string to_string(AcceptabilityClause clause) {
    switch (clause) {
        case AcceptabilityClause::equal_x: return "(i)";
        case AcceptabilityClause::zero_coordinate: return "(ii)";
        case AcceptabilityClause::non_integral: return "(iii)";
    }
    return "?";
}

NotAcceptable::NotAcceptable(AcceptabilityClause clause, std::vector<RationalPoint> offending)
    : std::invalid_argument("point set violates acceptability clause " + to_string(clause)),
      clause_(clause),
      offending_(std::move(offending)) {}

AcceptableSet validate_acceptable(const std::vector<RationalPoint>& points) {
    if (points.empty()) throw std::invalid_argument("empty point set");
    std::vector<RationalPoint> unique;
    for (const auto& p : points) {
        if (std::find(unique.begin(), unique.end(), p) == unique.end()) unique.push_back(p);
    }

    std::vector<RationalPoint> bad;
    for (std::size_t i = 0; i < unique.size(); ++i) {
        for (std::size_t j = 0; j < unique.size(); ++j) {
            if (i != j && unique[i].first == unique[j].first) {
                bad.push_back(unique[i]);
                break;
            }
        }
    }
    if (!bad.empty()) throw NotAcceptable(AcceptabilityClause::equal_x, bad);

    for (const auto& p : unique) {
        if (p.first == 0 || p.second == 0) bad.push_back(p);
    }
    if (!bad.empty()) throw NotAcceptable(AcceptabilityClause::zero_coordinate, bad);

    for (const auto& p : unique) {
        if (!is_integral(p.first) || !is_integral(p.second)) bad.push_back(p);
    }
    if (!bad.empty()) throw NotAcceptable(AcceptabilityClause::non_integral, bad);

    std::vector<IntegralPoint> out;
    out.reserve(unique.size());
    for (const auto& [x, y] : unique) out.push_back({x.get_num(), y.get_num()});
    return AcceptableSet(std::move(out));
}

AcceptableSet validate_acceptable(const std::vector<IntegralPoint>& points) {
    std::vector<RationalPoint> rational;
    rational.reserve(points.size());
    for (const auto& p : points) rational.emplace_back(Rational(p.a), Rational(p.b));
    return validate_acceptable(rational);
}

ConstructionParams compute_params(const AcceptableSet& S, unsigned long factor_bound) {
    if (S.r() == 1) throw SingletonCase();
    ConstructionParams p;
    p.r = static_cast<long>(S.r());
    p.d = 18 * p.r + 3;
    p.n = 6 * p.r + 3;
    p.m = difference_product(S.points());
    p.N = radical(p.m, factor_bound);
    return p;
}

Polynomial lagrange_interpolant(const AcceptableSet& S, long d) {
    const auto& pts = S.points();
    Polynomial L;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Polynomial term = Polynomial::constant(Rational(pow(pts[i].b, static_cast<unsigned long>(d))));
        for (std::size_t k = 0; k < pts.size(); ++k) {
            if (k == i) continue;
            term *= Polynomial::linear_factor(Rational(pts[k].a));
            term *= Rational(1) / Rational(pts[i].a - pts[k].a);
        }
        L += term;
    }
    return L;
}

Polynomial node_polynomial(const AcceptableSet& S) {
    Polynomial b = Polynomial::constant(1);
    for (const auto& p : S.points()) b *= Polynomial::linear_factor(Rational(p.a));
    return b;
}

HChoice build_h(const AcceptableSet& S, const ConstructionParams& params, const ConstructionEffort& effort,
                long first_y) {
    const Polynomial L = lagrange_interpolant(S, params.d);
    const Polynomial b = node_polynomial(S);
    Integer s = 0;
    while (evaluate(L, Rational(s)) == 0) ++s;
    const Polynomial c = shifted_power(s, params.n - params.r);
    const Polynomial bc = b * c;
    const IrreducibilityEffort irr{effort.witness_prime_bound, effort.factor_bound};
    for (long y = std::max(first_y, 1L); y <= effort.max_y; ++y) {
        Polynomial h = L + bc * Rational(y);
        IrreducibilityCertificate cert = certify_irreducible_over_Q(h, irr);
        if (cert.verdict == IrreducibilityVerdict::irreducible) return {std::move(h), c, s, Integer(y), std::move(cert)};
    }
    throw EffortExhausted("y", "no certified irreducible h for y in [" + std::to_string(first_y) + ", " +
                                   std::to_string(effort.max_y) + "]");
}

Polynomial build_g(const AcceptableSet& S, const Integer& N, const Integer& ell) {
    const Rational scale(ell * pow(N, 6));
    return pow(node_polynomial(S), 6) * scale + Polynomial::constant(1);
}

Polynomial second_factor(const Polynomial& h, const Polynomial& g) {
    return (h - Polynomial::constant(1)) * g + Polynomial::constant(1);
}

Polynomial assemble_f(const Polynomial& h, const Polynomial& g) { return g * second_factor(h, g); }

void ForbiddenRootSet::add(const Polynomial& q) {
    if (q.is_zero()) throw std::invalid_argument("forbidden-root generator is zero");
    if (q.degree() >= 1 && !find_discriminant_witness(q)) {
        throw std::invalid_argument("forbidden-root generator is not separable");
    }
    generators_.push_back(q);
}

std::optional<std::string> prime_rejection(const Polynomial& h, const AcceptableSet& S, const ConstructionParams& params,
                                           const ForbiddenRootSet& B, const Integer& ell) {
    if (gcd(ell, params.N) != 1) return "coprime-N";
    if (!ell_integral(h, ell)) return "h-ell-integral";
    if (!leading_is_unit(h, ell)) return "h-leading-unit";
    if (discriminant_residue(h, ell) == 0) return "h-separable-mod-ell";
    const Polynomial g = build_g(S, params.N, ell);
    const Polynomial F = second_factor(h, g);
    if (!check_two_segment_shape(F, ell, params.n, 6 * params.r)) return "two-segment-shape";
    if (!find_discriminant_witness(F)) return "second-factor-separable";
    const Polynomial f = g * F;
    for (const auto& q : B.generators()) {
        if (q.degree() < 1) continue;
        if (!find_resultant_witness(g, q)) return "B-avoid-g";
        if (!find_resultant_witness(f, q)) return "B-avoid-f";
    }
    return std::nullopt;
}

PrimeChoice choose_prime(const Polynomial& h, const AcceptableSet& S, const ConstructionParams& params,
                         const ForbiddenRootSet& B, const ConstructionEffort& effort) {
    PrimeChoice out;
    Integer ell = 2;
    for (long k = 0; k < effort.max_ell_candidates; ++k) {
        ell = next_prime_in_class(ell, kFive, kTwelve);
        if (auto why = prime_rejection(h, S, params, B, ell)) {
            out.rejections.push_back({ell, *why});
            ell += 1;
            continue;
        }
        out.ell = ell;
        out.g = build_g(S, params.N, ell);
        out.f = assemble_f(h, out.g);
        return out;
    }
    throw EffortExhausted("ell", "no prime among the first " + std::to_string(effort.max_ell_candidates) +
                                     " candidates = 5 mod 12");
}

ConstructionCertificate finalize_certificate(const AcceptableSet& S, const ConstructionParams& params,
                                             const HChoice& hc, const PrimeChoice& pc, const ForbiddenRootSet& B) {
    ConstructionCertificate cert;
    cert.points = S.points();
    cert.params = params;
    cert.h = hc.h;
    cert.c_shift = hc.c_shift;
    cert.y = hc.y;
    cert.h_irreducibility = hc.irreducibility;
    cert.ell = pc.ell;
    cert.g = pc.g;
    cert.f = pc.f;
    cert.genus = superelliptic_genus(params.d);
    cert.forbidden = B.generators();
    cert.ell_rejections = pc.rejections;

    auto require = [](std::optional<ModularWitness> w, const std::string& what) {
        if (!w) throw InternalInconsistency("no nonvanishing witness for " + what);
        return *w;
    };
    cert.witnesses["F.discriminant"] = require(find_discriminant_witness(second_factor(cert.h, cert.g)), "disc F");
    cert.witnesses["f.discriminant"] = require(find_discriminant_witness(cert.f), "disc f");
    for (std::size_t i = 0; i < cert.forbidden.size(); ++i) {
        const auto& q = cert.forbidden[i];
        if (q.degree() < 1) continue;
        const std::string key = "B." + std::to_string(i);
        cert.witnesses[key + ".g"] = require(find_resultant_witness(cert.g, q), "Res(g, B)");
        cert.witnesses[key + ".f"] = require(find_resultant_witness(cert.f, q), "Res(f, B)");
    }

    cert.checks = recheck(cert);
    for (const auto& c : cert.checks) {
        if (!c.pass) throw InternalInconsistency("certificate check failed: " + c.name + " (" + c.witness + ")");
    }
    return cert;
}

std::vector<Check> recheck(const ConstructionCertificate& cert) {
    const auto& pts = cert.points;
    const auto& pr = cert.params;
    CheckList list;

    std::optional<AcceptableSet> S;
    try {
        S = validate_acceptable(pts);
    } catch (const std::exception&) {
    }
    auto set = [&]() -> const AcceptableSet& {
        if (!S) throw std::invalid_argument("points are not acceptable");
        return *S;
    };

    list.add("points.acceptable", [&] { return std::pair{set().r() == pts.size(), "r=" + std::to_string(pts.size())}; });
    list.add("params.r", [&] { return std::pair{pr.r == static_cast<long>(pts.size()) && pr.r >= 2, std::to_string(pr.r)}; });
    list.add("params.d", [&] { return std::pair{pr.d == 18 * pr.r + 3, std::to_string(pr.d)}; });
    list.add("params.n", [&] { return std::pair{pr.n == 6 * pr.r + 3, std::to_string(pr.n)}; });
    list.add("params.m", [&] { return std::pair{pr.m == difference_product(pts), to_string(pr.m)}; });
    list.add("params.N", [&] { return std::pair{pr.N == radical(pr.m), to_string(pr.N)}; });

    list.add("h.formula", [&] {
        const Polynomial L = lagrange_interpolant(set(), pr.d);
        const bool coprime = evaluate(L, Rational(cert.c_shift)) != 0;
        const Polynomial expect =
            L + node_polynomial(set()) * shifted_power(cert.c_shift, pr.n - pr.r) * Rational(cert.y);
        return std::pair{coprime && cert.y >= 1 && cert.h == expect,
                         "c=(X-" + to_string(cert.c_shift) + ")^" + std::to_string(pr.n - pr.r) + " y=" + to_string(cert.y)};
    });
    list.add("h.degree", [&] { return std::pair{cert.h.degree() == pr.n, std::to_string(cert.h.degree())}; });
    list.add("h.interpolation", [&] { return std::pair{interpolates(cert.h, pts, pr.d), std::string("h(a_i) = b_i^d")}; });
    list.add("h.integrality", [&] {
        return std::pair{has_integer_coefficients(cert.h * Rational(pr.m)), std::string("m*h in Z[X]")};
    });
    list.add("h.irreducible", [&] {
        const auto& ic = cert.h_irreducibility;
        const bool ok = ic.verdict == IrreducibilityVerdict::irreducible && recheck(ic, cert.h);
        return std::pair{ok, to_string(ic.kind) + (ic.prime ? " p=" + to_string(*ic.prime) : std::string())};
    });

    list.add("ell.prime_class", [&] {
        return std::pair{is_prime(cert.ell) && mod_floor(cert.ell, kTwelve) == kFive, to_string(cert.ell)};
    });
    list.add("ell.coprime_N", [&] { return std::pair{gcd(cert.ell, pr.N) == 1, std::string("gcd(ell, N) = 1")}; });
    list.add("ell.minimal", [&] {
        ForbiddenRootSet B;
        for (const auto& q : cert.forbidden) B.add(q);
        const auto& rej = cert.ell_rejections;
        std::size_t k = 0;
        Integer cand = 2;
        for (;; ++k, cand += 1) {
            cand = next_prime_in_class(cand, kFive, kTwelve);
            if (cand >= cert.ell) break;
            if (k >= rej.size() || rej[k].ell != cand) return std::pair{false, "candidate " + to_string(cand) + " unaccounted"};
            const auto why = prime_rejection(cert.h, set(), pr, B, cand);
            if (!why || *why != rej[k].condition) {
                return std::pair{false, "candidate " + to_string(cand) + " tag mismatch"};
            }
        }
        return std::pair{k == rej.size() && cand == cert.ell, std::to_string(k) + " smaller candidates rejected"};
    });
    list.add("h.ell_integral", [&] {
        return std::pair{ell_integral(cert.h, cert.ell) && leading_is_unit(cert.h, cert.ell),
                         std::string("v_ell(coefficients) >= 0, v_ell(lc h) = 0")};
    });
    list.add("h.separable_mod_ell", [&] {
        const auto res = discriminant_residue(cert.h, cert.ell);
        return std::pair{res != 0, "Res(h, h') mod ell = " + std::to_string(res)};
    });

    list.add("g.formula", [&] { return std::pair{cert.g == build_g(set(), pr.N, cert.ell), std::string("g = ell N^6 b^6 + 1")}; });
    list.add("g.interpolation", [&] {
        bool ok = true;
        for (const auto& p : pts) ok = ok && evaluate(cert.g, Rational(p.a)) == 1;
        return std::pair{ok, std::string("g(a_i) = 1")};
    });
    list.add("g.pure_slope", [&] {
        const NewtonPolygon np = newton_polygon(cert.g, cert.ell);
        const bool ok = np.segments.size() == 1 && np.segments[0].slope == make_rational(1, 6 * pr.r) &&
                        is_pure_slope_irreducible(cert.g, cert.ell);
        return std::pair{ok, np.segments.size() == 1 ? "slope=" + to_string(np.segments[0].slope)
                                                     : std::to_string(np.segments.size()) + " segments"};
    });
    list.add("F.two_segment", [&] {
        const bool ok = check_two_segment_shape(second_factor(cert.h, cert.g), cert.ell, pr.n, 6 * pr.r);
        return std::pair{ok, "lengths " + std::to_string(pr.n) + ", " + std::to_string(6 * pr.r)};
    });
    list.add("F.separable", [&] {
        const auto& w = cert.witnesses.at("F.discriminant");
        return std::pair{check_discriminant_witness(second_factor(cert.h, cert.g), w), witness_text(w)};
    });

    list.add("f.formula", [&] { return std::pair{cert.f == assemble_f(cert.h, cert.g), std::string("f = g((h-1)g+1)")}; });
    list.add("f.degree", [&] { return std::pair{cert.f.degree() == pr.d, std::to_string(cert.f.degree())}; });
    list.add("f.interpolation", [&] { return std::pair{interpolates(cert.f, pts, pr.d), std::string("f(a_i) = b_i^d")}; });
    list.add("f.leading_valuation", [&] {
        const Valuation v = valuation(cert.f.leading(), cert.ell);
        return std::pair{v == Valuation::finite(2), "v_ell(lc f) = " + (v.infinite() ? "inf" : std::to_string(v.value()))};
    });
    list.add("f.separable", [&] {
        const auto& w = cert.witnesses.at("f.discriminant");
        return std::pair{check_discriminant_witness(cert.f, w), witness_text(w)};
    });
    list.add("f.factors_coprime", [&] {
        const Polynomial d = gcd(cert.g, second_factor(cert.h, cert.g));
        return std::pair{d.degree() == 0, "gcd = " + to_string(d)};
    });

    for (std::size_t i = 0; i < cert.forbidden.size(); ++i) {
        const std::string key = "B." + std::to_string(i);
        for (const char* part : {".g", ".f"}) {
            list.add(key + part, [&, part] {
                const auto& q = cert.forbidden[i];
                if (q.is_zero()) return std::pair{false, std::string("zero generator")};
                if (q.degree() < 1) return std::pair{true, std::string("constant generator")};
                const Polynomial& mine = std::string(part) == ".g" ? cert.g : cert.f;
                const auto& w = cert.witnesses.at(key + part);
                return std::pair{check_resultant_witness(mine, q, w), witness_text(w)};
            });
        }
    }

    list.add("genus", [&] {
        return std::pair{cert.genus == superelliptic_genus(pr.d), to_string(cert.genus)};
    });
    return list.release();
}

ConstructionCertificate construct(const AcceptableSet& S, const ForbiddenRootSet& B, const ConstructionEffort& effort) {
    const ConstructionParams params = compute_params(S, effort.factor_bound);
    long first_y = 1;
    while (true) {
        const HChoice hc = build_h(S, params, effort, first_y);
        try {
            const PrimeChoice pc = choose_prime(hc.h, S, params, B, effort);
            return finalize_certificate(S, params, hc, pc, B);
        } catch (const EffortExhausted& e) {
            if (hc.y >= effort.max_y) throw;
            first_y = static_cast<long>(hc.y.get_si()) + 1;
        }
    }
}

bool all_pass(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

// --- singleton -------------------------------------------------------------

namespace {

std::size_t column_rank(std::vector<std::vector<Rational>> m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            const Rational factor = m[r][col] / m[rank][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

Polynomial singleton_model() { return pow(Polynomial::x(), 5) - Polynomial::constant(2); }

}  // namespace

SingletonCertificate singleton_curve(const ProjectivePoint& P) {
    const std::size_t dim = P.dimension();
    if (dim < 2) throw std::invalid_argument("the singleton curve needs ambient dimension at least 2");
    SingletonCertificate cert;
    cert.point = P;
    cert.model = singleton_model();
    cert.exponent = 2;
    cert.genus = 2;

    std::size_t pivot = 0;
    while (P[pivot] == 0) ++pivot;
    std::vector<std::size_t> free_rows;
    for (std::size_t i = 0; i <= dim && free_rows.size() < 2; ++i) {
        if (i != pivot) free_rows.push_back(i);
    }
    cert.embedding.assign(dim + 1, std::vector<Integer>(3, 0));
    for (std::size_t i = 0; i <= dim; ++i) cert.embedding[i][1] = P[i];
    cert.embedding[free_rows[0]][0] = 1;
    cert.embedding[free_rows[1]][2] = 1;

    cert.assumptions["jacobian_rank_0"] = "trusted-external";
    cert.assumptions["only_point_at_infinity"] = "trusted-external";
    cert.checks = recheck(cert);
    if (!all_pass(cert.checks)) throw InternalInconsistency("singleton certificate failed its own checks");
    return cert;
}

SingletonCertificate singleton_curve(const RationalPoint& P) {
    return singleton_curve(ProjectivePoint::from_rationals({P.first, P.second, Rational(1)}));
}

std::vector<Check> recheck(const SingletonCertificate& cert) {
    CheckList list;
    list.add("model.fixed", [&] {
        return std::pair{cert.model == singleton_model() && cert.exponent == 2, std::string("y^2 = x^5 - 2")};
    });
    list.add("model.separable", [&] {
        const Rational disc = discriminant(cert.model);
        return std::pair{disc != 0, "disc = " + to_string(disc)};
    });
    list.add("genus", [&] { return std::pair{cert.genus == 2, to_string(cert.genus)}; });
    list.add("embedding.rank", [&] {
        const auto& M = cert.embedding;
        bool shape = M.size() == cert.point.dimension() + 1;
        std::vector<std::vector<Rational>> q;
        for (const auto& row : M) {
            shape = shape && row.size() == 3;
            q.emplace_back(row.begin(), row.end());
        }
        const std::size_t rank = shape ? column_rank(q) : 0;
        return std::pair{shape && rank == 3, "rank " + std::to_string(rank)};
    });
    list.add("embedding.image", [&] {
        const auto& M = cert.embedding;
        bool ok = M.size() == cert.point.dimension() + 1;
        for (std::size_t i = 0; ok && i < M.size(); ++i) ok = M[i].size() == 3 && M[i][1] == cert.point[i];
        return std::pair{ok, "[0:1:0] -> " + to_string(cert.point)};
    });
    list.add("assumptions", [&] {
        const auto it = cert.assumptions.find("jacobian_rank_0");
        return std::pair{it != cert.assumptions.end() && it->second == "trusted-external",
                         std::string("jacobian_rank_0 trusted-external")};
    });
    return list.release();
}

}  // namespace prescribed

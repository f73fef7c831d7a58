#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "prescribed/construction.hpp"
#include "prescribed/newton.hpp"

using namespace prescribed;

namespace {

const Polynomial X = Polynomial::x();
Polynomial c(long v) { return Polynomial::constant(v); }

std::vector<RationalPoint> pts(std::initializer_list<std::pair<long, long>> list) {
    std::vector<RationalPoint> out;
    for (auto [a, b] : list) out.emplace_back(Rational(a), Rational(b));
    return out;
}

const ConstructionCertificate& golden() {
    static const ConstructionCertificate cert = construct(validate_acceptable(pts({{1, 2}, {2, 3}})));
    return cert;
}

const Check& find_check(const std::vector<Check>& checks, const std::string& name) {
    for (const auto& ch : checks) {
        if (ch.name == name) return ch;
    }
    throw std::out_of_range(name);
}

}  // namespace

TEST(Acceptable, Examples) {
    EXPECT_EQ(validate_acceptable(pts({{1, 2}, {2, 3}})).r(), 2u);
    try {
        validate_acceptable(pts({{1, 2}, {1, 3}}));
        FAIL();
    } catch (const NotAcceptable& e) {
        EXPECT_EQ(e.clause(), AcceptabilityClause::equal_x);
        EXPECT_EQ(e.offending().size(), 2u);
    }
    try {
        validate_acceptable(pts({{1, 2}, {2, 0}}));
        FAIL();
    } catch (const NotAcceptable& e) {
        EXPECT_EQ(e.clause(), AcceptabilityClause::zero_coordinate);
        EXPECT_EQ(e.offending(), pts({{2, 0}}));
    }
}

TEST(Acceptable, IntegralityAndRepeats) {
    std::vector<RationalPoint> half{{make_rational(1, 2), Rational(1)}, {Rational(2), Rational(1)}};
    try {
        validate_acceptable(half);
        FAIL();
    } catch (const NotAcceptable& e) {
        EXPECT_EQ(e.clause(), AcceptabilityClause::non_integral);
        EXPECT_EQ(to_string(e.clause()), "(iii)");
    }
    const AcceptableSet s = validate_acceptable(pts({{1, 2}, {2, 3}, {1, 2}}));
    EXPECT_EQ(s.r(), 2u);
    EXPECT_EQ(s.points()[1], (IntegralPoint{2, 3}));
    EXPECT_THROW(validate_acceptable(std::vector<RationalPoint>{}), std::invalid_argument);
}

TEST(Params, Examples) {
    const ConstructionParams p = compute_params(validate_acceptable(pts({{1, 5}, {2, 5}})));
    EXPECT_EQ(p.d, 39);
    EXPECT_EQ(p.n, 15);
    EXPECT_EQ(p.m, -1);
    EXPECT_EQ(p.N, 1);
    const ConstructionParams q = compute_params(validate_acceptable(pts({{1, 1}, {3, 1}, {7, 1}})));
    EXPECT_EQ(q.d, 57);
    EXPECT_EQ(q.n, 21);
    EXPECT_EQ(q.m, (1 - 3) * (1 - 7) * (3 - 7));
    EXPECT_EQ(q.N, oracle::trial_radical(-48));
    EXPECT_THROW(compute_params(validate_acceptable(pts({{1, 1}}))), SingletonCase);
}

TEST(Lagrange, Examples) {
    EXPECT_EQ(lagrange_interpolant(validate_acceptable(pts({{1, 1}, {2, 1}})), 39), c(1));
    EXPECT_EQ(lagrange_interpolant(validate_acceptable(pts({{1, 1}, {-1, 1}, {2, 1}})), 57), c(1));

    const Polynomial L = lagrange_interpolant(validate_acceptable(pts({{1, 2}, {2, 1}})), 39);
    const Integer y1 = pow(Integer(2), 39);
    // two-point form: y1 (X - 2)/(1 - 2) + y2 (X - 1)/(2 - 1)
    const Polynomial expect = (X - c(2)) * Rational(-y1) + (X - c(1));
    EXPECT_EQ(L, expect);
    EXPECT_EQ(evaluate(L, Rational(1)), Rational(y1));
    EXPECT_EQ(evaluate(L, Rational(2)), 1);
}

TEST(BuildH, GoldenContract) {
    const AcceptableSet S = validate_acceptable(pts({{1, 2}, {2, 3}}));
    const ConstructionParams p = compute_params(S);
    const HChoice hc = build_h(S, p, {});
    EXPECT_EQ(hc.h.degree(), 15);
    EXPECT_EQ(evaluate(hc.h, Rational(1)), Rational(pow(Integer(2), 39)));
    EXPECT_EQ(evaluate(hc.h, Rational(2)), Rational(pow(Integer(3), 39)));
    EXPECT_TRUE(has_integer_coefficients(hc.h * Rational(p.m)));
    ASSERT_EQ(hc.irreducibility.verdict, IrreducibilityVerdict::irreducible);
    ASSERT_TRUE(hc.irreducibility.prime.has_value());
    const long q = hc.irreducibility.prime->get_si();
    if (hc.irreducibility.kind == IrreducibilityKind::mod_p_irreducible) {
        EXPECT_TRUE(oracle::berlekamp_irreducible(oracle::reduce(hc.h, q), q));
    } else {
        EXPECT_TRUE(is_pure_slope_irreducible(hc.h, *hc.irreducibility.prime));
    }
    EXPECT_EQ(hc.c, pow(X - Polynomial::constant(Rational(hc.c_shift)), 13));
    EXPECT_GE(hc.y, 1);
}

TEST(BuildH, ShiftAvoidsCommonRootWithL) {
    // L(1) = 1, L(2) = 2 gives L = X, which vanishes at 0
    const AcceptableSet S = validate_acceptable(pts({{1, 1}, {2, 2}}));
    ConstructionParams p = compute_params(S);
    p.d = 1;  // interpolate b_i directly to force L = X
    const HChoice hc = build_h(S, p, {});
    EXPECT_EQ(hc.c_shift, 1);
    EXPECT_NE(evaluate(lagrange_interpolant(S, 1), Rational(hc.c_shift)), 0);
}

TEST(BuildH, ExhaustedEffort) {
    const AcceptableSet S = validate_acceptable(pts({{1, 2}, {2, 3}}));
    ConstructionEffort effort;
    effort.max_y = 0;
    EXPECT_THROW(build_h(S, compute_params(S), effort), EffortExhausted);
    EXPECT_THROW(construct(S, {}, effort), EffortExhausted);
}

TEST(BuildG, Examples) {
    const AcceptableSet S = validate_acceptable(pts({{1, 2}, {2, 3}}));
    const Polynomial g = build_g(S, Integer(1), Integer(5));
    EXPECT_EQ(g, pow(X - c(1), 6) * pow(X - c(2), 6) * Rational(5) + c(1));
    EXPECT_EQ(g.degree(), 12);
    EXPECT_EQ(evaluate(g, Rational(1)), 1);
    EXPECT_EQ(evaluate(g, Rational(2)), 1);
    const AcceptableSet T = validate_acceptable(pts({{1, 1}, {3, 1}, {7, 1}}));
    const Polynomial g2 = build_g(T, Integer(6), Integer(17));
    EXPECT_EQ(g2.leading(), Rational(17 * 6 * 6 * 6 * 6 * 6 * 6));
}

TEST(BuildG, AtLeastOneOnRandomRationals) {
    const AcceptableSet S = validate_acceptable(pts({{1, 2}, {-3, 3}, {4, 1}}));
    const Polynomial g = build_g(S, Integer(42), Integer(5));
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 1000);
    for (int i = 0; i < 1000; ++i) EXPECT_GE(evaluate(g, make_rational(num(rng), den(rng))), 1);
}

TEST(ChoosePrime, CandidateStream) {
    std::vector<long> stream;
    Integer ell = 2;
    for (int i = 0; i < 5; ++i) {
        ell = next_prime_in_class(ell, Integer(5), Integer(12));
        stream.push_back(ell.get_si());
        ell += 1;
    }
    EXPECT_EQ(stream, (std::vector<long>{5, 17, 29, 41, 53}));
    for (long v : stream) EXPECT_TRUE(oracle::trial_division_is_prime(v) && v % 12 == 5);
}

TEST(ChoosePrime, RejectionTags) {
    const AcceptableSet S = validate_acceptable(pts({{1, 2}, {2, 3}}));
    const ConstructionParams p = compute_params(S);
    const ForbiddenRootSet none;
    // X^15 + 7: 5 | disc = 15^15 7^14, and the derivative vanishes mod 5
    const Polynomial h = pow(X, 15) + c(7);
    EXPECT_EQ(oracle::sylvester_resultant(oracle::integer_coefficients(h),
                                          oracle::integer_coefficients(derivative(h))) % 5, 0);
    EXPECT_EQ(prime_rejection(h, S, p, none, Integer(5)), std::optional<std::string>("h-separable-mod-ell"));
    EXPECT_EQ(prime_rejection(pow(X, 15) * Rational(5) + c(7), S, p, none, Integer(5)),
              std::optional<std::string>("h-leading-unit"));
    EXPECT_EQ(prime_rejection(pow(X, 15) + c(1) * make_rational(1, 5), S, p, none, Integer(5)),
              std::optional<std::string>("h-ell-integral"));
    ConstructionParams withN = p;
    withN.N = 10;
    EXPECT_EQ(prime_rejection(h, S, withN, none, Integer(5)), std::optional<std::string>("coprime-N"));
}

TEST(ChoosePrime, ExhaustedEffort) {
    const AcceptableSet S = validate_acceptable(pts({{1, 2}, {2, 3}}));
    const ConstructionParams p = compute_params(S);
    ConstructionEffort effort;
    effort.max_ell_candidates = 0;
    EXPECT_THROW(choose_prime(build_h(S, p, {}).h, S, p, {}, effort), EffortExhausted);
}

TEST(Golden, CertificateFacts) {
    const ConstructionCertificate& cert = golden();
    EXPECT_EQ(cert.params.d, 39);
    EXPECT_EQ(cert.params.n, 15);
    EXPECT_EQ(evaluate(cert.f, Rational(1)), Rational(pow(Integer(2), 39)));
    EXPECT_EQ(evaluate(cert.f, Rational(2)), Rational(pow(Integer(3), 39)));
    EXPECT_EQ(cert.f.degree(), 39);
    EXPECT_EQ(valuation(cert.f.leading(), cert.ell), Valuation::finite(2));
    EXPECT_FALSE(rational_dth_power_root(cert.f.leading(), 39).has_value());
    EXPECT_EQ(cert.genus, 703);
    EXPECT_EQ(cert.genus, 38 * 37 / 2);
    EXPECT_TRUE(all_pass(cert.checks));
    EXPECT_TRUE(all_pass(recheck(cert)));
}

TEST(Golden, IndependentWitnessRecheck) {
    const ConstructionCertificate& cert = golden();
    const Polynomial F = second_factor(cert.h, cert.g);
    EXPECT_EQ(cert.f, cert.g * F);
    // exact values, not the stored modular residues
    EXPECT_NE(discriminant(cert.f), 0);
    EXPECT_NE(resultant(cert.g, F), 0);
    EXPECT_EQ(gcd(cert.g, F), c(1));
    EXPECT_TRUE(oracle::trial_division_is_prime(cert.ell.get_ui()));
    EXPECT_EQ(cert.ell.get_ui() % 12, 5u);
    for (const auto& rej : cert.ell_rejections) {
        EXPECT_LT(rej.ell, cert.ell);
        EXPECT_FALSE(rej.condition.empty());
    }
    const NewtonPolygon np = newton_polygon(cert.g, cert.ell);
    ASSERT_EQ(np.segments.size(), 1u);
    EXPECT_EQ(np.segments[0].slope, make_rational(1, 12));
    EXPECT_TRUE(is_pure_slope_irreducible(cert.g, cert.ell));
    EXPECT_TRUE(check_two_segment_shape(F, cert.ell, 15, 12));
    // modular residues agree with the exact values reduced mod q
    const ModularWitness& w = cert.witnesses.at("f.discriminant");
    const Integer exact = resultant(cert.f, derivative(cert.f)).get_num();
    const Integer den = resultant(cert.f, derivative(cert.f)).get_den();
    EXPECT_EQ(mod_floor(exact - w.residue * den, w.prime), 0);
}

TEST(Golden, Deterministic) {
    const ConstructionCertificate again = construct(validate_acceptable(pts({{1, 2}, {2, 3}})));
    EXPECT_EQ(again.f, golden().f);
    EXPECT_EQ(again.ell, golden().ell);
    EXPECT_EQ(again.y, golden().y);
}

TEST(Golden, TamperDetected) {
    ConstructionCertificate cert = golden();
    std::vector<Rational> coeffs = cert.f.coefficients();
    coeffs[3] += 1;
    cert.f = Polynomial(coeffs);
    const auto checks = recheck(cert);
    EXPECT_FALSE(all_pass(checks));
    EXPECT_FALSE(find_check(checks, "f.formula").pass);

    ConstructionCertificate other = golden();
    other.y += 1;
    EXPECT_FALSE(find_check(recheck(other), "h.formula").pass);

    ConstructionCertificate bogus_ell = golden();
    bogus_ell.ell = 7;
    EXPECT_FALSE(find_check(recheck(bogus_ell), "ell.prime_class").pass);
}

TEST(Forbidden, AvoidsEarlierCurve) {
    const ConstructionCertificate& first = golden();
    ForbiddenRootSet B;
    B.add(first.f);
    const ConstructionCertificate second = construct(validate_acceptable(pts({{1, 5}, {2, 7}})), B);
    EXPECT_TRUE(all_pass(second.checks));
    EXPECT_NE(resultant(second.f, first.f), 0);
    EXPECT_NE(resultant(second.g, first.f), 0);
    EXPECT_TRUE(find_check(second.checks, "B.0.f").pass);
}

TEST(Forbidden, RejectsBadGenerators) {
    ForbiddenRootSet B;
    EXPECT_THROW(B.add(Polynomial()), std::invalid_argument);
    EXPECT_THROW(B.add(pow(X - c(1), 2)), std::invalid_argument);
    B.add(X * X - c(2));
    EXPECT_EQ(B.generators().size(), 1u);
}

TEST(Forbidden, CollisionForcesNextPrime) {
    // Put a root of the ell = 5 choice of g into B: that ell must be skipped.
    const AcceptableSet S = validate_acceptable(pts({{1, 2}, {2, 3}}));
    const ConstructionCertificate& plain = golden();
    ForbiddenRootSet B;
    B.add(plain.g);
    const ConstructionCertificate cert = construct(S, B);
    EXPECT_NE(cert.ell, plain.ell);
    EXPECT_NE(resultant(cert.f, plain.g), 0);
    bool tagged = false;
    for (const auto& rej : cert.ell_rejections) tagged = tagged || (rej.ell == plain.ell && rej.condition == "B-avoid-g");
    EXPECT_TRUE(tagged);
}

TEST(Property, IntegralityOfScaledH) {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<long> coord(-9, 8);
    std::uniform_int_distribution<int> size(2, 3);
    int done = 0;
    while (done < 100) {
        const int r = size(rng);
        std::vector<RationalPoint> P;
        for (int i = 0; i < r; ++i) {
            long a = coord(rng);
            long b = coord(rng);
            if (a >= 0) ++a;
            if (b >= 0) ++b;
            P.emplace_back(Rational(a), Rational(b));
        }
        AcceptableSet S = [&] {
            try {
                return validate_acceptable(P);
            } catch (const NotAcceptable&) {
                return validate_acceptable(pts({{1, 1}}));
            }
        }();
        if (S.r() < 2) continue;
        const ConstructionParams p = compute_params(S);
        const HChoice hc = build_h(S, p, {});
        ASSERT_TRUE(has_integer_coefficients(hc.h * Rational(p.m)));
        for (const auto& pt : S.points()) {
            ASSERT_EQ(evaluate(hc.h, Rational(pt.a)), Rational(pow(pt.b, static_cast<unsigned long>(p.d))));
        }
        ++done;
    }
}

TEST(Property, FullConstructionsOnRandomSets) {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> coord(1, 9);
    for (int i = 0; i < 6; ++i) {
        const long a1 = coord(rng);
        long a2 = coord(rng);
        if (a2 == a1) a2 = a1 == 9 ? 1 : a1 + 1;
        const AcceptableSet S = validate_acceptable(pts({{a1, coord(rng)}, {-a2, coord(rng)}}));
        const ConstructionCertificate cert = construct(S);
        EXPECT_TRUE(all_pass(cert.checks));
        EXPECT_NE(discriminant(cert.f), 0);
        for (const auto& pt : S.points()) {
            EXPECT_EQ(evaluate(cert.f, Rational(pt.a)), Rational(pow(pt.b, 39)));
        }
    }
}

TEST(Singleton, Certificate) {
    const SingletonCertificate cert = singleton_curve(RationalPoint{Rational(3), make_rational(1, 2)});
    EXPECT_EQ(cert.point, ProjectivePoint({6, 1, 2}));
    EXPECT_EQ(cert.model, pow(X, 5) - c(2));
    EXPECT_EQ(cert.assumptions.at("jacobian_rank_0"), "trusted-external");
    EXPECT_TRUE(all_pass(cert.checks));
    EXPECT_EQ(discriminant(cert.model), 50000);
    EXPECT_EQ(cert.genus, 2);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(cert.embedding[i][1], cert.point[i]);

    SingletonCertificate bad = cert;
    bad.embedding[0][1] += 1;
    EXPECT_FALSE(all_pass(recheck(bad)));
    EXPECT_THROW(singleton_curve(ProjectivePoint({1, 2})), std::invalid_argument);
}

TEST(Singleton, HigherDimensionRank) {
    const SingletonCertificate cert = singleton_curve(ProjectivePoint({0, 0, 5, 0}));
    EXPECT_EQ(cert.point, ProjectivePoint({0, 0, 1, 0}));
    EXPECT_TRUE(all_pass(cert.checks));
    std::vector<std::vector<Integer>> minor;
    for (std::size_t row : {0u, 1u, 2u}) minor.push_back(cert.embedding[row]);
    EXPECT_NE(oracle::bareiss_determinant(minor), 0);
}

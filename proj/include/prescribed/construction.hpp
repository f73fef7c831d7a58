#pragma once

// Superelliptic curves y^d = f(x) whose rational points are a prescribed
// finite set of integral affine points.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "prescribed/irreducibility.hpp"
#include "prescribed/projective_point.hpp"
#include "prescribed/witness.hpp"

namespace prescribed {

struct IntegralPoint {
    Integer a;
    Integer b;
    friend bool operator==(const IntegralPoint&, const IntegralPoint&) = default;
};

using RationalPoint = std::pair<Rational, Rational>;

/// Clause (i): equal x forces equal y. (ii): nonzero coordinates.
/// (iii): integral coordinates.
enum class AcceptabilityClause { equal_x, zero_coordinate, non_integral };
std::string to_string(AcceptabilityClause clause);

class NotAcceptable : public std::invalid_argument {
public:
    NotAcceptable(AcceptabilityClause clause, std::vector<RationalPoint> offending);
    AcceptabilityClause clause() const { return clause_; }
    const std::vector<RationalPoint>& offending() const { return offending_; }

private:
    AcceptabilityClause clause_;
    std::vector<RationalPoint> offending_;
};

class AcceptableSet {
public:
    const std::vector<IntegralPoint>& points() const { return points_; }
    std::size_t r() const { return points_.size(); }

private:
    explicit AcceptableSet(std::vector<IntegralPoint> points) : points_(std::move(points)) {}
    friend AcceptableSet validate_acceptable(const std::vector<RationalPoint>& points);
    std::vector<IntegralPoint> points_;
};

/// Keeps input order and drops exact repeats. Throws NotAcceptable, or
/// std::invalid_argument for an empty list.
AcceptableSet validate_acceptable(const std::vector<RationalPoint>& points);
AcceptableSet validate_acceptable(const std::vector<IntegralPoint>& points);

struct ConstructionParams {
    long r = 0;
    long d = 0;  // 18r + 3
    long n = 0;  // 6r + 3, degree of h
    Integer m;   // prod_{j<k} (a_j - a_k)
    Integer N;   // radical of m
};

class SingletonCase : public std::invalid_argument {
public:
    SingletonCase() : std::invalid_argument("a single point uses the fixed singleton curve") {}
};

/// Throws SingletonCase when r = 1.
ConstructionParams compute_params(const AcceptableSet& S, unsigned long factor_bound = 1'000'000);

struct ConstructionEffort {
    long max_y = 200;
    long max_ell_candidates = 500;
    unsigned long witness_prime_bound = 1000;
    unsigned long factor_bound = 1'000'000;
};

/// Raised when a bounded search runs out; carries where it stopped.
class EffortExhausted : public std::runtime_error {
public:
    EffortExhausted(std::string stage, const std::string& state)
        : std::runtime_error(stage + " search exhausted: " + state), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

/// A recomputed check disagreed with a stored or just-derived value.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Polynomial of degree <= r-1 through (a_i, b_i^d).
Polynomial lagrange_interpolant(const AcceptableSet& S, long d);

/// prod (X - a_i)
Polynomial node_polynomial(const AcceptableSet& S);

struct HChoice {
    Polynomial h;
    Polynomial c;
    Integer c_shift;  // c = (X - c_shift)^(n-r)
    Integer y;
    IrreducibilityCertificate irreducibility;
};

/// h = L + b c y for the first y >= first_y with a certificate of
/// irreducibility. Throws EffortExhausted past effort.max_y.
HChoice build_h(const AcceptableSet& S, const ConstructionParams& params, const ConstructionEffort& effort,
                long first_y = 1);

/// ell N^6 prod (X - a_i)^6 + 1
Polynomial build_g(const AcceptableSet& S, const Integer& N, const Integer& ell);

/// g ((h - 1) g + 1)
Polynomial assemble_f(const Polynomial& h, const Polynomial& g);

/// (h - 1) g + 1, the second factor of f.
Polynomial second_factor(const Polynomial& h, const Polynomial& g);

/// Finite set of complex numbers given as the union of the root sets of
/// its generators. Avoidance is decided by resultants.
class ForbiddenRootSet {
public:
    /// Throws std::invalid_argument unless q is nonzero and separable.
    void add(const Polynomial& q);
    const std::vector<Polynomial>& generators() const { return generators_; }
    bool empty() const { return generators_.empty(); }

private:
    std::vector<Polynomial> generators_;
};

struct PrimeRejection {
    Integer ell;
    std::string condition;
};

struct PrimeChoice {
    Integer ell;
    Polynomial g;
    Polynomial f;
    std::vector<PrimeRejection> rejections;
};

/// First failing condition for this ell, or nullopt if ell is usable.
/// Tags: "coprime-N", "h-ell-integral", "h-leading-unit", "h-separable-mod-ell",
/// "two-segment-shape", "second-factor-separable", "B-avoid-g", "B-avoid-f".
std::optional<std::string> prime_rejection(const Polynomial& h, const AcceptableSet& S, const ConstructionParams& params,
                                           const ForbiddenRootSet& B, const Integer& ell);

/// Smallest passing ell = 5 mod 12. Throws EffortExhausted after
/// effort.max_ell_candidates candidates.
PrimeChoice choose_prime(const Polynomial& h, const AcceptableSet& S, const ConstructionParams& params,
                         const ForbiddenRootSet& B, const ConstructionEffort& effort);

struct Check {
    std::string name;
    bool pass = false;
    std::string witness;
};

struct ConstructionCertificate {
    std::vector<IntegralPoint> points;
    ConstructionParams params;
    Polynomial h;
    Integer c_shift;
    Integer y;
    IrreducibilityCertificate h_irreducibility;
    Integer ell;
    Polynomial g;
    Polynomial f;
    Integer genus;
    std::vector<Polynomial> forbidden;
    std::map<std::string, ModularWitness> witnesses;
    std::vector<PrimeRejection> ell_rejections;
    std::vector<Check> checks;
};

/// Computes the witnesses and runs every check. Throws
/// InternalInconsistency if any check fails.
ConstructionCertificate finalize_certificate(const AcceptableSet& S, const ConstructionParams& params,
                                             const HChoice& hc, const PrimeChoice& pc, const ForbiddenRootSet& B);

/// Re-derives every check from the stored data alone.
std::vector<Check> recheck(const ConstructionCertificate& cert);

/// Full pipeline. Moves on to the next y when no prime works for the
/// current h.
ConstructionCertificate construct(const AcceptableSet& S, const ForbiddenRootSet& B = {},
                                  const ConstructionEffort& effort = {});

/// Fixed curve y^2 = x^5 - 2 with one rational point, which lies at
/// infinity, together with a linear embedding sending it to P.
struct SingletonCertificate {
    ProjectivePoint point{std::vector<Integer>{1}};
    Polynomial model;
    long exponent = 2;
    Integer genus;
    std::vector<std::vector<Integer>> embedding;  // (n+1) x 3, column 1 is P
    std::map<std::string, std::string> assumptions;
    std::vector<Check> checks;
};

/// Throws std::invalid_argument when P lies in P^1 or lower.
SingletonCertificate singleton_curve(const ProjectivePoint& P);
SingletonCertificate singleton_curve(const RationalPoint& P);
std::vector<Check> recheck(const SingletonCertificate& cert);

bool all_pass(const std::vector<Check>& checks);

}  // namespace prescribed

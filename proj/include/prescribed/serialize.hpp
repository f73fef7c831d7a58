#pragma once

// JSON forms of inputs, certificates and reports. Integers and rationals
// are decimal strings, polynomials are ascending coefficient arrays.
// Object keys are emitted sorted, so equal data gives identical bytes.

#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "prescribed/oracle.hpp"

namespace prescribed {

using Json = nlohmann::json;

/// Malformed document; the message names the offending path.
class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct PointInput {
    bool projective = false;
    std::vector<RationalPoint> affine;
    std::vector<ProjectivePoint> points;
};

/// {"space": "A2" | "Pn", "n": k, "points": [[coordinate strings], ...]}
PointInput parse_input(const Json& doc);

Json to_json(const Polynomial& f);
Polynomial polynomial_from_json(const Json& j, const std::string& path);
Json to_json(const NewtonPolygon& np);
Json to_json(const SearchReport& report);
Json to_json(const RootCheck& check);

Json to_json(const ConstructionCertificate& cert);
Json to_json(const ProjectiveCurveSystem& system);
Json to_json(const SingletonCertificate& cert);

ConstructionCertificate construction_from_json(const Json& j);
ProjectiveCurveSystem system_from_json(const Json& j);
SingletonCertificate singleton_from_json(const Json& j);

using AnyCertificate = std::variant<ConstructionCertificate, ProjectiveCurveSystem, SingletonCertificate>;

/// Dispatches on "kind".
AnyCertificate certificate_from_json(const Json& j);

/// Recomputed checks plus "stored-checks", which passes iff the stored
/// check list equals the recomputed one.
std::vector<Check> verify_certificate(const Json& j);

}  // namespace prescribed

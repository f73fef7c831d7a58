#include "prescribed/serialize.hpp"

#include <algorithm>

namespace prescribed {

namespace {

std::string at(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t index) { return path + "[" + std::to_string(index) + "]"; }

const Json& field(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw FormatError(path + ": expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw FormatError(at(path, key) + ": missing");
    return *it;
}

const Json& array(const Json& j, const std::string& path) {
    if (!j.is_array()) throw FormatError(path + ": expected an array");
    return j;
}

Rational rational_from(const Json& j, const std::string& path) {
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return Rational(j.get<long>());
    } catch (const std::invalid_argument& e) {
        throw FormatError(path + ": " + e.what());
    }
    throw FormatError(path + ": expected a decimal string");
}

Integer integer_from(const Json& j, const std::string& path) {
    const Rational q = rational_from(j, path);
    if (!is_integral(q)) throw FormatError(path + ": expected an integer");
    return q.get_num();
}

long long_from(const Json& j, const std::string& path) {
    const Integer z = integer_from(j, path);
    if (!z.fits_slong_p()) throw FormatError(path + ": out of range");
    return z.get_si();
}

std::string string_from(const Json& j, const std::string& path) {
    if (!j.is_string()) throw FormatError(path + ": expected a string");
    return j.get<std::string>();
}

Json str(const Integer& z) { return to_string(z); }
Json str(const Rational& q) { return to_string(q); }
Json str(long v) { return std::to_string(v); }

Json integers(const std::vector<Integer>& v) {
    Json out = Json::array();
    for (const auto& z : v) out.push_back(str(z));
    return out;
}

std::vector<Integer> integers_from(const Json& j, const std::string& path) {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < array(j, path).size(); ++i) out.push_back(integer_from(j[i], at(path, i)));
    return out;
}

Json matrix(const IntMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m) out.push_back(integers(row));
    return out;
}

IntMatrix matrix_from(const Json& j, const std::string& path) {
    IntMatrix out;
    for (std::size_t i = 0; i < array(j, path).size(); ++i) out.push_back(integers_from(j[i], at(path, i)));
    return out;
}

Json to_json(const ModularWitness& w) { return {{"prime", str(w.prime)}, {"residue", str(w.residue)}}; }

ModularWitness witness_from(const Json& j, const std::string& path) {
    return {integer_from(field(j, "prime", path), at(path, "prime")),
            integer_from(field(j, "residue", path), at(path, "residue"))};
}

Json to_json(const Check& c) { return {{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}}; }

Json checks_json(const std::vector<Check>& checks) {
    Json out = Json::array();
    for (const auto& c : checks) out.push_back(to_json(c));
    return out;
}

std::vector<Check> checks_from(const Json& j, const std::string& path) {
    std::vector<Check> out;
    for (std::size_t i = 0; i < array(j, path).size(); ++i) {
        const std::string p = at(path, i);
        const Json& pass = field(j[i], "pass", p);
        if (!pass.is_boolean()) throw FormatError(at(p, "pass") + ": expected a boolean");
        out.push_back({string_from(field(j[i], "name", p), at(p, "name")), pass.get<bool>(),
                       string_from(field(j[i], "witness", p), at(p, "witness"))});
    }
    return out;
}

NewtonPolygon polygon_from(const Json& j, const std::string& path) {
    NewtonPolygon np;
    np.prime = integer_from(field(j, "prime", path), at(path, "prime"));
    const std::string vp = at(path, "vertices");
    const Json& vs = array(field(j, "vertices", path), vp);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Json& v = array(vs[i], at(vp, i));
        if (v.size() != 2) throw FormatError(at(vp, i) + ": expected a pair");
        np.vertices.push_back({long_from(v[0], at(vp, i)), long_from(v[1], at(vp, i))});
    }
    const std::string sp = at(path, "segments");
    const Json& ss = array(field(j, "segments", path), sp);
    for (std::size_t i = 0; i < ss.size(); ++i) {
        const std::string p = at(sp, i);
        np.segments.push_back({rational_from(field(ss[i], "slope", p), at(p, "slope")),
                               long_from(field(ss[i], "length", p), at(p, "length"))});
    }
    return np;
}

Json to_json(const IrreducibilityCertificate& c) {
    return {{"kind", to_string(c.kind)},
            {"verdict", to_string(c.verdict)},
            {"prime", c.prime ? str(*c.prime) : Json(nullptr)},
            {"polygon", c.polygon ? to_json(*c.polygon) : Json(nullptr)},
            {"factor", c.factor ? to_json(*c.factor) : Json(nullptr)}};
}

IrreducibilityCertificate irreducibility_from(const Json& j, const std::string& path) {
    IrreducibilityCertificate c;
    try {
        c.kind = parse_irreducibility_kind(string_from(field(j, "kind", path), at(path, "kind")));
    } catch (const FormatError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw FormatError(at(path, "kind") + ": " + e.what());
    }
    const std::string verdict = string_from(field(j, "verdict", path), at(path, "verdict"));
    bool known = false;
    for (auto v : {IrreducibilityVerdict::irreducible, IrreducibilityVerdict::reducible,
                   IrreducibilityVerdict::inconclusive}) {
        if (to_string(v) == verdict) {
            c.verdict = v;
            known = true;
        }
    }
    if (!known) throw FormatError(at(path, "verdict") + ": unknown verdict '" + verdict + "'");
    if (const Json& p = field(j, "prime", path); !p.is_null()) c.prime = integer_from(p, at(path, "prime"));
    if (const Json& p = field(j, "polygon", path); !p.is_null()) c.polygon = polygon_from(p, at(path, "polygon"));
    if (const Json& p = field(j, "factor", path); !p.is_null()) c.factor = polynomial_from_json(p, at(path, "factor"));
    return c;
}

Json witnesses_json(const std::map<std::string, ModularWitness>& ws) {
    Json out = Json::object();
    for (const auto& [k, w] : ws) out[k] = to_json(w);
    return out;
}

std::map<std::string, ModularWitness> witnesses_from(const Json& j, const std::string& path) {
    if (!j.is_object()) throw FormatError(path + ": expected an object");
    std::map<std::string, ModularWitness> out;
    for (const auto& [k, v] : j.items()) out[k] = witness_from(v, at(path, k));
    return out;
}

Json rational_vectors(const std::vector<RationalVector>& pts) {
    Json out = Json::array();
    for (const auto& p : pts) {
        Json row = Json::array();
        for (const auto& x : p) row.push_back(str(x));
        out.push_back(row);
    }
    return out;
}

void expect_kind(const Json& j, const std::string& kind) {
    const std::string got = string_from(field(j, "kind", ""), "kind");
    if (got != kind) throw FormatError("kind: expected '" + kind + "', got '" + got + "'");
}

template <typename Cert>
std::vector<Check> with_stored(const Cert& cert, const Json& doc) {
    std::vector<Check> checks = recheck(cert);
    const std::vector<Check> stored = checks_from(field(doc, "checks", ""), "checks");
    bool same = stored.size() == checks.size();
    for (std::size_t i = 0; same && i < stored.size(); ++i) {
        same = stored[i].name == checks[i].name && stored[i].pass == checks[i].pass && stored[i].witness == checks[i].witness;
    }
    checks.push_back({"stored-checks", same, same ? "stored list matches" : "stored list differs from recomputation"});
    return checks;
}

}  // namespace

// --- inputs ----------------------------------------------------------------

PointInput parse_input(const Json& doc) {
    PointInput in;
    const std::string space = string_from(field(doc, "space", ""), "space");
    long arity = 0;
    if (space == "A2") {
        arity = 2;
    } else if (space == "Pn") {
        in.projective = true;
        const long n = long_from(field(doc, "n", ""), "n");
        if (n < 1) throw FormatError("n: must be at least 1");
        arity = n + 1;
    } else {
        throw FormatError("space: expected \"A2\" or \"Pn\", got \"" + space + "\"");
    }
    const Json& pts = array(field(doc, "points", ""), "points");
    if (pts.empty()) throw FormatError("points: empty");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::string p = at("points", i);
        const Json& row = array(pts[i], p);
        if (static_cast<long>(row.size()) != arity) {
            throw FormatError(p + ": expected " + std::to_string(arity) + " coordinates, got " + std::to_string(row.size()));
        }
        std::vector<Rational> coords;
        for (std::size_t k = 0; k < row.size(); ++k) coords.push_back(rational_from(row[k], at(p, k)));
        if (in.projective) {
            if (std::all_of(coords.begin(), coords.end(), [](const Rational& x) { return x == 0; })) {
                throw FormatError(p + ": zero vector is not a projective point");
            }
            in.points.push_back(ProjectivePoint::from_rationals(coords));
        } else {
            in.affine.emplace_back(coords[0], coords[1]);
        }
    }
    return in;
}

// --- polynomials and reports -----------------------------------------------

Json to_json(const Polynomial& f) {
    Json out = Json::array();
    for (const auto& c : f.coefficients()) out.push_back(str(c));
    return out;
}

Polynomial polynomial_from_json(const Json& j, const std::string& path) {
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < array(j, path).size(); ++i) coeffs.push_back(rational_from(j[i], at(path, i)));
    return Polynomial(std::move(coeffs));
}

Json to_json(const NewtonPolygon& np) {
    Json vertices = Json::array();
    for (const auto& v : np.vertices) vertices.push_back({str(v.index), str(v.valuation)});
    Json segments = Json::array();
    for (const auto& s : np.segments) segments.push_back({{"slope", str(s.slope)}, {"length", str(s.length)}});
    return {{"prime", str(np.prime)}, {"vertices", vertices}, {"segments", segments}};
}

Json to_json(const SearchReport& r) {
    return {{"height", str(r.height)},
            {"candidates", str(static_cast<long>(r.candidates))},
            {"found", rational_vectors(r.found)},
            {"expected", rational_vectors(r.expected)},
            {"verdict", to_string(r.verdict)},
            {"seconds", r.seconds},
            {"hypothesis_warning", r.hypothesis_warning},
            {"notes", r.notes}};
}

Json to_json(const RootCheck& c) {
    return {{"no_roots", c.no_roots},
            {"exhaustive", c.exhaustive},
            {"method", c.method},
            {"prime", c.prime ? str(*c.prime) : Json(nullptr)},
            {"root", c.root ? str(*c.root) : Json(nullptr)}};
}

// --- certificates ----------------------------------------------------------

Json to_json(const ConstructionCertificate& c) {
    Json points = Json::array();
    for (const auto& p : c.points) points.push_back({str(p.a), str(p.b)});
    Json forbidden = Json::array();
    for (const auto& q : c.forbidden) forbidden.push_back(to_json(q));
    Json rejections = Json::array();
    for (const auto& r : c.ell_rejections) rejections.push_back({{"ell", str(r.ell)}, {"condition", r.condition}});
    return {{"kind", "superelliptic-construction"},
            {"points", points},
            {"params",
             {{"r", str(c.params.r)}, {"d", str(c.params.d)}, {"n", str(c.params.n)}, {"m", str(c.params.m)},
              {"N", str(c.params.N)}}},
            {"h", to_json(c.h)},
            {"c_shift", str(c.c_shift)},
            {"y", str(c.y)},
            {"h_irreducibility", to_json(c.h_irreducibility)},
            {"ell", str(c.ell)},
            {"g", to_json(c.g)},
            {"f", to_json(c.f)},
            {"genus", str(c.genus)},
            {"forbidden", forbidden},
            {"witnesses", witnesses_json(c.witnesses)},
            {"ell_rejections", rejections},
            {"checks", checks_json(c.checks)}};
}

ConstructionCertificate construction_from_json(const Json& j) {
    expect_kind(j, "superelliptic-construction");
    ConstructionCertificate c;
    const Json& pts = array(field(j, "points", ""), "points");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::string p = at("points", i);
        if (!pts[i].is_array() || pts[i].size() != 2) throw FormatError(p + ": expected a pair");
        c.points.push_back({integer_from(pts[i][0], at(p, 0)), integer_from(pts[i][1], at(p, 1))});
    }
    const Json& pr = field(j, "params", "");
    c.params.r = long_from(field(pr, "r", "params"), "params.r");
    c.params.d = long_from(field(pr, "d", "params"), "params.d");
    c.params.n = long_from(field(pr, "n", "params"), "params.n");
    c.params.m = integer_from(field(pr, "m", "params"), "params.m");
    c.params.N = integer_from(field(pr, "N", "params"), "params.N");
    c.h = polynomial_from_json(field(j, "h", ""), "h");
    c.c_shift = integer_from(field(j, "c_shift", ""), "c_shift");
    c.y = integer_from(field(j, "y", ""), "y");
    c.h_irreducibility = irreducibility_from(field(j, "h_irreducibility", ""), "h_irreducibility");
    c.ell = integer_from(field(j, "ell", ""), "ell");
    c.g = polynomial_from_json(field(j, "g", ""), "g");
    c.f = polynomial_from_json(field(j, "f", ""), "f");
    c.genus = integer_from(field(j, "genus", ""), "genus");
    const Json& fb = array(field(j, "forbidden", ""), "forbidden");
    for (std::size_t i = 0; i < fb.size(); ++i) c.forbidden.push_back(polynomial_from_json(fb[i], at("forbidden", i)));
    c.witnesses = witnesses_from(field(j, "witnesses", ""), "witnesses");
    const Json& rej = array(field(j, "ell_rejections", ""), "ell_rejections");
    for (std::size_t i = 0; i < rej.size(); ++i) {
        const std::string p = at("ell_rejections", i);
        c.ell_rejections.push_back(
            {integer_from(field(rej[i], "ell", p), at(p, "ell")), string_from(field(rej[i], "condition", p), at(p, "condition"))});
    }
    c.checks = checks_from(field(j, "checks", ""), "checks");
    return c;
}

Json to_json(const ProjectiveCurveSystem& s) {
    Json points = Json::array();
    for (const auto& P : s.points) points.push_back(integers(P.coordinates()));
    Json components = Json::array();
    for (const auto& c : s.components) components.push_back(to_json(c));
    return {{"kind", "glued-system"},
            {"d", str(s.d)},
            {"points", points},
            {"chart", integers(s.chart)},
            {"translation", integers(s.translation)},
            {"change", {{"matrix", matrix(s.change.matrix)}, {"scale", str(s.change.scale)}}},
            {"transform", matrix(s.transform)},
            {"components", components},
            {"witnesses", witnesses_json(s.witnesses)},
            {"checks", checks_json(s.checks)}};
}

ProjectiveCurveSystem system_from_json(const Json& j) {
    expect_kind(j, "glued-system");
    ProjectiveCurveSystem s;
    s.d = long_from(field(j, "d", ""), "d");
    const Json& pts = array(field(j, "points", ""), "points");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        try {
            s.points.emplace_back(integers_from(pts[i], at("points", i)));
        } catch (const FormatError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw FormatError(at("points", i) + ": " + e.what());
        }
    }
    s.chart = integers_from(field(j, "chart", ""), "chart");
    s.translation = integers_from(field(j, "translation", ""), "translation");
    const Json& ch = field(j, "change", "");
    s.change.matrix = matrix_from(field(ch, "matrix", "change"), "change.matrix");
    s.change.scale = integer_from(field(ch, "scale", "change"), "change.scale");
    s.transform = matrix_from(field(j, "transform", ""), "transform");
    const Json& comps = array(field(j, "components", ""), "components");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        try {
            s.components.push_back(construction_from_json(comps[i]));
        } catch (const FormatError& e) {
            throw FormatError(at("components", i) + "." + e.what());
        }
    }
    s.witnesses = witnesses_from(field(j, "witnesses", ""), "witnesses");
    s.checks = checks_from(field(j, "checks", ""), "checks");
    return s;
}

Json to_json(const SingletonCertificate& c) {
    Json assumptions = Json::object();
    for (const auto& [k, v] : c.assumptions) assumptions[k] = v;
    return {{"kind", "singleton"},
            {"point", integers(c.point.coordinates())},
            {"model", to_json(c.model)},
            {"exponent", str(c.exponent)},
            {"genus", str(c.genus)},
            {"embedding", matrix(c.embedding)},
            {"assumptions", assumptions},
            {"checks", checks_json(c.checks)}};
}

SingletonCertificate singleton_from_json(const Json& j) {
    expect_kind(j, "singleton");
    SingletonCertificate c;
    try {
        c.point = ProjectivePoint(integers_from(field(j, "point", ""), "point"));
    } catch (const FormatError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("point: ") + e.what());
    }
    c.model = polynomial_from_json(field(j, "model", ""), "model");
    c.exponent = long_from(field(j, "exponent", ""), "exponent");
    c.genus = integer_from(field(j, "genus", ""), "genus");
    c.embedding = matrix_from(field(j, "embedding", ""), "embedding");
    const Json& as = field(j, "assumptions", "");
    if (!as.is_object()) throw FormatError("assumptions: expected an object");
    for (const auto& [k, v] : as.items()) c.assumptions[k] = string_from(v, at("assumptions", k));
    c.checks = checks_from(field(j, "checks", ""), "checks");
    return c;
}

AnyCertificate certificate_from_json(const Json& j) {
    const std::string kind = string_from(field(j, "kind", ""), "kind");
    if (kind == "superelliptic-construction") return construction_from_json(j);
    if (kind == "glued-system") return system_from_json(j);
    if (kind == "singleton") return singleton_from_json(j);
    throw FormatError("kind: unknown certificate kind '" + kind + "'");
}

std::vector<Check> verify_certificate(const Json& j) {
    return std::visit([&](const auto& cert) { return with_stored(cert, j); }, certificate_from_json(j));
}

}  // namespace prescribed

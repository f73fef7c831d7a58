#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "prescribed/serialize.hpp"

namespace prescribed::cli {

namespace {

struct Options {
    std::string input;
    std::string points;
    std::string output;
    long height = 30;
    std::uint64_t seed = 1;
    long max_y = ConstructionEffort{}.max_y;
    long max_ell_candidates = ConstructionEffort{}.max_ell_candidates;
    unsigned long witness_prime_bound = ConstructionEffort{}.witness_prime_bound;
    unsigned threads = 1;
    std::string twist;
    std::string prime;
};

Json read_document(const Options& opt) {
    if (!opt.points.empty()) return Json::parse(opt.points);
    if (opt.input.empty()) throw FormatError("no input: pass --input FILE or --points JSON");
    std::ifstream in(opt.input);
    if (!in) throw FormatError("cannot open input file '" + opt.input + "'");
    return Json::parse(in);
}

void emit(const Json& doc, const Options& opt, std::ostream& out) {
    const std::string text = doc.dump(2) + "\n";
    if (opt.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opt.output, std::ios::binary);
    if (!file) throw FormatError("cannot open output file '" + opt.output + "'");
    file << text;
}

ConstructionEffort effort(const Options& opt) {
    ConstructionEffort e;
    e.max_y = opt.max_y;
    e.max_ell_candidates = opt.max_ell_candidates;
    e.witness_prime_bound = opt.witness_prime_bound;
    return e;
}

std::vector<ProjectivePoint> unique_points(std::vector<ProjectivePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

std::vector<ProjectivePoint> as_projective(const PointInput& in) {
    if (in.projective) return unique_points(in.points);
    std::vector<ProjectivePoint> out;
    for (const auto& [a, b] : in.affine) out.push_back(ProjectivePoint::from_rationals({a, b, Rational(1)}));
    return unique_points(out);
}

void log_singleton(const SingletonCertificate& cert, std::ostream& err) {
    err << "single point " << to_string(cert.point) << ": fixed curve y^2 = " << to_string(cert.model) << ", genus "
        << to_string(cert.genus) << "\n";
}

int do_construct(const Options& opt, std::ostream& out, std::ostream& err) {
    const PointInput in = parse_input(read_document(opt));
    if (in.projective) throw FormatError("space: construct takes A2 input; use glue for Pn");
    if (as_projective(in).size() == 1) {
        const SingletonCertificate cert = singleton_curve(in.affine.front());
        log_singleton(cert, err);
        emit(to_json(cert), opt, out);
        return success;
    }
    const ConstructionCertificate cert = construct(validate_acceptable(in.affine), {}, effort(opt));
    err << "constructed r=" << cert.params.r << " d=" << cert.params.d << " y=" << to_string(cert.y)
        << " ell=" << to_string(cert.ell) << " genus=" << to_string(cert.genus) << "\n";
    emit(to_json(cert), opt, out);
    return success;
}

int do_glue(const Options& opt, std::ostream& out, std::ostream& err) {
    const std::vector<ProjectivePoint> pts = as_projective(parse_input(read_document(opt)));
    if (pts.size() == 1) {
        const SingletonCertificate cert = singleton_curve(pts.front());
        log_singleton(cert, err);
        emit(to_json(cert), opt, out);
        return success;
    }
    GlueConfig config;
    config.effort = effort(opt);
    config.search.seed = opt.seed;
    const ProjectiveCurveSystem sys = glue(pts, config);
    err << "glued " << sys.components.size() << " equation(s) of exponent " << sys.d << "\n";
    emit(to_json(sys), opt, out);
    return success;
}

int do_singleton(const Options& opt, std::ostream& out, std::ostream& err) {
    const std::vector<ProjectivePoint> pts = as_projective(parse_input(read_document(opt)));
    if (pts.size() != 1) throw FormatError("points: singleton takes exactly one point");
    const SingletonCertificate cert = singleton_curve(pts.front());
    log_singleton(cert, err);
    emit(to_json(cert), opt, out);
    return success;
}

int do_verify(const Options& opt, std::ostream& out, std::ostream& err) {
    const std::vector<Check> checks = verify_certificate(read_document(opt));
    Json failed = Json::array();
    Json all = Json::array();
    for (const auto& c : checks) {
        all.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
        if (!c.pass) {
            failed.push_back(c.name);
            err << "FAIL " << c.name << ": " << c.witness << "\n";
        }
    }
    const bool ok = failed.empty();
    err << (ok ? "verified " : "rejected ") << checks.size() << " checks\n";
    emit({{"verified", ok}, {"failed", failed}, {"checks", all}}, opt, out);
    return ok ? success : mismatch;
}

int do_search(const Options& opt, std::ostream& out, std::ostream& err) {
    if (opt.height < 0) throw FormatError("height: must be nonnegative");
    SearchReport report;
    if (!opt.twist.empty()) {
        report = search_twist(parse_rational(opt.twist).get_num(), opt.height, opt.threads);
    } else {
        const AnyCertificate cert = certificate_from_json(read_document(opt));
        if (const auto* c = std::get_if<ConstructionCertificate>(&cert)) {
            std::vector<RationalVector> expected;
            for (const auto& p : c->points) expected.push_back({Rational(p.a), Rational(p.b)});
            report = search_superelliptic(c->f, c->params.d, opt.height, expected, opt.threads);
        } else if (const auto* s = std::get_if<ProjectiveCurveSystem>(&cert)) {
            report = search_glued(*s, opt.height, opt.threads);
        } else {
            const auto& one = std::get<SingletonCertificate>(cert);
            report = search_superelliptic(one.model, one.exponent, opt.height, {}, opt.threads);
        }
    }
    err << "searched " << report.candidates << " x-values at height " << report.height << ": "
        << to_string(report.verdict) << "\n";
    if (report.hypothesis_warning) err << "warning: twist parameter outside the rank-0 hypothesis\n";
    emit(to_json(report), opt, out);
    return report.verdict == SearchVerdict::exact_match ? success : mismatch;
}

int do_inspect(const Options& opt, std::ostream& out, std::ostream& err) {
    const Json doc = read_document(opt);
    std::optional<Integer> prime;
    if (!opt.prime.empty()) prime = parse_rational(opt.prime).get_num();
    if (doc.is_object() && doc.contains("kind")) {
        const ConstructionCertificate c = construction_from_json(doc);
        const Integer p = prime.value_or(c.ell);
        const Polynomial F = second_factor(c.h, c.g);
        const long sixr = 6 * c.params.r;
        err << "polygons at p = " << to_string(p) << "\n";
        emit({{"prime", to_string(p)},
              {"g", to_json(newton_polygon(c.g, p))},
              {"g_pure_slope", is_pure_slope_irreducible(c.g, p)},
              {"F", to_json(newton_polygon(F, p))},
              {"F_two_segment", F.degree() == c.params.n + sixr && check_two_segment_shape(F, p, c.params.n, sixr)},
              {"f", to_json(newton_polygon(c.f, p))}},
             opt, out);
        return success;
    }
    const Polynomial f = polynomial_from_json(doc.at("polynomial"), "polynomial");
    if (!prime) prime = parse_rational(doc.at("prime").get<std::string>()).get_num();
    const NewtonPolygon np = newton_polygon(f, *prime);
    err << np.segments.size() << " segment(s) at p = " << to_string(*prime) << "\n";
    emit({{"prime", to_string(*prime)},
          {"polygon", to_json(np)},
          {"pure_slope", is_pure_slope_irreducible(f, *prime)}},
         opt, out);
    return success;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Curves with a prescribed set of rational points", "prescribed"};
    app.require_subcommand(1);
    Options opt;

    auto io = [&](CLI::App* sub) {
        sub->add_option("--input", opt.input, "input JSON file");
        sub->add_option("--points", opt.points, "input JSON given inline");
        sub->add_option("--output", opt.output, "output file (default: standard output)");
    };
    auto efforts = [&](CLI::App* sub) {
        sub->add_option("--max-y", opt.max_y, "largest specialization y tried")->capture_default_str();
        sub->add_option("--max-ell-candidates", opt.max_ell_candidates, "primes ell tried per y")->capture_default_str();
        sub->add_option("--witness-prime-bound", opt.witness_prime_bound, "largest prime for irreducibility witnesses")
            ->capture_default_str();
    };

    CLI::App* construct_cmd = app.add_subcommand("construct", "build the curve for a set of points in A2");
    io(construct_cmd);
    efforts(construct_cmd);
    construct_cmd->add_option("--seed", opt.seed, "random seed (unused for A2 input)")->capture_default_str();

    CLI::App* glue_cmd = app.add_subcommand("glue", "build the curve system for points in Pn");
    io(glue_cmd);
    efforts(glue_cmd);
    glue_cmd->add_option("--seed", opt.seed, "seed for the coordinate-change search")->capture_default_str();

    CLI::App* verify_cmd = app.add_subcommand("verify", "recompute every check of a certificate");
    io(verify_cmd);

    CLI::App* search_cmd = app.add_subcommand("search", "bounded-height search on a certificate's curve");
    io(search_cmd);
    search_cmd->add_option("--height", opt.height, "height bound H on x")->capture_default_str();
    search_cmd->add_option("--threads", opt.threads, "worker threads")->capture_default_str();
    search_cmd->add_option("--twist", opt.twist, "search ell*Y^2 = X^3 - 1 instead");

    CLI::App* inspect_cmd = app.add_subcommand("inspect-polygon", "Newton polygons of a polynomial or certificate");
    io(inspect_cmd);
    inspect_cmd->add_option("--prime", opt.prime, "prime (default: from input)");

    CLI::App* singleton_cmd = app.add_subcommand("singleton", "fixed curve for a single point");
    io(singleton_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? success : input_error;
    }

    try {
        if (construct_cmd->parsed()) return do_construct(opt, out, err);
        if (glue_cmd->parsed()) return do_glue(opt, out, err);
        if (verify_cmd->parsed()) return do_verify(opt, out, err);
        if (search_cmd->parsed()) return do_search(opt, out, err);
        if (inspect_cmd->parsed()) return do_inspect(opt, out, err);
        return do_singleton(opt, out, err);
    } catch (const EffortExhausted& e) {
        err << "effort exhausted: " << e.what() << "\n";
        return effort_exhausted;
    } catch (const InternalInconsistency& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return mismatch;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return input_error;
    } catch (const Json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return input_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return mismatch;
    }
}

}  // namespace prescribed::cli

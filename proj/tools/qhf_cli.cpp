// Command-line front end: validation, Cartan computation, Fuchsian
// detection, frame normalization, and deterministic fixture generation.
//
// Exit codes: 0 success, 1 usage/parse error, 2 failing check,
// 3 NotRealTrace verdict, 4 Inconclusive verdict.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qhf/cartan.hpp"
#include "qhf/fixtures.hpp"
#include "qhf/fuchsian.hpp"
#include "qhf/json_io.hpp"

namespace {

using qhf::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a_digest(const std::string& data) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Output {
    bool as_json = true;
    json report;

    void emit() const {
        if (as_json) {
            std::cout << report.dump(2) << "\n";
        } else {
            for (const auto& c : report.value("checks", json::array()))
                std::cout << c["check"].get<std::string>() << ": " << c["value"].dump()
                          << " (threshold " << c["threshold"].dump() << ") "
                          << (c["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
            if (report.contains("verdict")) std::cout << "verdict: " << report["verdict"].dump(2) << "\n";
            for (auto& [k, v] : report.items()) {
                if (k == "checks" || k == "verdict") continue;
                std::cout << k << ": " << v.dump() << "\n";
            }
        }
    }
};

template <class S>
int validate_with_backend(const json& parsed, double tol, Output& out) {
    std::vector<qhf::Matrix3<S>> mats;
    std::vector<std::string> names;
    if (parsed.is_object() && parsed.contains("generators")) {
        auto g = qhf::presentation_from_json<S>(parsed);
        mats = g.generators;
        names = g.labels;
    } else {
        mats.push_back(qhf::matrix_from_json<S>(parsed));
        names.push_back("matrix");
    }
    bool all_pass = true;
    json checks = json::array();
    for (size_t i = 0; i < mats.size(); ++i) {
        const auto& m = mats[i];
        double resid = qhf::scalar_traits<S>::to_double(qhf::sp21_residual(m));
        checks.push_back(qhf::check_record(names[i] + ".sp21_residual", resid, tol));
        all_pass = all_pass && resid <= tol;
        auto ids = qhf::identities_residuals(m);
        for (int k = 0; k < 18; ++k) {
            double r = qhf::scalar_traits<S>::to_double(ids[size_t(k)]);
            checks.push_back(
                qhf::check_record(names[i] + ".identity_" + std::to_string(k + 1), r, tol));
            all_pass = all_pass && r <= tol;
        }
        auto t = qhf::trace(m);
        S trace_eps = qhf::scalar_traits<S>::exact ? S(0) : S(tol);
        json tr;
        tr["matrix"] = names[i];
        tr["trace"] = qhf::quaternion_to_json(t);
        tr["real"] = qhf::is_real(t, trace_eps);
        out.report["traces"].push_back(tr);
    }
    out.report["checks"] = checks;
    return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sp(2,1) toolkit: quaternionic hyperbolic Fuchsian group detection"};
    app.require_subcommand(1);
    app.fallthrough();  // allow the global flags after the subcommand name

    double tol = 1e-9;
    int max_word_len = 6;
    uint64_t seed = 1;
    std::string backend = "float";
    bool want_json = true, want_text = false;
    app.add_option("--tol", tol, "residual / predicate tolerance");
    app.add_option("--max-word-len", max_word_len, "word enumeration bound");
    app.add_option("--seed", seed, "seed for all randomized searches");
    app.add_option("--backend", backend, "scalar backend: exact | float")
        ->check(CLI::IsMember({"exact", "float"}));
    app.add_flag("--json", want_json, "machine-readable JSON report (default)");
    app.add_flag("--text", want_text, "plain text report");

    std::string in_path, out_path;
    qhf::FixtureSpec spec;

    auto* validate = app.add_subcommand("validate", "membership residuals, 18 identities, traces");
    validate->add_option("file", in_path, "matrix or presentation JSON")->required();

    auto* cartan = app.add_subcommand("cartan", "Cartan angular invariant of a boundary triple");
    cartan->add_option("file", in_path, "JSON array of three boundary points")->required();

    auto* detect = app.add_subcommand("detect", "Fuchsian case-split detector");
    detect->add_option("file", in_path, "presentation JSON")->required();

    auto* gen = app.add_subcommand("gen", "deterministic fixture generation");
    gen->add_option("--kind", spec.kind,
                    "so21-pair | hline-pair | generic-pair | single-diagonal")
        ->required();
    gen->add_option("--lambda-min", spec.lambda_min, "loxodromic dilation lower bound");
    gen->add_option("--lambda-max", spec.lambda_max, "loxodromic dilation upper bound");
    bool no_conj = false;
    gen->add_flag("--no-conjugate", no_conj, "skip the trace-preserving conjugation");
    gen->add_option("-o,--out", out_path, "output file (default stdout)");

    auto* normalize = app.add_subcommand(
        "normalize", "frame sending a boundary pair to (infinity, 0), plus conjugation");
    normalize->add_option("file", in_path, "JSON {\"p\":point,\"q\":point[,\"generators\":[...]]}")
        ->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    Output out;
    out.as_json = !want_text;

    try {
        if (*validate) {
            std::string data = read_file(in_path);
            json parsed = json::parse(data);
            out.report["command"] = "validate";
            out.report["input_digest"] = fnv1a_digest(data);
            out.report["traces"] = json::array();
            int rc = (backend == "exact") ? validate_with_backend<qhf::Rational>(parsed, tol, out)
                                          : validate_with_backend<double>(parsed, tol, out);
            out.emit();
            return rc;
        }
        if (*cartan) {
            std::string data = read_file(in_path);
            json parsed = json::parse(data);
            if (!parsed.is_array() || parsed.size() != 3)
                throw std::runtime_error("expected an array of three points");
            qhf::BoundaryTriple<double> t{
                qhf::ProjectivePoint<double>(qhf::vector_from_json<double>(parsed[0])),
                qhf::ProjectivePoint<double>(qhf::vector_from_json<double>(parsed[1])),
                qhf::ProjectivePoint<double>(qhf::vector_from_json<double>(parsed[2]))};
            out.report["command"] = "cartan";
            out.report["input_digest"] = fnv1a_digest(data);
            const qhf::ProjectivePoint<double>* pts[3] = {&t.p1, &t.p2, &t.p3};
            for (int i = 0; i < 3; ++i) {
                if (qhf::point_type(*pts[i], tol) != qhf::PointType::null) {
                    out.report["error"] = "point " + std::to_string(i + 1) + " is not null";
                    out.emit();
                    return 2;
                }
            }
            if (qhf::triple_degenerate(t, tol)) {
                out.report["error"] = "degenerate";
                out.emit();
                return 2;
            }
            double angle = qhf::cartan_invariant(t, tol);
            out.report["triple_product"] = qhf::quaternion_to_json(qhf::triple_product(t));
            out.report["angle"] = angle;
            const double pi_2 = 1.5707963267948966;
            if (std::fabs(angle - pi_2) <= 1e-6) out.report["flag"] = "H-line";
            else if (angle <= 1e-6) out.report["flag"] = "R-circle";
            else out.report["flag"] = "generic";
            out.emit();
            return 0;
        }
        if (*detect) {
            std::string data = read_file(in_path);
            auto g = qhf::presentation_from_json<double>(json::parse(data));
            qhf::DetectOptions opt;
            opt.max_word_len = max_word_len;
            opt.eps = tol;
            opt.seed = seed;
            qhf::FuchsianVerdict v = qhf::fuchsian_detect(g, opt);
            out.report["command"] = "detect";
            out.report["input_digest"] = fnv1a_digest(data);
            out.report["verdict"] = qhf::verdict_to_json(v, g.labels);
            out.emit();
            switch (v.kind) {
                case qhf::VerdictKind::quaternionic_line:
                case qhf::VerdictKind::real_fuchsian: return 0;
                case qhf::VerdictKind::not_real_trace: return 3;
                case qhf::VerdictKind::inconclusive: return 4;
            }
        }
        if (*gen) {
            spec.seed = seed;
            spec.word_len = max_word_len;
            spec.conjugate = !no_conj;
            json j;
            if (spec.kind == "so21-pair") j = qhf::presentation_to_json(qhf::gen_so21_pair(spec));
            else if (spec.kind == "hline-pair") j = qhf::presentation_to_json(qhf::gen_hline_pair(spec));
            else if (spec.kind == "generic-pair") j = qhf::presentation_to_json(qhf::gen_generic_pair(spec));
            else if (spec.kind == "single-diagonal") j = qhf::presentation_to_json(qhf::gen_single_diagonal(spec));
            else throw std::runtime_error("unknown fixture kind: " + spec.kind);
            std::string text = j.dump(2) + "\n";
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream f(out_path, std::ios::binary);
                f << text;
            }
            return 0;
        }
        if (*normalize) {
            std::string data = read_file(in_path);
            json parsed = json::parse(data);
            qhf::ProjectivePoint<double> p(qhf::vector_from_json<double>(parsed.at("p")));
            qhf::ProjectivePoint<double> q(qhf::vector_from_json<double>(parsed.at("q")));
            qhf::Matrix3<double> frame = qhf::frame_from_boundary_pair(p, q, tol, seed);
            out.report["command"] = "normalize";
            out.report["input_digest"] = fnv1a_digest(data);
            out.report["frame"] = qhf::matrix_to_json(frame);
            out.report["checks"] = json::array();
            out.report["checks"].push_back(
                qhf::check_record("frame.sp21_residual", qhf::sp21_residual(frame), 1e-9));
            out.report["checks"].push_back(qhf::check_record(
                "frame.maps_p_to_infinity",
                qhf::projective_distance(qhf::apply(frame, p, 1e-12),
                                         qhf::ProjectivePoint<double>::infinity()),
                1e-9));
            out.report["checks"].push_back(qhf::check_record(
                "frame.maps_q_to_origin",
                qhf::projective_distance(qhf::apply(frame, q, 1e-12),
                                         qhf::ProjectivePoint<double>::origin()),
                1e-9));
            if (parsed.contains("generators")) {
                json conj = json::array();
                for (const auto& mj : parsed["generators"])
                    conj.push_back(qhf::matrix_to_json(
                        qhf::conjugate(qhf::matrix_from_json<double>(mj), frame)));
                out.report["conjugated"] = conj;
            }
            bool ok = true;
            for (const auto& c : out.report["checks"]) ok = ok && c["pass"].get<bool>();
            out.emit();
            return ok ? 0 : 2;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 1;
}

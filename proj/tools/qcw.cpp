// Command-line front end: builders, verifiers, samplers, fitters,
// certificates, and sweep experiments with reproducible seeded output.
// Exit codes: 0 success/pass, 1 verification failure or module error,
// 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcw/json_io.hpp"

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string resolve_out(const std::string& flag_value, const std::string& fallback_name) {
    if (!flag_value.empty()) return flag_value;
    const char* env = std::getenv("QCW_OUT_DIR");
    if (env != nullptr && *env != '\0')
        return (std::filesystem::path(env) / fallback_name).string();
    throw UsageError("no output location: pass --out or set QCW_OUT_DIR");
}

std::string join(const std::string& dir, const char* name) {
    return (std::filesystem::path(dir) / name).string();
}

qcw::JointDistribution load_distribution(const std::string& path) {
    const json j = qcw::read_json_file(path);
    if (j.contains("distribution")) return qcw::distribution_from_json(j.at("distribution"));
    return qcw::distribution_from_json(j);
}

std::string format_double(double v) {
    return json(v).dump();  // shortest round-trip, same as the artifacts
}

int run_build_thm1(int n, int max_n, const std::string& out_flag) {
    const std::string out = resolve_out(out_flag, "thm1-n" + std::to_string(n));
    const qcw::Thm1Construction con = qcw::build_thm1(n, max_n);
    const qcw::Thm1Report rep = qcw::verify_thm1(con);

    const json config{{"command", "build-thm1"}, {"format_version", 1}, {"n", n},
                      {"max_n", max_n}};
    qcw::write_json_file(join(out, "instance.json"),
                         json{{"config", config}, {"instance", qcw::instance_to_json(con.instance)}});
    qcw::write_json_file(join(out, "pr.json"),
                         json{{"config", config},
                              {"distribution", qcw::distribution_to_json(con.p_r)}});
    qcw::write_json_file(join(out, "report.json"),
                         json{{"config", config}, {"report", qcw::thm1_report_to_json(rep)}});
    std::cout << "wrote " << out << " pass=" << (rep.pass ? "true" : "false") << "\n";
    return rep.pass ? 0 : 1;
}

int run_build_thm2(int n, double epsilon, const std::string& out_flag) {
    const std::string out = resolve_out(out_flag, "thm2-n" + std::to_string(n));
    const qcw::Thm2Construction con = qcw::build_thm2(n, epsilon);
    const qcw::Thm2Report rep = qcw::verify_thm2(con, epsilon);

    const json config{{"command", "build-thm2"}, {"epsilon", epsilon}, {"format_version", 1},
                      {"n", n}};
    qcw::write_json_file(join(out, "instance.json"),
                         json{{"config", config}, {"instance", qcw::instance_to_json(con.instance)}});
    qcw::write_json_file(join(out, "pu.json"),
                         json{{"config", config},
                              {"distribution", qcw::distribution_to_json(con.p_u)}});
    qcw::write_json_file(join(out, "pr.json"),
                         json{{"config", config},
                              {"distribution", qcw::distribution_to_json(con.p_r)}});
    qcw::write_json_file(join(out, "report.json"),
                         json{{"config", config}, {"report", qcw::thm2_report_to_json(rep)}});
    std::cout << "wrote " << out << " pass=" << (rep.pass ? "true" : "false") << "\n";
    return rep.pass ? 0 : 1;
}

int run_verify(const std::string& in_dir) {
    const json inst_file = qcw::read_json_file(join(in_dir, "instance.json"));
    if (!inst_file.contains("config"))
        throw std::runtime_error("instance.json carries no config; cannot verify");
    const json config = inst_file.at("config");
    const std::string command = config.at("command").get<std::string>();

    bool pass = false;
    bool consistent = false;
    json report;
    if (command == "build-thm1") {
        const qcw::Thm1Construction con =
            qcw::build_thm1(config.at("n").get<int>(), config.at("max_n").get<int>());
        const qcw::Thm1Report rep = qcw::verify_thm1(con);
        const double drift =
            qcw::variational_distance(load_distribution(join(in_dir, "pr.json")), con.p_r);
        pass = rep.pass;
        consistent = drift <= 1e-12;
        report = qcw::thm1_report_to_json(rep);
        report["stored_pr_drift"] = drift;
    } else if (command == "build-thm2") {
        const double epsilon = config.at("epsilon").get<double>();
        const qcw::Thm2Construction con = qcw::build_thm2(config.at("n").get<int>(), epsilon);
        const qcw::Thm2Report rep = qcw::verify_thm2(con, epsilon);
        const double drift_u =
            qcw::variational_distance(load_distribution(join(in_dir, "pu.json")), con.p_u);
        const double drift_r =
            qcw::variational_distance(load_distribution(join(in_dir, "pr.json")), con.p_r);
        pass = rep.pass;
        consistent = drift_u <= 1e-12 && drift_r <= 1e-12;
        report = qcw::thm2_report_to_json(rep);
        report["stored_pu_drift"] = drift_u;
        report["stored_pr_drift"] = drift_r;
    } else {
        throw std::runtime_error("unknown artifact kind: " + command);
    }
    report["artifacts_consistent"] = consistent;
    qcw::write_json_file(join(in_dir, "report.json"),
                         json{{"config", config}, {"report", report}});
    std::cout << "pass=" << (pass ? "true" : "false")
              << " consistent=" << (consistent ? "true" : "false") << "\n";
    return pass && consistent ? 0 : 1;
}

int run_sample(const std::string& in, std::size_t count, std::uint64_t seed,
               const std::string& out_flag) {
    const std::string out = resolve_out(out_flag, "samples.json");
    const qcw::JointDistribution d = load_distribution(in);
    const auto samples = qcw::sample(d, seed, count);
    const json config{{"command", "sample"}, {"count", count}, {"format_version", 1},
                      {"in", in},           {"seed", seed}};
    qcw::write_json_file(out, json{{"config", config},
                                   {"samples", qcw::samples_to_json(samples, d.n())}});
    std::cout << "wrote " << out << "\n";
    return 0;
}

int run_distance(const std::string& a, const std::string& b) {
    const double v = qcw::variational_distance(load_distribution(a), load_distribution(b));
    std::cout << format_double(v) << "\n";
    return 0;
}

int run_fit(const std::string& target_path, std::size_t k, std::uint64_t seed, int restarts,
            int sweeps, const std::string& out_flag) {
    const qcw::JointDistribution target = load_distribution(target_path);
    qcw::FitOptions opts;
    opts.max_sweeps = sweeps;
    const qcw::FitResult res = qcw::fit(target, k, seed, restarts, opts);
    if (!out_flag.empty() || std::getenv("QCW_OUT_DIR") != nullptr) {
        const std::string out = resolve_out(out_flag, "fit-k" + std::to_string(k));
        const json config{{"command", "fit-classical"},
                          {"format_version", 1},
                          {"k", k},
                          {"restarts", restarts},
                          {"seed", seed},
                          {"sweeps", sweeps},
                          {"target", target_path}};
        qcw::write_json_file(join(out, "model.json"),
                             json{{"config", config}, {"model", qcw::model_to_json(res.model)}});
        qcw::write_json_file(
            join(out, "fit.json"),
            json{{"config", config},
                 {"report",
                  json{{"distance", res.distance},
                       {"winning_restart", res.winning_restart},
                       {"surrogate_trace", res.surrogate_trace}}}});
    }
    std::cout << format_double(res.distance) << "\n";
    return 0;
}

int run_certify(const std::string& target_path, const std::string& mode, double tolerance,
                const std::string& out_flag) {
    const qcw::JointDistribution target = load_distribution(target_path);
    const qcw::CertificateMode m = mode == "multiplicative"
                                       ? qcw::CertificateMode::multiplicative
                                       : qcw::CertificateMode::additive;
    const int components = qcw::exact_min_components(target, m, tolerance);
    if (!out_flag.empty() || std::getenv("QCW_OUT_DIR") != nullptr) {
        const std::string out = resolve_out(out_flag, "certificate.json");
        const json config{{"command", "certify"},
                          {"format_version", 1},
                          {"mode", mode},
                          {"target", target_path},
                          {"tolerance", tolerance}};
        json cert{{"min_components", components}};
        if (m == qcw::CertificateMode::multiplicative) {
            const qcw::RectangleCover cover = qcw::minimal_rectangle_cover(target, tolerance);
            json rects = json::array();
            for (const auto& r : cover.rectangles)
                rects.push_back({{"a", r.a}, {"b", r.b}});
            cert["rectangles"] = std::move(rects);
        }
        qcw::write_json_file(out, json{{"config", config}, {"certificate", cert}});
    }
    std::cout << components << "\n";
    return 0;
}

int run_curve(const std::vector<int>& ns, double epsilon,
              const std::vector<std::size_t>& budgets, std::uint64_t seed, int restarts,
              const std::string& out_flag) {
    const std::string out = resolve_out(out_flag, "curve.csv");
    const auto rows = qcw::randomness_curve(ns, epsilon, budgets, seed, restarts);
    const json config{{"budgets", budgets}, {"command", "curve"},   {"epsilon", epsilon},
                      {"format_version", 1}, {"n", ns},              {"restarts", restarts},
                      {"seed", seed}};
    qcw::write_text_file(out, qcw::curve_to_csv(rows, config));
    std::cout << "wrote " << out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum-correlation workbench"};
    app.require_subcommand(1);

    int n = 1;
    int max_n = 10;
    double epsilon = 0.5;
    std::string out;
    std::string in;
    std::string path_a, path_b;
    std::size_t count = 100000;
    std::size_t k = 1;
    std::uint64_t seed = 0;
    int restarts = 32;
    int sweeps = 500;
    std::string mode;
    double tolerance = 1e-12;
    std::vector<int> ns;
    std::vector<std::size_t> budgets;
    int curve_restarts = 8;

    auto* b1 = app.add_subcommand("build-thm1", "zero-diagonal construction + P_r");
    b1->add_option("--n", n, "qubits per side")->required();
    b1->add_option("--max-n", max_n, "raise the default n cap (memory cost is 4^n)");
    b1->add_option("--out", out, "output directory");

    auto* b2 = app.add_subcommand("build-thm2", "spectral truncation construction + P_u, P_r");
    b2->add_option("--n", n, "qubits per side (perfect square: 4, 9, 16)")->required();
    b2->add_option("--epsilon", epsilon, "distance budget in (0, 2)")->required();
    b2->add_option("--out", out, "output directory");

    auto* ver = app.add_subcommand("verify", "rebuild an artifact directory and re-check it");
    ver->add_option("--in", in, "artifact directory from build-thm1/build-thm2")->required();

    auto* smp = app.add_subcommand("sample", "draw i.i.d. outcome pairs from a distribution");
    smp->add_option("--in", in, "distribution JSON")->required();
    smp->add_option("--count", count, "number of samples");
    smp->add_option("--seed", seed, "RNG seed")->required();
    smp->add_option("--out", out, "output file");

    auto* dst = app.add_subcommand("distance", "variational distance between two distributions");
    dst->add_option("--a", path_a, "first distribution JSON")->required();
    dst->add_option("--b", path_b, "second distribution JSON")->required();

    auto* fitc = app.add_subcommand("fit-classical", "fit a k-component classical model");
    fitc->add_option("--target", path_a, "target distribution JSON")->required();
    fitc->add_option("--k", k, "component budget")->required();
    fitc->add_option("--seed", seed, "RNG seed")->required();
    fitc->add_option("--restarts", restarts, "restart count (candidate 0 is deterministic)");
    fitc->add_option("--sweeps", sweeps, "sweep cap per restart");
    fitc->add_option("--out", out, "output directory for model.json + fit.json");

    auto* cert = app.add_subcommand("certify", "exhaustive minimum-component certificate");
    cert->add_option("--target", path_a, "target distribution JSON")->required();
    cert->add_option("--mode", mode, "multiplicative or additive")
        ->required()
        ->check(CLI::IsMember({"multiplicative", "additive"}));
    cert->add_option("--tolerance", tolerance, "support threshold / additive L1 target");
    cert->add_option("--out", out, "certificate JSON file");

    auto* crv = app.add_subcommand("curve", "distance-vs-budget sweep against uniform targets");
    crv->add_option("--n", ns, "target sizes (repeatable)")->required();
    crv->add_option("--epsilon", epsilon, "pass threshold is 2*epsilon")->required();
    crv->add_option("--budgets", budgets, "component budgets (repeatable)")->required();
    crv->add_option("--seed", seed, "RNG seed")->required();
    crv->add_option("--restarts", curve_restarts, "restarts per fit");
    crv->add_option("--out", out, "output CSV file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (b1->parsed()) return run_build_thm1(n, max_n, out);
        if (b2->parsed()) return run_build_thm2(n, epsilon, out);
        if (ver->parsed()) return run_verify(in);
        if (smp->parsed()) return run_sample(in, count, seed, out);
        if (dst->parsed()) return run_distance(path_a, path_b);
        if (fitc->parsed()) return run_fit(path_a, k, seed, restarts, sweeps, out);
        if (cert->parsed()) return run_certify(path_a, mode, tolerance, out);
        if (crv->parsed()) return run_curve(ns, epsilon, budgets, seed, curve_restarts, out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

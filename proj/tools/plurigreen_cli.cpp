// Experiment driver: envelope evaluations, grid scans, verification suites.
//
// Exit codes: 0 success, 1 verification/optimizer failure, 2 usage or parse
// error, 3 I/O error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "plurigreen/verify.hpp"

using namespace plurigreen;

namespace {

CPoint parse_point_flag(const std::string& s, int dimension) {
    std::vector<double> vals;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
    if (static_cast<int>(vals.size()) != 2 * dimension)
        throw std::runtime_error("--point needs " + std::to_string(2 * dimension) +
                                 " comma-separated reals (re,im per coordinate)");
    CPoint p;
    for (std::size_t i = 0; i + 1 < vals.size(); i += 2) p.emplace_back(vals[i], vals[i + 1]);
    return p;
}

// --grid SPEC: "coord:remin:remax:resteps:immin:immax:imsteps", 1-based
// coordinate index; the remaining coordinates come from --point.
struct GridSpec {
    int coord = 1;
    double re_lo = 0.0, re_hi = 0.0;
    int re_steps = 1;
    double im_lo = 0.0, im_hi = 0.0;
    int im_steps = 1;
};

GridSpec parse_grid_spec(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    if (parts.size() != 7)
        throw std::runtime_error("--grid needs coord:remin:remax:ren:immin:immax:imn");
    GridSpec g;
    g.coord = std::stoi(parts[0]);
    g.re_lo = std::stod(parts[1]);
    g.re_hi = std::stod(parts[2]);
    g.re_steps = std::stoi(parts[3]);
    g.im_lo = std::stod(parts[4]);
    g.im_hi = std::stod(parts[5]);
    g.im_steps = std::stoi(parts[6]);
    if (g.re_steps < 1 || g.im_steps < 1)
        throw std::runtime_error("--grid step counts must be >= 1");
    return g;
}

EvalRecord evaluate_point(const ExperimentConfig& cfg, const CPoint& x) {
    EvalRecord rec;
    rec.point = x;
    rec.closed_form = reference_value(cfg, x);
    rec.lower = minorant_value(cfg, x);

    // pole points short-circuit to -infinity without optimization
    if (cfg.weight && cfg.weight->at(x) > 0.0) {
        rec.upper = kNegInf;
        rec.converged = true;
        return rec;
    }
    const EnvelopeResult r = envelope_upper(make_query(cfg, x));
    rec.upper = r.upper;
    rec.pole_count = static_cast<int>(r.poles.size());
    rec.converged = r.converged;
    rec.evaluations = r.evaluations;
    return rec;
}

int cmd_eval(const std::string& config_path, const std::string& point_flag,
             std::uint64_t seed_override, bool has_seed) {
    ExperimentConfig cfg = load_config(config_path);
    if (has_seed) cfg.optimizer.seed = seed_override;
    const CPoint x = parse_point_flag(point_flag, cfg.domain.dimension());
    if (!cfg.domain.contains(x)) throw std::runtime_error("--point is not interior to the domain");

    const EvalRecord rec = evaluate_point(cfg, x);
    Json out = record_to_json(rec);
    out["seed"] = cfg.optimizer.seed;
    out["config_hash"] = cfg.config_hash;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_scan(const std::string& config_path, const std::string& point_flag,
             const std::string& grid_flag, const std::string& out_path, const std::string& format,
             std::uint64_t seed_override, bool has_seed) {
    ExperimentConfig cfg = load_config(config_path);
    if (has_seed) cfg.optimizer.seed = seed_override;
    const int n = cfg.domain.dimension();
    CPoint base(static_cast<std::size_t>(n), Complex(0.0));
    if (!point_flag.empty()) base = parse_point_flag(point_flag, n);
    const GridSpec g = parse_grid_spec(grid_flag);
    if (g.coord < 1 || g.coord > n) throw std::runtime_error("--grid coordinate out of range");

    std::vector<CPoint> pts;
    for (int j = 0; j < g.im_steps; ++j) {
        for (int i = 0; i < g.re_steps; ++i) {
            const double re =
                g.re_steps == 1 ? g.re_lo : g.re_lo + (g.re_hi - g.re_lo) * i / (g.re_steps - 1);
            const double im =
                g.im_steps == 1 ? g.im_lo : g.im_lo + (g.im_hi - g.im_lo) * j / (g.im_steps - 1);
            CPoint p = base;
            p[static_cast<std::size_t>(g.coord - 1)] = Complex(re, im);
            if (cfg.domain.contains(p)) pts.push_back(p);
        }
    }

    std::vector<EvalRecord> records(pts.size());
    parallel_for(static_cast<int>(pts.size()), [&](int i) {
        records[static_cast<std::size_t>(i)] = evaluate_point(cfg, pts[static_cast<std::size_t>(i)]);
    });

    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot write '" << out_path << "'\n";
        return 3;
    }
    if (format == "csv") {
        out << "# seed=" << cfg.optimizer.seed << " config_hash=" << cfg.config_hash << "\n";
        out << csv_header(n) << "\n";
        for (const auto& r : records) out << csv_row(r) << "\n";
    } else if (format == "json") {
        Json arr = Json::array();
        for (const auto& r : records) arr.push_back(record_to_json(r));
        Json doc{{"seed", cfg.optimizer.seed}, {"config_hash", cfg.config_hash}, {"records", arr}};
        out << doc.dump(2) << "\n";
    } else if (format == "svg") {
        out << svg_heatmap(records, g.re_steps, g.im_steps);
    } else {
        std::cerr << "unknown format '" << format << "'\n";
        return 2;
    }
    if (!out.good()) return 3;
    std::cout << "wrote " << records.size() << " records to " << out_path << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& out_path) {
    const auto rep = run_suite(suite, seed);
    if (!rep) {
        std::cerr << "unknown suite '" << suite << "'\n";
        return 2;
    }
    const Json j = verify_report_to_json(*rep);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write '" << out_path << "'\n";
            return 3;
        }
        out << j.dump(2) << "\n";
    }
    std::cout << std::setprecision(8);
    for (const auto& c : rep->cases) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << rep->suite << "/" << c.name
                  << " expected=" << c.expected << " observed=" << c.observed
                  << " tol=" << c.tolerance << "\n";
    }
    const int passed = static_cast<int>(std::count_if(
        rep->cases.begin(), rep->cases.end(), [](const VerifyCase& c) { return c.pass; }));
    std::cout << rep->suite << ": " << passed << "/" << rep->cases.size()
              << " cases passed (seed " << rep->seed << ", config hash " << rep->config_hash
              << ")\n";
    return rep->all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plurigreen: pluricomplex Green functions and disc-functional envelopes"};
    app.require_subcommand(1);

    std::string config_path, point_flag, grid_flag, out_path, format = "csv", suite;
    std::uint64_t seed = 7;

    auto* eval = app.add_subcommand("eval", "evaluate the envelope at one point");
    eval->add_option("--config", config_path, "experiment config (JSON)")->required();
    eval->add_option("--point", point_flag, "base point: re,im per coordinate")->required();
    auto* eval_seed = eval->add_option("--seed", seed, "optimizer seed override");

    auto* scan = app.add_subcommand("scan", "evaluate over a coordinate grid");
    scan->add_option("--config", config_path, "experiment config (JSON)")->required();
    scan->add_option("--point", point_flag, "base point for the fixed coordinates");
    scan->add_option("--grid", grid_flag, "coord:remin:remax:ren:immin:immax:imn")->required();
    scan->add_option("--out", out_path, "output file")->required();
    scan->add_option("--format", format, "csv | json | svg");
    auto* scan_seed = scan->add_option("--seed", seed, "optimizer seed override");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite name")->required();
    verify->add_option("--seed", seed, "suite seed (default 7)");
    verify->add_option("--out", out_path, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(config_path, point_flag, seed, !eval_seed->empty());
        if (scan->parsed())
            return cmd_scan(config_path, point_flag, grid_flag, out_path, format, seed,
                            !scan_seed->empty());
        if (verify->parsed()) return cmd_verify(suite, seed, out_path);
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 1;
    } catch (const Json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

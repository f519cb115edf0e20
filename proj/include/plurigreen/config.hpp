#pragma once

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "plurigreen/dirichlet.hpp"

namespace plurigreen {

using Json = nlohmann::json;

// Experiment configuration: domain, pole data (subspace generators or
// weighted points), functional, optimizer knobs.  Polynomials are lists of
// (multi-index, re, im) triples; points are lists of [re, im] pairs.
struct ExperimentConfig {
    Domain domain = Domain::ball(1);
    EnvelopeQuery::Kind functional = EnvelopeQuery::Kind::Lelong;
    std::optional<WeightFunction> weight;
    std::optional<ComplexSubspace> subspace;
    std::string boundary_kind;   // poisson data: cos_theta | abs_cos_theta | constant
    double boundary_value = 0.0;
    std::string reference;       // ball-hyperplane | ball-point | polydisc-hyperplane |
                                 // product-origin | none
    OptimizerConfig optimizer;
    std::uint64_t config_hash = 0;
};

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

namespace detail {

inline CPoint parse_point(const Json& j) {
    CPoint p;
    for (const auto& c : j) {
        if (!c.is_array() || c.size() != 2)
            throw std::runtime_error("config: point coordinates must be [re, im] pairs");
        p.emplace_back(c[0].get<double>(), c[1].get<double>());
    }
    if (p.empty()) throw std::runtime_error("config: empty point");
    return p;
}

inline MultiPoly parse_polynomial(const Json& j, int nvars) {
    MultiPoly g(nvars);
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 3)
            throw std::runtime_error("config: polynomial terms are [multi_index, re, im]");
        std::vector<int> idx = term[0].get<std::vector<int>>();
        if (static_cast<int>(idx.size()) != nvars)
            throw std::runtime_error("config: multi-index arity does not match the dimension");
        g.add_term(idx, Complex(term[1].get<double>(), term[2].get<double>()));
    }
    if (g.empty()) throw std::runtime_error("config: identically zero polynomial");
    return g;
}

inline Domain parse_domain(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "ball") return Domain::ball(j.at("dimension").get<int>());
    if (kind == "polydisc") return Domain::polydisc(j.at("dimension").get<int>());
    if (kind == "affine_ball")
        return Domain::affine_ball(parse_point(j.at("center")), j.at("radius").get<double>());
    if (kind == "product") {
        std::vector<Domain> factors;
        for (const auto& f : j.at("factors")) factors.push_back(parse_domain(f));
        return Domain::product(std::move(factors));
    }
    throw std::runtime_error("config: unknown domain kind '" + kind + "'");
}

}  // namespace detail

inline ExperimentConfig parse_config_json(const Json& j) {
    ExperimentConfig cfg;
    cfg.domain = detail::parse_domain(j.at("domain"));
    const int n = cfg.domain.dimension();

    const std::string fn = j.value("functional", std::string("lelong"));
    if (fn == "lelong")
        cfg.functional = EnvelopeQuery::Kind::Lelong;
    else if (fn == "riesz")
        cfg.functional = EnvelopeQuery::Kind::Riesz;
    else if (fn == "poisson")
        cfg.functional = EnvelopeQuery::Kind::Poisson;
    else
        throw std::runtime_error("config: unknown functional '" + fn + "'");

    if (j.contains("subspace")) {
        std::vector<MultiPoly> gens;
        for (const auto& g : j.at("subspace").at("generators"))
            gens.push_back(detail::parse_polynomial(g, n));
        cfg.subspace.emplace(std::move(gens));
        const std::string wk = j.value("weight_kind", std::string("nu"));
        cfg.weight = wk == "indicator" ? WeightFunction::subspace_indicator(*cfg.subspace)
                                       : WeightFunction::subspace_nu(*cfg.subspace);
    } else if (j.contains("weights")) {
        std::vector<WeightFunction::Atom> atoms;
        for (const auto& a : j.at("weights").at("points"))
            atoms.push_back({detail::parse_point(a.at("point")), a.at("weight").get<double>()});
        cfg.weight = WeightFunction::finite_support(std::move(atoms));
    } else if (cfg.functional != EnvelopeQuery::Kind::Poisson) {
        throw std::runtime_error("config: lelong/riesz configs need 'subspace' or 'weights'");
    }
    if (cfg.functional == EnvelopeQuery::Kind::Riesz) {
        if (!cfg.subspace || !is_divisor(*cfg.subspace))
            throw std::runtime_error("config: riesz needs a single-generator subspace");
    }
    if (cfg.functional == EnvelopeQuery::Kind::Poisson) {
        if (!j.contains("boundary"))
            throw std::runtime_error("config: poisson configs need 'boundary'");
        cfg.boundary_kind = j.at("boundary").at("kind").get<std::string>();
        cfg.boundary_value = j.at("boundary").value("value", 0.0);
        if (cfg.boundary_kind != "cos_theta" && cfg.boundary_kind != "abs_cos_theta" &&
            cfg.boundary_kind != "constant")
            throw std::runtime_error("config: unknown boundary kind '" + cfg.boundary_kind + "'");
    }

    cfg.reference = j.value("reference", std::string("none"));

    if (j.contains("optimizer")) {
        const Json& o = j.at("optimizer");
        cfg.optimizer.degree = o.value("degree", 6);
        cfg.optimizer.restarts = o.value("restarts", 24);
        cfg.optimizer.iterations = o.value("iterations", 400);
        cfg.optimizer.seed = o.value("seed", std::uint64_t{0});
        cfg.optimizer.margin = o.value("margin", 1e-3);
        cfg.optimizer.penalty_weight = o.value("penalty", 1e3);
        cfg.optimizer.coeff_cap = o.value("coeff_cap", 2.0);
    }

    cfg.config_hash = fnv1a(j.dump());
    return cfg;
}

inline ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw std::runtime_error("config: parse error in '" + path + "': " + e.what());
    }
    return parse_config_json(j);
}

// Named boundary data for poisson configs.
inline std::function<double(const CPoint&)> boundary_function(const ExperimentConfig& cfg) {
    if (cfg.boundary_kind == "cos_theta") return [](const CPoint& z) { return z[0].real(); };
    if (cfg.boundary_kind == "abs_cos_theta")
        return [](const CPoint& z) { return std::abs(z[0].real()); };
    const double c = cfg.boundary_value;
    return [c](const CPoint&) { return c; };
}

// Closed-form oracle named by the config, when one applies.
inline std::optional<double> reference_value(const ExperimentConfig& cfg, const CPoint& x) {
    if (cfg.reference == "ball-hyperplane") return green_ball_hyperplane(x);
    if (cfg.reference == "polydisc-hyperplane") return green_polydisc_hyperplane(x);
    if (cfg.reference == "ball-point") {
        if (!cfg.weight || cfg.weight->atoms().size() != 1) return std::nullopt;
        return cfg.weight->atoms()[0].weight * green_ball_point(cfg.weight->atoms()[0].point, x);
    }
    if (cfg.reference == "product-origin") {
        std::vector<double> vals;
        for (const auto& c : x) {
            const double m = std::abs(c);
            vals.push_back(m == 0.0 ? kNegInf : std::log(m));
        }
        return green_product(vals);
    }
    return std::nullopt;
}

// Certified PSH minorant evaluated at x, when one is available:
// log max |g_i|/M_i for subspace data, weighted sums of the single-pole
// closed forms for finite supports on ball/polydisc.
inline std::optional<double> minorant_value(const ExperimentConfig& cfg, const CPoint& x) {
    if (cfg.subspace) {
        std::vector<double> bounds;
        for (const auto& g : cfg.subspace->generators())
            bounds.push_back(generator_sup_bound(g, cfg.domain));
        return log_max_generators(*cfg.subspace, x, bounds);
    }
    if (cfg.weight && cfg.weight->kind() == WeightFunction::Kind::FiniteSupport &&
        !cfg.weight->atoms().empty()) {
        const auto kind = cfg.domain.kind();
        if (kind != Domain::Kind::Ball && kind != Domain::Kind::Polydisc) return std::nullopt;
        double acc = 0.0;
        for (const auto& atom : cfg.weight->atoms()) {
            const double g = kind == Domain::Kind::Ball
                                 ? green_ball_point(atom.point, x)
                                 : kobayashi_log(cfg.domain, x, atom.point);
            if (!std::isfinite(g)) return kNegInf;
            acc += atom.weight * g;
        }
        return acc;
    }
    return std::nullopt;
}

// Envelope query for the configured experiment at a base point.
inline EnvelopeQuery make_query(const ExperimentConfig& cfg, const CPoint& x) {
    switch (cfg.functional) {
        case EnvelopeQuery::Kind::Lelong:
            return EnvelopeQuery::lelong_query(cfg.domain, *cfg.weight, x, cfg.optimizer);
        case EnvelopeQuery::Kind::Riesz:
            return EnvelopeQuery::riesz_query(cfg.domain, *cfg.subspace, x, cfg.optimizer);
        case EnvelopeQuery::Kind::Poisson: {
            auto phi = harmonic_extension(cfg.domain, boundary_function(cfg));
            return EnvelopeQuery::poisson_query(cfg.domain, std::move(phi), x, cfg.optimizer);
        }
    }
    throw std::logic_error("make_query: unreachable");
}

}  // namespace plurigreen

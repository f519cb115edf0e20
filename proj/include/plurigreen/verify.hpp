#pragma once

#include "plurigreen/diagnostics.hpp"
#include "plurigreen/dirichlet.hpp"
#include "plurigreen/report.hpp"

namespace plurigreen {

// Verification suites: deterministic oracle- and property-based checks of
// the envelope machinery against the closed forms.  Each suite is a pure
// function of its seed.

struct VerifyCase {
    std::string name;
    double expected = 0.0;
    double observed = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::uint64_t config_hash = 0;
    std::vector<VerifyCase> cases;

    bool all_pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return !cases.empty();
    }
};

inline Json verify_report_to_json(const VerifyReport& r) {
    Json cases = Json::array();
    for (const auto& c : r.cases) {
        cases.push_back({{"case", c.name},
                         {"expected", extended_to_json(c.expected)},
                         {"observed", extended_to_json(c.observed)},
                         {"tolerance", c.tolerance},
                         {"pass", c.pass}});
    }
    return Json{{"suite", r.suite},
                {"seed", r.seed},
                {"config_hash", r.config_hash},
                {"pass", r.all_pass()},
                {"cases", cases}};
}

namespace suites {

inline ComplexSubspace hyperplane_z1(int nvars = 2) {
    MultiPoly g(nvars);
    std::vector<int> idx(static_cast<std::size_t>(nvars), 0);
    idx[0] = 1;
    g.add_term(idx, 1.0);
    return ComplexSubspace({g});
}

inline ComplexSubspace curve_z2w2(Complex c) {
    MultiPoly g(2);
    g.add_term({2, 0}, 1.0);
    g.add_term({0, 2}, 1.0);
    g.add_term({0, 0}, -c);
    return ComplexSubspace({g});
}

inline OptimizerConfig make_cfg(int degree, int restarts, int iterations, std::uint64_t seed) {
    OptimizerConfig cfg;
    cfg.degree = degree;
    cfg.restarts = restarts;
    cfg.iterations = iterations;
    cfg.seed = seed;
    return cfg;
}

inline std::uint64_t suite_hash(const std::string& suite, const OptimizerConfig& cfg) {
    std::ostringstream os;
    os << suite << "|d" << cfg.degree << "|r" << cfg.restarts << "|i" << cfg.iterations << "|s"
       << cfg.seed << "|m" << cfg.margin << "|p" << cfg.penalty_weight << "|c" << cfg.coeff_cap;
    return fnv1a(os.str());
}

inline PointFunction envelope_ga(const Domain& X, const WeightFunction& w,
                                 const OptimizerConfig& cfg) {
    return [X, w, cfg](const CPoint& x) {
        if (w.at(x) > 0.0) return kNegInf;
        return envelope_upper(EnvelopeQuery::lelong_query(X, w, x, cfg)).upper;
    };
}

// k_A samples of the Example 3.5 curve over the complex parameter grid
// w = tau + i s, curve (sqrt(c) cos w, sqrt(c) sin w).
inline std::vector<WeightedSample> curve_samples(Complex c, int ntau = 256, int ns = 33) {
    std::vector<WeightedSample> out;
    const Complex sq = std::sqrt(c);
    for (int i = 0; i < ntau; ++i) {
        const double tau = 2.0 * kPi * i / ntau;
        for (int j = 0; j < ns; ++j) {
            const double s = -1.03 + 2.06 * j / (ns - 1);
            const Complex w(tau, s);
            const Complex z = sq * std::cos(w), v = sq * std::sin(w);
            if (std::norm(z) + std::norm(v) < 0.995) out.push_back({{z, v}, 1.0});
        }
    }
    return out;
}

inline double curve_ka(const std::vector<WeightedSample>& samples, const CPoint& p) {
    double best = 0.0;
    for (const auto& s : samples) {
        const double t = ball_mobius_norm(s.point, p);
        if (t < 1e-15) return kNegInf;
        best = std::min(best, std::log(t));
    }
    return best;
}

// --- ball-hyperplane (Example 3.1 closed form) -----------------------------

inline VerifyReport ball_hyperplane(std::uint64_t seed) {
    VerifyReport rep;
    rep.suite = "ball-hyperplane";
    rep.seed = seed;
    const Domain B = Domain::ball(2);
    const WeightFunction nu = WeightFunction::subspace_nu(hyperplane_z1());
    const OptimizerConfig cfg = make_cfg(6, 24, 400, seed);
    rep.config_hash = suite_hash(rep.suite, cfg);

    Rng rng(seed);
    std::vector<CPoint> pts;
    while (pts.size() < 25) {
        const Complex zp = rng.disc(0.7);
        const double b = rng.uniform(0.08, 0.45);
        const double phase = rng.uniform(0.0, 2.0 * kPi);
        const Complex x1 = std::polar(b * std::sqrt(1.0 - std::norm(zp)), phase);
        const CPoint x{x1, zp};
        if (euclidean_norm(x) <= 0.85 && std::abs(x1) >= 0.05) pts.push_back(x);
    }

    rep.cases.resize(pts.size());
    parallel_for(static_cast<int>(pts.size()), [&](int i) {
        const CPoint& x = pts[static_cast<std::size_t>(i)];
        const double truth = green_ball_hyperplane(x);
        const auto r = envelope_upper(EnvelopeQuery::lelong_query(B, nu, x, cfg));
        VerifyCase c;
        std::ostringstream nm;
        nm << "pt" << std::setw(2) << std::setfill('0') << i;
        c.name = nm.str();
        c.expected = truth;
        c.observed = r.upper;
        c.tolerance = 2e-2;
        const double gap = r.upper - truth;
        c.pass = gap >= 0.0 && gap <= c.tolerance;
        rep.cases[static_cast<std::size_t>(i)] = c;
    });
    return rep;
}

// --- ball-point (single poles, geodesic witnesses) --------------------------

inline VerifyReport ball_point(std::uint64_t seed) {
    VerifyReport rep;
    rep.suite = "ball-point";
    rep.seed = seed;
    const Domain B = Domain::ball(2);
    const OptimizerConfig cfg = make_cfg(8, 24, 400, seed);
    rep.config_hash = suite_hash(rep.suite, cfg);

    Rng rng(seed ^ 0xBA11ull);
    std::vector<std::pair<CPoint, CPoint>> pairs;
    while (pairs.size() < 25) {
        CPoint a{rng.disc(0.55), rng.disc(0.55)};
        CPoint x{rng.disc(0.55), rng.disc(0.55)};
        if (euclidean_norm(a) >= 0.6 || euclidean_norm(x) >= 0.6) continue;
        const double t = ball_mobius_norm(a, x);
        if (t < 0.05 || t > 0.5) continue;
        pairs.emplace_back(std::move(a), std::move(x));
    }

    rep.cases.resize(2 * pairs.size());
    parallel_for(static_cast<int>(pairs.size()), [&](int i) {
        const auto& [a, x] = pairs[static_cast<std::size_t>(i)];
        const double truth = green_ball_point(a, x);
        const auto r = envelope_upper(EnvelopeQuery::lelong_query(
            B, WeightFunction::finite_support({{a, 1.0}}), x, cfg));
        std::ostringstream nm;
        nm << "pair" << std::setw(2) << std::setfill('0') << i;
        VerifyCase c;
        c.name = nm.str();
        c.expected = truth;
        c.observed = r.upper;
        c.tolerance = 2e-2;
        const double gap = r.upper - truth;
        c.pass = gap >= 0.0 && gap <= c.tolerance;
        rep.cases[static_cast<std::size_t>(2 * i)] = c;

        VerifyCase h;
        h.name = nm.str() + "-harmonicity";
        h.expected = 0.0;
        h.observed = extremal_harmonicity(
            r, [&a](const CPoint& z) { return green_ball_point(a, z); });
        h.tolerance = 2e-2;
        h.pass = h.observed <= h.tolerance;
        rep.cases[static_cast<std::size_t>(2 * i + 1)] = h;
    });
    return rep;
}

// --- polydisc (Example 3.4, including the barrier failure) ------------------

inline VerifyReport polydisc(std::uint64_t seed) {
    VerifyReport rep;
    rep.suite = "polydisc";
    rep.seed = seed;
    const Domain P = Domain::polydisc(2);
    const WeightFunction nu = WeightFunction::subspace_nu(hyperplane_z1());
    const OptimizerConfig cfg = make_cfg(6, 24, 400, seed);
    rep.config_hash = suite_hash(rep.suite, cfg);

    Rng rng(seed ^ 0xD15Cull);
    std::vector<CPoint> pts;
    while (pts.size() < 25) {
        const Complex x1 = std::polar(rng.uniform(0.05, 0.45), rng.uniform(0.0, 2.0 * kPi));
        const Complex x2 = rng.disc(0.8);
        pts.push_back({x1, x2});
    }

    rep.cases.resize(pts.size() + 2);
    parallel_for(static_cast<int>(pts.size()), [&](int i) {
        const CPoint& x = pts[static_cast<std::size_t>(i)];
        const double truth = green_polydisc_hyperplane(x);
        const auto r = envelope_upper(EnvelopeQuery::lelong_query(P, nu, x, cfg));
        std::ostringstream nm;
        nm << "pt" << std::setw(2) << std::setfill('0') << i;
        VerifyCase c;
        c.name = nm.str();
        c.expected = truth;
        c.observed = r.upper;
        c.tolerance = 2e-2;
        const double gap = r.upper - truth;
        c.pass = gap >= 0.0 && gap <= c.tolerance;
        rep.cases[static_cast<std::size_t>(i)] = c;
    });

    // barrier failure at p = (0.3, 1): G_A sticks at log|z1| along the ray
    const OptimizerConfig scan_cfg = make_cfg(6, 12, 400, seed);
    const auto GA = envelope_ga(P, nu, scan_cfg);
    const CPoint p{Complex(0.3), Complex(1.0)};
    const auto vals = boundary_limit_scan(GA, p, {0.2, 0.1, 0.05, 1e-2});
    const double expect_last = std::log(0.99 * 0.3);
    VerifyCase stuck;
    stuck.name = "barrier-failure-value";
    stuck.expected = expect_last;
    stuck.observed = vals.back();
    stuck.tolerance = 5e-2;
    stuck.pass = std::abs(vals.back() - expect_last) <= stuck.tolerance;
    rep.cases[pts.size()] = stuck;
    VerifyCase nonzero;
    nonzero.name = "barrier-failure-nonvanishing";
    nonzero.expected = std::abs(std::log(0.3));
    nonzero.observed = std::abs(vals.back());
    nonzero.tolerance = 0.5;
    nonzero.pass = std::abs(vals.back()) >= 0.5;
    rep.cases[pts.size() + 1] = nonzero;
    return rep;
}

// --- product (Theorem 2.5 on the bidisc) ------------------------------------

inline VerifyReport product(std::uint64_t seed) {
    VerifyReport rep;
    rep.suite = "product";
    rep.seed = seed;
    const Domain P = Domain::polydisc(2);
    const CPoint origin{Complex(0.0), Complex(0.0)};
    const WeightFunction alpha = WeightFunction::finite_support({{origin, 1.0}});
    const OptimizerConfig cfg = make_cfg(8, 24, 600, seed);
    rep.config_hash = suite_hash(rep.suite, cfg);

    Rng rng(seed ^ 0x9A0Dull);
    std::vector<CPoint> pts;
    while (pts.size() < 10) {
        CPoint x{rng.disc(0.55), rng.disc(0.55)};
        if (std::max(std::abs(x[0]), std::abs(x[1])) < 0.05) continue;
        pts.push_back(std::move(x));
    }

    rep.cases.resize(pts.size());
    parallel_for(static_cast<int>(pts.size()), [&](int i) {
        const CPoint& x = pts[static_cast<std::size_t>(i)];
        const double truth = green_product({std::log(std::abs(x[0])), std::log(std::abs(x[1]))});
        const auto r = envelope_upper(EnvelopeQuery::lelong_query(P, alpha, x, cfg));
        std::ostringstream nm;
        nm << "pt" << std::setw(2) << std::setfill('0') << i;
        VerifyCase c;
        c.name = nm.str();
        c.expected = truth;
        c.observed = r.upper;
        c.tolerance = 2e-2;
        c.pass = std::abs(r.upper - truth) <= c.tolerance;
        rep.cases[static_cast<std::size_t>(i)] = c;
    });
    return rep;
}

// --- counterexample-weights (failure of the weighted product formula) -------

inline VerifyReport counterexample_weights(std::uint64_t seed) {
    VerifyReport rep;
    rep.suite = "counterexample-weights";
    rep.seed = seed;
    const Domain P = Domain::polydisc(2);
    const CPoint origin{Complex(0.0), Complex(0.0)};
    const CPoint x{Complex(0.25), Complex(0.5)};
    const OptimizerConfig cfg = make_cfg(8, 24, 600, seed);
    rep.config_hash = suite_hash(rep.suite, cfg);

    const auto r = envelope_upper(EnvelopeQuery::lelong_query(
        P, WeightFunction::finite_support({{origin, 1.0}}), x, cfg));
    const double truth = std::log(0.5);

    VerifyCase env;
    env.name = "true-envelope";
    env.expected = truth;
    env.observed = r.upper;
    env.tolerance = 2e-2;
    env.pass = std::abs(r.upper - truth) <= env.tolerance;
    rep.cases.push_back(env);

    // max(log|z1|, 2 log|z2|) at (0.25, 0.5): the weighted formula value
    const double formula = green_product({std::log(0.25), 2.0 * std::log(0.5)});
    VerifyCase val;
    val.name = "weighted-formula-value";
    val.expected = -1.3862943611198906;
    val.observed = formula;
    val.tolerance = 1e-12;
    val.pass = std::abs(formula - val.expected) <= val.tolerance;
    rep.cases.push_back(val);

    VerifyCase gap;
    gap.name = "formula-vs-envelope-gap";
    gap.expected = 0.65;
    gap.observed = std::abs(formula - r.upper);
    gap.tolerance = 0.0;
    gap.pass = gap.observed >= 0.65;
    rep.cases.push_back(gap);
    return rep;
}

// --- riesz-vs-lelong (per-disc inequality, Theorem 3.3 proof) ---------------

inline VerifyReport riesz_vs_lelong(std::uint64_t seed) {
    VerifyReport rep;
    rep.suite = "riesz-vs-lelong";
    rep.seed = seed;
    rep.config_hash = fnv1a("riesz-vs-lelong");
    const Domain B = Domain::ball(2);

    MultiPoly z1(2), z1sq(2);
    z1.add_term({1, 0}, 1.0);
    z1sq.add_term({2, 0}, 1.0);
    const ComplexSubspace A1({z1}), A2({z1sq});
    const WeightFunction nu1 = WeightFunction::subspace_nu(A1);
    const WeightFunction nu2 = WeightFunction::subspace_nu(A2);

    Rng rng(seed ^ 0x21E52ull);
    std::vector<AnalyticDisc> discs;
    while (discs.size() < 1000) {
        std::vector<UniPoly> coords(2);
        for (auto& c : coords) {
            c.resize(5);
            for (auto& a : c) a = rng.disc(0.35);
        }
        AnalyticDisc f(std::move(coords), 1.02);
        if (disc_contained(B, f, 0.0, 128)) discs.push_back(std::move(f));
    }

    double worst1 = kNegInf, worst2 = kNegInf;
    for (const auto& f : discs) {
        const double r1 = riesz_divisor(A1, f).first.value;
        const double l1 = lelong(nu1, f).first.value;
        if (std::isfinite(r1) && std::isfinite(l1)) worst1 = std::max(worst1, r1 - l1);
        const double r2 = riesz_divisor(A2, f).first.value;
        const double l2 = lelong(nu2, f).first.value;
        if (std::isfinite(r2) && std::isfinite(l2)) worst2 = std::max(worst2, r2 - l2);
    }
    VerifyCase c1{"divisor-z1-max-violation", 0.0, worst1, 1e-6, worst1 <= 1e-6};
    VerifyCase c2{"divisor-z1sq-max-violation", 0.0, worst2, 1e-6, worst2 <= 1e-6};
    rep.cases = {c1, c2};
    return rep;
}

// --- geodesic-curve (Example 3.5) -------------------------------------------

inline VerifyReport geodesic_curve(std::uint64_t seed) {
    VerifyReport rep;
    rep.suite = "geodesic-curve";
    rep.seed = seed;
    const Domain B = Domain::ball(2);
    const Complex c(0.25);
    const OptimizerConfig cfg = make_cfg(6, 16, 600, seed);
    rep.config_hash = suite_hash(rep.suite, cfg);

    // intersection counts along 1000 seeded directions
    Rng rng(seed ^ 0x6E0Dull);
    int bad = 0;
    for (int k = 0; k < 1000; ++k) {
        CPoint v{rng.disc(1.0), rng.disc(1.0)};
        const double nv = euclidean_norm(v);
        if (nv < 1e-3) continue;
        for (auto& comp : v) comp /= nv;
        const int cnt = geodesic_intersection_count(c, v);
        if (cnt != 0 && cnt != 2) ++bad;
    }
    rep.cases.push_back({"counts-in-0-2", 0.0, static_cast<double>(bad), 0.0, bad == 0});

    // envelope at the origin vs the two-visit witness value
    const CPoint origin{Complex(0.0), Complex(0.0)};
    const WeightFunction nu = WeightFunction::subspace_nu(curve_z2w2(c));
    const auto r = envelope_upper(EnvelopeQuery::lelong_query(B, nu, origin, cfg));
    VerifyCase env;
    env.name = "origin-envelope";
    env.expected = std::log(0.25);
    env.observed = r.upper;
    env.tolerance = 1e-2;
    env.pass = r.upper <= std::log(0.25) + 1e-2 && r.upper >= std::log(0.25) - 1e-9;
    rep.cases.push_back(env);

    // k_alpha at the origin over the curve grid
    const auto samples = curve_samples(c);
    const double ka = k_alpha_upper(B, samples, origin);
    VerifyCase kcase;
    kcase.name = "k-alpha-origin";
    kcase.expected = 0.5 * std::log(0.25);
    kcase.observed = ka;
    kcase.tolerance = 1e-3;
    kcase.pass = std::abs(ka - kcase.expected) <= kcase.tolerance;
    rep.cases.push_back(kcase);

    VerifyCase gap;
    gap.name = "green-vs-kalpha-gap";
    gap.expected = 0.68;
    gap.observed = ka - r.upper;
    gap.tolerance = 0.0;
    gap.pass = gap.observed >= 0.68;
    rep.cases.push_back(gap);

    // submean scan: k_A is not plurisubharmonic
    auto kA = [&samples](const CPoint& p) { return curve_ka(samples, p); };
    double min_defect = kPosInf;
    const std::vector<CPoint> dirs{{Complex(1.0), Complex(0.0)},
                                   {Complex(0.0), Complex(1.0)},
                                   {Complex(std::sqrt(0.5)), Complex(std::sqrt(0.5))}};
    for (const double pr : {0.0, 0.15, 0.3}) {
        const CPoint p{Complex(pr), Complex(0.0)};
        for (const auto& v : dirs)
            for (const double rr : {0.15, 0.25, 0.35}) {
                const double d = submean_defect(kA, p, v, rr, 48);
                if (std::isfinite(d)) min_defect = std::min(min_defect, d);
            }
    }
    VerifyCase psh;
    psh.name = "psh-violation";
    psh.expected = -1e-3;
    psh.observed = min_defect;
    psh.tolerance = 0.0;
    psh.pass = min_defect <= -1e-3;
    rep.cases.push_back(psh);
    return rep;
}

// --- dirichlet (Lemma 3.7 on the unit disc) ---------------------------------

inline VerifyReport dirichlet(std::uint64_t seed) {
    VerifyReport rep;
    rep.suite = "dirichlet";
    rep.seed = seed;
    const Domain D = Domain::ball(1);
    const OptimizerConfig cfg = make_cfg(6, 12, 400, seed);
    rep.config_hash = suite_hash(rep.suite, cfg);

    auto hcos = [](const CPoint& z) { return z[0].real(); };
    auto habs = [](const CPoint& z) { return std::abs(z[0].real()); };

    // dense Poisson-integral oracle, independent of the envelope path
    auto oracle_abs = [](Complex z) {
        double acc = 0.0;
        const int K = 20001;
        for (int k = 0; k < K; ++k) {
            const double th = 2.0 * kPi * k / K;
            const double P = (1.0 - std::norm(z)) / std::norm(std::polar(1.0, th) - z);
            acc += P * std::abs(std::cos(th));
        }
        return acc / K;
    };

    const std::vector<Complex> cos_pts{Complex(0.3), Complex(-0.45), Complex(0.1, 0.4),
                                       Complex(-0.25, -0.3), Complex(0.0, 0.55)};
    const std::vector<Complex> abs_pts{Complex(0.0), Complex(0.3), Complex(-0.5),
                                       Complex(0.2, 0.3), Complex(-0.1, -0.6)};

    for (std::size_t i = 0; i < cos_pts.size(); ++i) {
        const auto r = poisson_dirichlet(D, hcos, CPoint{cos_pts[i]}, cfg);
        VerifyCase vc;
        vc.name = "cos" + std::to_string(i);
        vc.expected = cos_pts[i].real();
        vc.observed = r.upper;
        vc.tolerance = 2e-2;
        vc.pass = std::abs(r.upper - vc.expected) <= vc.tolerance;
        rep.cases.push_back(vc);
    }
    for (std::size_t i = 0; i < abs_pts.size(); ++i) {
        const auto r = poisson_dirichlet(D, habs, CPoint{abs_pts[i]}, cfg);
        VerifyCase vc;
        vc.name = "abscos" + std::to_string(i);
        vc.expected = oracle_abs(abs_pts[i]);
        vc.observed = r.upper;
        vc.tolerance = 2e-2;
        vc.pass = std::abs(r.upper - vc.expected) <= vc.tolerance;
        rep.cases.push_back(vc);
    }

    auto hconst = [](const CPoint&) { return -1.75; };
    const auto rc = poisson_dirichlet(D, hconst, CPoint{Complex(0.4, 0.2)},
                                      make_cfg(6, 4, 150, seed));
    VerifyCase cc;
    cc.name = "constant";
    cc.expected = -1.75;
    cc.observed = rc.upper;
    cc.tolerance = 1e-6;
    cc.pass = std::abs(rc.upper + 1.75) <= 1e-6;
    rep.cases.push_back(cc);
    return rep;
}

// --- boundary (Prop 2.4 limits on the ball) ---------------------------------

inline VerifyReport boundary(std::uint64_t seed) {
    VerifyReport rep;
    rep.suite = "boundary";
    rep.seed = seed;
    const Domain B = Domain::ball(2);
    const WeightFunction nu = WeightFunction::subspace_nu(hyperplane_z1());
    const OptimizerConfig cfg = make_cfg(28, 6, 2400, seed);
    rep.config_hash = suite_hash(rep.suite, cfg);

    const std::vector<double> p1s{0.45, 0.46, 0.47, 0.48, 0.5};
    rep.cases.resize(2 * p1s.size());
    parallel_for(static_cast<int>(p1s.size()), [&](int i) {
        const double p1 = p1s[static_cast<std::size_t>(i)];
        const double phase1 = 0.3 * static_cast<double>(i);
        const double phase2 = 1.1 * static_cast<double>(i);
        const CPoint p{std::polar(p1, phase1), std::polar(std::sqrt(1.0 - p1 * p1), phase2)};

        // closed form at distance 1e-2
        CPoint near = p;
        for (auto& comp : near) comp *= 0.99;
        const double cf_near = green_ball_hyperplane(near);
        std::ostringstream nm;
        nm << "ray" << i;
        VerifyCase cf;
        cf.name = nm.str() + "-closedform";
        cf.expected = 0.0;
        cf.observed = std::abs(cf_near);
        cf.tolerance = 5e-2;
        cf.pass = cf.observed <= cf.tolerance;
        rep.cases[static_cast<std::size_t>(2 * i)] = cf;

        // envelope at distance 0.05
        CPoint x = p;
        for (auto& comp : x) comp *= 0.95;
        const double truth = green_ball_hyperplane(x);
        const auto r = envelope_upper(EnvelopeQuery::lelong_query(B, nu, x, cfg));
        VerifyCase env;
        env.name = nm.str() + "-envelope";
        env.expected = truth;
        env.observed = r.upper;
        env.tolerance = 5e-2;
        env.pass = std::abs(r.upper - truth) <= env.tolerance && r.upper >= truth - 1e-9;
        rep.cases[static_cast<std::size_t>(2 * i + 1)] = env;
    });
    return rep;
}

// --- determinism & monotonicity ---------------------------------------------

inline VerifyReport determinism(std::uint64_t seed) {
    VerifyReport rep;
    rep.suite = "determinism";
    rep.seed = seed;
    const Domain B = Domain::ball(2);
    const Domain P = Domain::polydisc(2);
    const WeightFunction nu = WeightFunction::subspace_nu(hyperplane_z1());
    const OptimizerConfig cfg = make_cfg(6, 6, 400, seed);
    rep.config_hash = suite_hash(rep.suite, cfg);

    // bit-identical reruns
    const CPoint x0{Complex(0.3, 0.1), Complex(0.2)};
    const auto r1 = envelope_upper(EnvelopeQuery::lelong_query(B, nu, x0, cfg));
    const auto r2 = envelope_upper(EnvelopeQuery::lelong_query(B, nu, x0, cfg));
    bool identical = r1.upper == r2.upper && r1.evaluations == r2.evaluations &&
                     r1.witness && r2.witness;
    if (identical) {
        for (int i = 0; i < 2 && identical; ++i)
            for (std::size_t j = 0; j < r1.witness->coords()[i].size(); ++j)
                if (r1.witness->coords()[i][j] != r2.witness->coords()[i][j]) identical = false;
    }
    rep.cases.push_back({"bit-identical-rerun", 1.0, identical ? 1.0 : 0.0, 0.0, identical});

    // monotonicity on 10 seeded cases
    Rng rng(seed ^ 0x300Dull);
    const CPoint origin{Complex(0.0), Complex(0.0)};
    int mono_fail = 0;
    for (int k = 0; k < 10; ++k) {
        CPoint x{rng.disc(0.5), rng.disc(0.5)};
        if (std::max(std::abs(x[0]), std::abs(x[1])) < 0.05) {
            x[0] += 0.2;
        }
        const double w = 1.0 + rng.uniform();
        const auto lo = envelope_upper(EnvelopeQuery::lelong_query(
            P, WeightFunction::finite_support({{origin, 1.0}}), x, cfg));
        const auto hi = envelope_upper(EnvelopeQuery::lelong_query(
            P, WeightFunction::finite_support({{origin, w}}), x, cfg));
        if (!(lo.upper >= hi.upper - 2e-2)) ++mono_fail;
    }
    rep.cases.push_back(
        {"weight-monotonicity-failures", 0.0, static_cast<double>(mono_fail), 0.0, mono_fail == 0});

    // degree escalation with witness injection
    int esc_fail = 0;
    for (const CPoint& x : {CPoint{Complex(0.35), Complex(0.2)},
                            CPoint{Complex(0.2, 0.2), Complex(-0.3)}}) {
        const auto base = envelope_upper(EnvelopeQuery::lelong_query(B, nu, x, make_cfg(4, 6, 400, seed)));
        OptimizerConfig esc_cfg = make_cfg(8, 6, 400, seed);
        esc_cfg.injected_witness = base.witness;
        const auto esc = envelope_upper(EnvelopeQuery::lelong_query(B, nu, x, esc_cfg));
        if (!(esc.upper <= base.upper + 1e-9)) ++esc_fail;
    }
    rep.cases.push_back(
        {"degree-escalation-failures", 0.0, static_cast<double>(esc_fail), 0.0, esc_fail == 0});
    return rep;
}

// --- acceptance-only runners -------------------------------------------------

// Lelong numbers of the computed Green function (criterion: nu_{G_A} = nu_A).
inline VerifyReport lelong_numbers(std::uint64_t seed) {
    VerifyReport rep;
    rep.suite = "lelong-numbers";
    rep.seed = seed;
    const Domain B = Domain::ball(2);
    const WeightFunction nu = WeightFunction::subspace_nu(hyperplane_z1());
    const OptimizerConfig light = make_cfg(4, 4, 200, seed);
    rep.config_hash = suite_hash(rep.suite, light);
    const auto GA = envelope_ga(B, nu, light);
    const std::vector<double> radii{1e-2, 1e-3, 1e-4};

    const std::vector<CPoint> on_pts{{Complex(0.0), Complex(0.0)},
                                     {Complex(0.0), Complex(0.2)},
                                     {Complex(0.0), Complex(0.0, -0.3)},
                                     {Complex(0.0), Complex(0.35, 0.2)},
                                     {Complex(0.0), Complex(-0.5)}};
    const std::vector<CPoint> off_pts{{Complex(0.3), Complex(0.1)},
                                      {Complex(0.4, 0.1), Complex(-0.2)},
                                      {Complex(-0.5), Complex(0.25)},
                                      {Complex(0.0, 0.25), Complex(0.3)},
                                      {Complex(0.6), Complex(0.0)}};

    rep.cases.resize(on_pts.size() + off_pts.size() + 2);
    parallel_for(static_cast<int>(on_pts.size() + off_pts.size()), [&](int i) {
        const bool on = i < static_cast<int>(on_pts.size());
        const CPoint& p = on ? on_pts[static_cast<std::size_t>(i)]
                             : off_pts[static_cast<std::size_t>(i) - on_pts.size()];
        const double slope = lelong_estimate(GA, p, radii, 64);
        VerifyCase c;
        c.name = (on ? "on-A-" : "off-A-") + std::to_string(on ? i : i - static_cast<int>(on_pts.size()));
        c.expected = on ? 1.0 : 0.0;
        c.observed = slope;
        c.tolerance = 5e-2;
        c.pass = std::abs(slope - c.expected) <= c.tolerance;
        rep.cases[static_cast<std::size_t>(i)] = c;
    });

    MultiPoly z1sq(2), z1z2(2);
    z1sq.add_term({2, 0}, 1.0);
    z1z2.add_term({1, 1}, 1.0);
    const ComplexSubspace A({z1sq, z1z2});
    const int nu0 = multiplicity_nu(A, CPoint{Complex(0.0), Complex(0.0)});
    const int nu1 = multiplicity_nu(A, CPoint{Complex(0.0), Complex(0.4)});
    rep.cases[on_pts.size() + off_pts.size()] =
        {"nu-origin", 2.0, static_cast<double>(nu0), 0.0, nu0 == 2};
    rep.cases[on_pts.size() + off_pts.size() + 1] =
        {"nu-smooth", 1.0, static_cast<double>(nu1), 0.0, nu1 == 1};
    return rep;
}

// Prop 3.2 quotient bound of the computed Green function near A.
inline VerifyReport prop32_quotient(std::uint64_t seed) {
    VerifyReport rep;
    rep.suite = "prop32-quotient";
    rep.seed = seed;
    const Domain B = Domain::ball(2);
    const WeightFunction nu = WeightFunction::subspace_nu(hyperplane_z1());
    const OptimizerConfig cfg = make_cfg(6, 8, 400, seed);
    rep.config_hash = suite_hash(rep.suite, cfg);
    const auto GA = envelope_ga(B, nu, cfg);

    MultiPoly z1(2);
    z1.add_term({1, 0}, 1.0);
    ComplexBox box;
    box.rects.push_back({1e-4, 0.1, 0.0, 0.0});
    box.rects.push_back({-0.7, 0.7, 0.0, 0.0});
    const double bound = divisor_quotient_bound(GA, z1, box, 5);
    const double limit = -0.5 * std::log(1.0 - 0.49) + 2e-2;

    VerifyCase fin{"bound-finite", 1.0, std::isfinite(bound) ? 1.0 : 0.0, 0.0, std::isfinite(bound)};
    VerifyCase bnd{"bound-value", -0.5 * std::log(1.0 - 0.49), bound, 2e-2, bound <= limit};
    rep.cases = {fin, bnd};
    return rep;
}

}  // namespace suites

// The ten named CLI suites.
inline std::optional<VerifyReport> run_suite(const std::string& name, std::uint64_t seed) {
    if (name == "ball-point") return suites::ball_point(seed);
    if (name == "ball-hyperplane") return suites::ball_hyperplane(seed);
    if (name == "polydisc") return suites::polydisc(seed);
    if (name == "product") return suites::product(seed);
    if (name == "counterexample-weights") return suites::counterexample_weights(seed);
    if (name == "geodesic-curve") return suites::geodesic_curve(seed);
    if (name == "riesz-vs-lelong") return suites::riesz_vs_lelong(seed);
    if (name == "dirichlet") return suites::dirichlet(seed);
    if (name == "boundary") return suites::boundary(seed);
    if (name == "determinism") return suites::determinism(seed);
    return std::nullopt;
}

}  // namespace plurigreen

#include "doctest.h"
#include "plurigreen/envelope.hpp"

using namespace plurigreen;

namespace {

MultiPoly mono(int nvars, std::vector<int> idx, Complex c = 1.0) {
    MultiPoly p(nvars);
    p.add_term(idx, c);
    return p;
}

OptimizerConfig quick(int degree = 6, int restarts = 8, int iters = 400, std::uint64_t seed = 7) {
    OptimizerConfig cfg;
    cfg.degree = degree;
    cfg.restarts = restarts;
    cfg.iterations = iters;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

TEST_CASE("ball hyperplane envelope brackets the closed form") {
    const Domain B = Domain::ball(2);
    const ComplexSubspace A({mono(2, {1, 0})});
    const WeightFunction nu = WeightFunction::subspace_nu(A);
    // effective pole modulus |x1|/sqrt(1-|x'|^2) up to ~0.45 at degree 6;
    // the deeper (0.5, 0.6) slice (modulus 0.625) needs a higher degree
    const std::vector<std::pair<CPoint, int>> pts{
        {{Complex(0.5), Complex(0.6)}, 12},
        {{Complex(0.3, 0.1), Complex(-0.2, 0.4)}, 6},
        {{Complex(-0.25), Complex(0.1, 0.5)}, 6}};
    for (const auto& [x, deg] : pts) {
        const auto r = envelope_upper(EnvelopeQuery::lelong_query(B, nu, x, quick(deg)));
        const double truth = green_ball_hyperplane(x);
        CHECK(r.upper >= truth - 1e-9);
        CHECK(r.upper - truth <= 2e-2);
        REQUIRE(r.witness);
        CHECK(disc_contained(B, *r.witness, quick().margin));
    }
}

TEST_CASE("ball point-pole envelope brackets log|T_a(x)|") {
    const Domain B = Domain::ball(2);
    const CPoint a{Complex(0.2, -0.1), Complex(0.25)};
    const WeightFunction alpha = WeightFunction::finite_support({{a, 1.0}});
    for (const CPoint& x : {CPoint{Complex(-0.2), Complex(0.0)},
                            CPoint{Complex(0.1, 0.3), Complex(-0.15)}}) {
        const auto r = envelope_upper(EnvelopeQuery::lelong_query(B, alpha, x, quick(8)));
        const double truth = green_ball_point(a, x);
        CHECK(r.upper >= truth - 1e-9);
        CHECK(r.upper - truth <= 2e-2);
    }
}

TEST_CASE("bidisc origin pole matches the product formula") {
    const Domain P = Domain::polydisc(2);
    const WeightFunction alpha =
        WeightFunction::finite_support({{CPoint{Complex(0.0), Complex(0.0)}, 1.0}});
    for (const CPoint& x : {CPoint{Complex(0.25), Complex(0.5)},
                            CPoint{Complex(0.3, 0.2), Complex(-0.4)}}) {
        const auto r = envelope_upper(EnvelopeQuery::lelong_query(P, alpha, x, quick(8)));
        const double truth = std::max(std::log(std::abs(x[0])), std::log(std::abs(x[1])));
        CHECK(std::abs(r.upper - truth) <= 2e-2);
    }
}

TEST_CASE("zero weight gives the constant witness at value 0") {
    const Domain B = Domain::ball(2);
    const CPoint x{Complex(0.3), Complex(0.1)};
    const auto r = envelope_upper(EnvelopeQuery::lelong_query(B, WeightFunction::zero(), x, quick(4, 2, 50)));
    CHECK(r.upper == 0.0);
    REQUIRE(r.witness);
    CHECK(r.witness->is_constant());
}

TEST_CASE("queries at pole points return -infinity without search") {
    const Domain B = Domain::ball(2);
    const CPoint a{Complex(0.2), Complex(0.0)};
    const auto r = envelope_upper(EnvelopeQuery::lelong_query(
        B, WeightFunction::finite_support({{a, 1.0}}), a, quick()));
    CHECK(r.upper == kNegInf);
    CHECK(r.evaluations == 0);
}

TEST_CASE("determinism: identical queries give bit-identical results") {
    const Domain B = Domain::ball(2);
    const ComplexSubspace A({mono(2, {1, 0})});
    const WeightFunction nu = WeightFunction::subspace_nu(A);
    const CPoint x{Complex(0.4, 0.1), Complex(0.2)};
    const auto r1 = envelope_upper(EnvelopeQuery::lelong_query(B, nu, x, quick(6, 6)));
    const auto r2 = envelope_upper(EnvelopeQuery::lelong_query(B, nu, x, quick(6, 6)));
    CHECK(r1.upper == r2.upper);  // exact bit equality
    CHECK(r1.evaluations == r2.evaluations);
    REQUIRE(r1.witness);
    REQUIRE(r2.witness);
    for (int i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < r1.witness->coords()[i].size(); ++j)
            CHECK(r1.witness->coords()[i][j] == r2.witness->coords()[i][j]);
}

TEST_CASE("monotonicity in the weight") {
    const Domain P = Domain::polydisc(2);
    const CPoint pole{Complex(0.0), Complex(0.0)};
    const CPoint x{Complex(0.3), Complex(0.35)};
    const auto lo = envelope_upper(EnvelopeQuery::lelong_query(
        P, WeightFunction::finite_support({{pole, 1.0}}), x, quick(6, 6)));
    const auto hi = envelope_upper(EnvelopeQuery::lelong_query(
        P, WeightFunction::finite_support({{pole, 2.0}}), x, quick(6, 6)));
    CHECK(lo.upper >= hi.upper - 2e-2);
}

TEST_CASE("degree escalation with witness injection never raises the bound") {
    const Domain B = Domain::ball(2);
    const ComplexSubspace A({mono(2, {1, 0})});
    const WeightFunction nu = WeightFunction::subspace_nu(A);
    const CPoint x{Complex(0.35), Complex(0.2)};
    const auto base = envelope_upper(EnvelopeQuery::lelong_query(B, nu, x, quick(4, 6)));
    REQUIRE(base.witness);
    OptimizerConfig cfg = quick(8, 6);
    cfg.injected_witness = *base.witness;
    const auto esc = envelope_upper(EnvelopeQuery::lelong_query(B, nu, x, cfg));
    CHECK(esc.upper <= base.upper + 1e-9);
}

TEST_CASE("riesz envelope matches the hyperplane closed form") {
    const Domain B = Domain::ball(2);
    const ComplexSubspace A({mono(2, {1, 0})});
    const CPoint x{Complex(0.4), Complex(0.3)};
    const auto r = envelope_upper(EnvelopeQuery::riesz_query(B, A, x, quick(6, 8)));
    const double truth = green_ball_hyperplane(x);
    CHECK(r.upper >= truth - 1e-9);
    CHECK(r.upper - truth <= 2e-2);
}

TEST_CASE("k_alpha_upper closed forms") {
    const Domain B = Domain::ball(2);
    const CPoint a{Complex(0.3), Complex(-0.2, 0.1)};
    const CPoint x{Complex(-0.1), Complex(0.4)};
    CHECK(k_alpha_upper(B, {{a, 1.0}}, x) ==
          doctest::Approx(green_ball_point(a, x)).epsilon(1e-12));

    // two-point support: the finite infimum
    const CPoint b{Complex(0.0), Complex(0.45)};
    const double two = k_alpha_upper(B, {{a, 1.0}, {b, 1.0}}, x);
    CHECK(two == doctest::Approx(std::min(green_ball_point(a, x), green_ball_point(b, x))));

    // Example 3.5 curve at the origin: min over the parameter grid = log 0.5
    std::vector<WeightedSample> curve;
    for (int i = 0; i < 128; ++i) {
        for (double s : {-0.8, -0.4, 0.0, 0.4, 0.8}) {
            const Complex w(2.0 * kPi * i / 128.0, s);
            const Complex z = 0.5 * std::cos(w), v = 0.5 * std::sin(w);
            if (std::norm(z) + std::norm(v) < 0.95) curve.push_back({{z, v}, 1.0});
        }
    }
    const CPoint origin{Complex(0.0), Complex(0.0)};
    CHECK(k_alpha_upper(B, curve, origin) == doctest::Approx(std::log(0.5)).epsilon(1e-6));
    CHECK_THROWS_AS((void)k_alpha_upper(B, {}, origin), std::domain_error);
}

TEST_CASE("envelope upper never beats k_alpha") {
    const Domain B = Domain::ball(2);
    const CPoint a{Complex(0.25), Complex(0.1)};
    const CPoint x{Complex(-0.2, 0.1), Complex(0.3)};
    const auto r = envelope_upper(EnvelopeQuery::lelong_query(
        B, WeightFunction::finite_support({{a, 1.0}}), x, quick(8, 8)));
    const double ka = k_alpha_upper(B, {{a, 1.0}}, x);
    CHECK(r.upper <= ka + 2e-2);
}

TEST_CASE("kobayashi_log on product domains") {
    const Domain P = Domain::product({Domain::ball(1), Domain::ball(1)});
    const CPoint x{Complex(0.3), Complex(0.1)};
    const CPoint a{Complex(0.0), Complex(0.0)};
    const double expect = std::max(std::log(0.3), std::log(0.1));
    CHECK(kobayashi_log(P, x, a) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(kobayashi_log(Domain::polydisc(2), x, a) == doctest::Approx(expect).epsilon(1e-12));
}

#include "doctest.h"
#include "plurigreen/functionals.hpp"

using namespace plurigreen;

namespace {

AnalyticDisc mobius_disc_1d(double zero, int degree = 16, double scale = 1.0) {
    UniPoly c(static_cast<std::size_t>(degree) + 1);
    c[0] = scale * zero;
    double pw = 1.0;
    for (int k = 1; k <= degree; ++k) {
        c[static_cast<std::size_t>(k)] = scale * pw * (zero * zero - 1.0);
        pw *= zero;
    }
    return AnalyticDisc({c}, 1.02);
}

MultiPoly mono(int nvars, std::vector<int> idx, Complex c = 1.0) {
    MultiPoly p(nvars);
    p.add_term(idx, c);
    return p;
}

}  // namespace

TEST_CASE("poisson functional basics") {
    const Domain disc = Domain::ball(1);
    const AnalyticDisc id({{Complex(0.0), Complex(1.0 / 1.06)}}, 1.05);

    auto constf = [](const CPoint&) { return 3.25; };
    CHECK(poisson(constf, id, disc).value == doctest::Approx(3.25));

    auto norm2 = [](const CPoint& z) { return euclidean_norm_sq(z); };
    // |f| = 1/1.06 on the unit circle
    CHECK(poisson(norm2, id, disc).value == doctest::Approx(1.0 / (1.06 * 1.06)).epsilon(1e-12));

    // harmonic integrand: mean value at the center, oracle = K=4096 quadrature
    const AnalyticDisc f({{Complex(0.3), Complex(0.2)}, {Complex(0.0)}}, 1.05);
    auto re1 = [](const CPoint& z) { return z[0].real(); };
    const double got = poisson(re1, f, Domain::ball(2)).value;
    double oracle = 0.0;
    for (int k = 0; k < 4096; ++k) {
        const double th = 2.0 * kPi * k / 4096.0;
        oracle += (Complex(0.3) + Complex(0.2) * std::polar(1.0, th)).real();
    }
    oracle /= 4096.0;
    CHECK(got == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(got == doctest::Approx(oracle).epsilon(1e-12));

    // quadrature convergence gate: K and 2K differ by < 1e-6 on smooth data
    auto smooth = [](const CPoint& z) { return std::exp(z[0].real()) + std::cos(z[1].imag()); };
    const double v1 = poisson(smooth, f, Domain::ball(2), 512).value;
    const double v2 = poisson(smooth, f, Domain::ball(2), 1024).value;
    CHECK(std::abs(v1 - v2) < 1e-6);

    AnalyticDisc exits({{Complex(0.0), Complex(2.0)}}, 1.05);
    CHECK_THROWS_AS((void)poisson(constf, exits, disc), std::domain_error);
}

TEST_CASE("poisson clipping flag") {
    const Domain disc = Domain::ball(1);
    const AnalyticDisc f({{Complex(0.1), Complex(0.3)}}, 1.05);
    auto sing = [](const CPoint& z) {
        return z[0].real() > 0.0 ? kNegInf : 0.0;
    };
    const FunctionalValue v = poisson(sing, f, disc);
    CHECK_FALSE(v.convergent);
    CHECK(v.value >= kPoissonClip);
}

TEST_CASE("lelong functional: one-pole disc Green oracle") {
    // Mobius-type disc with f(0) = 0.3 and a simple zero at 0.3:
    // H_L = log 0.3 (one-pole disc Green value)
    const AnalyticDisc f = mobius_disc_1d(0.3);
    const WeightFunction alpha =
        WeightFunction::finite_support({{CPoint{Complex(0.0)}, 1.0}});
    const auto [v, poles] = lelong(alpha, f);
    REQUIRE(poles.size() == 1);
    CHECK(std::abs(poles[0].location - Complex(0.3)) < 1e-9);
    CHECK(v.value == doctest::Approx(std::log(0.3)).epsilon(1e-8));
    CHECK(v.value == doctest::Approx(-1.2039728).epsilon(1e-6));
}

TEST_CASE("lelong functional: bidisc diagonal disc") {
    // f = (M, M) with M(0) = 0.5, zero at 0.5; alpha = chi_{(0,0)}
    const AnalyticDisc m = mobius_disc_1d(0.5);
    AnalyticDisc f({m.coords()[0], m.coords()[0]}, m.overshoot());
    const WeightFunction alpha =
        WeightFunction::finite_support({{CPoint{Complex(0.0), Complex(0.0)}, 1.0}});
    const auto [v, poles] = lelong(alpha, f);
    REQUIRE(poles.size() == 1);
    CHECK(v.value == doctest::Approx(std::log(0.5)).epsilon(1e-8));
}

TEST_CASE("lelong of the zero weight is the empty sum") {
    const AnalyticDisc f = mobius_disc_1d(0.4);
    const auto [v, poles] = lelong(WeightFunction::zero(), f);
    CHECK(v.value == 0.0);
    CHECK(poles.empty());
    CHECK(v.convergent);
}

TEST_CASE("lelong on constant discs") {
    const WeightFunction alpha =
        WeightFunction::finite_support({{CPoint{Complex(0.2), Complex(0.0)}, 1.0}});
    const auto hit = lelong(alpha, AnalyticDisc::constant(CPoint{Complex(0.2), Complex(0.0)}));
    CHECK(hit.first.value == kNegInf);
    CHECK_FALSE(hit.first.convergent);
    const auto miss = lelong(alpha, AnalyticDisc::constant(CPoint{Complex(0.5), Complex(0.0)}));
    CHECK(miss.first.value == 0.0);
}

TEST_CASE("lelong with subspace weights") {
    // A = {z1 = 0} in the bidisc; disc crossing it once
    const AnalyticDisc m = mobius_disc_1d(0.35);
    AnalyticDisc f({m.coords()[0], {Complex(0.2)}}, m.overshoot());
    const ComplexSubspace A({mono(2, {1, 0})});
    const auto [v, poles] = lelong(WeightFunction::subspace_nu(A), f);
    REQUIRE(poles.size() == 1);
    CHECK(v.value == doctest::Approx(std::log(0.35)).epsilon(1e-8));

    // constant disc inside A -> -infinity
    const auto inside =
        lelong(WeightFunction::subspace_nu(A), AnalyticDisc::constant(CPoint{Complex(0.0), Complex(0.3)}));
    CHECK(inside.first.value == kNegInf);
}

TEST_CASE("riesz functional on divisors") {
    // same Mobius disc, A = {z}: H_R = log 0.3 equals the Lelong value
    const AnalyticDisc f = mobius_disc_1d(0.3);
    const ComplexSubspace A({mono(1, {1})});
    const auto [v, poles] = riesz_divisor(A, f);
    CHECK(v.value == doctest::Approx(std::log(0.3)).epsilon(1e-8));

    // image avoiding the divisor -> 0
    AnalyticDisc away({{Complex(0.5), Complex(0.1)}}, 1.05);
    CHECK(riesz_divisor(A, away).first.value == 0.0);

    // A = {z1^2} against a disc crossing once: order 2
    const AnalyticDisc m5 = mobius_disc_1d(0.5);
    AnalyticDisc g({m5.coords()[0], {Complex(0.3)}}, m5.overshoot());
    const ComplexSubspace Asq({mono(2, {2, 0})});
    const auto rz = riesz_divisor(Asq, g);
    CHECK(rz.first.value == doctest::Approx(2.0 * std::log(0.5)).epsilon(1e-7));
    // equal to H_L^{nu_A} here (smooth crossing)
    const auto lel = lelong(WeightFunction::subspace_nu(Asq), g);
    CHECK(rz.first.value == doctest::Approx(lel.first.value).epsilon(1e-7));

    // f inside the divisor -> f*[A] = 0 convention
    AnalyticDisc inA({{Complex(0.0)}, {Complex(0.0), Complex(0.5)}}, 1.05);
    CHECK(riesz_divisor(Asq, inA).first.value == 0.0);
}

TEST_CASE("riesz <= lelong for random discs against divisors") {
    const ComplexSubspace A1({mono(2, {1, 0})});
    const ComplexSubspace A2({mono(2, {2, 0})});
    const WeightFunction nu1 = WeightFunction::subspace_nu(A1);
    const WeightFunction nu2 = WeightFunction::subspace_nu(A2);
    Rng rng(555);
    int tested = 0;
    while (tested < 300) {
        std::vector<UniPoly> coords(2);
        for (auto& c : coords) {
            c.resize(5);
            for (auto& a : c) a = rng.disc(0.35);
        }
        AnalyticDisc f(std::move(coords), 1.02);
        ++tested;
        for (const auto* pair : {&A1, &A2}) {
            const auto r = riesz_divisor(*pair, f);
            const auto l = lelong(pair == &A1 ? nu1 : nu2, f);
            if (std::isfinite(r.first.value) && std::isfinite(l.first.value))
                CHECK(r.first.value <= l.first.value + 1e-6);
        }
    }
}

TEST_CASE("disc potential") {
    const PoleData single{{Complex(0.3), 1.0}};
    CHECK(disc_potential(single, Complex(0.0)) == doctest::Approx(std::log(0.3)).epsilon(1e-12));
    CHECK(disc_potential(single, Complex(0.3)) == kNegInf);

    const PoleData two{{Complex(0.3), 1.0}, {Complex(0.5), 2.0}};
    CHECK(disc_potential(two, Complex(0.0)) ==
          doctest::Approx(std::log(0.3) + 2.0 * std::log(0.5)).epsilon(1e-12));
    CHECK(disc_potential(two, Complex(0.0)) == doctest::Approx(-2.590290).epsilon(1e-5));
}

TEST_CASE("disc potential at 0 equals the lelong value") {
    Rng rng(77);
    const WeightFunction alpha =
        WeightFunction::finite_support({{CPoint{Complex(0.0), Complex(0.0)}, 1.5}});
    for (int k = 0; k < 40; ++k) {
        const AnalyticDisc m = mobius_disc_1d(0.2 + 0.5 * rng.uniform());
        AnalyticDisc f({m.coords()[0], m.coords()[0]}, m.overshoot());
        const auto [v, poles] = lelong(alpha, f);
        if (!std::isfinite(v.value)) continue;
        CHECK(disc_potential(poles, Complex(0.0)) == doctest::Approx(v.value).epsilon(1e-10));
    }
}

TEST_CASE("lelong monotonicity in the weight") {
    // alpha <= alpha' pointwise => H^{alpha'} <= H^{alpha} per disc
    const AnalyticDisc m = mobius_disc_1d(0.4);
    AnalyticDisc f({m.coords()[0], m.coords()[0]}, m.overshoot());
    const CPoint origin{Complex(0.0), Complex(0.0)};
    const auto lo = lelong(WeightFunction::finite_support({{origin, 1.0}}), f);
    const auto hi = lelong(WeightFunction::finite_support({{origin, 2.0}}), f);
    CHECK(hi.first.value <= lo.first.value + 1e-12);
}

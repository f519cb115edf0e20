#include "doctest.h"
#include "plurigreen/polynomial.hpp"

using namespace plurigreen;

namespace {

UniPoly from_roots(const std::vector<Complex>& roots) {
    UniPoly p{Complex(1.0)};
    for (const Complex r : roots) p = uni_mul(p, UniPoly{-r, Complex(1.0)});
    return p;
}

int total_order(const std::vector<RootCluster>& rc) {
    int t = 0;
    for (const auto& c : rc) t += c.order;
    return t;
}

}  // namespace

TEST_CASE("univariate basics") {
    const UniPoly p{Complex(1.0), Complex(-2.0), Complex(1.0)};  // (1-z)^2
    CHECK(std::abs(uni_eval(p, Complex(1.0))) < 1e-15);
    CHECK(uni_eval(p, Complex(0.0)) == Complex(1.0));
    const UniPoly d = uni_derivative(p);
    CHECK(d.size() == 2);
    CHECK(d[0] == Complex(-2.0));
    CHECK(d[1] == Complex(2.0));

    // p(0.5 + w) = (0.5 - w)^2
    const UniPoly s = uni_shift(p, Complex(0.5));
    CHECK(std::abs(s[0] - Complex(0.25)) < 1e-15);
    CHECK(std::abs(s[1] - Complex(-1.0)) < 1e-15);
    CHECK(std::abs(s[2] - Complex(1.0)) < 1e-15);
}

TEST_CASE("uni_compose matches pointwise composition") {
    const UniPoly p{Complex(0.3), Complex(1.0), Complex(0.0), Complex(-0.5)};
    const UniPoly q{Complex(0.0), Complex(-0.4), Complex(1.0)};
    const UniPoly c = uni_compose(p, q);
    for (int k = 0; k < 16; ++k) {
        const Complex z = std::polar(0.9, 2.0 * kPi * k / 16.0);
        CHECK(std::abs(uni_eval(c, z) - uni_eval(p, uni_eval(q, z))) < 1e-12);
    }
}

TEST_CASE("roots of simple products") {
    const std::vector<Complex> roots{Complex(0.3), Complex(0.0, 0.7), Complex(-2.0, 0.1)};
    const auto found = polynomial_roots(from_roots(roots));
    REQUIRE(found.size() == 3);
    for (const Complex r : roots) {
        bool hit = false;
        for (const auto& c : found)
            if (std::abs(c.location - r) < 1e-10 && c.order == 1) hit = true;
        CHECK(hit);
    }
}

TEST_CASE("roots at the origin are exact") {
    // z^2 (z - 0.5)
    const UniPoly p = uni_mul(UniPoly{Complex(0.0), Complex(0.0), Complex(1.0)},
                              UniPoly{Complex(-0.5), Complex(1.0)});
    const auto found = polynomial_roots(p);
    REQUIRE(found.size() == 2);
    CHECK(found[0].location == Complex(0.0));
    CHECK(found[0].order == 2);
    CHECK(std::abs(found[1].location - Complex(0.5)) < 1e-12);
}

TEST_CASE("interior multiple root keeps total order and log-sum") {
    // (z - 0.4)^3 (z + 0.8): a perturbed triple root may split into a tight
    // cluster of simple roots; the count and the functional-relevant sum of
    // log-moduli must stay accurate either way.
    const UniPoly p = from_roots({Complex(0.4), Complex(0.4), Complex(0.4), Complex(-0.8)});
    const auto found = polynomial_roots(p);
    CHECK(total_order(found) == 4);
    double logsum = 0.0;
    for (const auto& c : found)
        if (std::abs(c.location) < 1.0) logsum += c.order * std::log(std::abs(c.location));
    CHECK(logsum == doctest::Approx(3.0 * std::log(0.4) + std::log(0.8)).epsilon(1e-6));
}

TEST_CASE("zero polynomial raises the degenerate signal") {
    CHECK_THROWS_AS((void)polynomial_roots(UniPoly{Complex(0.0), Complex(0.0)}), DegenerateSignal);
}

TEST_CASE("random polynomials: residuals and counts over 200 draws") {
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const int deg = 1 + static_cast<int>(rng.uniform() * 10);
        UniPoly p(static_cast<std::size_t>(deg) + 1);
        for (auto& c : p) c = rng.disc(2.0);
        if (std::abs(p.back()) < 0.1) p.back() = Complex(0.5);
        const auto found = polynomial_roots(p);
        CHECK(total_order(found) == deg);
        for (const auto& c : found) {
            double bound = 0.0, zp = 1.0;
            for (const auto& a : p) {
                bound += std::abs(a) * zp;
                zp *= std::abs(c.location);
            }
            CHECK(std::abs(uni_eval(p, c.location)) <= 1e-6 * bound + 1e-200);
        }
    }
}

TEST_CASE("multivariate evaluation and arithmetic") {
    // g = z1^2 + 2 z1 z2 - 0.5
    MultiPoly g(2);
    g.add_term({2, 0}, 1.0);
    g.add_term({1, 1}, 2.0);
    g.add_term({0, 0}, -0.5);
    const CPoint z{Complex(0.3, 0.1), Complex(-0.2)};
    const Complex expect = z[0] * z[0] + 2.0 * z[0] * z[1] - 0.5;
    CHECK(std::abs(g.eval(z) - expect) < 1e-15);
    CHECK(g.total_degree() == 2);

    const MultiPoly prod = g * MultiPoly::variable(2, 1);
    CHECK(std::abs(prod.eval(z) - expect * z[1]) < 1e-15);
}

TEST_CASE("taylor shift recenters correctly") {
    // g = z1 z2 shifted to (0, c): g((0,c) + w) = c w1 + w1 w2
    MultiPoly g(2);
    g.add_term({1, 1}, 1.0);
    const Complex c(0.4, -0.1);
    const MultiPoly s = g.taylor_shift(CPoint{Complex(0.0), c});
    CHECK(std::abs(s.eval(CPoint{Complex(1.0), Complex(0.0)}) - c) < 1e-15);
    Rng rng(5);
    for (int k = 0; k < 20; ++k) {
        const CPoint w{rng.disc(1.0), rng.disc(1.0)};
        const CPoint pw{w[0], c + w[1]};
        CHECK(std::abs(s.eval(w) - g.eval(pw)) < 1e-13);
    }
}

TEST_CASE("compose_univariate substitutes coordinate polynomials") {
    // g = z1^2 - z2 on f(t) = (t, t^2) vanishes identically
    MultiPoly g(2);
    g.add_term({2, 0}, 1.0);
    g.add_term({0, 1}, -1.0);
    const std::vector<UniPoly> f{{Complex(0.0), Complex(1.0)},
                                 {Complex(0.0), Complex(0.0), Complex(1.0)}};
    const UniPoly comp = g.compose_univariate(f);
    CHECK(uni_max_mag(comp) < 1e-15);

    // g2 = z1 z2 + 1: composition t^3 + 1
    MultiPoly g2(2);
    g2.add_term({1, 1}, 1.0);
    g2.add_term({0, 0}, 1.0);
    const UniPoly comp2 = g2.compose_univariate(f);
    for (int k = 0; k < 8; ++k) {
        const Complex t = std::polar(0.8, 2.0 * kPi * k / 8.0);
        CHECK(std::abs(uni_eval(comp2, t) - (t * t * t + 1.0)) < 1e-13);
    }
}

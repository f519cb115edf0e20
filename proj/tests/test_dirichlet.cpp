#include "doctest.h"
#include "plurigreen/dirichlet.hpp"

using namespace plurigreen;

namespace {

OptimizerConfig quick(int restarts = 8, int iters = 300) {
    OptimizerConfig cfg;
    cfg.restarts = restarts;
    cfg.iterations = iters;
    cfg.seed = 7;
    return cfg;
}

// Poisson-integral oracle on the unit circle (dense quadrature).
double poisson_integral(const std::function<double(double)>& h, Complex z, int K = 20000) {
    double acc = 0.0;
    for (int k = 0; k < K; ++k) {
        const double th = 2.0 * kPi * k / K;
        const double P = (1.0 - std::norm(z)) / std::norm(std::polar(1.0, th) - z);
        acc += P * h(th);
    }
    return acc / K;
}

}  // namespace

TEST_CASE("harmonic extension on the unit disc") {
    const Domain D = Domain::ball(1);
    auto h = [](const CPoint& z) { return z[0].real(); };  // cos theta on T
    auto phi = harmonic_extension(D, h);
    // harmonic extension of cos(theta) is Re z
    for (const Complex z : {Complex(0.3), Complex(-0.2, 0.5), Complex(0.0)})
        CHECK(phi(CPoint{z}) == doctest::Approx(z.real()).epsilon(1e-6));

    auto habs = [](const CPoint& z) { return std::abs(z[0].real()); };
    auto phi2 = harmonic_extension(D, habs);
    CHECK(phi2(CPoint{Complex(0.0)}) == doctest::Approx(2.0 / kPi).epsilon(1e-4));
    const double oracle = poisson_integral([](double th) { return std::abs(std::cos(th)); },
                                           Complex(0.3));
    CHECK(phi2(CPoint{Complex(0.3)}) == doctest::Approx(oracle).epsilon(1e-4));
}

TEST_CASE("harmonic extension on an affine disc factor") {
    const Domain D = Domain::affine_ball(CPoint{Complex(0.5, 0.0)}, 0.25);
    auto h = [](const CPoint& z) { return z[0].imag(); };
    auto phi = harmonic_extension(D, h);
    // Im z is harmonic; its own boundary values reproduce it
    CHECK(phi(CPoint{Complex(0.5, 0.1)}) == doctest::Approx(0.1).epsilon(1e-6));
}

TEST_CASE("poisson_dirichlet matches the Poisson-integral oracle") {
    const Domain D = Domain::ball(1);

    auto hcos = [](const CPoint& z) { return z[0].real(); };
    const auto r1 = poisson_dirichlet(D, hcos, CPoint{Complex(0.3)}, quick());
    CHECK(std::abs(r1.upper - 0.3) <= 2e-2);

    auto habs = [](const CPoint& z) { return std::abs(z[0].real()); };
    const auto r2 = poisson_dirichlet(D, habs, CPoint{Complex(0.0)}, quick());
    CHECK(std::abs(r2.upper - 2.0 / kPi) <= 2e-2);

    auto hconst = [](const CPoint&) { return -1.75; };
    const auto r3 = poisson_dirichlet(D, hconst, CPoint{Complex(0.4, 0.2)}, quick(4, 100));
    CHECK(std::abs(r3.upper - (-1.75)) <= 1e-6);
}

TEST_CASE("dirichlet values are deterministic under reruns") {
    const Domain D = Domain::ball(1);
    auto h = [](const CPoint& z) { return std::abs(z[0].real()); };
    const auto a = poisson_dirichlet(D, h, CPoint{Complex(0.25)}, quick(4, 150));
    const auto b = poisson_dirichlet(D, h, CPoint{Complex(0.25)}, quick(4, 150));
    CHECK(a.upper == b.upper);
}

#include "doctest.h"
#include "plurigreen/subspace.hpp"

using namespace plurigreen;

namespace {

MultiPoly mono(int nvars, std::vector<int> idx, Complex c = 1.0) {
    MultiPoly p(nvars);
    p.add_term(idx, c);
    return p;
}

}  // namespace

TEST_CASE("vanishing order") {
    const MultiPoly z1sq = mono(2, {2, 0});
    CHECK(vanishing_order(z1sq, CPoint{Complex(0.0), Complex(0.0)}) == 2);

    const MultiPoly z1z2 = mono(2, {1, 1});
    CHECK(vanishing_order(z1z2, CPoint{Complex(0.0), Complex(0.3)}) == 1);

    MultiPoly unitpoly = mono(2, {1, 0});
    unitpoly.add_term({0, 0}, 2.0);
    CHECK(vanishing_order(unitpoly, CPoint{Complex(0.0), Complex(0.0)}) == 0);

    CHECK_THROWS_AS((void)vanishing_order(MultiPoly(2), CPoint{Complex(0.0), Complex(0.0)}),
                    DegenerateSignal);
}

TEST_CASE("multiplicity_nu on the spec generators") {
    const ComplexSubspace smooth({mono(2, {1, 0})});
    CHECK(multiplicity_nu(smooth, CPoint{Complex(0.0), Complex(0.0)}) == 1);

    const ComplexSubspace A({mono(2, {2, 0}), mono(2, {1, 1})});
    CHECK(multiplicity_nu(A, CPoint{Complex(0.0), Complex(0.0)}) == 2);
    CHECK(multiplicity_nu(A, CPoint{Complex(0.0), Complex(0.4)}) == 1);
    CHECK(multiplicity_nu(A, CPoint{Complex(0.5), Complex(0.4)}) == 0);
}

TEST_CASE("multiplicity_nu invariant under unit factors") {
    // multiplying a generator by (1 + z1) does not change nu at points where
    // the factor does not vanish
    Rng rng(31);
    const MultiPoly g1 = mono(2, {2, 0});
    const MultiPoly g2 = mono(2, {1, 1});
    MultiPoly unit = mono(2, {1, 0});
    unit.add_term({0, 0}, 1.0);
    const ComplexSubspace A({g1, g2});
    const ComplexSubspace B({g1 * unit, g2});
    for (int k = 0; k < 50; ++k) {
        CPoint p{rng.disc(0.6), rng.disc(0.6)};
        if (std::abs(p[0] + 1.0) < 0.1) continue;
        CHECK(multiplicity_nu(A, p) == multiplicity_nu(B, p));
    }
}

TEST_CASE("log_max_generators is a nonpositive minorant") {
    const Domain ball = Domain::ball(2);
    const ComplexSubspace A({mono(2, {1, 0})});
    const std::vector<double> M{generator_sup_bound(A.generators()[0], ball)};
    CHECK(M[0] == doctest::Approx(1.0));

    const CPoint p{Complex(0.5), Complex(0.6)};
    CHECK(log_max_generators(A, p, M) == doctest::Approx(std::log(0.5)).epsilon(1e-12));
    CHECK(log_max_generators(A, CPoint{Complex(0.0), Complex(0.2)}, M) == kNegInf);
    CHECK_THROWS_AS((void)log_max_generators(A, p, std::vector<double>{-1.0}), std::domain_error);

    Rng rng(13);
    for (int k = 0; k < 200; ++k) {
        CPoint z{rng.disc(0.7), rng.disc(0.7)};
        if (euclidean_norm(z) >= 0.99) continue;
        CHECK(log_max_generators(A, z, M) <= 1e-12);
    }
}

TEST_CASE("is_divisor") {
    CHECK(is_divisor(ComplexSubspace({mono(2, {1, 0})})));
    CHECK_FALSE(is_divisor(ComplexSubspace({mono(2, {1, 0}), mono(2, {0, 1})})));
    // z^2 + w^2 - c is principal
    MultiPoly curve = mono(2, {2, 0});
    curve.add_term({0, 2}, 1.0);
    curve.add_term({0, 0}, -0.25);
    CHECK(is_divisor(ComplexSubspace({curve})));
}

TEST_CASE("weight functions") {
    const WeightFunction zero = WeightFunction::zero();
    CHECK(zero.at(CPoint{Complex(0.1), Complex(0.0)}) == 0.0);

    const WeightFunction fin = WeightFunction::finite_support(
        {{CPoint{Complex(0.0), Complex(0.0)}, 2.0}});
    CHECK(fin.at(CPoint{Complex(0.0), Complex(0.0)}) == 2.0);
    CHECK(fin.at(CPoint{Complex(0.3), Complex(0.0)}) == 0.0);
    CHECK_THROWS_AS((void)WeightFunction::finite_support({{CPoint{Complex(0.0)}, -1.0}}),
                    std::domain_error);

    const ComplexSubspace A({mono(2, {2, 0})});
    const WeightFunction nu = WeightFunction::subspace_nu(A);
    CHECK(nu.at(CPoint{Complex(0.0), Complex(0.1)}) == 2.0);
    const WeightFunction chi = WeightFunction::subspace_indicator(A);
    CHECK(chi.at(CPoint{Complex(0.0), Complex(0.1)}) == 1.0);
    CHECK(chi.at(CPoint{Complex(0.4), Complex(0.1)}) == 0.0);
}

TEST_CASE("bounding radii for sup bounds") {
    const Domain prod = Domain::product({Domain::ball(1), Domain::affine_ball(CPoint{Complex(0.5)}, 0.25)});
    const auto r = bounding_radii(prod);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == doctest::Approx(1.0));
    CHECK(r[1] == doctest::Approx(0.75));
}

#pragma once

#include "plurigreen/common.hpp"

namespace plurigreen {

// Closed forms from the model examples.  Implemented directly from the
// formulas, sharing no code with the envelope machinery, so they can act as
// unbiased oracles for it.

// |T_a(x)| via the norm identity
//   |T_a(x)|^2 = 1 - (1-|a|^2)(1-|x|^2) / |1 - <x,a>|^2,
// avoiding the automorphism code path entirely.
inline double ball_mobius_norm(const CPoint& a, const CPoint& x) {
    const double na = euclidean_norm_sq(a);
    const double nx = euclidean_norm_sq(x);
    if (na >= 1.0 || nx >= 1.0)
        throw std::domain_error("ball_mobius_norm: arguments must lie in the open ball");
    const Complex ip = hermitian_inner(x, a);
    const double t2 = 1.0 - (1.0 - na) * (1.0 - nx) / std::norm(1.0 - ip);
    return std::sqrt(std::max(0.0, t2));
}

// G_a(x) = log |T_a(x)| on the unit ball.
inline double green_ball_point(const CPoint& a, const CPoint& x) {
    const double t = ball_mobius_norm(a, x);
    return t == 0.0 ? kNegInf : std::log(t);
}

// G_A for A = {z_1 = 0} in the unit ball: log(|z_1| / sqrt(1 - |z'|^2)).
inline double green_ball_hyperplane(const CPoint& x) {
    if (euclidean_norm(x) >= 1.0)
        throw std::domain_error("green_ball_hyperplane: point must lie in the open ball");
    double rest = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) rest += std::norm(x[i]);
    const double a1 = std::abs(x[0]);
    if (a1 == 0.0) return kNegInf;
    return std::log(a1 / std::sqrt(1.0 - rest));
}

// G_A for A = {z_1 = 0} in the polydisc: log |z_1|.
inline double green_polydisc_hyperplane(const CPoint& x) {
    for (const auto& c : x)
        if (std::abs(c) >= 1.0)
            throw std::domain_error("green_polydisc_hyperplane: point must lie in the open polydisc");
    const double a1 = std::abs(x[0]);
    return a1 == 0.0 ? kNegInf : std::log(a1);
}

// Product formula for characteristic-function weights: max of factor values.
inline double green_product(const std::vector<double>& factor_values) {
    double m = kNegInf;
    for (double v : factor_values) m = std::max(m, v);
    return m;
}

// k_X(x, a) on the ball coincides with G_a(x).
inline double kobayashi_ball(const CPoint& x, const CPoint& a) {
    return green_ball_point(a, x);
}

}  // namespace plurigreen

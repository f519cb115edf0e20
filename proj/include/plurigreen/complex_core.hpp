#pragma once

#include <algorithm>
#include <cmath>

#include "plurigreen/common.hpp"

namespace plurigreen {

// Modulus of the Mobius quotient (z - w) / (1 - conj(w) z).
inline double mobius_modulus(Complex z, Complex w) {
    const Complex num = z - w;
    const Complex den = 1.0 - std::conj(w) * z;
    return std::abs(num) / std::abs(den);
}

// Poincare distance on the unit disc, atanh |(z-w)/(1-conj(w)z)|.
inline double poincare_distance(Complex z, Complex w) {
    if (std::abs(z) >= 1.0 || std::abs(w) >= 1.0)
        throw std::domain_error("poincare_distance: arguments must lie in the open unit disc");
    const double m = mobius_modulus(z, w);
    if (m >= 1.0) return kPosInf;
    return std::atanh(m);
}

// Green function of the unit disc, (1/2pi) log |(z-w)/(1-conj(w)z)|.
inline double disc_green(Complex z, Complex w) {
    if (std::abs(z) >= 1.0 || std::abs(w) >= 1.0)
        throw std::domain_error("disc_green: arguments must lie in the open unit disc");
    const double m = mobius_modulus(z, w);
    if (m == 0.0) return kNegInf;
    return std::log(m) / (2.0 * kPi);
}

// One factor ((a - z)/(1 - conj(a) z))^mu of a finite Blaschke product.
struct MobiusFactor {
    Complex zero;  // |zero| < 1
    int exponent = 1;

    MobiusFactor(Complex a, int mu) : zero(a), exponent(mu) {
        if (std::abs(a) >= 1.0) throw std::domain_error("MobiusFactor: |zero| must be < 1");
        if (mu < 1) throw std::domain_error("MobiusFactor: exponent must be >= 1");
    }
};

struct BlaschkeProduct {
    std::vector<MobiusFactor> factors;
};

// Evaluate on the closed disc; unimodular on the circle, B(0) = prod a_k^mu_k.
inline Complex blaschke_eval(const BlaschkeProduct& b, Complex z) {
    if (std::abs(z) > 1.0 + 1e-12)
        throw std::domain_error("blaschke_eval: |z| must be <= 1");
    Complex out = 1.0;
    for (const auto& f : b.factors) {
        const Complex base = (f.zero - z) / (1.0 - std::conj(f.zero) * z);
        Complex p = 1.0;
        for (int k = 0; k < f.exponent; ++k) p *= base;
        out *= p;
    }
    return out;
}

// Normalization bracket |c|^mu e^beta <= |b| < e^beta with b = B(0), c the
// largest-modulus zero and mu the total exponent.
inline bool blaschke_rescale_check(const BlaschkeProduct& b, double beta) {
    if (b.factors.empty())
        throw std::domain_error("blaschke_rescale_check: empty factor list");
    if (!(beta < 0.0))
        throw std::domain_error("blaschke_rescale_check: beta must be negative");
    double log_b0 = 0.0;
    double cmax = 0.0;
    int mu = 0;
    for (const auto& f : b.factors) {
        log_b0 += f.exponent * std::log(std::abs(f.zero));
        cmax = std::max(cmax, std::abs(f.zero));
        mu += f.exponent;
    }
    const double lhs = mu * std::log(cmax) + beta;
    return lhs <= log_b0 && log_b0 < beta;
}

// Explicit automorphism of the unit ball with T_a(a) = 0, T_a(0) = a:
//   T_a(z) = (a - P_a(z) - s_a Q_a(z)) / (1 - <z,a>),  s_a = sqrt(1-|a|^2).
// T_0 is taken to be z -> -z (the a -> 0 limit; only |T_a| is consumed
// downstream).
inline CPoint ball_automorphism(const CPoint& a, const CPoint& z) {
    if (a.size() != z.size())
        throw std::domain_error("ball_automorphism: dimension mismatch");
    if (euclidean_norm(a) >= 1.0 || euclidean_norm(z) >= 1.0)
        throw std::domain_error("ball_automorphism: arguments must lie in the open ball");
    const std::size_t n = a.size();
    const double a2 = euclidean_norm_sq(a);
    if (a2 == 0.0) {
        CPoint out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = -z[i];
        return out;
    }
    const Complex za = hermitian_inner(z, a);  // <z, a>
    const double sa = std::sqrt(1.0 - a2);
    CPoint out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Complex proj = (za / a2) * a[i];  // P_a(z)
        const Complex orth = z[i] - proj;       // Q_a(z)
        out[i] = (a[i] - proj - sa * orth) / (1.0 - za);
    }
    return out;
}

}  // namespace plurigreen

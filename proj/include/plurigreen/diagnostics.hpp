#pragma once

#include "plurigreen/envelope.hpp"

namespace plurigreen {

using PointFunction = std::function<double(const CPoint&)>;

namespace detail {

// Quasi-uniform directions on the unit sphere of C^n (seeded, fixed).
inline std::vector<CPoint> sphere_directions(int n, int count) {
    Rng rng(0x5EEDD1A6ull);
    std::vector<CPoint> dirs;
    dirs.reserve(static_cast<std::size_t>(count));
    for (int s = 0; s < count; ++s) {
        CPoint d(static_cast<std::size_t>(n));
        double norm = 0.0;
        for (auto& c : d) {
            c = Complex(rng.normal(), rng.normal());
            norm += std::norm(c);
        }
        norm = std::sqrt(std::max(norm, 1e-300));
        for (auto& c : d) c /= norm;
        dirs.push_back(std::move(d));
    }
    return dirs;
}

}  // namespace detail

// Lelong number by regression: least-squares slope of max-over-sphere(u)
// against log r over the supplied radii.
inline double lelong_estimate(const PointFunction& u, const CPoint& p,
                              const std::vector<double>& radii, int sphere_samples = 256) {
    if (radii.size() < 2) throw std::domain_error("lelong_estimate: need at least two radii");
    const auto dirs = detail::sphere_directions(static_cast<int>(p.size()), sphere_samples);
    std::vector<double> xs, ys;
    for (const double r : radii) {
        double m = kNegInf;
        for (const auto& d : dirs) {
            CPoint z = p;
            for (std::size_t i = 0; i < z.size(); ++i) z[i] += r * d[i];
            m = std::max(m, u(z));
        }
        if (!std::isfinite(m))
            throw DegenerateSignal("lelong_estimate: u is -infinity on a whole test sphere");
        xs.push_back(std::log(r));
        ys.push_back(m);
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double k = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

// Circle average minus center value along the complex line p + zeta v:
// nonnegative (up to tolerance) for PSH u; strictly negative certifies a
// violation.  A -infinity center is vacuous (+inf); circles that hit
// -infinity samples are inconclusive and also report +inf.
inline double submean_defect(const PointFunction& u, const CPoint& p, const CPoint& v, double r,
                             int samples = 64) {
    const double up = u(p);
    if (!std::isfinite(up) || up <= kPoissonClip) return kPosInf;
    double acc = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double th = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(samples);
        CPoint z = p;
        const Complex w = std::polar(r, th);
        for (std::size_t i = 0; i < z.size(); ++i) z[i] += w * v[i];
        const double uv = u(z);
        if (!std::isfinite(uv) || uv <= kPoissonClip) return kPosInf;
        acc += uv;
    }
    return acc / static_cast<double>(samples) - up;
}

// Operational maximality proxy: min over sampled directions of
// |circle average - u(p)|; near zero when some complex line through p is
// locally u-harmonic.
inline double maximality_defect(const PointFunction& u, const CPoint& p,
                                const std::vector<CPoint>& directions, double r,
                                int samples = 64) {
    double best = kPosInf;
    for (const auto& v : directions) {
        const double d = submean_defect(u, p, v, r, samples);
        if (std::isfinite(d)) best = std::min(best, std::abs(d));
    }
    return best;
}

// Along a (near-)extremal disc the envelope pulls back to the disc
// potential: max over samples, avoiding pole neighborhoods of radius 0.05,
// of |envelope(f(zeta)) - v_poles(zeta)|.
inline double extremal_harmonicity(const EnvelopeResult& result, const PointFunction& envelope_at,
                                   int samples = 96) {
    if (!result.witness) throw std::domain_error("extremal_harmonicity: result carries no witness");
    const AnalyticDisc& f = *result.witness;
    if (f.is_constant()) return 0.0;
    const int per_ring = std::max(8, samples / 3);
    double defect = 0.0;
    for (const double rr : {0.2, 0.5, 0.8}) {
        for (int k = 0; k < per_ring; ++k) {
            const double th = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(per_ring);
            const Complex z = std::polar(rr, th);
            bool near_pole = false;
            for (const auto& pe : result.poles)
                if (std::abs(z - pe.location) < 0.05) near_pole = true;
            if (near_pole) continue;
            const double lhs = envelope_at(f.evaluate(z));
            const double rhs = disc_potential(result.poles, z);
            if (std::isfinite(lhs) && std::isfinite(rhs))
                defect = std::max(defect, std::abs(lhs - rhs));
        }
    }
    return defect;
}

// Axis-aligned complex box, per-coordinate rectangles in re/im.
struct ComplexBox {
    struct Rect {
        double re_lo, re_hi, im_lo, im_hi;
    };
    std::vector<Rect> rects;
};

// sup over grid points off A of GA - log|h|; finite is the pass condition
// (Prop 3.2 quotient bound).
inline double divisor_quotient_bound(const PointFunction& GA, const MultiPoly& h,
                                     const ComplexBox& region, int grid) {
    const std::size_t n = region.rects.size();
    // per-axis step counts; degenerate axes collapse to one sample
    std::vector<int> steps;
    for (const auto& rc : region.rects) {
        steps.push_back(rc.re_lo == rc.re_hi ? 1 : grid);
        steps.push_back(rc.im_lo == rc.im_hi ? 1 : grid);
    }
    int total = 1;
    for (const int s : steps) total *= s;
    double bound = kNegInf;
    for (int cell = 0; cell < total; ++cell) {
        int rem = cell;
        CPoint z(n);
        for (std::size_t i = 0; i < n; ++i) {
            const int sr = steps[2 * i], si = steps[2 * i + 1];
            const int ir = rem % sr;
            rem /= sr;
            const int ii = rem % si;
            rem /= si;
            const auto& rc = region.rects[i];
            const double fr = sr == 1 ? 0.5 : static_cast<double>(ir) / (sr - 1);
            const double fi = si == 1 ? 0.5 : static_cast<double>(ii) / (si - 1);
            z[i] = Complex(rc.re_lo + fr * (rc.re_hi - rc.re_lo),
                           rc.im_lo + fi * (rc.im_hi - rc.im_lo));
        }
        const double hv = std::abs(h.eval(z));
        if (hv < 1e-30) continue;  // on A
        const double g = GA(z);
        if (std::isfinite(g)) bound = std::max(bound, g - std::log(hv));
    }
    return bound;
}

// G_A along the inward ray toward the boundary point p, sampled at the
// given approach distances.
inline std::vector<double> boundary_limit_scan(const PointFunction& GA, const CPoint& p,
                                               const std::vector<double>& approach) {
    std::vector<double> out;
    out.reserve(approach.size());
    for (const double s : approach) {
        CPoint z = p;
        for (auto& c : z) c *= (1.0 - s);
        out.push_back(GA(z));
    }
    return out;
}

// Number of intersections of the curve z^2 + w^2 = c with the linear
// geodesic zeta -> zeta v inside the ball: 0 or 2, never 1 (the roots come
// in +- pairs of equal modulus).
inline int geodesic_intersection_count(Complex c, const CPoint& v) {
    if (v.size() != 2) throw std::domain_error("geodesic_intersection_count: direction must be in C^2");
    const Complex w = v[0] * v[0] + v[1] * v[1];
    if (std::abs(w) < 1e-12) return 0;  // isotropic direction
    const Complex root = std::sqrt(c / w);
    return std::abs(root) < 1.0 ? 2 : 0;
}

}  // namespace plurigreen

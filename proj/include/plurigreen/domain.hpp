#pragma once

#include "plurigreen/disc.hpp"

namespace plurigreen {

// Bounded convex model domains.  Convexity is what makes boundary-circle
// sampling a containment certificate: gauge o f is subharmonic, so its
// maximum over |zeta| = R bounds the whole closed R-disc.
class Domain {
  public:
    enum class Kind { Ball, Polydisc, Product, AffineBall };

    static Domain ball(int n) { return Domain(Kind::Ball, n); }
    static Domain polydisc(int n) { return Domain(Kind::Polydisc, n); }

    static Domain affine_ball(CPoint center, double radius) {
        Domain d(Kind::AffineBall, static_cast<int>(center.size()));
        if (!(radius > 0.0)) throw std::domain_error("Domain: radius must be positive");
        d.center_ = std::move(center);
        d.radius_ = radius;
        return d;
    }

    static Domain product(std::vector<Domain> factors) {
        if (factors.empty()) throw std::domain_error("Domain: empty product");
        int n = 0;
        for (const auto& f : factors) n += f.dimension();
        Domain d(Kind::Product, n);
        d.factors_ = std::move(factors);
        return d;
    }

    Kind kind() const { return kind_; }
    int dimension() const { return n_; }
    const std::vector<Domain>& factors() const { return factors_; }
    const CPoint& affine_center() const { return center_; }
    double affine_radius() const { return radius_; }

    // Minkowski gauge: < 1 on the interior, = 1 on the boundary.
    double gauge(const CPoint& z) const {
        if (static_cast<int>(z.size()) != n_)
            throw std::domain_error("Domain::gauge: dimension mismatch");
        switch (kind_) {
            case Kind::Ball:
                return euclidean_norm(z);
            case Kind::Polydisc: {
                double m = 0.0;
                for (const auto& c : z) m = std::max(m, std::abs(c));
                return m;
            }
            case Kind::AffineBall: {
                double s = 0.0;
                for (std::size_t i = 0; i < z.size(); ++i) s += std::norm(z[i] - center_[i]);
                return std::sqrt(s) / radius_;
            }
            case Kind::Product: {
                double m = 0.0;
                std::size_t off = 0;
                for (const auto& f : factors_) {
                    CPoint slice(z.begin() + static_cast<std::ptrdiff_t>(off),
                                 z.begin() + static_cast<std::ptrdiff_t>(off + f.dimension()));
                    m = std::max(m, f.gauge(slice));
                    off += static_cast<std::size_t>(f.dimension());
                }
                return m;
            }
        }
        return kPosInf;
    }

    bool contains(const CPoint& z, double margin = 0.0) const {
        return gauge(z) < 1.0 - margin;
    }

    // Gauge-centering map: the interior point all rays emanate from.
    CPoint interior_center() const {
        if (kind_ == Kind::AffineBall) return center_;
        if (kind_ == Kind::Product) {
            CPoint out;
            for (const auto& f : factors_) {
                CPoint c = f.interior_center();
                out.insert(out.end(), c.begin(), c.end());
            }
            return out;
        }
        return CPoint(static_cast<std::size_t>(n_), Complex(0.0));
    }

  private:
    Domain(Kind k, int n) : kind_(k), n_(n) {
        if (n < 1) throw std::domain_error("Domain: dimension must be >= 1");
    }

    Kind kind_;
    int n_;
    std::vector<Domain> factors_;
    CPoint center_;
    double radius_ = 1.0;
};

// Max of gauge(f(R e^{i theta})) over equispaced boundary-circle samples.
inline double disc_gauge_max(const Domain& X, const AnalyticDisc& f, int samples) {
    const double R = f.overshoot();
    double m = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double th = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(samples);
        m = std::max(m, X.gauge(f.evaluate(std::polar(R, th))));
    }
    return m;
}

// Certified containment of the closed overshoot disc, with one refinement
// doubling the sample count when the verdict is within 10*margin of the
// threshold.
inline bool disc_contained(const Domain& X, const AnalyticDisc& f, double margin = 1e-3,
                           int samples = 256) {
    double m = disc_gauge_max(X, f, samples);
    if (std::abs(m - (1.0 - margin)) <= 10.0 * margin)
        m = disc_gauge_max(X, f, 2 * samples);
    return m < 1.0 - margin;
}

// Lemma 2.6 replacement of a constant disc: a nonconstant disc through x
// with f(0) = f(a) = x, built as x + eps * zeta(zeta - a) e_1 in the chart
// that is the identity translated to x; eps is bisected down from the
// supplied value until the whole overshoot disc is contained.
inline AnalyticDisc surgery_constant_replace(const Domain& X, const CPoint& x, Complex a,
                                             double eps, double overshoot = 1.05) {
    if (static_cast<int>(x.size()) != X.dimension())
        throw std::domain_error("surgery_constant_replace: dimension mismatch");
    if (!X.contains(x)) throw std::domain_error("surgery_constant_replace: x must be interior");
    if (std::abs(a) == 0.0 || std::abs(a) >= 1.0)
        throw std::domain_error("surgery_constant_replace: need 0 < |a| < 1");
    if (!(eps > 0.0)) throw std::domain_error("surgery_constant_replace: eps must be positive");
    for (int it = 0; it < 80; ++it) {
        std::vector<UniPoly> coords(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) coords[i] = {x[i]};
        coords[0] = {x[0], -eps * a, Complex(eps)};
        AnalyticDisc f(std::move(coords), overshoot);
        if (disc_contained(X, f, 0.0, 256)) return f;
        eps *= 0.5;
    }
    throw std::domain_error("surgery_constant_replace: no admissible eps found by bisection");
}

}  // namespace plurigreen

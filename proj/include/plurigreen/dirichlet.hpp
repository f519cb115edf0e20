#pragma once

#include "plurigreen/envelope.hpp"

namespace plurigreen {

// Harmonic extension of continuous boundary data, used as the Poisson
// integrand when solving the Dirichlet problem: the Perron class
// {v PSH : v* <= h on the boundary} coincides with {v <= h_harm}, so the
// Poisson envelope of the harmonic extension is the maximal PSH solution.
//
// Exact Fourier extensions for one and two disc factors; seeded
// product-kernel quadrature over the factor boundaries otherwise
// (documented approximate path; the 1-D case is the load-bearing one).
namespace detail {

struct DiscFactor {
    Complex center;
    double radius;
};

inline bool flatten_disc_factors(const Domain& X, std::vector<DiscFactor>& out) {
    switch (X.kind()) {
        case Domain::Kind::Ball:
        case Domain::Kind::Polydisc:
            if (X.dimension() != 1) return false;
            out.push_back({Complex(0.0), 1.0});
            return true;
        case Domain::Kind::AffineBall:
            if (X.dimension() != 1) return false;
            out.push_back({X.affine_center()[0], X.affine_radius()});
            return true;
        case Domain::Kind::Product:
            for (const auto& f : X.factors())
                if (!flatten_disc_factors(f, out)) return false;
            return true;
    }
    return false;
}

inline std::function<double(const CPoint&)> fourier_extension_1d(
    const DiscFactor& D, const std::function<double(const CPoint&)>& h, int modes = 64,
    int quad = 2048) {
    std::vector<Complex> coef(static_cast<std::size_t>(modes) + 1, Complex(0.0));
    for (int j = 0; j < quad; ++j) {
        const double th = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(quad);
        const double hv = h(CPoint{D.center + std::polar(D.radius, th)});
        for (int k = 0; k <= modes; ++k)
            coef[static_cast<std::size_t>(k)] += hv * std::polar(1.0, -k * th);
    }
    for (auto& c : coef) c /= static_cast<double>(quad);
    return [D, coef, modes](const CPoint& z) {
        Complex u = (z[0] - D.center) / D.radius;
        double rho = std::abs(u);
        if (rho > 1.0) {
            u /= rho;
            rho = 1.0;
        }
        double acc = coef[0].real();
        Complex upow = 1.0;
        for (int k = 1; k <= modes; ++k) {
            upow *= u;
            acc += 2.0 * (coef[static_cast<std::size_t>(k)] * upow).real();
        }
        return acc;
    };
}

inline std::function<double(const CPoint&)> fourier_extension_2d(
    const std::vector<DiscFactor>& D, const std::function<double(const CPoint&)>& h,
    int modes = 16, int quad = 256) {
    const int m = 2 * modes + 1;
    std::vector<std::vector<Complex>> coef(static_cast<std::size_t>(m),
                                           std::vector<Complex>(static_cast<std::size_t>(m)));
    // two-stage separable transform over the distinguished boundary
    std::vector<std::vector<Complex>> stage(static_cast<std::size_t>(quad),
                                            std::vector<Complex>(static_cast<std::size_t>(m)));
    for (int j = 0; j < quad; ++j) {
        const double th1 = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(quad);
        std::vector<double> row(static_cast<std::size_t>(quad));
        for (int l = 0; l < quad; ++l) {
            const double th2 = 2.0 * kPi * static_cast<double>(l) / static_cast<double>(quad);
            row[static_cast<std::size_t>(l)] = h(CPoint{D[0].center + std::polar(D[0].radius, th1),
                                                        D[1].center + std::polar(D[1].radius, th2)});
        }
        for (int k2 = -modes; k2 <= modes; ++k2) {
            Complex acc = 0.0;
            for (int l = 0; l < quad; ++l) {
                const double th2 = 2.0 * kPi * static_cast<double>(l) / static_cast<double>(quad);
                acc += row[static_cast<std::size_t>(l)] * std::polar(1.0, -k2 * th2);
            }
            stage[static_cast<std::size_t>(j)][static_cast<std::size_t>(k2 + modes)] =
                acc / static_cast<double>(quad);
        }
    }
    for (int k1 = -modes; k1 <= modes; ++k1)
        for (int k2 = -modes; k2 <= modes; ++k2) {
            Complex acc = 0.0;
            for (int j = 0; j < quad; ++j) {
                const double th1 = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(quad);
                acc += stage[static_cast<std::size_t>(j)][static_cast<std::size_t>(k2 + modes)] *
                       std::polar(1.0, -k1 * th1);
            }
            coef[static_cast<std::size_t>(k1 + modes)][static_cast<std::size_t>(k2 + modes)] =
                acc / static_cast<double>(quad);
        }
    return [D, coef, modes](const CPoint& z) {
        Complex u1 = (z[0] - D[0].center) / D[0].radius;
        Complex u2 = (z[1] - D[1].center) / D[1].radius;
        double r1 = std::abs(u1), r2 = std::abs(u2);
        if (r1 > 1.0) u1 /= r1;
        if (r2 > 1.0) u2 /= r2;
        r1 = std::min(r1, 1.0);
        r2 = std::min(r2, 1.0);
        const double a1 = std::arg(u1), a2 = std::arg(u2);
        double acc = 0.0;
        for (int k1 = -modes; k1 <= modes; ++k1)
            for (int k2 = -modes; k2 <= modes; ++k2) {
                const Complex c = coef[static_cast<std::size_t>(k1 + modes)][static_cast<std::size_t>(k2 + modes)];
                acc += (c * std::polar(std::pow(r1, std::abs(k1)) * std::pow(r2, std::abs(k2)),
                                       k1 * a1 + k2 * a2))
                           .real();
            }
        return acc;
    };
}

// Product-kernel quadrature over factor boundaries (seeded, deterministic).
inline std::function<double(const CPoint&)> kernel_extension(
    const Domain& X, const std::function<double(const CPoint&)>& h, int samples = 2048) {
    // flatten factors: each factor is a ball of some dimension (discs
    // are 1-balls; polydiscs decay to products of discs)
    struct Factor {
        CPoint center;
        double radius;
        int dim;
    };
    std::vector<Factor> factors;
    std::function<void(const Domain&)> flatten = [&](const Domain& D) {
        switch (D.kind()) {
            case Domain::Kind::Ball:
                factors.push_back({CPoint(static_cast<std::size_t>(D.dimension()), Complex(0.0)),
                                   1.0, D.dimension()});
                break;
            case Domain::Kind::AffineBall:
                factors.push_back({D.affine_center(), D.affine_radius(), D.dimension()});
                break;
            case Domain::Kind::Polydisc:
                for (int i = 0; i < D.dimension(); ++i)
                    factors.push_back({CPoint{Complex(0.0)}, 1.0, 1});
                break;
            case Domain::Kind::Product:
                for (const auto& f : D.factors()) flatten(f);
                break;
        }
    };
    flatten(X);

    // cached boundary samples and data values
    Rng rng(0xD1217ull);
    std::vector<std::vector<CPoint>> xi(static_cast<std::size_t>(samples));
    std::vector<double> hv(static_cast<std::size_t>(samples));
    for (int s = 0; s < samples; ++s) {
        CPoint full;
        std::vector<CPoint> locals;
        for (const auto& fac : factors) {
            CPoint dir(static_cast<std::size_t>(fac.dim));
            double norm = 0.0;
            for (auto& c : dir) {
                c = Complex(rng.normal(), rng.normal());
                norm += std::norm(c);
            }
            norm = std::sqrt(std::max(norm, 1e-300));
            CPoint pt(static_cast<std::size_t>(fac.dim));
            for (std::size_t i = 0; i < pt.size(); ++i)
                pt[i] = fac.center[i] + fac.radius * dir[i] / norm;
            locals.push_back(pt);
            full.insert(full.end(), pt.begin(), pt.end());
        }
        xi[static_cast<std::size_t>(s)] = std::move(locals);
        hv[static_cast<std::size_t>(s)] = h(full);
    }

    return [factors, xi, hv, samples](const CPoint& z) {
        double acc = 0.0;
        for (int s = 0; s < samples; ++s) {
            double kern = 1.0;
            std::size_t off = 0;
            for (std::size_t fi = 0; fi < factors.size(); ++fi) {
                const auto& fac = factors[fi];
                CPoint u(static_cast<std::size_t>(fac.dim));
                double nu = 0.0, dist = 0.0;
                for (int i = 0; i < fac.dim; ++i) {
                    u[static_cast<std::size_t>(i)] =
                        (z[off + static_cast<std::size_t>(i)] - fac.center[static_cast<std::size_t>(i)]) /
                        fac.radius;
                    nu += std::norm(u[static_cast<std::size_t>(i)]);
                }
                nu = std::min(nu, 1.0 - 1e-9);
                const CPoint& pt = xi[static_cast<std::size_t>(s)][fi];
                for (int i = 0; i < fac.dim; ++i) {
                    const Complex ub = (pt[static_cast<std::size_t>(i)] - fac.center[static_cast<std::size_t>(i)]) /
                                       fac.radius;
                    dist += std::norm(u[static_cast<std::size_t>(i)] - ub);
                }
                kern *= (1.0 - nu) / std::pow(std::max(dist, 1e-12), fac.dim);
                off += static_cast<std::size_t>(fac.dim);
            }
            acc += kern * hv[static_cast<std::size_t>(s)];
        }
        // kernels are normalized in the mean: divide by the kernel mass
        double mass = 0.0;
        for (int s = 0; s < samples; ++s) {
            double kern = 1.0;
            std::size_t off = 0;
            for (std::size_t fi = 0; fi < factors.size(); ++fi) {
                const auto& fac = factors[fi];
                double nu = 0.0, dist = 0.0;
                for (int i = 0; i < fac.dim; ++i) {
                    const Complex u = (z[off + static_cast<std::size_t>(i)] -
                                       fac.center[static_cast<std::size_t>(i)]) /
                                      fac.radius;
                    nu += std::norm(u);
                    const Complex ub = (xi[static_cast<std::size_t>(s)][fi][static_cast<std::size_t>(i)] -
                                        fac.center[static_cast<std::size_t>(i)]) /
                                       fac.radius;
                    dist += std::norm(u - ub);
                }
                nu = std::min(nu, 1.0 - 1e-9);
                kern *= (1.0 - nu) / std::pow(std::max(dist, 1e-12), fac.dim);
                off += static_cast<std::size_t>(fac.dim);
            }
            mass += kern;
        }
        return mass > 0.0 ? acc / mass : 0.0;
    };
}

}  // namespace detail

inline std::function<double(const CPoint&)> harmonic_extension(
    const Domain& X, const std::function<double(const CPoint&)>& h) {
    std::vector<detail::DiscFactor> discs;
    if (detail::flatten_disc_factors(X, discs)) {
        if (discs.size() == 1) return detail::fourier_extension_1d(discs[0], h);
        if (discs.size() == 2) return detail::fourier_extension_2d(discs, h);
    }
    return detail::kernel_extension(X, h);
}

// Perron solution of the Dirichlet problem as a Poisson envelope of the
// harmonic extension of the boundary data.
inline EnvelopeResult poisson_dirichlet(const Domain& X,
                                        const std::function<double(const CPoint&)>& h,
                                        const CPoint& x, OptimizerConfig cfg = {}) {
    auto phi = harmonic_extension(X, h);
    return envelope_upper(EnvelopeQuery::poisson_query(X, std::move(phi), x, std::move(cfg)));
}

}  // namespace plurigreen

#pragma once

#include <functional>

#include "plurigreen/complex_core.hpp"
#include "plurigreen/subspace.hpp"

namespace plurigreen {

// Weighted preimage list {(zeta_k, w_k)} a disc pulls back from the pole
// data; w = alpha(f(zeta)) m_zeta(f) for the Lelong functional, the root
// order of h o f for the Riesz functional.
struct PoleEntry {
    Complex location;
    double weight;
};
using PoleData = std::vector<PoleEntry>;

// Extended-real functional value.  convergent mirrors the
// sum f*alpha(z)(1-|z|) < infinity criterion: true for finite pole lists,
// false for the -infinity conventions; the Poisson functional reuses it to
// flag clipped -1e6 samples.
struct FunctionalValue {
    double value = 0.0;
    bool convergent = true;
};

inline constexpr double kPoissonClip = -1e6;
inline constexpr double kPreimageMatchTol = 1e-8;
// A numerically split multiple root of a composition is one preimage point;
// locations within this distance collapse to one Lelong term.
inline constexpr double kPreimageDedupTol = 1e-6;

namespace detail {

// Quadrature core shared by the checked functional and the optimizer
// objective (which must evaluate uncontained trial discs).
inline FunctionalValue poisson_quadrature(const std::function<double(const CPoint&)>& phi,
                                          const AnalyticDisc& f, int nodes) {
    double acc = 0.0;
    bool clipped = false;
    for (int k = 0; k < nodes; ++k) {
        const double th = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(nodes);
        double v = phi(f.evaluate(std::polar(1.0, th)));
        if (v < kPoissonClip || std::isnan(v)) {
            v = kPoissonClip;
            clipped = true;
        }
        acc += v;
    }
    return {acc / static_cast<double>(nodes), !clipped};
}

}  // namespace detail

// H_P^phi(f) = (1/2pi) int_T phi o f, trapezoidal rule over equispaced
// circle nodes (exact trapezoid weights on a periodic integrand).
inline FunctionalValue poisson(const std::function<double(const CPoint&)>& phi,
                               const AnalyticDisc& f, const Domain& X, int nodes = 512) {
    if (nodes < 16) throw std::domain_error("poisson: need at least 16 nodes");
    if (!disc_contained(X, f, 0.0, 256))
        throw std::domain_error("poisson: disc is not contained in the domain");
    return detail::poisson_quadrature(phi, f, nodes);
}

namespace detail {

// Preimages of a single point p under f: roots of a nonconstant coordinate
// equation, filtered by full-point matching.
inline std::vector<std::pair<Complex, int>> point_preimages(const AnalyticDisc& f,
                                                            const CPoint& p) {
    const auto& coords = f.coords();
    int pick = -1;
    double best_scale = 0.0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        double s = 0.0;
        for (std::size_t j = 1; j < coords[i].size(); ++j) s = std::max(s, std::abs(coords[i][j]));
        if (s > best_scale) {
            best_scale = s;
            pick = static_cast<int>(i);
        }
    }
    if (pick < 0) return {};  // constant disc; caller handles
    UniPoly eq = coords[static_cast<std::size_t>(pick)];
    eq[0] -= p[static_cast<std::size_t>(pick)];
    std::vector<std::pair<Complex, int>> out;
    std::vector<RootCluster> roots;
    try {
        roots = polynomial_roots(eq);
    } catch (const DegenerateSignal&) {
        return {};  // coordinate pinned at p_i but disc nonconstant elsewhere
    }
    for (const auto& rc : roots) {
        if (std::abs(rc.location) >= 1.0 - 1e-12) continue;
        const CPoint v = f.evaluate(rc.location);
        if (point_distance(v, p) <= kPreimageMatchTol) out.emplace_back(rc.location, rc.order);
    }
    return out;
}

inline int disc_multiplicity_at(const AnalyticDisc& f, Complex z) {
    const auto m = multiplicity(f, z);
    return m ? *m : std::numeric_limits<int>::max();
}

}  // namespace detail

// H_L^alpha(f) = sum alpha(f(zeta)) m_zeta(f) log|zeta|.  A constant disc
// mapping into the pole set yields -infinity (infinite multiplicity).
inline std::pair<FunctionalValue, PoleData> lelong(const WeightFunction& alpha,
                                                   const AnalyticDisc& f) {
    PoleData poles;

    if (f.is_constant()) {
        const double w = alpha.at(f.center());
        if (w > 0.0) return {{kNegInf, false}, {}};
        return {{0.0, true}, {}};
    }

    if (alpha.kind() == WeightFunction::Kind::FiniteSupport) {
        for (const auto& atom : alpha.atoms()) {
            for (const auto& [z, ord] : detail::point_preimages(f, atom.point)) {
                const int m = detail::disc_multiplicity_at(f, z);
                poles.push_back({z, atom.weight * static_cast<double>(m)});
            }
        }
    } else {
        const ComplexSubspace& A = alpha.subspace();
        // common roots of all generator compositions; a generator whose
        // composition vanishes identically constrains nothing extra
        std::vector<PreimageList> lists;
        std::vector<bool> degenerate;
        for (const auto& g : A.generators()) {
            try {
                lists.push_back(preimages(f, g));
                degenerate.push_back(false);
            } catch (const DegenerateSignal&) {
                lists.emplace_back();
                degenerate.push_back(true);
            }
        }
        if (std::all_of(degenerate.begin(), degenerate.end(), [](bool b) { return b; }))
            return {{kNegInf, false}, {}};  // f maps into A
        std::vector<PreimageEntry> common;
        bool first = true;
        for (std::size_t i = 0; i < lists.size(); ++i) {
            if (degenerate[i]) continue;
            if (first) {
                common = lists[i];
                first = false;
            } else {
                std::vector<PreimageEntry> kept;
                for (const auto& e : common)
                    for (const auto& o : lists[i])
                        if (std::abs(e.location - o.location) <= kPreimageMatchTol) {
                            kept.push_back(e);
                            break;
                        }
                common = std::move(kept);
            }
        }
        for (const auto& e : common) {
            const CPoint v = f.evaluate(e.location);
            const double w = alpha.kind() == WeightFunction::Kind::SubspaceNu
                                 ? static_cast<double>(multiplicity_nu(A, v))
                                 : 1.0;
            if (w <= 0.0) continue;
            const int m = detail::disc_multiplicity_at(f, e.location);
            poles.push_back({e.location, w * static_cast<double>(m)});
        }
    }

    double value = 0.0;
    for (const auto& p : poles) {
        const double r = std::abs(p.location);
        if (r == 0.0) return {{kNegInf, false}, poles};
        value += p.weight * std::log(r);
    }
    return {{value, true}, poles};
}

// Generalized Riesz functional of an effective divisor:
// H_R^A(f) = sum over roots zeta of h o f in D of ord(zeta) log|zeta|,
// with the convention H_R = 0 when h o f vanishes identically.
inline std::pair<FunctionalValue, PoleData> riesz_divisor(const ComplexSubspace& A,
                                                          const AnalyticDisc& f) {
    if (!is_divisor(A))
        throw std::domain_error("riesz_divisor: subspace must have exactly one generator");
    PreimageList pre;
    try {
        pre = preimages(f, A.generators().front());
    } catch (const DegenerateSignal&) {
        return {{0.0, true}, {}};  // f*[A] = 0
    }
    PoleData poles;
    double value = 0.0;
    bool finite = true;
    for (const auto& e : pre) {
        poles.push_back({e.location, static_cast<double>(e.order)});
        const double r = std::abs(e.location);
        if (r == 0.0)
            finite = false;
        else
            value += static_cast<double>(e.order) * std::log(r);
    }
    if (!finite) return {{kNegInf, false}, poles};
    return {{value, true}, poles};
}

// v_f^alpha(zeta) = sum w_k log |(zeta - zeta_k)/(1 - conj(zeta_k) zeta)|:
// the largest negative subharmonic function with nu >= f*alpha.
inline double disc_potential(const PoleData& poles, Complex zeta) {
    double acc = 0.0;
    for (const auto& p : poles) {
        const double m = mobius_modulus(zeta, p.location);
        if (m == 0.0) return kNegInf;
        acc += p.weight * std::log(m);
    }
    return acc;
}

}  // namespace plurigreen

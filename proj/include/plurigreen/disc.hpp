#pragma once

#include <optional>

#include "plurigreen/polynomial.hpp"

namespace plurigreen {

// Closed analytic disc as a polynomial map D -> C^n, defined (and expected
// to stay in the target domain) on |zeta| <= overshoot with overshoot > 1.
class AnalyticDisc {
  public:
    AnalyticDisc(std::vector<UniPoly> coords, double overshoot)
        : coords_(std::move(coords)), overshoot_(overshoot) {
        if (coords_.empty()) throw std::domain_error("AnalyticDisc: dimension must be >= 1");
        if (!(overshoot_ > 1.0)) throw std::domain_error("AnalyticDisc: overshoot must exceed 1");
        std::size_t d = 1;
        for (auto& c : coords_) {
            if (c.empty()) c = {Complex(0.0)};
            d = std::max(d, c.size());
        }
        for (auto& c : coords_) c.resize(d, Complex(0.0));
    }

    static AnalyticDisc constant(const CPoint& x, double overshoot = 1.05) {
        std::vector<UniPoly> coords(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) coords[i] = {x[i]};
        return AnalyticDisc(std::move(coords), overshoot);
    }

    int dimension() const { return static_cast<int>(coords_.size()); }
    int degree() const { return static_cast<int>(coords_.front().size()) - 1; }
    double overshoot() const { return overshoot_; }
    const std::vector<UniPoly>& coords() const { return coords_; }

    CPoint center() const {
        CPoint x(coords_.size());
        for (std::size_t i = 0; i < coords_.size(); ++i) x[i] = coords_[i][0];
        return x;
    }

    CPoint evaluate(Complex zeta) const {
        if (std::abs(zeta) > overshoot_ * (1.0 + 1e-12))
            throw std::domain_error("AnalyticDisc::evaluate: |zeta| exceeds overshoot radius");
        CPoint out(coords_.size());
        for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = uni_eval(coords_[i], zeta);
        return out;
    }

    bool is_constant(double tol = 1e-13) const {
        double scale = 0.0;
        for (const auto& c : coords_) scale = std::max(scale, uni_max_mag(c));
        if (scale == 0.0) return true;
        for (const auto& c : coords_)
            for (std::size_t j = 1; j < c.size(); ++j)
                if (std::abs(c[j]) > tol * scale) return false;
        return true;
    }

  private:
    std::vector<UniPoly> coords_;
    double overshoot_;
};

inline CPoint evaluate(const AnalyticDisc& f, Complex zeta) { return f.evaluate(zeta); }

struct PreimageEntry {
    Complex location;  // |location| < 1
    int order = 1;
};

using PreimageList = std::vector<PreimageEntry>;

// Multiplicity m_zeta0(f): minimal order across coordinates of the shifted
// expansion of f - f(zeta0); nullopt (= infinity) for constant discs.
inline std::optional<int> multiplicity(const AnalyticDisc& f, Complex zeta0) {
    if (std::abs(zeta0) >= 1.0)
        throw std::domain_error("multiplicity: |zeta0| must be < 1");
    if (f.is_constant()) return std::nullopt;
    double scale = 0.0;
    std::vector<UniPoly> shifted;
    shifted.reserve(f.coords().size());
    for (const auto& c : f.coords()) {
        UniPoly s = uni_shift(c, zeta0);
        s[0] = 0.0;  // subtract f(zeta0)
        scale = std::max(scale, uni_max_mag(s));
        shifted.push_back(std::move(s));
    }
    int best = std::numeric_limits<int>::max();
    for (const auto& s : shifted)
        for (std::size_t j = 1; j < s.size(); ++j)
            if (std::abs(s[j]) > 1e-12 * scale) {
                best = std::min(best, static_cast<int>(j));
                break;
            }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

// Roots of g(f(zeta)) in the open unit disc with orders; boundary band
// |zeta| >= 1 - 1e-12 is discarded.  Throws DegenerateSignal when the
// composition vanishes identically.
inline PreimageList preimages(const AnalyticDisc& f, const MultiPoly& g) {
    if (g.nvars() != f.dimension())
        throw std::domain_error("preimages: polynomial arity does not match disc dimension");
    UniPoly comp = g.compose_univariate(f.coords());
    const double scale = uni_max_mag(comp);
    const double ref = g.max_coeff_mag() * std::max(1.0, uni_max_mag(f.coords()[0]));
    if (scale <= 1e-14 * std::max(1.0, ref))
        throw DegenerateSignal("preimages: composition vanishes identically");
    PreimageList out;
    for (const auto& rc : polynomial_roots(comp)) {
        if (std::abs(rc.location) < 1.0 - 1e-12)
            out.push_back({rc.location, rc.order});
    }
    std::sort(out.begin(), out.end(), [](const PreimageEntry& a, const PreimageEntry& b) {
        if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
        return a.location.imag() < b.location.imag();
    });
    return out;
}

// zeta -> f(zeta / r): poles of the pullback move outward, overshoot grows.
inline AnalyticDisc surgery_shrink(const AnalyticDisc& f, double r) {
    if (!(r > 1.0) || r > f.overshoot())
        throw std::domain_error("surgery_shrink: require 1 < r <= overshoot");
    std::vector<UniPoly> coords = f.coords();
    for (auto& c : coords) {
        double pw = 1.0;
        for (auto& a : c) {
            a /= pw;
            pw *= r;
        }
    }
    return AnalyticDisc(std::move(coords), f.overshoot() * r);
}

// zeta -> f(zeta (zeta - a)): splits the order-m zero preimage at 0 into
// simple visits at 0 and a (Lemma 2.6 surgery).
inline AnalyticDisc surgery_zero_split(const AnalyticDisc& f, Complex a) {
    if (std::abs(a) == 0.0 || std::abs(a) >= 1.0)
        throw std::domain_error("surgery_zero_split: need 0 < |a| < 1");
    const double R = f.overshoot();
    if (1.0 + std::abs(a) > R)
        throw std::domain_error("surgery_zero_split: image of the closed disc exceeds the overshoot disc");
    // largest rg with rg(rg + |a|) <= R
    const double rg = 0.5 * (-std::abs(a) + std::sqrt(sq(std::abs(a)) + 4.0 * R));
    if (!(rg > 1.0 + 1e-12))
        throw std::domain_error("surgery_zero_split: composed disc has no overshoot margin");
    const UniPoly s{Complex(0.0), -a, Complex(1.0)};  // zeta^2 - a zeta
    std::vector<UniPoly> coords;
    coords.reserve(f.coords().size());
    for (const auto& c : f.coords()) coords.push_back(uni_compose(c, s));
    return AnalyticDisc(std::move(coords), rg);
}

}  // namespace plurigreen

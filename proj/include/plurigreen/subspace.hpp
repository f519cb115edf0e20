#pragma once

#include "plurigreen/domain.hpp"

namespace plurigreen {

// Complex subspace given by global polynomial ideal generators.
class ComplexSubspace {
  public:
    explicit ComplexSubspace(std::vector<MultiPoly> generators)
        : generators_(std::move(generators)) {
        if (generators_.empty())
            throw std::domain_error("ComplexSubspace: generator list must be nonempty");
        for (const auto& g : generators_)
            if (g.empty()) throw std::domain_error("ComplexSubspace: identically zero generator");
    }

    const std::vector<MultiPoly>& generators() const { return generators_; }
    int nvars() const { return generators_.front().nvars(); }

  private:
    std::vector<MultiPoly> generators_;
};

// Order of the Taylor expansion of g at p; the smallest total degree with a
// coefficient above 1e-9 of the local coefficient scale (relative threshold
// so badly scaled generators survive).
inline int vanishing_order(const MultiPoly& g, const CPoint& p) {
    if (g.empty()) throw DegenerateSignal("vanishing_order: zero polynomial");
    const MultiPoly shifted = g.taylor_shift(p);
    double scale = shifted.max_coeff_mag();
    if (scale == 0.0) throw DegenerateSignal("vanishing_order: zero polynomial");
    int best = std::numeric_limits<int>::max();
    for (const auto& [idx, c] : shifted.terms()) {
        if (std::abs(c) > 1e-9 * scale) {
            int tot = 0;
            for (int e : idx) tot += e;
            best = std::min(best, tot);
        }
    }
    return best == std::numeric_limits<int>::max() ? 0 : best;
}

// nu_A(p): Lelong number of log max |g_i| at p = min over generators of the
// vanishing order (the Lelong number of a max is the min of Lelong numbers).
inline int multiplicity_nu(const ComplexSubspace& A, const CPoint& p) {
    int best = std::numeric_limits<int>::max();
    for (const auto& g : A.generators()) best = std::min(best, vanishing_order(g, p));
    return best;
}

inline bool is_divisor(const ComplexSubspace& A) { return A.generators().size() == 1; }

// Coefficient-bound sup of |g| over the domain: sum |c_beta| prod r_i^beta_i
// with r_i the per-coordinate bounding radii of the domain.
inline std::vector<double> bounding_radii(const Domain& X) {
    switch (X.kind()) {
        case Domain::Kind::Ball:
        case Domain::Kind::Polydisc:
            return std::vector<double>(static_cast<std::size_t>(X.dimension()), 1.0);
        case Domain::Kind::AffineBall: {
            std::vector<double> r;
            r.reserve(X.affine_center().size());
            for (const auto& c : X.affine_center()) r.push_back(std::abs(c) + X.affine_radius());
            return r;
        }
        case Domain::Kind::Product: {
            std::vector<double> r;
            for (const auto& f : X.factors()) {
                auto rf = bounding_radii(f);
                r.insert(r.end(), rf.begin(), rf.end());
            }
            return r;
        }
    }
    return {};
}

inline double generator_sup_bound(const MultiPoly& g, const Domain& X) {
    const auto radii = bounding_radii(X);
    double s = 0.0;
    for (const auto& [idx, c] : g.terms()) {
        double t = std::abs(c);
        for (int i = 0; i < g.nvars(); ++i)
            for (int k = 0; k < idx[i]; ++k) t *= radii[static_cast<std::size_t>(i)];
        s += t;
    }
    return s;
}

// max_i log(|g_i(p)| / M_i): the canonical PSH minorant of G_A once the M_i
// dominate sup |g_i| over the domain (caller-certified).
inline double log_max_generators(const ComplexSubspace& A, const CPoint& p,
                                 const std::vector<double>& sup_bounds) {
    if (sup_bounds.size() != A.generators().size())
        throw std::domain_error("log_max_generators: one bound per generator required");
    double best = kNegInf;
    for (std::size_t i = 0; i < sup_bounds.size(); ++i) {
        if (!(sup_bounds[i] > 0.0))
            throw std::domain_error("log_max_generators: sup bounds must be positive");
        const double m = std::abs(A.generators()[i].eval(p));
        best = std::max(best, m == 0.0 ? kNegInf : std::log(m / sup_bounds[i]));
    }
    return best;
}

// Weight functions alpha: finite weighted point sets, nu_A of a subspace,
// or the characteristic function of a subspace's zero set.
class WeightFunction {
  public:
    struct Atom {
        CPoint point;
        double weight;  // > 0
    };

    enum class Kind { FiniteSupport, SubspaceNu, SubspaceIndicator };

    static WeightFunction finite_support(std::vector<Atom> atoms) {
        for (const auto& a : atoms)
            if (!(a.weight > 0.0))
                throw std::domain_error("WeightFunction: weights must be positive");
        WeightFunction w;
        w.kind_ = Kind::FiniteSupport;
        w.atoms_ = std::move(atoms);
        return w;
    }

    static WeightFunction zero() { return finite_support({}); }

    static WeightFunction subspace_nu(ComplexSubspace A) {
        WeightFunction w;
        w.kind_ = Kind::SubspaceNu;
        w.subspace_.emplace(std::move(A));
        return w;
    }

    static WeightFunction subspace_indicator(ComplexSubspace A) {
        WeightFunction w;
        w.kind_ = Kind::SubspaceIndicator;
        w.subspace_.emplace(std::move(A));
        return w;
    }

    Kind kind() const { return kind_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    const ComplexSubspace& subspace() const { return *subspace_; }

    // Pointwise alpha(p).
    double at(const CPoint& p) const {
        switch (kind_) {
            case Kind::FiniteSupport: {
                for (const auto& a : atoms_)
                    if (point_distance(a.point, p) <= 1e-10) return a.weight;
                return 0.0;
            }
            case Kind::SubspaceNu:
                return static_cast<double>(multiplicity_nu(*subspace_, p));
            case Kind::SubspaceIndicator:
                return multiplicity_nu(*subspace_, p) > 0 ? 1.0 : 0.0;
        }
        return 0.0;
    }

  private:
    Kind kind_ = Kind::FiniteSupport;
    std::vector<Atom> atoms_;
    std::optional<ComplexSubspace> subspace_;
};

}  // namespace plurigreen

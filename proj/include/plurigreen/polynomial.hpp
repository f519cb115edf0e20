#pragma once

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <map>
#include <numeric>

#include "plurigreen/common.hpp"

namespace plurigreen {

// ---------------------------------------------------------------------------
// Univariate polynomials, coefficients in increasing degree order.
// ---------------------------------------------------------------------------

using UniPoly = std::vector<Complex>;  // p(z) = sum_j c[j] z^j

inline Complex uni_eval(const UniPoly& p, Complex z) {
    Complex acc = 0.0;
    for (std::size_t j = p.size(); j-- > 0;) acc = acc * z + p[j];
    return acc;
}

inline UniPoly uni_derivative(const UniPoly& p) {
    if (p.size() <= 1) return {};
    UniPoly d(p.size() - 1);
    for (std::size_t j = 1; j < p.size(); ++j) d[j - 1] = static_cast<double>(j) * p[j];
    return d;
}

inline UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly out(a.size() + b.size() - 1, Complex(0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline void uni_add_scaled(UniPoly& a, const UniPoly& b, Complex s) {
    if (a.size() < b.size()) a.resize(b.size(), Complex(0.0));
    for (std::size_t j = 0; j < b.size(); ++j) a[j] += s * b[j];
}

// p(q(z)) by Horner over polynomial values
inline UniPoly uni_compose(const UniPoly& p, const UniPoly& q) {
    UniPoly acc{Complex(0.0)};
    for (std::size_t j = p.size(); j-- > 0;) {
        acc = uni_mul(acc, q);
        if (acc.empty()) acc = {Complex(0.0)};
        acc[0] += p[j];
    }
    return acc;
}

// Taylor coefficients of p(z0 + w) in w (synthetic shift).
inline UniPoly uni_shift(const UniPoly& p, Complex z0) {
    UniPoly out = p;
    const std::size_t n = p.size();
    // repeated synthetic division by (z - z0)
    for (std::size_t k = 0; k + 1 < n; ++k)
        for (std::size_t j = n - 1; j-- > k;) out[j] += z0 * out[j + 1];
    return out;
}

inline double uni_max_mag(const UniPoly& p) {
    double m = 0.0;
    for (const auto& c : p) m = std::max(m, std::abs(c));
    return m;
}

// ---------------------------------------------------------------------------
// Root extraction: companion-matrix eigenvalues (scaled), Newton polish,
// cluster-merge, and a derivative cross-check of the inferred orders.
// ---------------------------------------------------------------------------

struct RootCluster {
    Complex location;
    int order = 1;
};

namespace detail {

inline Complex newton_polish(const UniPoly& p, const UniPoly& dp, Complex z) {
    Complex best = z;
    double best_mag = std::abs(uni_eval(p, z));
    for (int it = 0; it < 64; ++it) {
        const Complex pv = uni_eval(p, z);
        const Complex dv = uni_eval(dp, z);
        if (std::abs(dv) < 1e-300) break;
        const Complex step = pv / dv;
        z -= step;
        const double mag = std::abs(uni_eval(p, z));
        if (mag < best_mag) {
            best_mag = mag;
            best = z;
        }
        if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
    }
    return best;
}

}  // namespace detail

// All roots of p (counted by cluster), order inferred by cluster cardinality
// and cross-checked against scaled derivative magnitudes.  Roots at the
// origin are stripped off exactly beforehand.  Throws DegenerateSignal for
// the zero polynomial and NumericError on solver failure or an order
// mismatch.
inline std::vector<RootCluster> polynomial_roots(UniPoly p, double cluster_tol = 1e-8) {
    const double scale = uni_max_mag(p);
    if (scale == 0.0 || p.empty()) throw DegenerateSignal("polynomial_roots: zero polynomial");

    // trim negligible leading coefficients
    std::size_t deg = p.size() - 1;
    while (deg > 0 && std::abs(p[deg]) <= 1e-14 * scale) --deg;
    p.resize(deg + 1);

    std::vector<RootCluster> out;

    // exact zeros at the origin
    std::size_t zero_order = 0;
    while (zero_order < deg && std::abs(p[zero_order]) <= 1e-13 * scale) ++zero_order;
    if (zero_order > 0) {
        out.push_back({Complex(0.0), static_cast<int>(zero_order)});
        p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(zero_order));
        deg -= zero_order;
    }
    if (deg == 0) return out;

    // scale substitution z = s*w balancing |p0| against |pd|
    double s = std::pow(std::abs(p[0]) / std::abs(p[deg]), 1.0 / static_cast<double>(deg));
    s = std::clamp(s, 1e-3, 1e3);
    UniPoly q(deg + 1);
    double pw = 1.0;
    for (std::size_t j = 0; j <= deg; ++j) {
        q[j] = p[j] * pw;
        pw *= s;
    }

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(static_cast<int>(deg), static_cast<int>(deg));
    for (std::size_t j = 0; j + 1 < deg; ++j) companion(static_cast<int>(j) + 1, static_cast<int>(j)) = 1.0;
    for (std::size_t j = 0; j < deg; ++j)
        companion(static_cast<int>(j), static_cast<int>(deg) - 1) = -q[j] / q[deg];

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw NumericError("polynomial_roots: eigensolver failed to converge");

    const UniPoly dp = uni_derivative(p);
    std::vector<Complex> roots;
    roots.reserve(deg);
    for (int j = 0; j < static_cast<int>(deg); ++j)
        roots.push_back(detail::newton_polish(p, dp, solver.eigenvalues()(j) * s));

    // deterministic order before clustering
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });

    // greedy cluster merge at cluster_tol
    std::vector<std::vector<Complex>> clusters;
    std::vector<Complex> centers;
    for (const Complex r : roots) {
        bool placed = false;
        for (std::size_t c = 0; c < clusters.size(); ++c) {
            if (std::abs(r - centers[c]) <= cluster_tol) {
                clusters[c].push_back(r);
                Complex mean = 0.0;
                for (const Complex rr : clusters[c]) mean += rr;
                centers[c] = mean / static_cast<double>(clusters[c].size());
                placed = true;
                break;
            }
        }
        if (!placed) {
            clusters.push_back({r});
            centers.push_back(r);
        }
    }

    for (std::size_t c = 0; c < clusters.size(); ++c) {
        const int k = static_cast<int>(clusters[c].size());
        const Complex z0 = centers[c];

        // residual: z0 must be a root of a tiny relative perturbation of p
        double bound = 0.0, zp = 1.0;
        for (std::size_t j = 0; j < p.size(); ++j) {
            bound += std::abs(p[j]) * zp;
            zp *= std::abs(z0);
        }
        if (std::abs(uni_eval(p, z0)) > 1e-6 * bound + 1e-250)
            throw NumericError("polynomial_roots: root residual check failed");

        // scaled derivative magnitudes d_j = |p^(j)(z0)|/j! rho^j with rho
        // the root's own scale; the smallest j with d_j comparable to max d
        // is the numerically indicated order.  Cluster cardinality may
        // legitimately undercount (a perturbed multiple root splits), but
        // must never overcount.
        UniPoly sh = uni_shift(p, z0);
        const double rho = std::max(1.0, std::abs(z0));
        double dmax = 0.0, rp = 1.0;
        std::vector<double> dj(sh.size());
        for (std::size_t j = 0; j < sh.size(); ++j) {
            dj[j] = std::abs(sh[j]) * rp;
            dmax = std::max(dmax, dj[j]);
            rp *= rho;
        }
        int indicated = 0;
        for (std::size_t j = 0; j < sh.size(); ++j) {
            if (dj[j] >= 1e-7 * dmax) {
                indicated = static_cast<int>(j);
                break;
            }
        }
        if (indicated < k)
            throw NumericError("polynomial_roots: cluster order exceeds derivative-indicated order");

        out.push_back({z0, k});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Polynomials in n complex variables, sparse multi-index representation.
// ---------------------------------------------------------------------------

class MultiPoly {
  public:
    using Index = std::vector<int>;

    MultiPoly() = default;
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    const std::map<Index, Complex>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add_term(const Index& idx, Complex coeff) {
        if (static_cast<int>(idx.size()) != nvars_)
            throw std::domain_error("MultiPoly: multi-index arity mismatch");
        auto [it, fresh] = terms_.emplace(idx, coeff);
        if (!fresh) it->second += coeff;
        if (std::abs(it->second) == 0.0) terms_.erase(it);
    }

    static MultiPoly variable(int nvars, int i) {
        MultiPoly p(nvars);
        Index idx(nvars, 0);
        idx[i] = 1;
        p.add_term(idx, 1.0);
        return p;
    }

    static MultiPoly constant(int nvars, Complex c) {
        MultiPoly p(nvars);
        if (std::abs(c) != 0.0) p.add_term(Index(nvars, 0), c);
        return p;
    }

    Complex eval(const CPoint& z) const {
        if (static_cast<int>(z.size()) != nvars_)
            throw std::domain_error("MultiPoly::eval: dimension mismatch");
        Complex acc = 0.0;
        for (const auto& [idx, c] : terms_) {
            Complex t = c;
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < idx[i]; ++k) t *= z[i];
            acc += t;
        }
        return acc;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [idx, c] : terms_)
            d = std::max(d, std::accumulate(idx.begin(), idx.end(), 0));
        return d;
    }

    double max_coeff_mag() const {
        double m = 0.0;
        for (const auto& [idx, c] : terms_) m = std::max(m, std::abs(c));
        return m;
    }

    MultiPoly operator*(const MultiPoly& rhs) const {
        MultiPoly out(nvars_);
        for (const auto& [ia, ca] : terms_)
            for (const auto& [ib, cb] : rhs.terms_) {
                Index idx(nvars_);
                for (int i = 0; i < nvars_; ++i) idx[i] = ia[i] + ib[i];
                out.add_term(idx, ca * cb);
            }
        return out;
    }

    MultiPoly operator+(const MultiPoly& rhs) const {
        MultiPoly out = *this;
        for (const auto& [idx, c] : rhs.terms_) out.add_term(idx, c);
        return out;
    }

    // Taylor expansion around p: coefficients of g(p + w) as a polynomial
    // in w, via binomial expansion of each term.
    MultiPoly taylor_shift(const CPoint& p) const {
        if (static_cast<int>(p.size()) != nvars_)
            throw std::domain_error("MultiPoly::taylor_shift: dimension mismatch");
        MultiPoly out(nvars_);
        for (const auto& [idx, c] : terms_) {
            // expand prod_i (p_i + w_i)^{idx_i}
            std::vector<std::vector<Complex>> binom(static_cast<std::size_t>(nvars_));
            for (int i = 0; i < nvars_; ++i) {
                const int b = idx[i];
                std::vector<Complex> row(static_cast<std::size_t>(b) + 1);
                Complex pk = 1.0;  // p_i^(b-j) built downward
                // C(b, j) p_i^{b-j}
                double choose = 1.0;
                for (int j = 0; j <= b; ++j) {
                    // compute p_i^{b-j}
                    Complex pw = 1.0;
                    for (int k = 0; k < b - j; ++k) pw *= p[i];
                    row[static_cast<std::size_t>(j)] = choose * pw;
                    choose = choose * static_cast<double>(b - j) / static_cast<double>(j + 1);
                }
                (void)pk;
                binom[static_cast<std::size_t>(i)] = std::move(row);
            }
            // accumulate the product over variables
            std::vector<std::pair<Index, Complex>> acc{{Index(nvars_, 0), c}};
            for (int i = 0; i < nvars_; ++i) {
                std::vector<std::pair<Index, Complex>> next;
                next.reserve(acc.size() * binom[static_cast<std::size_t>(i)].size());
                for (const auto& [aidx, ac] : acc)
                    for (int j = 0; j < static_cast<int>(binom[static_cast<std::size_t>(i)].size()); ++j) {
                        Index nidx = aidx;
                        nidx[i] = j;
                        next.emplace_back(std::move(nidx), ac * binom[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                    }
                acc = std::move(next);
            }
            for (auto& [aidx, ac] : acc) out.add_term(aidx, ac);
        }
        return out;
    }

    // Substitute univariate polynomials for the variables: g(f_1(z),...,f_n(z)).
    UniPoly compose_univariate(const std::vector<UniPoly>& subs) const {
        if (static_cast<int>(subs.size()) != nvars_)
            throw std::domain_error("MultiPoly::compose_univariate: arity mismatch");
        // cache powers of each substituted coordinate
        std::vector<std::vector<UniPoly>> pows(static_cast<std::size_t>(nvars_));
        for (int i = 0; i < nvars_; ++i) pows[static_cast<std::size_t>(i)] = {UniPoly{Complex(1.0)}};
        auto power = [&](int i, int e) -> const UniPoly& {
            auto& cache = pows[static_cast<std::size_t>(i)];
            while (static_cast<int>(cache.size()) <= e)
                cache.push_back(uni_mul(cache.back(), subs[static_cast<std::size_t>(i)]));
            return cache[static_cast<std::size_t>(e)];
        };
        UniPoly out{Complex(0.0)};
        for (const auto& [idx, c] : terms_) {
            UniPoly term{c};
            for (int i = 0; i < nvars_; ++i)
                if (idx[i] > 0) term = uni_mul(term, power(i, idx[i]));
            uni_add_scaled(out, term, 1.0);
        }
        return out;
    }

  private:
    int nvars_ = 0;
    std::map<Index, Complex> terms_;
};

}  // namespace plurigreen

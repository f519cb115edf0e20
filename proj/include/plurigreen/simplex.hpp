#pragma once

#include <functional>

#include "plurigreen/common.hpp"

namespace plurigreen {

// Deterministic Nelder-Mead with the standard reflection/expansion/
// contraction/shrink coefficients 1, 2, 0.5, 0.5.  The objective reports
// (value, certified); the search tracks the best certified point it ever
// evaluated, which is what the envelope reports.  The simplex is rebuilt at
// the incumbent best once halfway through the budget (degenerate-simplex
// escape).
struct SimplexResult {
    bool found = false;
    double value = kPosInf;
    std::vector<double> point;
    long evaluations = 0;
};

inline SimplexResult nelder_mead(
    const std::function<std::pair<double, bool>(const std::vector<double>&)>& objective,
    std::vector<double> start, int iterations, double step = 0.08, int rounds = 2) {
    const std::size_t n = start.size();
    SimplexResult best;

    auto eval = [&](const std::vector<double>& p) {
        const auto [v, certified] = objective(p);
        ++best.evaluations;
        if (certified && v < best.value) {
            best.found = true;
            best.value = v;
            best.point = p;
        }
        return v;
    };

    std::vector<double> anchor = std::move(start);
    rounds = std::max(1, rounds);
    for (int round = 0; round < rounds; ++round) {
        std::vector<std::vector<double>> pts(n + 1, anchor);
        for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
        std::vector<double> fv(n + 1);
        for (std::size_t i = 0; i <= n; ++i) fv[i] = eval(pts[i]);

        std::vector<std::size_t> order(n + 1);
        for (int it = 0; it < iterations / rounds; ++it) {
            for (std::size_t i = 0; i <= n; ++i) order[i] = i;
            std::sort(order.begin(), order.end(),
                      [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
            std::vector<std::vector<double>> spts(n + 1);
            std::vector<double> sfv(n + 1);
            for (std::size_t i = 0; i <= n; ++i) {
                spts[i] = std::move(pts[order[i]]);
                sfv[i] = fv[order[i]];
            }
            pts = std::move(spts);
            fv = std::move(sfv);

            std::vector<double> centroid(n, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) centroid[j] += pts[i][j];
            }
            for (auto& c : centroid) c /= static_cast<double>(n);

            auto blend = [&](double t) {
                std::vector<double> p(n);
                for (std::size_t j = 0; j < n; ++j)
                    p[j] = centroid[j] + t * (pts[n][j] - centroid[j]);
                return p;
            };

            const std::vector<double> refl = blend(-1.0);
            const double fr = eval(refl);
            if (fr < fv[0]) {
                const std::vector<double> expd = blend(-2.0);
                const double fe = eval(expd);
                if (fe < fr) {
                    pts[n] = expd;
                    fv[n] = fe;
                } else {
                    pts[n] = refl;
                    fv[n] = fr;
                }
            } else if (fr < fv[n - 1]) {
                pts[n] = refl;
                fv[n] = fr;
            } else {
                const std::vector<double> contr = blend(0.5);
                const double fc = eval(contr);
                if (fc < fv[n]) {
                    pts[n] = contr;
                    fv[n] = fc;
                } else {
                    for (std::size_t i = 1; i <= n; ++i) {
                        for (std::size_t j = 0; j < n; ++j)
                            pts[i][j] = pts[0][j] + 0.5 * (pts[i][j] - pts[0][j]);
                        fv[i] = eval(pts[i]);
                    }
                }
            }
        }
        if (best.found) anchor = best.point;
    }
    return best;
}

}  // namespace plurigreen

#pragma once

#include <iomanip>

#include "plurigreen/config.hpp"

namespace plurigreen {

// One evaluation record: point, oracle bracket, envelope output.
struct EvalRecord {
    CPoint point;
    std::optional<double> closed_form;
    std::optional<double> lower;
    double upper = 0.0;
    int pole_count = 0;
    bool converged = false;
    long evaluations = 0;
};

// Extended reals serialize as the literal strings "-inf"/"inf".
inline Json extended_to_json(double v) {
    if (v == kNegInf) return "-inf";
    if (v == kPosInf) return "inf";
    return v;
}

inline double extended_from_json(const Json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "-inf") return kNegInf;
        if (s == "inf") return kPosInf;
        throw std::runtime_error("record: bad extended-real literal '" + s + "'");
    }
    return j.get<double>();
}

inline std::string extended_to_csv(double v) {
    if (v == kNegInf) return "-inf";
    if (v == kPosInf) return "inf";
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

inline Json record_to_json(const EvalRecord& r) {
    Json j;
    Json pt = Json::array();
    for (const auto& c : r.point) pt.push_back({c.real(), c.imag()});
    j["point"] = pt;
    if (r.closed_form) j["closed_form"] = extended_to_json(*r.closed_form);
    if (r.lower) j["lower"] = extended_to_json(*r.lower);
    j["upper"] = extended_to_json(r.upper);
    if (r.lower && std::isfinite(*r.lower) && std::isfinite(r.upper))
        j["bracket"] = r.upper - *r.lower;
    j["poles"] = r.pole_count;
    j["converged"] = r.converged;
    j["evaluations"] = r.evaluations;
    return j;
}

inline EvalRecord record_from_json(const Json& j) {
    EvalRecord r;
    for (const auto& c : j.at("point")) r.point.emplace_back(c[0].get<double>(), c[1].get<double>());
    if (j.contains("closed_form")) r.closed_form = extended_from_json(j.at("closed_form"));
    if (j.contains("lower")) r.lower = extended_from_json(j.at("lower"));
    r.upper = extended_from_json(j.at("upper"));
    r.pole_count = j.at("poles").get<int>();
    r.converged = j.at("converged").get<bool>();
    r.evaluations = j.at("evaluations").get<long>();
    return r;
}

// Fixed CSV column set; one re/im pair per coordinate.
inline std::string csv_header(int dimension) {
    std::ostringstream os;
    for (int i = 1; i <= dimension; ++i) os << "re" << i << ",im" << i << ",";
    os << "closed_form,lower,upper,bracket,poles,converged,evaluations";
    return os.str();
}

inline std::string csv_row(const EvalRecord& r) {
    std::ostringstream os;
    os << std::setprecision(17);
    for (const auto& c : r.point) os << c.real() << "," << c.imag() << ",";
    os << (r.closed_form ? extended_to_csv(*r.closed_form) : "") << ",";
    os << (r.lower ? extended_to_csv(*r.lower) : "") << ",";
    os << extended_to_csv(r.upper) << ",";
    if (r.lower && std::isfinite(*r.lower) && std::isfinite(r.upper))
        os << (r.upper - *r.lower);
    os << "," << r.pole_count << "," << (r.converged ? 1 : 0) << "," << r.evaluations;
    return os.str();
}

// Minimal SVG heatmap of the upper bounds over a rectangular grid; -inf is
// drawn as the sentinel color.
inline std::string svg_heatmap(const std::vector<EvalRecord>& records, int nx, int ny) {
    double lo = kPosInf, hi = -kPosInf;
    for (const auto& r : records) {
        if (!std::isfinite(r.upper)) continue;
        lo = std::min(lo, r.upper);
        hi = std::max(hi, r.upper);
    }
    if (!(hi > lo)) {
        lo = -1.0;
        hi = 0.0;
    }
    const int cell = 16;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << nx * cell << "\" height=\""
       << ny * cell << "\">\n";
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const std::size_t idx = static_cast<std::size_t>(j * nx + i);
            if (idx >= records.size()) continue;
            const double v = records[idx].upper;
            std::string fill;
            if (!std::isfinite(v)) {
                fill = "#ff00ff";  // -inf sentinel
            } else {
                const double t = (v - lo) / (hi - lo);
                const int r8 = static_cast<int>(255.0 * t);
                const int b8 = static_cast<int>(255.0 * (1.0 - t));
                std::ostringstream col;
                col << "#" << std::hex << std::setw(2) << std::setfill('0') << r8 << std::setw(2)
                    << std::setfill('0') << (r8 / 2) << std::setw(2) << std::setfill('0') << b8;
                fill = col.str();
            }
            os << "  <rect x=\"" << i * cell << "\" y=\"" << (ny - 1 - j) * cell << "\" width=\""
               << cell << "\" height=\"" << cell << "\" fill=\"" << fill << "\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace plurigreen

#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace plurigreen {

using Complex = std::complex<double>;

// A point of C^n, n >= 1.
using CPoint = std::vector<Complex>;

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kPosInf = std::numeric_limits<double>::infinity();
inline constexpr double kPi = 3.14159265358979323846;

// Raised when an iterative numeric routine fails to deliver a trustworthy
// result (root-finder non-convergence, order cross-check mismatch).
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an input is structurally degenerate (identically zero
// polynomial, composition vanishing identically).  Callers map this onto
// the -inf / zero-measure conventions of the functionals.
struct DegenerateSignal : std::runtime_error {
    explicit DegenerateSignal(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the envelope optimizer when no contained disc was certified in
// any restart; never silently reports a penalized value.
struct InfeasibleError : std::runtime_error {
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

inline double sq(double x) { return x * x; }

inline double euclidean_norm_sq(const CPoint& z) {
    double s = 0.0;
    for (const auto& c : z) s += std::norm(c);
    return s;
}

inline double euclidean_norm(const CPoint& z) { return std::sqrt(euclidean_norm_sq(z)); }

// <z, w> = sum_i z_i conj(w_i)
inline Complex hermitian_inner(const CPoint& z, const CPoint& w) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) s += z[i] * std::conj(w[i]);
    return s;
}

inline double point_distance(const CPoint& z, const CPoint& w) {
    double s = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) s += std::norm(z[i] - w[i]);
    return std::sqrt(s);
}

// Portable deterministic uniforms on top of std::mt19937_64 (the standard
// distributions are implementation-defined, which would break bit-identical
// reports across toolchains).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        // splitmix64; tiny, portable, good enough for restart scatter
        std::uint64_t z = (state_ += 0x9E3779B97f4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    double uniform() {  // [0, 1)
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform on the complex disc of radius r
    Complex disc(double r) {
        const double rad = r * std::sqrt(uniform());
        const double ang = 2.0 * kPi * uniform();
        return std::polar(rad, ang);
    }

    // standard normal via Box-Muller (deterministic draw order)
    double normal() {
        const double u1 = std::max(uniform(), 1e-300);
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

  private:
    std::uint64_t state_;
};

}  // namespace plurigreen

#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace condgrad {

using DenseVector = std::vector<double>;

inline void check_same_length(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("vector length mismatch");
}

inline bool all_finite(std::span<const double> x) {
    for (double v : x)
        if (!std::isfinite(v)) return false;
    return true;
}

inline double dot(std::span<const double> x, std::span<const double> y) {
    check_same_length(x, y);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline double norm2(std::span<const double> x) {
    return std::sqrt(dot(x, x));
}

inline double norm_inf(std::span<const double> x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
}

/// out = alpha*x + y, written into a caller-provided buffer.
inline void axpy(double alpha, std::span<const double> x, std::span<const double> y,
                 std::span<double> out) {
    check_same_length(x, y);
    check_same_length(x, out);
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = alpha * x[i] + y[i];
}

/// y = (1-gamma)*y + gamma*x, in place.
inline void blend(double gamma, std::span<const double> x, std::span<double> y) {
    check_same_length(x, y);
    const double c = 1.0 - gamma;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = c * y[i] + gamma * x[i];
}

} // namespace condgrad

#include "condgrad/domains.hpp"

#include <algorithm>
#include <stdexcept>

namespace condgrad {

AxisBox::AxisBox(DenseVector lo_, DenseVector hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo.size() != hi.size())
        throw std::invalid_argument("AxisBox: lo/hi length mismatch");
    if (!all_finite(lo) || !all_finite(hi))
        throw std::invalid_argument("AxisBox: non-finite bounds");
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (lo[i] > hi[i])
            throw std::invalid_argument("AxisBox: lo > hi on some axis");
}

AxisBox AxisBox::unit(std::size_t n) {
    return AxisBox(DenseVector(n, -1.0), DenseVector(n, 1.0));
}

AxisBox AxisBox::ball(const DenseVector& center, double radius) {
    if (radius < 0.0) throw std::invalid_argument("AxisBox::ball: negative radius");
    DenseVector lo(center.size()), hi(center.size());
    for (std::size_t i = 0; i < center.size(); ++i) {
        lo[i] = center[i] - radius;
        hi[i] = center[i] + radius;
    }
    return AxisBox(std::move(lo), std::move(hi));
}

DenseVector AffineMap::apply(std::span<const double> x) const {
    check_same_length(x, scale);
    DenseVector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = scale[i] * x[i] + offset[i];
    return y;
}

DenseVector AffineMap::apply_inverse(std::span<const double> y) const {
    check_same_length(y, scale);
    DenseVector x(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) x[i] = (y[i] - offset[i]) / scale[i];
    return x;
}

DenseVector lmo_box(const AxisBox& box, std::span<const double> p, OpCounters* counters) {
    check_same_length(p, box.lo);
    DenseVector x(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] > 0.0)
            x[i] = box.lo[i];
        else if (p[i] < 0.0)
            x[i] = box.hi[i];
        else
            x[i] = 0.5 * (box.lo[i] + box.hi[i]);
    }
    if (counters) ++counters->lmo_calls;
    return x;
}

DenseVector lmo_simplex(const Simplex& s, std::span<const double> p, OpCounters* counters) {
    if (p.size() != s.n || s.n == 0)
        throw std::invalid_argument("lmo_simplex: bad dimension");
    std::size_t best = 0;
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] < p[best]) best = i; // strict: lowest index wins ties
    DenseVector x(p.size(), 0.0);
    x[best] = 1.0;
    if (counters) ++counters->lmo_calls;
    return x;
}

AxisBox intersect_box_ball(const AxisBox& box, std::span<const double> center, double radius) {
    check_same_length(center, box.lo);
    if (radius <= 0.0) throw std::invalid_argument("intersect_box_ball: radius must be > 0");
    DenseVector lo(box.dim()), hi(box.dim());
    for (std::size_t i = 0; i < box.dim(); ++i) {
        lo[i] = std::max(box.lo[i], center[i] - radius);
        hi[i] = std::min(box.hi[i], center[i] + radius);
        if (lo[i] > hi[i])
            throw std::invalid_argument("intersect_box_ball: empty intersection");
    }
    return AxisBox(std::move(lo), std::move(hi));
}

std::pair<AffineMap, AxisBox> normalize_transform(const AxisBox& box) {
    const std::size_t n = box.dim();
    AffineMap map;
    map.scale.resize(n);
    map.offset.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double width = box.hi[i] - box.lo[i];
        if (width <= 0.0)
            throw std::invalid_argument("normalize_transform: degenerate axis");
        const double mid = 0.5 * (box.lo[i] + box.hi[i]);
        map.scale[i] = 2.0 / width;
        map.offset[i] = -map.scale[i] * mid;
    }
    return {map, AxisBox::unit(n)};
}

double box_diameter(const AxisBox& box) {
    double d = 0.0;
    for (std::size_t i = 0; i < box.dim(); ++i) d = std::max(d, box.hi[i] - box.lo[i]);
    return d;
}

bool contains(const AxisBox& box, std::span<const double> x, double tol) {
    check_same_length(x, box.lo);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < box.lo[i] - tol || x[i] > box.hi[i] + tol) return false;
    return true;
}

bool contains(const Simplex& s, std::span<const double> x, double tol) {
    if (x.size() != s.n) return false;
    double sum = 0.0;
    for (double v : x) {
        if (v < -tol) return false;
        sum += v;
    }
    return std::abs(sum - 1.0) <= std::max(tol, 1e-12) * s.n;
}

} // namespace condgrad

#pragma once

#include <cstddef>
#include <utility>

#include "condgrad/op_counters.hpp"
#include "condgrad/vec.hpp"

namespace condgrad {

/// Axis-aligned box {x : lo <= x <= hi}; an inf-norm ball when the sides are
/// equal. Intersections of boxes are boxes, which is what makes the shrinking
/// restart scheme cheap on this geometry.
struct AxisBox {
    DenseVector lo;
    DenseVector hi;

    AxisBox(DenseVector lo_, DenseVector hi_);

    std::size_t dim() const { return lo.size(); }

    /// [-1,1]^n
    static AxisBox unit(std::size_t n);
    /// {x : ||x - c||_inf <= r}
    static AxisBox ball(const DenseVector& center, double radius);
};

/// Standard unit simplex {x >= 0, sum x = 1}; kept as a second oracle for the
/// classical conditional-gradient solver.
struct Simplex {
    std::size_t n;
    explicit Simplex(std::size_t n_) : n(n_) {}
    std::size_t dim() const { return n; }
};

/// Per-axis positive rescale plus shift: T(x) = scale .* x + offset.
struct AffineMap {
    DenseVector scale;  // all entries > 0
    DenseVector offset;

    DenseVector apply(std::span<const double> x) const;
    DenseVector apply_inverse(std::span<const double> y) const;
};

/// argmin over the box of <p, x>: lo where p > 0, hi where p < 0, and the
/// interval midpoint on exact ties (still an exact minimizer). O(n).
DenseVector lmo_box(const AxisBox& box, std::span<const double> p,
                    OpCounters* counters = nullptr);

/// argmin over the simplex of <p, x> = the vertex e_i with minimal p_i,
/// lowest index on ties.
DenseVector lmo_simplex(const Simplex& s, std::span<const double> p,
                        OpCounters* counters = nullptr);

/// Per-coordinate intersection of a box with the inf-ball B_R(center).
/// Throws if the intersection is empty on some axis (cannot happen while the
/// ball center stays feasible).
AxisBox intersect_box_ball(const AxisBox& box, std::span<const double> center, double radius);

/// Map taking the box onto [-1,1]^n: T(x)_i = 2 (x_i - m_i) / (hi_i - lo_i)
/// with m the box center. Throws on degenerate axes.
std::pair<AffineMap, AxisBox> normalize_transform(const AxisBox& box);

/// Diameter in the inf-norm: max_i (hi_i - lo_i).
double box_diameter(const AxisBox& box);

bool contains(const AxisBox& box, std::span<const double> x, double tol = 1e-12);
bool contains(const Simplex& s, std::span<const double> x, double tol = 1e-12);

} // namespace condgrad

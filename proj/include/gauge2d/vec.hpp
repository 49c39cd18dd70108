#pragma once

#include <cmath>

namespace gauge2d {

/// Planar vector with dimensionless coordinates (x1, x2).
struct Vec2 {
    double x1 = 0.0;
    double x2 = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double a, double b) : x1(a), x2(b) {}

    constexpr Vec2 operator+(const Vec2& r) const { return {x1 + r.x1, x2 + r.x2}; }
    constexpr Vec2 operator-(const Vec2& r) const { return {x1 - r.x1, x2 - r.x2}; }
    constexpr Vec2 operator-() const { return {-x1, -x2}; }
    constexpr Vec2 operator*(double s) const { return {x1 * s, x2 * s}; }
    constexpr Vec2 operator/(double s) const { return {x1 / s, x2 / s}; }
    friend constexpr Vec2 operator*(double s, const Vec2& v) { return {v.x1 * s, v.x2 * s}; }

    constexpr double dot(const Vec2& r) const { return x1 * r.x1 + x2 * r.x2; }

    /// Euclidean length; used for step scaling and reporting, never as the ambient gauge.
    double norm() const { return std::hypot(x1, x2); }

    bool finite() const { return std::isfinite(x1) && std::isfinite(x2); }
};

/// Determinant form [x, y] = x1*y2 - x2*y1. Antisymmetric: [x,y] = -[y,x].
constexpr double det_form(const Vec2& x, const Vec2& y) {
    return x.x1 * y.x2 - x.x2 * y.x1;
}

}  // namespace gauge2d

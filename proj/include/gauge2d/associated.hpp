#pragma once

#include <memory>
#include <vector>

#include "gauge2d/gauge.hpp"
#include "gauge2d/vec.hpp"

namespace gauge2d {

enum class AssociatedMethod { ClosedFormRanders, PolygonExact, NumericSup };

struct NumericSupOptions {
    int grid_size = 720;      // coarse angular scan of the unit circle
    double refine_tol = 1e-12;  // golden-section bracket width in angle
};

/// The gauge associated to F:
///   F_a(x) = sup { [y, x] : F(y) = 1 },
/// where [.,.] is the determinant form. F_a is itself a gauge; the inequality
/// [y, x] <= F(y) F_a(x) holds for all y, x, and applying the construction
/// twice gives F_{a,a}(x) = F(-x).
///
/// Three evaluation paths:
///  - ClosedFormRanders: the Randers family (Euclidean included as b = 0) has
///    F_a(x) = (sqrt((1-b^2) x1^2 + x2^2) - b x2) / (1-b^2).
///  - PolygonExact: the sup of a linear form over a polytope is attained at a
///    vertex, so F_a(x) = max_i [v_i, x] exactly.
///  - NumericSup: coarse scan over grid_size angles of S followed by
///    golden-section refinement of the best bracket.
class AssociatedGauge {
public:
    /// Picks the method by base kind: Randers/Euclidean -> closed form,
    /// Polygon -> exact, otherwise numeric sup.
    explicit AssociatedGauge(const Gauge& base);
    AssociatedGauge(const Gauge& base, AssociatedMethod method, NumericSupOptions opts = {});

    /// F_a(x). Returns 0 at x = 0 (by homogeneity); rejects non-finite input.
    double eval(const Vec2& x) const;
    double operator()(const Vec2& x) const { return eval(x); }

    /// Packages F_a as a Gauge so that curvature machinery can run with F_a
    /// as the ambient gauge. The no-argument form uses the hand-derived
    /// analytic gradient for the closed Randers form and central differences
    /// over the F_a evaluation otherwise; an explicit mode forces one route
    /// (Mode::Analytic is only available for the closed form). A
    /// polygon-exact associated gauge is returned as a real polygon gauge
    /// over the polar polygon.
    Gauge as_gauge() const;
    Gauge as_gauge(GradSpec::Mode grad_mode) const;

    AssociatedMethod method() const;
    const Gauge& base() const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

/// Vertices of the polar unit disk B_a = { x : [v_i, x] <= 1 for all i } of a
/// counter-clockwise convex polygon with the origin inside. Vertex i of the
/// result corresponds to the edge (v_i, v_{i+1}); applying the construction
/// twice yields the negated original vertices (up to a cyclic rotation of the
/// list).
std::vector<Vec2> polygon_polar(const std::vector<Vec2>& vertices);

/// |F_{a,a}(x) - F(-x)|, the double-associated identity residual. Methods are
/// auto-selected from the base kind (exact for polygons).
double double_associated_residual(const Gauge& f, const Vec2& x);

/// Same residual with both association levels forced to a given method
/// (NumericSup exercises the fully numeric path end to end).
double double_associated_residual(const Gauge& f, const Vec2& x, AssociatedMethod method,
                                  NumericSupOptions opts = {});

/// Birkhoff orthogonality x -| y: [x, y] = F(x) F_a(y) within a relative
/// tolerance. Oriented, generally not symmetric in (x, y).
bool birkhoff_orthogonal(const Gauge& f, const Vec2& x, const Vec2& y, double tol = 1e-8);
bool birkhoff_orthogonal(const Gauge& f, const AssociatedGauge& fa, const Vec2& x, const Vec2& y,
                         double tol = 1e-8);

}  // namespace gauge2d

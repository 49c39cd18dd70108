#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "gauge2d/vec.hpp"

namespace gauge2d {

enum class GaugeKind { Euclidean, Randers, Polygon, Custom };

/// How first partials F_{x1}, F_{x2} are obtained.
struct GradSpec {
    enum class Mode { Analytic, CentralDifference };
    Mode mode = Mode::Analytic;

    /// Relative step for central differences: cbrt(machine epsilon) * max(1, |x|).
    static double step(const Vec2& x);
};

/// A gauge (convex distance function) on the plane:
///   F(x) > 0 for x != 0, F(0) = 0,
///   F(lambda x) = lambda F(x) for lambda > 0,
///   F(x + y) <= F(x) + F(y).
/// Unlike a norm, F(x) and F(-x) may differ. Instances are immutable after
/// construction; all operations are pure and safe to call concurrently.
class Gauge {
public:
    using EvalFn = std::function<double(const Vec2&)>;
    using GradFn = std::function<Vec2(const Vec2&)>;

    /// F(x) = |x| (the symmetric reference case).
    static Gauge euclidean();

    /// Randers gauge F(x) = |x| + b*x1, requires |b| < 1.
    static Gauge randers(double b);

    /// Gauge whose unit disk is the given convex polygon. Vertices must be in
    /// counter-clockwise order with the origin strictly inside. Evaluation is
    /// exact (max of the edge functionals); derivative-based operations are
    /// rejected with CapabilityError since the unit circle has corners.
    static Gauge polygon(std::vector<Vec2> vertices);

    /// User-supplied gauge. `grad` may be empty; gradients then fall back to
    /// central differences (when `smooth` is declared). The flags are trusted;
    /// validate() can falsify them by sampling.
    static Gauge custom(EvalFn eval, GradFn grad, bool smooth, bool strictly_convex);

    /// F(x). Rejects non-finite input with DomainError. Exactly 0 iff x = 0
    /// for the built-in kinds.
    double eval(const Vec2& x) const;
    double operator()(const Vec2& x) const { return eval(x); }

    /// (F_{x1}(x), F_{x2}(x)) using the analytic form when available, central
    /// differences otherwise. Requires x != 0 and a smooth gauge.
    Vec2 gradient(const Vec2& x) const;

    /// Gradient with an explicit mode. Analytic mode on a gauge without an
    /// analytic form raises CapabilityError.
    Vec2 gradient(const Vec2& x, const GradSpec& spec) const;

    bool has_analytic_gradient() const;

    /// The point of the unit circle S = {F = 1} in direction theta (measured
    /// counter-clockwise from the positive x1-axis).
    Vec2 unit_circle_point(double theta) const;

    GaugeKind kind() const;
    bool smooth() const;
    bool strictly_convex() const;

    /// Randers parameter (0 for the Euclidean kind). Throws for other kinds.
    double randers_b() const;
    /// Polygon vertices (counter-clockwise). Throws for other kinds.
    const std::vector<Vec2>& polygon_vertices() const;

private:
    struct Impl;
    explicit Gauge(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// Result of sampling-based falsification of the gauge axioms and flags.
struct ValidationReport {
    int n_samples = 0;
    double worst_homogeneity = 0.0;    // max |F(lx) - l F(x)| / (l F(x))
    double worst_subadditivity = 0.0;  // max (F(x+y) - F(x) - F(y)) / (F(x)+F(y)), <= 0 when the axiom holds
    double min_positivity_ratio = 0.0; // min F(x)/|x| over samples
    bool zero_at_origin = true;
    bool smooth_consistent = true;          // no corner detected when smooth was declared
    bool strictly_convex_consistent = true; // no flat segment detected when strict convexity was declared
    std::vector<std::string> notes;

    bool passed(double tol = 1e-9) const;
};

/// Samples homogeneity and subadditivity on random pairs, checks F(0) = 0 and
/// positivity, and scans the unit circle for corners / flat segments that
/// contradict the declared flags. Deterministic for a fixed seed.
ValidationReport validate(const Gauge& g, int n_samples,
                          std::uint64_t seed = 0x5eedu);

}  // namespace gauge2d

#pragma once

#include <vector>

#include "gauge2d/arc_length.hpp"
#include "gauge2d/associated.hpp"
#include "gauge2d/curve.hpp"
#include "gauge2d/gauge.hpp"

namespace gauge2d {

/// Minkowski curvature
///   k_m = (g1' g2'' - g1'' g2') / F(gamma')^3
/// evaluated at the raw parameter tau. Requires a smooth gauge and a regular
/// curve point.
double minkowski_curvature(const Gauge& f, const ParamCurve& curve, double tau);

/// Right normal field n = (-F_{x2}(gamma'), F_{x1}(gamma')); lies on the unit
/// circle of the associated gauge and satisfies [gamma'(s), n] = 1 in
/// arc-length parametrization.
Vec2 right_normal(const Gauge& f, const ParamCurve& curve, double tau);

/// Normal curvature: d/dtau of F_{x2}(gamma'(tau)) divided by g1', or the
/// mirrored branch -d/dtau F_{x1}(gamma') / g2'. The branch with the larger
/// |g_i'| is used; the ratio is invariant under reparametrization. The outer
/// derivative uses a five-point stencil whose step widens when the gauge
/// gradient itself is finite-differenced.
double normal_curvature(const Gauge& f, const ParamCurve& curve, double tau);

/// Circular curvature: the same derivative construction applied to the
/// partials of the associated gauge F_a. Equals the normal curvature with
/// respect to F_a. This is the curvature whose reciprocal is the evolute
/// radius.
double circular_curvature(const Gauge& f, const ParamCurve& curve, double tau);
double circular_curvature(const AssociatedGauge& fa, const ParamCurve& curve, double tau);

/// Arc-length curvature k_l = k_m * F(n), computed in one pass from the
/// explicit formula.
double arc_length_curvature(const Gauge& f, const ParamCurve& curve, double tau);

/// Left normal field: the point of S whose tangent direction is gamma'(s),
/// on the side with [gamma', left] < 0. Computed as the negated right normal
/// with respect to F_a:  ((F_a)_{x2}(gamma'), -(F_a)_{x1}(gamma')).
Vec2 left_normal(const Gauge& f, const ParamCurve& curve, double tau);
Vec2 left_normal(const AssociatedGauge& fa, const ParamCurve& curve, double tau);

struct CurvatureSample {
    double s = 0.0;
    double tau = 0.0;
    Vec2 point;
    Vec2 tangent;       // F-unit: F(tangent) = 1
    Vec2 right_normal;  // on S_a
    Vec2 left_normal;   // on S
    double k_m = 0.0;
    double k_n = 0.0;
    double k_c = 0.0;
    double k_l = 0.0;
    bool k_c_degenerate = false;  // |k_c| below the degeneracy threshold
};

struct CurvatureProfile {
    std::vector<CurvatureSample> samples;
    double total_arc_length = 0.0;
};

struct ProfileOptions {
    double quad_tol = 1e-10;
    double degenerate_kc = 1e-12;
};

/// Samples the curve uniformly in gauge arc length (endpoints included) and
/// records all curvature data per sample.
CurvatureProfile profile(const Gauge& f, const ParamCurve& curve, int n_samples,
                         ProfileOptions opts = {});

}  // namespace gauge2d

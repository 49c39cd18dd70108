#include "gauge2d/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gauge2d/errors.hpp"

namespace gauge2d {

namespace {

void require_smooth(const Gauge& f, const char* who) {
    if (!f.smooth())
        throw CapabilityError(std::string(who) + ": gauge is not smooth (no derivatives)");
}

Vec2 regular_d1(const Gauge& f, const ParamCurve& curve, double tau, const char* who) {
    const Vec2 d = curve.d1(tau);
    if (!d.finite() || !(f.eval(d) > 0.0))
        throw DomainError(std::string(who) + ": curve not regular at tau = " + std::to_string(tau));
    return d;
}

/// Step of the outer tau-derivative of F_{x_i}(gamma'(tau)). Wider when the
/// gauge gradient is finite-differenced or the curve derivatives are
/// interpolation-grade (their noise is amplified by 1/h), narrower where the
/// direction of gamma' turns fast.
double outer_step(const Gauge& f, const ParamCurve& curve, double tau) {
    const bool sharp = f.has_analytic_gradient() &&
                       curve.derivative_mode() == DerivativeMode::Analytic;
    const double base = sharp ? 5e-4 : 1e-2;
    const double v = curve.d1(tau).norm();
    const double a = curve.d2(tau).norm();
    const double scale = std::clamp(v / std::max(a, 0.25 * v), 0.25, 1.0);
    return base * scale;
}

/// Fourth-order five-point first derivative of g at t.
template <typename G>
double five_point_derivative(G&& g, double t, double h) {
    return (-g(t + 2.0 * h) + 8.0 * g(t + h) - 8.0 * g(t - h) + g(t - 2.0 * h)) / (12.0 * h);
}

/// d/dtau of the `comp` gradient component of f along gamma'.
double gradient_component_derivative(const Gauge& f, const ParamCurve& curve, double tau,
                                     int comp) {
    const double h = outer_step(f, curve, tau);
    const auto g = [&](double t) {
        const Vec2 grad = f.gradient(curve.d1(t));
        return comp == 0 ? grad.x1 : grad.x2;
    };
    return five_point_derivative(g, tau, h);
}

/// Shared branch logic of the normal-type curvatures: the gauge g may be the
/// ambient gauge (normal curvature) or its associated gauge (circular).
double normal_curvature_impl(const Gauge& g, const ParamCurve& curve, double tau,
                             const Vec2& d1) {
    if (std::abs(d1.x1) >= std::abs(d1.x2))
        return gradient_component_derivative(g, curve, tau, 1) / d1.x1;
    return -gradient_component_derivative(g, curve, tau, 0) / d1.x2;
}

}  // namespace

double minkowski_curvature(const Gauge& f, const ParamCurve& curve, double tau) {
    require_smooth(f, "minkowski_curvature");
    const Vec2 d1 = regular_d1(f, curve, tau, "minkowski_curvature");
    const Vec2 d2 = curve.d2(tau);
    const double speed = f.eval(d1);
    return det_form(d1, d2) / (speed * speed * speed);
}

Vec2 right_normal(const Gauge& f, const ParamCurve& curve, double tau) {
    require_smooth(f, "right_normal");
    const Vec2 d1 = regular_d1(f, curve, tau, "right_normal");
    const Vec2 grad = f.gradient(d1);
    return {-grad.x2, grad.x1};
}

double normal_curvature(const Gauge& f, const ParamCurve& curve, double tau) {
    require_smooth(f, "normal_curvature");
    const Vec2 d1 = regular_d1(f, curve, tau, "normal_curvature");
    return normal_curvature_impl(f, curve, tau, d1);
}

double circular_curvature(const Gauge& f, const ParamCurve& curve, double tau) {
    require_smooth(f, "circular_curvature");
    return circular_curvature(AssociatedGauge(f), curve, tau);
}

double circular_curvature(const AssociatedGauge& fa, const ParamCurve& curve, double tau) {
    const Gauge fa_gauge = fa.as_gauge();
    const Vec2 d1 = regular_d1(fa.base(), curve, tau, "circular_curvature");
    return normal_curvature_impl(fa_gauge, curve, tau, d1);
}

double arc_length_curvature(const Gauge& f, const ParamCurve& curve, double tau) {
    require_smooth(f, "arc_length_curvature");
    const Vec2 d1 = regular_d1(f, curve, tau, "arc_length_curvature");
    const Vec2 d2 = curve.d2(tau);
    const double speed = f.eval(d1);
    const Vec2 grad = f.gradient(d1);
    return det_form(d1, d2) / (speed * speed * speed) * f.eval({-grad.x2, grad.x1});
}

Vec2 left_normal(const Gauge& f, const ParamCurve& curve, double tau) {
    require_smooth(f, "left_normal");
    return left_normal(AssociatedGauge(f), curve, tau);
}

Vec2 left_normal(const AssociatedGauge& fa, const ParamCurve& curve, double tau) {
    const Gauge fa_gauge = fa.as_gauge();
    const Vec2 d1 = regular_d1(fa.base(), curve, tau, "left_normal");
    const Vec2 grad = fa_gauge.gradient(d1);
    return {grad.x2, -grad.x1};
}

CurvatureProfile profile(const Gauge& f, const ParamCurve& curve, int n_samples,
                         ProfileOptions opts) {
    if (n_samples < 2) throw DomainError("profile: n_samples >= 2 required");
    require_smooth(f, "profile");
    const ArcLengthTable table(f, curve, opts.quad_tol);
    const AssociatedGauge fa(f);
    const Gauge fa_gauge = fa.as_gauge();

    CurvatureProfile out;
    out.total_arc_length = table.total();
    out.samples.reserve(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        CurvatureSample rec;
        rec.s = table.total() * i / (n_samples - 1);
        rec.tau = table.tau_of_s(rec.s);
        rec.point = curve.value(rec.tau);
        const Vec2 d1 = regular_d1(f, curve, rec.tau, "profile");
        const Vec2 d2 = curve.d2(rec.tau);
        const double speed = f.eval(d1);
        rec.tangent = d1 / speed;
        const Vec2 grad = f.gradient(d1);
        rec.right_normal = {-grad.x2, grad.x1};
        const Vec2 grad_a = fa_gauge.gradient(d1);
        rec.left_normal = {grad_a.x2, -grad_a.x1};
        rec.k_m = det_form(d1, d2) / (speed * speed * speed);
        rec.k_n = normal_curvature_impl(f, curve, rec.tau, d1);
        rec.k_c = normal_curvature_impl(fa_gauge, curve, rec.tau, d1);
        rec.k_l = rec.k_m * f.eval(rec.right_normal);
        rec.k_c_degenerate = std::abs(rec.k_c) < opts.degenerate_kc;
        out.samples.push_back(rec);
    }
    return out;
}

}  // namespace gauge2d

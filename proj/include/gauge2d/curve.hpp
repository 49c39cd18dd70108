#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gauge2d/vec.hpp"

namespace gauge2d {

enum class DerivativeMode { Analytic, CentralDifference };

/// Oriented planar curve over a closed parameter interval, with value and two
/// derivatives. Orientation is that of increasing parameter. The callables
/// must remain evaluable in a small neighbourhood beyond the interval ends
/// (finite-difference stencils probe slightly outside); all built-ins are.
class ParamCurve {
public:
    using PointFn = std::function<Vec2(double)>;

    ParamCurve(PointFn value, PointFn d1, PointFn d2, double tau_min, double tau_max,
               DerivativeMode mode = DerivativeMode::Analytic);

    static ParamCurve circle(double r, double tau_min = 0.0, double tau_max = k_two_pi);
    static ParamCurve ellipse(double a, double b, double tau_min = 0.0, double tau_max = k_two_pi);
    /// (a cos tau, b sin(omega tau)).
    static ParamCurve lissajous(double a, double b, double omega, double tau_min = 0.0,
                                double tau_max = k_two_pi);
    /// p + tau * w.
    static ParamCurve segment(const Vec2& p, const Vec2& w, double tau_min = 0.0,
                              double tau_max = 1.0);
    /// Trigonometric polynomial per component; coefficient layout
    /// a0, a1, b1, a2, b2, ... meaning a0 + sum_k (a_k cos(k tau) + b_k sin(k tau)).
    static ParamCurve trig_poly(std::vector<double> x_coeffs, std::vector<double> y_coeffs,
                                double tau_min = 0.0, double tau_max = k_two_pi);
    /// Value-only curve; derivatives by central differences.
    static ParamCurve from_function(PointFn value, double tau_min, double tau_max);

    Vec2 value(double tau) const { return value_(tau); }
    Vec2 d1(double tau) const { return d1_(tau); }
    Vec2 d2(double tau) const { return d2_(tau); }

    double tau_min() const { return tau_min_; }
    double tau_max() const { return tau_max_; }
    DerivativeMode derivative_mode() const { return mode_; }

    /// The curve tau -> value(h(tau)) over [lo, hi]; h must be smooth and
    /// increasing, with derivatives dh, ddh supplied.
    ParamCurve reparametrized(std::function<double(double)> h, std::function<double(double)> dh,
                              std::function<double(double)> ddh, double lo, double hi) const;

    static constexpr double k_two_pi = 6.283185307179586476925287;

private:
    PointFn value_, d1_, d2_;
    double tau_min_, tau_max_;
    DerivativeMode mode_;
};

/// Orientation reversal tau -> value(-tau) over the mirrored interval.
ParamCurve reverse(const ParamCurve& c);

/// Discretized curve: ordered (s, point) samples. `s` is the parameter of
/// record of whatever construction produced the samples (for evolute and
/// involute outputs, the arc length of the input curve).
struct SampledCurve {
    struct Sample {
        double s = 0.0;
        Vec2 point;
    };
    std::vector<Sample> samples;
    bool closed = false;
    std::string source_meta;
};

/// Orientation reversal: sample order flipped, parameters negated and
/// mirrored so that s stays strictly increasing.
SampledCurve reverse(const SampledCurve& c);

/// Interpolates the samples with a cubic spline (not-a-knot ends) over the
/// sample parameter and exposes it as a ParamCurve with the spline's own
/// derivatives. Requires strictly increasing s and pairwise-distinct
/// consecutive points; degenerate inputs raise DomainError.
ParamCurve lift(const SampledCurve& c);

}  // namespace gauge2d

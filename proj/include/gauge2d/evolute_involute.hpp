#pragma once

#include <string>

#include "gauge2d/arc_length.hpp"
#include "gauge2d/associated.hpp"
#include "gauge2d/curve.hpp"
#include "gauge2d/curvature.hpp"
#include "gauge2d/gauge.hpp"

namespace gauge2d {

/// Evolute point E = gamma(tau) - left_normal(tau) / k_c(tau); only the
/// associated gauge enters the formula. Raises NumericError when
/// |k_c| < k_min (the construction divides by k_c).
Vec2 evolute_point(const AssociatedGauge& fa, const ParamCurve& curve, double tau,
                   double k_min = 1e-8);

/// Involute point I = gamma(tau) + (c - s) * tangent with the F-unit tangent
/// and s the arc length at tau taken from `table`.
Vec2 involute_point(const Gauge& f, const ParamCurve& curve, const ArcLengthTable& table, double c,
                    double tau);

/// Evolute sampled uniformly in the arc length of `curve`; the sample `s`
/// field records that arc length. All samples must satisfy |k_c| >= k_min,
/// otherwise NumericError reports the offending s values.
SampledCurve evolute(const Gauge& f, const ParamCurve& curve, int samples = 512,
                     double k_min = 1e-8);

/// Involute I(s) = gamma(s) + (c - s) gamma'(s), sampled uniformly in arc
/// length; well defined also at s = c (the point is stationary there).
SampledCurve involute(const Gauge& f, const ParamCurve& curve, double c, int samples = 512);

enum class RoundTripStatus { Applicable, NotApplicable };

struct RoundTripReport {
    RoundTripStatus status = RoundTripStatus::NotApplicable;
    int theorem_case = 0;        // 1 or 2; 0 when not applicable
    double max_deviation = 0.0;  // max Euclidean pointwise deviation from gamma
    double constant = 0.0;       // involute constant used
    int points_checked = 0;
    std::string message;

    bool applicable() const { return status == RoundTripStatus::Applicable; }
};

struct RoundTripOptions {
    int lift_samples = 8192;   // density of the intermediate sampled curve
    int check_points = 256;    // deviation evaluation grid
    double quad_tol = 1e-11;   // arc-length quadrature tolerance
    double stationary_exclusion = 1e-3;  // skip |s - c| below this (involute is stationary at s = c)
};

/// Round trip "evolute of the involute is the curve":
///  case 1 when (c - s) k_l(s) > 0 on the whole arc, the evolute of the
///  involute is compared with gamma pointwise;
///  case 2 when (c - s) k_l(s) < 0, the reverse evolute of the reverse
///  involute is compared instead. Mixed signs report NotApplicable.
RoundTripReport check_theorem_4_1(const Gauge& f, const ParamCurve& curve, double c,
                                  RoundTripOptions opts = {});

/// Round trip "an involute of the evolute is the curve", with the involute
/// constant recovered at the arc start as c = 1/k_c(start):
///  case 1 for k_c strictly increasing in s, case 2 (reverse curves) for
///  strictly decreasing. Constant or sign-changing k_c reports NotApplicable.
RoundTripReport check_theorem_4_2(const Gauge& f, const ParamCurve& curve,
                                  RoundTripOptions opts = {});

}  // namespace gauge2d

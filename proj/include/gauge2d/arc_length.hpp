#pragma once

#include <vector>

#include "gauge2d/curve.hpp"
#include "gauge2d/gauge.hpp"

namespace gauge2d {

/// Monotone map between the raw curve parameter tau and the gauge arc length
///   s(tau) = integral of F(gamma'(t)) dt from tau_min,
/// built by adaptive Simpson quadrature with total error bounded by `tol`.
/// The inverse tau(s) is solved per query (monotone Hermite initial guess,
/// safeguarded Newton with ds/dtau = F(gamma')). A curve that fails
/// F(gamma') > 0 at any quadrature node is rejected with DomainError.
class ArcLengthTable {
public:
    ArcLengthTable(const Gauge& f, const ParamCurve& curve, double tol = 1e-10);

    double total() const { return s_.back(); }
    double quadrature_tol() const { return tol_; }
    double tau_min() const { return tau_.front(); }
    double tau_max() const { return tau_.back(); }

    /// s(tau); tau is clamped into the curve's interval.
    double s_of_tau(double tau) const;

    /// tau(s); s is clamped into [0, total()].
    double tau_of_s(double s) const;

private:
    double speed(double tau) const;
    double integrate(double a, double b, double tol) const;

    Gauge f_;
    ParamCurve curve_;
    double tol_;
    std::vector<double> tau_;    // panel breakpoints
    std::vector<double> s_;      // cumulative arc length at breakpoints
    std::vector<double> speed_;  // F(gamma') at breakpoints
};

/// Convenience spelling of the constructor.
ArcLengthTable arc_length(const Gauge& f, const ParamCurve& curve, double tol = 1e-10);

}  // namespace gauge2d

#include "gauge2d/evolute_involute.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gauge2d/errors.hpp"

namespace gauge2d {

namespace {

double circular_curvature_checked(const AssociatedGauge& fa, const ParamCurve& curve, double tau,
                                  double k_min) {
    const double kc = circular_curvature(fa, curve, tau);
    if (!(std::abs(kc) >= k_min))
        throw NumericError("evolute: |k_c| = " + std::to_string(std::abs(kc)) +
                           " below threshold at tau = " + std::to_string(tau));
    return kc;
}

bool nearly_closed(const SampledCurve& c) {
    if (c.samples.size() < 3) return false;
    const Vec2 gap = c.samples.front().point - c.samples.back().point;
    double extent = 0.0;
    for (const auto& sm : c.samples)
        extent = std::max(extent, (sm.point - c.samples.front().point).norm());
    return gap.norm() <= 1e-9 * std::max(1.0, extent);
}

SampledCurve evolute_samples(const AssociatedGauge& fa, const ParamCurve& curve,
                             const ArcLengthTable& table, int samples, double k_min) {
    SampledCurve out;
    out.source_meta = "evolute";
    out.samples.reserve(samples);
    std::vector<double> offenders;
    for (int i = 0; i < samples; ++i) {
        const double s = table.total() * i / (samples - 1);
        const double tau = table.tau_of_s(s);
        const double kc = circular_curvature(fa, curve, tau);
        if (!(std::abs(kc) >= k_min)) {
            offenders.push_back(s);
            continue;
        }
        const Vec2 e = curve.value(tau) - left_normal(fa, curve, tau) / kc;
        out.samples.push_back({s, e});
    }
    if (!offenders.empty()) {
        std::ostringstream msg;
        msg << "evolute: |k_c| below " << k_min << " at s = {";
        for (std::size_t i = 0; i < std::min<std::size_t>(offenders.size(), 8); ++i)
            msg << (i ? ", " : "") << offenders[i];
        if (offenders.size() > 8) msg << ", ...";
        msg << "} (" << offenders.size() << " samples)";
        throw NumericError(msg.str());
    }
    out.closed = nearly_closed(out);
    return out;
}

SampledCurve involute_samples(const Gauge& f, const ParamCurve& curve, const ArcLengthTable& table,
                              double c, int samples) {
    SampledCurve out;
    out.source_meta = "involute c=" + std::to_string(c);
    out.samples.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        const double s = table.total() * i / (samples - 1);
        const double tau = table.tau_of_s(s);
        const Vec2 d1 = curve.d1(tau);
        const Vec2 tangent = d1 / f.eval(d1);
        out.samples.push_back({s, curve.value(tau) + (c - s) * tangent});
    }
    out.closed = nearly_closed(out);
    return out;
}

/// Round-trip intermediates are sampled uniformly in tau with the arc
/// length integrated forward. Inverse lookups would inject knot-incoherent
/// parameter noise that spline differentiation amplifies; forward-measured s
/// errs only smoothly, which merely reparametrizes the lifted curve.
SampledCurve evolute_samples_tau(const AssociatedGauge& fa, const ParamCurve& curve,
                                 const ArcLengthTable& table, int samples, double k_min) {
    SampledCurve out;
    out.source_meta = "evolute";
    out.samples.reserve(samples);
    int offenders = 0;
    for (int i = 0; i < samples; ++i) {
        const double tau =
            curve.tau_min() + (curve.tau_max() - curve.tau_min()) * i / (samples - 1);
        const double kc = circular_curvature(fa, curve, tau);
        if (!(std::abs(kc) >= k_min)) {
            ++offenders;
            continue;
        }
        const Vec2 e = curve.value(tau) - left_normal(fa, curve, tau) / kc;
        out.samples.push_back({table.s_of_tau(tau), e});
    }
    if (offenders > 0)
        throw NumericError("evolute: |k_c| below " + std::to_string(k_min) + " at " +
                           std::to_string(offenders) + " samples");
    out.closed = nearly_closed(out);
    return out;
}

SampledCurve involute_samples_tau(const Gauge& f, const ParamCurve& curve,
                                  const ArcLengthTable& table, double c, int samples) {
    SampledCurve out;
    out.source_meta = "involute c=" + std::to_string(c);
    out.samples.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        const double tau =
            curve.tau_min() + (curve.tau_max() - curve.tau_min()) * i / (samples - 1);
        const double s = table.s_of_tau(tau);
        const Vec2 d1 = curve.d1(tau);
        out.samples.push_back({s, curve.value(tau) + (c - s) * (d1 / f.eval(d1))});
    }
    out.closed = nearly_closed(out);
    return out;
}

double max_knot_gap(const SampledCurve& c) {
    double gap = 0.0;
    for (std::size_t i = 1; i < c.samples.size(); ++i)
        gap = std::max(gap, c.samples[i].s - c.samples[i - 1].s);
    return gap;
}

struct SignClassification {
    int sign = 0;  // +1, -1, or 0 when mixed / degenerate
    double min_value = 0.0;
    double max_value = 0.0;
};

SignClassification classify_sign(const std::vector<double>& values) {
    SignClassification r;
    r.min_value = *std::min_element(values.begin(), values.end());
    r.max_value = *std::max_element(values.begin(), values.end());
    if (r.min_value > 0.0) r.sign = 1;
    if (r.max_value < 0.0) r.sign = -1;
    return r;
}

}  // namespace

Vec2 evolute_point(const AssociatedGauge& fa, const ParamCurve& curve, double tau,
                   double k_min) {
    const double kc = circular_curvature_checked(fa, curve, tau, k_min);
    return curve.value(tau) - left_normal(fa, curve, tau) / kc;
}

Vec2 involute_point(const Gauge& f, const ParamCurve& curve, const ArcLengthTable& table, double c,
                    double tau) {
    const Vec2 d1 = curve.d1(tau);
    const Vec2 tangent = d1 / f.eval(d1);
    return curve.value(tau) + (c - table.s_of_tau(tau)) * tangent;
}

SampledCurve evolute(const Gauge& f, const ParamCurve& curve, int samples, double k_min) {
    if (samples < 2) throw DomainError("evolute: samples >= 2 required");
    const ArcLengthTable table(f, curve);
    const AssociatedGauge fa(f);
    return evolute_samples(fa, curve, table, samples, k_min);
}

SampledCurve involute(const Gauge& f, const ParamCurve& curve, double c, int samples) {
    if (samples < 2) throw DomainError("involute: samples >= 2 required");
    const ArcLengthTable table(f, curve);
    return involute_samples(f, curve, table, c, samples);
}

RoundTripReport check_theorem_4_1(const Gauge& f, const ParamCurve& curve, double c,
                                  RoundTripOptions opts) {
    RoundTripReport report;
    report.constant = c;
    const ArcLengthTable table(f, curve, opts.quad_tol);
    const double total = table.total();

    // Sign of (c - s) k_l(s) over the arc decides the case.
    const int sign_grid = 129;
    std::vector<double> values;
    values.reserve(sign_grid);
    for (int i = 0; i < sign_grid; ++i) {
        const double s = total * i / (sign_grid - 1);
        const double kl = arc_length_curvature(f, curve, table.tau_of_s(s));
        values.push_back((c - s) * kl);
    }
    const SignClassification cls = classify_sign(values);
    if (cls.sign == 0) {
        report.status = RoundTripStatus::NotApplicable;
        std::ostringstream msg;
        msg << "(c - s) k_l changes sign on the arc (min " << cls.min_value << ", max "
            << cls.max_value << "); hypotheses not met";
        report.message = msg.str();
        return report;
    }
    report.theorem_case = cls.sign > 0 ? 1 : 2;
    report.status = RoundTripStatus::Applicable;

    const SampledCurve inv = involute_samples_tau(f, curve, table, c, opts.lift_samples);
    const AssociatedGauge fa(f);

    // Margin keeps the five-point curvature stencil and the spline's least
    // accurate end segments out of the deviation statistics.
    const double margin =
        std::min(std::max(0.05, 6.0 * max_knot_gap(inv)), 0.2 * total);

    double max_dev = 0.0;
    int checked = 0;
    if (cls.sign > 0) {
        const ParamCurve lifted = lift(inv);
        for (int i = 0; i < opts.check_points; ++i) {
            const double s = margin + (total - 2.0 * margin) * i / (opts.check_points - 1);
            if (std::abs(s - c) < opts.stationary_exclusion) continue;
            const Vec2 e = evolute_point(fa, lifted, s);
            const Vec2 target = curve.value(table.tau_of_s(s));
            max_dev = std::max(max_dev, (e - target).norm());
            ++checked;
        }
    } else {
        // Reverse evolute of the reverse involute, compared after the
        // orientation substitution sigma = -s.
        const ParamCurve lifted = lift(reverse(inv));
        for (int i = 0; i < opts.check_points; ++i) {
            const double sigma =
                (-total + margin) + (total - 2.0 * margin) * i / (opts.check_points - 1);
            if (std::abs(-sigma - c) < opts.stationary_exclusion) continue;
            const Vec2 e = evolute_point(fa, lifted, sigma);
            const Vec2 target = curve.value(table.tau_of_s(-sigma));
            max_dev = std::max(max_dev, (e - target).norm());
            ++checked;
        }
    }
    report.max_deviation = max_dev;
    report.points_checked = checked;
    report.message = cls.sign > 0 ? "evolute(involute) compared with the curve"
                                  : "reverse evolute of reverse involute compared with the curve";
    return report;
}

RoundTripReport check_theorem_4_2(const Gauge& f, const ParamCurve& curve, RoundTripOptions opts) {
    RoundTripReport report;
    const ArcLengthTable table(f, curve, opts.quad_tol);
    const double total = table.total();
    const AssociatedGauge fa(f);

    // k_c must be strictly monotone in s, with one sign of derivative.
    const int grid = 129;
    std::vector<double> kc(grid);
    double kc_scale = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double s = total * i / (grid - 1);
        kc[i] = circular_curvature(fa, curve, table.tau_of_s(s));
        kc_scale = std::max(kc_scale, std::abs(kc[i]));
    }
    const double span = kc.back() - kc.front();
    const double span_tol = 1e-6 * std::max(1.0, kc_scale);
    const double step_tol = 1e-9 * std::max(1.0, kc_scale);
    bool increasing = true, decreasing = true;
    for (int i = 1; i < grid; ++i) {
        const double d = kc[i] - kc[i - 1];
        if (d < -step_tol) increasing = false;
        if (d > step_tol) decreasing = false;
    }
    if (std::abs(span) <= span_tol || (!increasing && !decreasing)) {
        report.status = RoundTripStatus::NotApplicable;
        std::ostringstream msg;
        msg << "k_c is not strictly monotone of one sign on the arc (span " << span
            << "); hypotheses not met";
        report.message = msg.str();
        return report;
    }
    report.theorem_case = span > 0.0 ? 1 : 2;
    report.status = RoundTripStatus::Applicable;

    const SampledCurve evo = evolute_samples_tau(fa, curve, table, opts.lift_samples, 1e-8);
    // Only value and first derivative of the lift are consumed here, so a
    // small end margin suffices.
    const double margin =
        std::min(std::max(1e-3 * total, 6.0 * max_knot_gap(evo)), 0.2 * total);

    double max_dev = 0.0;
    int checked = 0;
    if (span > 0.0) {
        const double c = 1.0 / kc.front();  // proof-pinned constant at the arc start
        report.constant = c;
        const ParamCurve lifted = lift(evo);
        const ArcLengthTable lift_table(f, lifted, opts.quad_tol);
        for (int i = 0; i < opts.check_points; ++i) {
            const double sigma = margin + (total - 2.0 * margin) * i / (opts.check_points - 1);
            const double s_star = lift_table.s_of_tau(sigma);
            const Vec2 d1 = lifted.d1(sigma);
            const Vec2 tangent = d1 / f.eval(d1);
            const Vec2 p = lifted.value(sigma) + (c - s_star) * tangent;
            const Vec2 target = curve.value(table.tau_of_s(sigma));
            max_dev = std::max(max_dev, (p - target).norm());
            ++checked;
        }
        report.message = "involute(evolute) with c = 1/k_c(start) compared with the curve";
    } else {
        const double c = 1.0 / kc.back();  // reversed start = base arc end
        report.constant = c;
        const ParamCurve lifted = lift(reverse(evo));
        const ArcLengthTable lift_table(f, lifted, opts.quad_tol);
        for (int i = 0; i < opts.check_points; ++i) {
            const double sigma =
                (-total + margin) + (total - 2.0 * margin) * i / (opts.check_points - 1);
            const double s_star = lift_table.s_of_tau(sigma);
            const Vec2 d1 = lifted.d1(sigma);
            const Vec2 tangent = d1 / f.eval(d1);
            const Vec2 p = lifted.value(sigma) + (c - s_star) * tangent;
            const Vec2 target = curve.value(table.tau_of_s(-sigma));
            max_dev = std::max(max_dev, (p - target).norm());
            ++checked;
        }
        report.message =
            "reverse involute of reverse evolute with c = 1/k_c(end) compared with the curve";
    }
    report.max_deviation = max_dev;
    report.points_checked = checked;
    return report;
}

}  // namespace gauge2d

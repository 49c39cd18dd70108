#include "gauge2d/arc_length.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gauge2d/errors.hpp"

namespace gauge2d {

namespace {

constexpr int kPanels = 256;
constexpr int kMaxDepth = 40;

template <typename F>
double adaptive_simpson(F&& f, double a, double fa, double m, double fm, double b, double fb,
                        double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth >= kMaxDepth || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth + 1) +
           adaptive_simpson(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth + 1);
}

template <typename F>
double integrate_interval(F&& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, fa, m, fm, b, fb, whole, tol, 0);
}

}  // namespace

double ArcLengthTable::speed(double tau) const {
    const Vec2 d = curve_.d1(tau);
    const double v = f_.eval(d);
    if (!(v > 0.0) || !std::isfinite(v))
        throw DomainError("arc_length: curve not regular (F(gamma') <= 0) at tau = " +
                          std::to_string(tau));
    return v;
}

double ArcLengthTable::integrate(double a, double b, double tol) const {
    return integrate_interval([this](double t) { return speed(t); }, a, b, tol);
}

ArcLengthTable::ArcLengthTable(const Gauge& f, const ParamCurve& curve, double tol)
    : f_(f), curve_(curve), tol_(tol) {
    if (!(tol > 0.0)) throw DomainError("arc_length: tol must be positive");
    const double lo = curve.tau_min();
    const double hi = curve.tau_max();
    tau_.resize(kPanels + 1);
    s_.resize(kPanels + 1);
    speed_.resize(kPanels + 1);
    const double panel_tol = tol / kPanels;
    tau_[0] = lo;
    s_[0] = 0.0;
    speed_[0] = speed(lo);
    for (int i = 1; i <= kPanels; ++i) {
        tau_[i] = lo + (hi - lo) * i / kPanels;
        s_[i] = s_[i - 1] + integrate(tau_[i - 1], tau_[i], panel_tol);
        speed_[i] = speed(tau_[i]);
        if (!(s_[i] > s_[i - 1]))
            throw DomainError("arc_length: arc length not strictly increasing near tau = " +
                              std::to_string(tau_[i]));
    }
}

double ArcLengthTable::s_of_tau(double tau) const {
    tau = std::clamp(tau, tau_.front(), tau_.back());
    const auto it = std::upper_bound(tau_.begin(), tau_.end(), tau);
    std::size_t i = static_cast<std::size_t>(it - tau_.begin());
    if (i > 0) --i;
    if (i >= tau_.size() - 1) i = tau_.size() - 2;
    return s_[i] + integrate(tau_[i], tau, tol_ / kPanels);
}

double ArcLengthTable::tau_of_s(double s) const {
    s = std::clamp(s, 0.0, s_.back());
    const auto it = std::upper_bound(s_.begin(), s_.end(), s);
    std::size_t i = static_cast<std::size_t>(it - s_.begin());
    if (i > 0) --i;
    if (i >= s_.size() - 1) i = s_.size() - 2;

    // Cubic Hermite guess for tau(s) on the panel, using dtau/ds = 1/speed.
    const double h = s_[i + 1] - s_[i];
    const double u = (s - s_[i]) / h;
    const double u2 = u * u, u3 = u2 * u;
    const double p0 = tau_[i], p1 = tau_[i + 1];
    const double d0 = h / speed_[i], d1 = h / speed_[i + 1];
    double tau = (2.0 * u3 - 3.0 * u2 + 1.0) * p0 + (u3 - 2.0 * u2 + u) * d0 +
                 (-2.0 * u3 + 3.0 * u2) * p1 + (u3 - u2) * d1;
    tau = std::clamp(tau, tau_[i], tau_[i + 1]);

    // Safeguarded Newton on s(tau) - s = 0 within the panel. The best
    // iterate is tracked and returned: bisection fallbacks can wander away
    // from a root that Newton has already hit.
    double lo = tau_[i], hi = tau_[i + 1];
    double best_tau = tau;
    double best_resid = HUGE_VAL;
    for (int iter = 0; iter < 30; ++iter) {
        const double resid = s_of_tau(tau) - s;
        if (std::abs(resid) < best_resid) {
            best_resid = std::abs(resid);
            best_tau = tau;
        }
        if (std::abs(resid) <= 1e-15 * std::max(1.0, std::abs(s))) break;
        if (resid > 0.0)
            hi = tau;
        else
            lo = tau;
        const double step = resid / speed(tau);
        double next = tau - step;
        if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
        const double change = std::abs(next - tau);
        tau = next;
        if (change <= 1e-15 * std::max(1.0, std::abs(tau))) break;
    }
    return best_tau;
}

ArcLengthTable arc_length(const Gauge& f, const ParamCurve& curve, double tol) {
    return ArcLengthTable(f, curve, tol);
}

}  // namespace gauge2d

#include "gauge2d/curve.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <memory>
#include <utility>

#include "gauge2d/errors.hpp"

namespace gauge2d {

ParamCurve::ParamCurve(PointFn value, PointFn d1, PointFn d2, double tau_min, double tau_max,
                       DerivativeMode mode)
    : value_(std::move(value)),
      d1_(std::move(d1)),
      d2_(std::move(d2)),
      tau_min_(tau_min),
      tau_max_(tau_max),
      mode_(mode) {
    if (!value_ || !d1_ || !d2_) throw DomainError("ParamCurve: value and derivatives required");
    if (!(tau_min_ < tau_max_)) throw DomainError("ParamCurve: tau_min < tau_max required");
}

ParamCurve ParamCurve::circle(double r, double tau_min, double tau_max) {
    if (!(r > 0.0)) throw DomainError("circle: radius must be positive");
    return ParamCurve([r](double t) { return Vec2{r * std::cos(t), r * std::sin(t)}; },
                      [r](double t) { return Vec2{-r * std::sin(t), r * std::cos(t)}; },
                      [r](double t) { return Vec2{-r * std::cos(t), -r * std::sin(t)}; },
                      tau_min, tau_max);
}

ParamCurve ParamCurve::ellipse(double a, double b, double tau_min, double tau_max) {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("ellipse: semi-axes must be positive");
    return ParamCurve([a, b](double t) { return Vec2{a * std::cos(t), b * std::sin(t)}; },
                      [a, b](double t) { return Vec2{-a * std::sin(t), b * std::cos(t)}; },
                      [a, b](double t) { return Vec2{-a * std::cos(t), -b * std::sin(t)}; },
                      tau_min, tau_max);
}

ParamCurve ParamCurve::lissajous(double a, double b, double omega, double tau_min,
                                 double tau_max) {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("lissajous: amplitudes must be positive");
    return ParamCurve(
        [a, b, omega](double t) { return Vec2{a * std::cos(t), b * std::sin(omega * t)}; },
        [a, b, omega](double t) {
            return Vec2{-a * std::sin(t), b * omega * std::cos(omega * t)};
        },
        [a, b, omega](double t) {
            return Vec2{-a * std::cos(t), -b * omega * omega * std::sin(omega * t)};
        },
        tau_min, tau_max);
}

ParamCurve ParamCurve::segment(const Vec2& p, const Vec2& w, double tau_min, double tau_max) {
    if (!p.finite() || !w.finite()) throw DomainError("segment: non-finite input");
    if (w.x1 == 0.0 && w.x2 == 0.0) throw DomainError("segment: direction must be nonzero");
    return ParamCurve([p, w](double t) { return p + t * w; },
                      [w](double) { return w; },
                      [](double) { return Vec2{0.0, 0.0}; },
                      tau_min, tau_max);
}

namespace {

double trig_eval(const std::vector<double>& c, double t, int deriv) {
    double acc = (deriv == 0) ? c[0] : 0.0;
    for (std::size_t i = 1; i < c.size(); i += 2) {
        const double k = static_cast<double>((i + 1) / 2);
        const double a = c[i];
        const double b = (i + 1 < c.size()) ? c[i + 1] : 0.0;
        const double kt = k * t;
        switch (deriv) {
            case 0: acc += a * std::cos(kt) + b * std::sin(kt); break;
            case 1: acc += k * (-a * std::sin(kt) + b * std::cos(kt)); break;
            default: acc += k * k * (-a * std::cos(kt) - b * std::sin(kt)); break;
        }
    }
    return acc;
}

}  // namespace

ParamCurve ParamCurve::trig_poly(std::vector<double> x_coeffs, std::vector<double> y_coeffs,
                                 double tau_min, double tau_max) {
    if (x_coeffs.empty() || y_coeffs.empty())
        throw DomainError("trig_poly: coefficient lists must be non-empty");
    auto xc = std::make_shared<std::vector<double>>(std::move(x_coeffs));
    auto yc = std::make_shared<std::vector<double>>(std::move(y_coeffs));
    return ParamCurve(
        [xc, yc](double t) { return Vec2{trig_eval(*xc, t, 0), trig_eval(*yc, t, 0)}; },
        [xc, yc](double t) { return Vec2{trig_eval(*xc, t, 1), trig_eval(*yc, t, 1)}; },
        [xc, yc](double t) { return Vec2{trig_eval(*xc, t, 2), trig_eval(*yc, t, 2)}; },
        tau_min, tau_max);
}

ParamCurve ParamCurve::from_function(PointFn value, double tau_min, double tau_max) {
    if (!value) throw DomainError("from_function: evaluator required");
    static const double h1 = std::cbrt(DBL_EPSILON);        // first-derivative step
    static const double h2 = std::sqrt(std::sqrt(DBL_EPSILON));  // second-derivative step
    PointFn d1 = [value](double t) {
        const double h = h1 * std::max(1.0, std::abs(t));
        return (value(t + h) - value(t - h)) / (2.0 * h);
    };
    PointFn d2 = [value](double t) {
        const double h = h2 * std::max(1.0, std::abs(t));
        return (value(t + h) - 2.0 * value(t) + value(t - h)) / (h * h);
    };
    return ParamCurve(std::move(value), std::move(d1), std::move(d2), tau_min, tau_max,
                      DerivativeMode::CentralDifference);
}

ParamCurve ParamCurve::reparametrized(std::function<double(double)> h,
                                      std::function<double(double)> dh,
                                      std::function<double(double)> ddh, double lo,
                                      double hi) const {
    PointFn v = value_, g1 = d1_, g2 = d2_;
    return ParamCurve(
        [v, h](double t) { return v(h(t)); },
        [g1, h, dh](double t) { return dh(t) * g1(h(t)); },
        [g1, g2, h, dh, ddh](double t) {
            const double u = h(t), du = dh(t);
            return du * du * g2(u) + ddh(t) * g1(u);
        },
        lo, hi, mode_);
}

ParamCurve reverse(const ParamCurve& c) {
    auto v = [c](double t) { return c.value(-t); };
    auto d1 = [c](double t) { return -c.d1(-t); };
    auto d2 = [c](double t) { return c.d2(-t); };
    return ParamCurve(v, d1, d2, -c.tau_max(), -c.tau_min(), c.derivative_mode());
}

SampledCurve reverse(const SampledCurve& c) {
    SampledCurve out;
    out.closed = c.closed;
    out.source_meta = c.source_meta.empty() ? "reverse" : "reverse(" + c.source_meta + ")";
    out.samples.reserve(c.samples.size());
    for (auto it = c.samples.rbegin(); it != c.samples.rend(); ++it)
        out.samples.push_back({-it->s, it->point});
    return out;
}

namespace {

/// Piecewise cubic with second derivatives m_i at the knots.
struct Spline {
    std::vector<double> t, y, m;

    double piece(double x, std::size_t i, int deriv) const {
        const double h = t[i + 1] - t[i];
        const double a = (t[i + 1] - x) / h;
        const double b = (x - t[i]) / h;
        switch (deriv) {
            case 0:
                return a * y[i] + b * y[i + 1] +
                       ((a * a * a - a) * m[i] + (b * b * b - b) * m[i + 1]) * h * h / 6.0;
            case 1:
                return (y[i + 1] - y[i]) / h +
                       ((1.0 - 3.0 * a * a) * m[i] + (3.0 * b * b - 1.0) * m[i + 1]) * h / 6.0;
            default:
                return a * m[i] + b * m[i + 1];
        }
    }

    double eval(double x, int deriv) const {
        // Extrapolate with the boundary cubics outside the knot range.
        std::size_t i = std::upper_bound(t.begin(), t.end(), x) - t.begin();
        if (i > 0) --i;
        if (i >= t.size() - 1) i = t.size() - 2;
        return piece(x, i, deriv);
    }
};

/// Not-a-knot cubic spline: third derivative continuous across the first and
/// last interior knots. The two boundary unknowns are eliminated into the
/// interior tridiagonal system.
Spline build_spline(const std::vector<double>& t, const std::vector<double>& y) {
    const std::size_t n = t.size();
    Spline sp;
    sp.t = t;
    sp.y = y;
    sp.m.assign(n, 0.0);
    if (n == 2) return sp;  // linear
    if (n == 3) {
        // Single parabola through three points: constant second derivative.
        const double d01 = (y[1] - y[0]) / (t[1] - t[0]);
        const double d12 = (y[2] - y[1]) / (t[2] - t[1]);
        const double m = 2.0 * (d12 - d01) / (t[2] - t[0]);
        sp.m.assign(3, m);
        return sp;
    }

    std::vector<double> h(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) h[i] = t[i + 1] - t[i];

    // Interior unknowns m_1 .. m_{n-2}; not-a-knot gives
    //   m_0 = ((h0 + h1) m_1 - h0 m_2) / h1
    //   m_{n-1} = ((h_{n-2} + h_{n-3}) m_{n-2} - h_{n-2} m_{n-3}) / h_{n-3}
    const std::size_t k = n - 2;
    std::vector<double> sub(k, 0.0), diag(k, 0.0), sup(k, 0.0), rhs(k, 0.0);
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t i = j + 1;  // knot index
        sub[j] = h[i - 1] / 6.0;
        diag[j] = (h[i - 1] + h[i]) / 3.0;
        sup[j] = h[i] / 6.0;
        rhs[j] = (y[i + 1] - y[i]) / h[i] - (y[i] - y[i - 1]) / h[i - 1];
    }
    // Fold the not-a-knot expressions for m_0 and m_{n-1} into rows 0 and k-1.
    {
        const double c0 = h[0] / 6.0;  // coefficient of m_0 in the first interior row
        diag[0] += c0 * (h[0] + h[1]) / h[1];
        sup[0] += -c0 * h[0] / h[1];
        sub[0] = 0.0;
    }
    {
        const double ce = h[n - 2] / 6.0;  // coefficient of m_{n-1} in the last interior row
        diag[k - 1] += ce * (h[n - 2] + h[n - 3]) / h[n - 3];
        sub[k - 1] += -ce * h[n - 2] / h[n - 3];
        sup[k - 1] = 0.0;
    }
    // Thomas algorithm.
    for (std::size_t j = 1; j < k; ++j) {
        const double w = sub[j] / diag[j - 1];
        diag[j] -= w * sup[j - 1];
        rhs[j] -= w * rhs[j - 1];
    }
    std::vector<double> m(k);
    m[k - 1] = rhs[k - 1] / diag[k - 1];
    for (std::size_t j = k - 1; j-- > 0;) m[j] = (rhs[j] - sup[j] * m[j + 1]) / diag[j];

    for (std::size_t j = 0; j < k; ++j) sp.m[j + 1] = m[j];
    sp.m[0] = ((h[0] + h[1]) * sp.m[1] - h[0] * sp.m[2]) / h[1];
    sp.m[n - 1] = ((h[n - 2] + h[n - 3]) * sp.m[n - 2] - h[n - 2] * sp.m[n - 3]) / h[n - 3];
    return sp;
}

}  // namespace

ParamCurve lift(const SampledCurve& c) {
    const std::size_t n = c.samples.size();
    if (n < 2) throw DomainError("lift: at least 2 samples required");
    std::vector<double> t(n), x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = c.samples[i].s;
        x[i] = c.samples[i].point.x1;
        y[i] = c.samples[i].point.x2;
        if (i > 0) {
            if (!(t[i] > t[i - 1])) throw DomainError("lift: s must be strictly increasing");
            if (x[i] == x[i - 1] && y[i] == y[i - 1])
                throw DomainError("lift: consecutive points must be distinct");
        }
    }
    auto sx = std::make_shared<Spline>(build_spline(t, x));
    auto sy = std::make_shared<Spline>(build_spline(t, y));
    // Tagged CentralDifference: the derivatives are interpolation-grade, so
    // consumers widen their difference stencils past the knot spacing.
    return ParamCurve(
        [sx, sy](double s) { return Vec2{sx->eval(s, 0), sy->eval(s, 0)}; },
        [sx, sy](double s) { return Vec2{sx->eval(s, 1), sy->eval(s, 1)}; },
        [sx, sy](double s) { return Vec2{sx->eval(s, 2), sy->eval(s, 2)}; },
        t.front(), t.back(), DerivativeMode::CentralDifference);
}

}  // namespace gauge2d

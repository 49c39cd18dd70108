#include "gauge2d/associated.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "gauge2d/errors.hpp"

namespace gauge2d {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Golden-section maximization of h over [a, b], assuming the maximizer is
/// interior to the bracket. Returns the best value seen.
template <typename F>
double golden_max(F&& h, double a, double b, double tol) {
    constexpr double inv_phi = 0.6180339887498948482;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double hc = h(c);
    double hd = h(d);
    double best = std::max(hc, hd);
    while (b - a > tol) {
        if (hc > hd) {
            b = d;
            d = c;
            hd = hc;
            c = b - inv_phi * (b - a);
            hc = h(c);
        } else {
            a = c;
            c = d;
            hc = hd;
            d = a + inv_phi * (b - a);
            hd = h(d);
        }
        best = std::max(best, std::max(hc, hd));
    }
    return best;
}

}  // namespace

struct AssociatedGauge::Impl {
    Gauge base;
    AssociatedMethod method;
    NumericSupOptions opts;
    double b = 0.0;               // closed Randers form
    std::vector<Vec2> vertices;   // polygon base
    std::vector<Vec2> s_points;   // numeric sup: precomputed points of S

    explicit Impl(Gauge g) : base(std::move(g)), method(AssociatedMethod::NumericSup) {}

    double eval_closed_form(const Vec2& x) const {
        const double den = 1.0 - b * b;
        const double g = std::sqrt(den * x.x1 * x.x1 + x.x2 * x.x2);
        return (g - b * x.x2) / den;
    }

    Vec2 grad_closed_form(const Vec2& x) const {
        const double den = 1.0 - b * b;
        const double g = std::sqrt(den * x.x1 * x.x1 + x.x2 * x.x2);
        return {x.x1 / g, (x.x2 / g - b) / den};
    }

    double eval_polygon(const Vec2& x) const {
        double best = -HUGE_VAL;
        for (const Vec2& v : vertices) best = std::max(best, det_form(v, x));
        return best;
    }

    double eval_numeric(const Vec2& x) const {
        const int n = opts.grid_size;
        int best_i = 0;
        double best = -HUGE_VAL;
        for (int i = 0; i < n; ++i) {
            const double v = det_form(s_points[i], x);
            if (v > best) {
                best = v;
                best_i = i;
            }
        }
        const double step = kTwoPi / n;
        const auto objective = [&](double theta) {
            return det_form(base.unit_circle_point(theta), x);
        };
        const double lo = (best_i - 1) * step;
        const double hi = (best_i + 1) * step;
        return std::max(best, golden_max(objective, lo, hi, opts.refine_tol));
    }
};

AssociatedGauge::AssociatedGauge(const Gauge& base) {
    AssociatedMethod m = AssociatedMethod::NumericSup;
    switch (base.kind()) {
        case GaugeKind::Euclidean:
        case GaugeKind::Randers:
            m = AssociatedMethod::ClosedFormRanders;
            break;
        case GaugeKind::Polygon:
            m = AssociatedMethod::PolygonExact;
            break;
        case GaugeKind::Custom:
            m = AssociatedMethod::NumericSup;
            break;
    }
    *this = AssociatedGauge(base, m);
}

AssociatedGauge::AssociatedGauge(const Gauge& base, AssociatedMethod method,
                                 NumericSupOptions opts) {
    auto impl = std::make_shared<Impl>(base);
    impl->method = method;
    impl->opts = opts;
    switch (method) {
        case AssociatedMethod::ClosedFormRanders:
            if (base.kind() != GaugeKind::Randers && base.kind() != GaugeKind::Euclidean)
                throw CapabilityError("AssociatedGauge: closed form requires a Randers base");
            impl->b = base.randers_b();
            break;
        case AssociatedMethod::PolygonExact:
            if (base.kind() != GaugeKind::Polygon)
                throw CapabilityError("AssociatedGauge: exact method requires a polygon base");
            impl->vertices = base.polygon_vertices();
            break;
        case AssociatedMethod::NumericSup: {
            if (opts.grid_size < 8) throw DomainError("AssociatedGauge: grid_size >= 8 required");
            if (!(opts.refine_tol > 0.0))
                throw DomainError("AssociatedGauge: refine_tol must be positive");
            impl->s_points.reserve(opts.grid_size);
            for (int i = 0; i < opts.grid_size; ++i)
                impl->s_points.push_back(base.unit_circle_point(kTwoPi * i / opts.grid_size));
            break;
        }
    }
    impl_ = std::move(impl);
}

double AssociatedGauge::eval(const Vec2& x) const {
    if (!x.finite()) throw DomainError("associated_eval: non-finite input vector");
    if (x.x1 == 0.0 && x.x2 == 0.0) return 0.0;
    switch (impl_->method) {
        case AssociatedMethod::ClosedFormRanders:
            return impl_->eval_closed_form(x);
        case AssociatedMethod::PolygonExact:
            return impl_->eval_polygon(x);
        case AssociatedMethod::NumericSup:
            return impl_->eval_numeric(x);
    }
    return 0.0;  // unreachable
}

Gauge AssociatedGauge::as_gauge() const {
    return as_gauge(impl_->method == AssociatedMethod::ClosedFormRanders
                        ? GradSpec::Mode::Analytic
                        : GradSpec::Mode::CentralDifference);
}

Gauge AssociatedGauge::as_gauge(GradSpec::Mode grad_mode) const {
    const auto impl = impl_;
    if (impl->method == AssociatedMethod::PolygonExact)
        return Gauge::polygon(polygon_polar(impl->vertices));

    Gauge::EvalFn eval = [impl](const Vec2& x) {
        if (x.x1 == 0.0 && x.x2 == 0.0) return 0.0;
        return impl->method == AssociatedMethod::ClosedFormRanders ? impl->eval_closed_form(x)
                                                                   : impl->eval_numeric(x);
    };
    Gauge::GradFn grad;
    if (grad_mode == GradSpec::Mode::Analytic) {
        if (impl->method != AssociatedMethod::ClosedFormRanders)
            throw CapabilityError("as_gauge: analytic gradient only for the closed Randers form");
        grad = [impl](const Vec2& x) { return impl->grad_closed_form(x); };
    }
    const bool smooth =
        impl->method == AssociatedMethod::ClosedFormRanders || impl->base.strictly_convex();
    const bool strictly_convex =
        impl->method == AssociatedMethod::ClosedFormRanders || impl->base.smooth();
    return Gauge::custom(std::move(eval), std::move(grad), smooth, strictly_convex);
}

AssociatedMethod AssociatedGauge::method() const { return impl_->method; }
const Gauge& AssociatedGauge::base() const { return impl_->base; }

std::vector<Vec2> polygon_polar(const std::vector<Vec2>& vertices) {
    // Reuse the polygon gauge validation (CCW, origin interior, convex).
    Gauge::polygon(vertices);
    const std::size_t n = vertices.size();
    std::vector<Vec2> polar;
    polar.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& p = vertices[i];
        const Vec2& q = vertices[(i + 1) % n];
        polar.push_back((q - p) / det_form(p, q));
    }
    return polar;
}

double double_associated_residual(const Gauge& f, const Vec2& x) {
    if (!x.finite()) throw DomainError("double_associated_residual: non-finite input");
    if (x.x1 == 0.0 && x.x2 == 0.0)
        throw DomainError("double_associated_residual: x != 0 required");
    const AssociatedGauge fa(f);
    const AssociatedGauge faa(fa.as_gauge());
    return std::abs(faa.eval(x) - f.eval(-x));
}

double double_associated_residual(const Gauge& f, const Vec2& x, AssociatedMethod method,
                                  NumericSupOptions opts) {
    if (!x.finite()) throw DomainError("double_associated_residual: non-finite input");
    if (x.x1 == 0.0 && x.x2 == 0.0)
        throw DomainError("double_associated_residual: x != 0 required");
    const AssociatedGauge fa(f, method, opts);
    const Gauge fa_gauge = fa.as_gauge();
    const AssociatedMethod second =
        method == AssociatedMethod::PolygonExact ? AssociatedMethod::PolygonExact
                                                 : AssociatedMethod::NumericSup;
    const AssociatedGauge faa(fa_gauge, second, opts);
    return std::abs(faa.eval(x) - f.eval(-x));
}

bool birkhoff_orthogonal(const Gauge& f, const Vec2& x, const Vec2& y, double tol) {
    return birkhoff_orthogonal(f, AssociatedGauge(f), x, y, tol);
}

bool birkhoff_orthogonal(const Gauge& f, const AssociatedGauge& fa, const Vec2& x, const Vec2& y,
                         double tol) {
    if (!x.finite() || !y.finite()) throw DomainError("birkhoff_orthogonal: non-finite input");
    if ((x.x1 == 0.0 && x.x2 == 0.0) || (y.x1 == 0.0 && y.x2 == 0.0))
        throw DomainError("birkhoff_orthogonal: zero vector");
    const double scale = f.eval(x) * fa.eval(y);
    return std::abs(det_form(x, y) - scale) <= tol * scale;
}

}  // namespace gauge2d

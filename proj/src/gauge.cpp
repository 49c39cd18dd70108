#include "gauge2d/gauge.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>

#include "gauge2d/detail/rng.hpp"
#include "gauge2d/errors.hpp"

namespace gauge2d {

namespace {

void require_finite(const Vec2& x, const char* who) {
    if (!x.finite()) throw DomainError(std::string(who) + ": non-finite input vector");
}

/// Outward edge functional of the edge p -> q of a CCW polygon with the
/// origin inside: a . p = a . q = 1, so the edge lies on {a . x = 1}.
Vec2 edge_functional(const Vec2& p, const Vec2& q) {
    const double d = det_form(p, q);
    return {(q.x2 - p.x2) / d, (p.x1 - q.x1) / d};
}

void validate_polygon(const std::vector<Vec2>& v, const char* who) {
    if (v.size() < 3) throw DomainError(std::string(who) + ": polygon needs at least 3 vertices");
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!v[i].finite()) throw DomainError(std::string(who) + ": non-finite polygon vertex");
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % n];
        const Vec2& c = v[(i + 2) % n];
        if (det_form(a, b) <= 0.0)
            throw DomainError(std::string(who) +
                              ": polygon must be counter-clockwise with the origin strictly inside");
        if (det_form(b - a, c - b) <= 0.0)
            throw DomainError(std::string(who) + ": polygon must be strictly convex");
    }
}

}  // namespace

double GradSpec::step(const Vec2& x) {
    static const double cbrt_eps = std::cbrt(DBL_EPSILON);
    return cbrt_eps * std::max(1.0, x.norm());
}

struct Gauge::Impl {
    GaugeKind kind = GaugeKind::Custom;
    bool smooth = false;
    bool strictly_convex = false;
    double b = 0.0;                    // Randers parameter
    std::vector<Vec2> vertices;        // polygon kind
    std::vector<Vec2> edge_functionals;
    EvalFn eval;
    GradFn grad;  // empty when no analytic form exists
};

Gauge Gauge::euclidean() {
    auto impl = std::make_shared<Impl>();
    impl->kind = GaugeKind::Euclidean;
    impl->smooth = true;
    impl->strictly_convex = true;
    impl->eval = [](const Vec2& x) { return x.norm(); };
    impl->grad = [](const Vec2& x) {
        const double r = x.norm();
        return Vec2{x.x1 / r, x.x2 / r};
    };
    return Gauge(std::move(impl));
}

Gauge Gauge::randers(double b) {
    if (!(std::abs(b) < 1.0)) throw DomainError("randers: |b| < 1 required");
    auto impl = std::make_shared<Impl>();
    impl->kind = GaugeKind::Randers;
    impl->smooth = true;
    impl->strictly_convex = true;
    impl->b = b;
    impl->eval = [b](const Vec2& x) { return x.norm() + b * x.x1; };
    impl->grad = [b](const Vec2& x) {
        const double r = x.norm();
        return Vec2{x.x1 / r + b, x.x2 / r};
    };
    return Gauge(std::move(impl));
}

Gauge Gauge::polygon(std::vector<Vec2> vertices) {
    validate_polygon(vertices, "polygon");
    auto impl = std::make_shared<Impl>();
    impl->kind = GaugeKind::Polygon;
    impl->smooth = false;
    impl->strictly_convex = false;
    impl->vertices = std::move(vertices);
    const std::size_t n = impl->vertices.size();
    impl->edge_functionals.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        impl->edge_functionals.push_back(
            edge_functional(impl->vertices[i], impl->vertices[(i + 1) % n]));
    impl->eval = [fns = impl->edge_functionals](const Vec2& x) {
        double best = -HUGE_VAL;
        for (const Vec2& a : fns) best = std::max(best, a.dot(x));
        return best;
    };
    return Gauge(std::move(impl));
}

Gauge Gauge::custom(EvalFn eval, GradFn grad, bool smooth, bool strictly_convex) {
    if (!eval) throw DomainError("custom gauge: evaluator required");
    auto impl = std::make_shared<Impl>();
    impl->kind = GaugeKind::Custom;
    impl->smooth = smooth;
    impl->strictly_convex = strictly_convex;
    impl->eval = std::move(eval);
    impl->grad = std::move(grad);
    return Gauge(std::move(impl));
}

double Gauge::eval(const Vec2& x) const {
    require_finite(x, "eval");
    if (x.x1 == 0.0 && x.x2 == 0.0) return 0.0;
    return impl_->eval(x);
}

Vec2 Gauge::gradient(const Vec2& x) const {
    GradSpec spec;
    spec.mode = impl_->grad ? GradSpec::Mode::Analytic : GradSpec::Mode::CentralDifference;
    return gradient(x, spec);
}

Vec2 Gauge::gradient(const Vec2& x, const GradSpec& spec) const {
    require_finite(x, "gradient");
    if (x.x1 == 0.0 && x.x2 == 0.0) throw DomainError("gradient: undefined at the origin");
    if (!impl_->smooth)
        throw CapabilityError("gradient: gauge is not smooth (polygonal or declared non-smooth)");
    if (spec.mode == GradSpec::Mode::Analytic) {
        if (!impl_->grad) throw CapabilityError("gradient: no analytic gradient available");
        return impl_->grad(x);
    }
    const double h = GradSpec::step(x);
    const double fx_p = impl_->eval({x.x1 + h, x.x2});
    const double fx_m = impl_->eval({x.x1 - h, x.x2});
    const double fy_p = impl_->eval({x.x1, x.x2 + h});
    const double fy_m = impl_->eval({x.x1, x.x2 - h});
    return {(fx_p - fx_m) / (2.0 * h), (fy_p - fy_m) / (2.0 * h)};
}

bool Gauge::has_analytic_gradient() const { return static_cast<bool>(impl_->grad); }

Vec2 Gauge::unit_circle_point(double theta) const {
    const Vec2 dir{std::cos(theta), std::sin(theta)};
    return dir / impl_->eval(dir);
}

GaugeKind Gauge::kind() const { return impl_->kind; }
bool Gauge::smooth() const { return impl_->smooth; }
bool Gauge::strictly_convex() const { return impl_->strictly_convex; }

double Gauge::randers_b() const {
    if (impl_->kind == GaugeKind::Randers) return impl_->b;
    if (impl_->kind == GaugeKind::Euclidean) return 0.0;
    throw DomainError("randers_b: not a Randers gauge");
}

const std::vector<Vec2>& Gauge::polygon_vertices() const {
    if (impl_->kind != GaugeKind::Polygon) throw DomainError("polygon_vertices: not a polygon gauge");
    return impl_->vertices;
}

bool ValidationReport::passed(double tol) const {
    return zero_at_origin && min_positivity_ratio > 0.0 && worst_homogeneity <= tol &&
           worst_subadditivity <= tol && smooth_consistent && strictly_convex_consistent;
}

ValidationReport validate(const Gauge& g, int n_samples, std::uint64_t seed) {
    if (n_samples < 1) throw DomainError("validate: n_samples >= 1 required");
    ValidationReport report;
    report.n_samples = n_samples;
    detail::Rng rng(seed);

    report.zero_at_origin = (g.eval({0.0, 0.0}) == 0.0);
    if (!report.zero_at_origin) report.notes.push_back("F(0) != 0");

    double min_ratio = HUGE_VAL;
    for (int i = 0; i < n_samples; ++i) {
        const Vec2 x = rng.vec_in_annulus(0.1, 10.0);
        const Vec2 y = rng.vec_in_annulus(0.1, 10.0);
        const double lambda = rng.uniform(0.01, 10.0);
        const double fx = g.eval(x);
        const double fy = g.eval(y);
        min_ratio = std::min(min_ratio, fx / x.norm());

        const double hom = std::abs(g.eval(lambda * x) - lambda * fx) / (lambda * fx);
        report.worst_homogeneity = std::max(report.worst_homogeneity, hom);

        const double sub = (g.eval(x + y) - fx - fy) / (fx + fy);
        report.worst_subadditivity = std::max(report.worst_subadditivity, sub);
    }
    report.min_positivity_ratio = min_ratio;
    if (!(min_ratio > 0.0)) report.notes.push_back("positivity violated on a sample");

    // Unit-circle scan: gradient jumps reveal corners, near-unit midpoints
    // reveal flat segments.
    const int n_theta = std::clamp(n_samples, 64, 4096);
    if (g.smooth()) {
        std::vector<double> jumps;
        jumps.reserve(n_theta);
        double sum_norm = 0.0;
        Vec2 prev = g.gradient(g.unit_circle_point(0.0));
        for (int i = 1; i <= n_theta; ++i) {
            const double theta = 2.0 * std::numbers::pi * i / n_theta;
            const Vec2 grad = g.gradient(g.unit_circle_point(theta));
            jumps.push_back((grad - prev).norm());
            sum_norm += grad.norm();
            prev = grad;
        }
        std::vector<double> sorted = jumps;
        std::sort(sorted.begin(), sorted.end());
        const double median = sorted[sorted.size() / 2];
        const double max_jump = sorted.back();
        const double mean_norm = sum_norm / n_theta;
        if (max_jump > std::max(0.1 * mean_norm, 30.0 * median)) {
            report.smooth_consistent = false;
            report.notes.push_back("gradient jump on the unit circle contradicts smooth=true");
        }
    }
    if (g.strictly_convex()) {
        double worst_mid = 0.0;
        Vec2 prev = g.unit_circle_point(0.0);
        for (int i = 1; i <= n_theta; ++i) {
            const double theta = 2.0 * std::numbers::pi * i / n_theta;
            const Vec2 p = g.unit_circle_point(theta);
            worst_mid = std::max(worst_mid, g.eval(0.5 * (prev + p)));
            prev = p;
        }
        if (worst_mid >= 1.0 - 1e-10) {
            report.strictly_convex_consistent = false;
            report.notes.push_back("flat segment on the unit circle contradicts strictly_convex=true");
        }
    }
    return report;
}

}  // namespace gauge2d

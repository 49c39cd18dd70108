#include <cmath>
#include <functional>

#include "doctest.h"
#include "gauge2d/arc_length.hpp"
#include "gauge2d/associated.hpp"
#include "gauge2d/curvature.hpp"
#include "gauge2d/curve.hpp"
#include "gauge2d/detail/rng.hpp"
#include "gauge2d/errors.hpp"

using namespace gauge2d;

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }
bool near(const Vec2& a, const Vec2& b, double tol) {
    return near(a.x1, b.x1, tol) && near(a.x2, b.x2, tol);
}

using VecOfS = std::function<Vec2(double)>;

/// Five-point first derivative in arc length.
Vec2 d1_in_s(const VecOfS& f, double s, double h) {
    return (-1.0 * f(s + 2.0 * h) + 8.0 * f(s + h) - 8.0 * f(s - h) + f(s - 2.0 * h)) /
           (12.0 * h);
}

/// Five-point second derivative in arc length.
Vec2 d2_in_s(const VecOfS& f, double s, double h) {
    return (-1.0 * f(s + 2.0 * h) + 16.0 * f(s + h) - 30.0 * f(s) + 16.0 * f(s - h) -
            1.0 * f(s - 2.0 * h)) /
           (12.0 * h * h);
}

/// Hand oracles for the Randers gauge with b = 0.5 along the Euclidean unit
/// circle, derived by substituting gamma = (cos, sin) into the curvature
/// formulas with F = |x| + b x1 and its closed-form associated gauge.
double randers_circle_km(double tau) { return std::pow(1.0 - 0.5 * std::sin(tau), -3.0); }
double randers_circle_kc(double tau) {
    const double s = std::sin(tau);
    return std::pow(1.0 - 0.25 * s * s, -1.5);
}

}  // namespace

TEST_CASE("Minkowski curvature") {
    const Gauge euc = Gauge::euclidean();
    SUBCASE("circle of radius r has k_m = 1/r") {
        for (double r : {0.5, 1.0, 2.0, 5.0}) {
            const ParamCurve c = ParamCurve::circle(r);
            CHECK(near(minkowski_curvature(euc, c, 0.3), 1.0 / r, 1e-12 / r));
            CHECK(near(minkowski_curvature(euc, c, 4.0), 1.0 / r, 1e-12 / r));
        }
    }
    SUBCASE("Randers circle oracle") {
        const Gauge ran = Gauge::randers(0.5);
        const ParamCurve c = ParamCurve::circle(1.0);
        detail::Rng rng(73);
        for (int i = 0; i < 100; ++i) {
            const double tau = rng.uniform(0.0, kTwoPi);
            CHECK(near(minkowski_curvature(ran, c, tau), randers_circle_km(tau), 1e-10));
        }
        CHECK(near(minkowski_curvature(ran, c, kTwoPi / 4.0), 8.0, 1e-10));
    }
    SUBCASE("straight lines are flat under any gauge") {
        const ParamCurve seg = ParamCurve::segment({1.0, 2.0}, {0.3, -0.4});
        CHECK(minkowski_curvature(euc, seg, 0.5) == 0.0);
        CHECK(minkowski_curvature(Gauge::randers(0.7), seg, 0.5) == 0.0);
    }
    SUBCASE("polygon gauges have no curvature operations") {
        const Gauge tri = Gauge::polygon({{1.0, 0.0}, {0.0, 1.0}, {-1.0, -1.0}});
        const ParamCurve c = ParamCurve::circle(1.0);
        CHECK_THROWS_AS(minkowski_curvature(tri, c, 0.0), CapabilityError);
        CHECK_THROWS_AS(normal_curvature(tri, c, 0.0), CapabilityError);
        CHECK_THROWS_AS(right_normal(tri, c, 0.0), CapabilityError);
        CHECK_THROWS_AS(circular_curvature(tri, c, 0.0), CapabilityError);
    }
}

TEST_CASE("right normal field") {
    const ParamCurve c = ParamCurve::circle(1.0);
    CHECK(near(right_normal(Gauge::euclidean(), c, 0.0), {-1.0, 0.0}, 1e-14));
    // Randers: n = (-cos tau, -sin tau + b) from the hand gradient.
    const Gauge ran = Gauge::randers(0.5);
    CHECK(near(right_normal(ran, c, 0.0), {-1.0, 0.5}, 1e-14));
    detail::Rng rng(79);
    for (int i = 0; i < 50; ++i) {
        const double tau = rng.uniform(0.0, kTwoPi);
        CHECK(near(right_normal(ran, c, tau),
                   {-std::cos(tau), -std::sin(tau) + 0.5}, 1e-12));
    }

    SUBCASE("gamma''(s) = k_m n along the arc-length parametrization") {
        const ArcLengthTable table(ran, c, 1e-12);
        const VecOfS gamma_of_s = [&](double s) { return c.value(table.tau_of_s(s)); };
        for (double s : {0.7, 2.1, 3.9, 5.5}) {
            const double tau = table.tau_of_s(s);
            const Vec2 lhs = d2_in_s(gamma_of_s, s, 5e-3);
            const Vec2 rhs = minkowski_curvature(ran, c, tau) * right_normal(ran, c, tau);
            CHECK(near(lhs, rhs, 1e-5));
        }
    }
}

TEST_CASE("normal curvature") {
    const Gauge euc = Gauge::euclidean();
    SUBCASE("classical reduction on circles") {
        for (double r : {0.5, 2.0}) {
            const ParamCurve c = ParamCurve::circle(r);
            detail::Rng rng(83);
            for (int i = 0; i < 20; ++i) {
                const double tau = rng.uniform(0.0, kTwoPi);
                CHECK(near(normal_curvature(euc, c, tau), 1.0 / r, 1e-9));
            }
        }
    }
    SUBCASE("Randers circle: k_n is identically one") {
        const Gauge ran = Gauge::randers(0.5);
        const ParamCurve c = ParamCurve::circle(1.0);
        detail::Rng rng(89);
        for (int i = 0; i < 100; ++i) {
            const double tau = rng.uniform(0.0, kTwoPi);
            CHECK(near(normal_curvature(ran, c, tau), 1.0, 1e-8));
        }
    }
    SUBCASE("both branches agree away from axis tangencies") {
        const Gauge ran = Gauge::randers(0.3);
        const ParamCurve ell = ParamCurve::ellipse(2.0, 1.0);
        const double h = 5e-4;
        detail::Rng rng(97);
        for (int i = 0; i < 40; ++i) {
            const double tau = rng.uniform(0.3, 1.2);  // both velocity components sizable
            const auto g1 = [&](double t) { return ran.gradient(ell.d1(t)).x1; };
            const auto g2 = [&](double t) { return ran.gradient(ell.d1(t)).x2; };
            const auto d5 = [h](const std::function<double(double)>& g, double t) {
                return (-g(t + 2 * h) + 8 * g(t + h) - 8 * g(t - h) + g(t - 2 * h)) / (12 * h);
            };
            const Vec2 v = ell.d1(tau);
            const double branch_i = d5(g2, tau) / v.x1;
            const double branch_ii = -d5(g1, tau) / v.x2;
            CHECK(near(branch_i, branch_ii, 1e-6));
            const double lib = normal_curvature(ran, ell, tau);
            CHECK(near(lib, branch_i, 1e-6));
        }
    }
    SUBCASE("n'(s) = -k_n gamma'(s)") {
        const Gauge ran = Gauge::randers(0.5);
        const ParamCurve c = ParamCurve::circle(1.0);
        const ArcLengthTable table(ran, c, 1e-12);
        const VecOfS n_of_s = [&](double s) {
            return right_normal(ran, c, table.tau_of_s(s));
        };
        for (double s : {0.5, 1.7, 3.2, 4.8}) {
            const double tau = table.tau_of_s(s);
            const Vec2 lhs = d1_in_s(n_of_s, s, 5e-3);
            const Vec2 tangent = c.d1(tau) / ran.eval(c.d1(tau));
            const Vec2 rhs = -normal_curvature(ran, c, tau) * tangent;
            CHECK(near(lhs, rhs, 1e-5));
        }
    }
}

TEST_CASE("circular curvature") {
    SUBCASE("classical reduction on circles") {
        const Gauge euc = Gauge::euclidean();
        const ParamCurve c = ParamCurve::circle(2.0);
        detail::Rng rng(101);
        for (int i = 0; i < 20; ++i) {
            const double tau = rng.uniform(0.0, kTwoPi);
            CHECK(near(circular_curvature(euc, c, tau), 0.5, 1e-8));
        }
    }
    SUBCASE("Randers circle oracle") {
        const Gauge ran = Gauge::randers(0.5);
        const ParamCurve c = ParamCurve::circle(1.0);
        const Gauge fa_cd = AssociatedGauge(ran).as_gauge(GradSpec::Mode::CentralDifference);
        detail::Rng rng(103);
        for (int i = 0; i < 60; ++i) {
            const double tau = rng.uniform(0.0, kTwoPi);
            CHECK(near(circular_curvature(ran, c, tau), randers_circle_kc(tau), 1e-9));
            // The fully numeric route (central differences over the
            // associated evaluation) stays within the looser band.
            CHECK(near(normal_curvature(fa_cd, c, tau), randers_circle_kc(tau), 1e-5));
        }
        CHECK(near(circular_curvature(ran, c, kTwoPi / 4.0), std::pow(0.75, -1.5), 1e-9));
    }
    SUBCASE("analytic associated partials sharpen the same value") {
        const Gauge ran = Gauge::randers(0.5);
        const AssociatedGauge fa(ran);
        const Gauge fa_analytic = fa.as_gauge(GradSpec::Mode::Analytic);
        const ParamCurve c = ParamCurve::circle(1.0);
        for (double tau : {0.2, 1.3, 2.9, 5.1}) {
            CHECK(near(normal_curvature(fa_analytic, c, tau), randers_circle_kc(tau), 1e-9));
        }
    }
    SUBCASE("equals the normal curvature with respect to the associated gauge") {
        const Gauge ran = Gauge::randers(0.4);
        const AssociatedGauge fa(ran);
        // Central-difference partials keep the two routes distinct.
        const Gauge fa_gauge = fa.as_gauge(GradSpec::Mode::CentralDifference);
        const ParamCurve ell = ParamCurve::ellipse(2.0, 1.0);
        detail::Rng rng(107);
        for (int i = 0; i < 40; ++i) {
            const double tau = rng.uniform(0.0, kTwoPi);
            CHECK(near(circular_curvature(ran, ell, tau), normal_curvature(fa_gauge, ell, tau),
                       1e-5));
        }
    }
}

TEST_CASE("arc-length curvature") {
    SUBCASE("classical reduction") {
        const Gauge euc = Gauge::euclidean();
        const ParamCurve c = ParamCurve::circle(2.0);
        CHECK(near(arc_length_curvature(euc, c, 1.1), 0.5, 1e-12));
    }
    SUBCASE("Randers circle value at tau = 0") {
        const Gauge ran = Gauge::randers(0.5);
        const ParamCurve c = ParamCurve::circle(1.0);
        // k_m(0) = 1 and F(n) = F(-1, 0.5) = sqrt(1.25) - 0.5.
        CHECK(near(arc_length_curvature(ran, c, 0.0), std::sqrt(1.25) - 0.5, 1e-12));
    }
    SUBCASE("product identity k_l = F(n) k_m") {
        const Gauge ran = Gauge::randers(0.7);
        const ParamCurve liss = ParamCurve::lissajous(2.0, 1.0, 2.0);
        detail::Rng rng(109);
        for (int i = 0; i < 100; ++i) {
            const double tau = rng.uniform(0.0, kTwoPi);
            const double product = minkowski_curvature(ran, liss, tau) *
                                   ran.eval(right_normal(ran, liss, tau));
            CHECK(near(arc_length_curvature(ran, liss, tau), product, 1e-10));
        }
    }
}

TEST_CASE("left normal field") {
    const ParamCurve c = ParamCurve::circle(1.0);
    CHECK(near(left_normal(Gauge::euclidean(), c, 0.0), {1.0, 0.0}, 1e-10));
    // Hand partials of the closed-form associated gauge at gamma'(0) = (0, 1).
    CHECK(near(left_normal(Gauge::randers(0.5), c, 0.0), {2.0 / 3.0, 0.0}, 1e-9));

    SUBCASE("lies on the unit circle and on the correct side") {
        const Gauge ran = Gauge::randers(0.5);
        const ParamCurve ell = ParamCurve::ellipse(2.0, 1.0);
        detail::Rng rng(113);
        for (int i = 0; i < 100; ++i) {
            const double tau = rng.uniform(0.0, kTwoPi);
            const Vec2 left = left_normal(ran, ell, tau);
            CHECK(near(ran.eval(left), 1.0, 1e-8));
            CHECK(det_form(ell.d1(tau), left) < 0.0);
        }
    }
}

TEST_CASE("curvature profile") {
    SUBCASE("Euclidean circle of radius 2: every curvature is one half") {
        const CurvatureProfile prof = profile(Gauge::euclidean(), ParamCurve::circle(2.0), 8);
        REQUIRE(prof.samples.size() == 8);
        for (const CurvatureSample& r : prof.samples) {
            CHECK(near(r.k_m, 0.5, 1e-9));
            CHECK(near(r.k_n, 0.5, 1e-8));
            CHECK(near(r.k_c, 0.5, 1e-8));
            CHECK(near(r.k_l, 0.5, 1e-9));
            CHECK_FALSE(r.k_c_degenerate);
        }
    }
    SUBCASE("Randers circle: the k_n column is constant") {
        const CurvatureProfile prof = profile(Gauge::randers(0.5), ParamCurve::circle(1.0), 64);
        for (const CurvatureSample& r : prof.samples) CHECK(near(r.k_n, 1.0, 1e-6));
    }
    SUBCASE("per-sample invariants") {
        const Gauge ran = Gauge::randers(0.6);
        const AssociatedGauge fa(ran);
        const CurvatureProfile prof = profile(ran, ParamCurve::ellipse(2.0, 1.0), 48);
        double spacing = prof.samples[1].s - prof.samples[0].s;
        for (std::size_t i = 0; i < prof.samples.size(); ++i) {
            const CurvatureSample& r = prof.samples[i];
            CHECK(near(ran.eval(r.tangent), 1.0, 1e-9));
            CHECK(near(fa.eval(r.right_normal), 1.0, 1e-8));
            CHECK(near(ran.eval(r.left_normal), 1.0, 1e-8));
            CHECK(near(det_form(r.tangent, r.right_normal), 1.0, 1e-8));
            CHECK(det_form(r.tangent, r.left_normal) < 0.0);
            if (i > 0)
                CHECK(near(prof.samples[i].s - prof.samples[i - 1].s, spacing, 1e-9));
        }
        CHECK(near(prof.total_arc_length, prof.samples.back().s, 1e-12));
    }
    SUBCASE("flat samples are flagged as degenerate for the evolute") {
        const CurvatureProfile prof =
            profile(Gauge::randers(0.3), ParamCurve::segment({0.0, 0.0}, {1.0, 1.0}), 8);
        for (const CurvatureSample& r : prof.samples) {
            CHECK(r.k_c_degenerate);
            CHECK(near(r.k_m, 0.0, 1e-15));
        }
    }
    SUBCASE("needs at least two samples") {
        CHECK_THROWS_AS(profile(Gauge::euclidean(), ParamCurve::circle(1.0), 1), DomainError);
    }
}

TEST_CASE("Euclidean degeneration: all four curvatures coincide") {
    const Gauge euc = Gauge::euclidean();
    const ParamCurve ell = ParamCurve::ellipse(2.0, 1.0);
    detail::Rng rng(127);
    for (int i = 0; i < 50; ++i) {
        const double tau = rng.uniform(0.0, kTwoPi);
        const double km = minkowski_curvature(euc, ell, tau);
        CHECK(near(normal_curvature(euc, ell, tau), km, 1e-9));
        CHECK(near(circular_curvature(euc, ell, tau), km, 1e-9));
        CHECK(near(arc_length_curvature(euc, ell, tau), km, 1e-9));
    }
}

TEST_CASE("curvatures are invariant under reparametrization") {
    const Gauge ran = Gauge::randers(0.5);
    const ParamCurve base = ParamCurve::ellipse(2.0, 1.0);
    const ParamCurve repar = base.reparametrized(
        [](double t) { return t + 0.3 * std::sin(t); },
        [](double t) { return 1.0 + 0.3 * std::cos(t); },
        [](double t) { return -0.3 * std::sin(t); }, 0.0, kTwoPi);
    detail::Rng rng(131);
    for (int i = 0; i < 30; ++i) {
        const double t = rng.uniform(0.0, kTwoPi);
        const double u = t + 0.3 * std::sin(t);
        CHECK(near(minkowski_curvature(ran, repar, t), minkowski_curvature(ran, base, u), 1e-8));
        CHECK(near(normal_curvature(ran, repar, t), normal_curvature(ran, base, u), 1e-6));
        CHECK(near(circular_curvature(ran, repar, t), circular_curvature(ran, base, u), 1e-6));
        CHECK(near(arc_length_curvature(ran, repar, t), arc_length_curvature(ran, base, u),
                   1e-8));
    }
}

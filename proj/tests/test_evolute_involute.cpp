#include <cmath>
#include <functional>

#include "doctest.h"
#include "gauge2d/arc_length.hpp"
#include "gauge2d/curvature.hpp"
#include "gauge2d/curve.hpp"
#include "gauge2d/detail/rng.hpp"
#include "gauge2d/errors.hpp"
#include "gauge2d/evolute_involute.hpp"

using namespace gauge2d;

namespace {

constexpr double kHalfPi = 1.5707963267948966;

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }
bool near(const Vec2& a, const Vec2& b, double tol) {
    return near(a.x1, b.x1, tol) && near(a.x2, b.x2, tol);
}

Vec2 d1_in_s(const std::function<Vec2(double)>& f, double s, double h) {
    return (-1.0 * f(s + 2.0 * h) + 8.0 * f(s + h) - 8.0 * f(s - h) + f(s - 2.0 * h)) /
           (12.0 * h);
}

}  // namespace

TEST_CASE("evolute of reference curves") {
    SUBCASE("circle: every evolute point is the center") {
        const SampledCurve evo = evolute(Gauge::euclidean(), ParamCurve::circle(3.0), 64);
        REQUIRE(evo.samples.size() == 64);
        for (const auto& sm : evo.samples) CHECK(near(sm.point, {0.0, 0.0}, 1e-8));
    }
    SUBCASE("ellipse: classical sharp-cornered locus") {
        const Gauge euc = Gauge::euclidean();
        const double a = 2.0, b = 1.0;
        const ParamCurve ell = ParamCurve::ellipse(a, b);
        const ArcLengthTable table(euc, ell);
        const SampledCurve evo = evolute(euc, ell, 128);
        for (const auto& sm : evo.samples) {
            const double tau = table.tau_of_s(sm.s);
            const double c3 = std::cos(tau), s3 = std::sin(tau);
            const Vec2 classical{(a * a - b * b) / a * c3 * c3 * c3,
                                 -(a * a - b * b) / b * s3 * s3 * s3};
            CHECK(near(sm.point, classical, 1e-6));
        }
    }
    SUBCASE("tangency: E'(s) is parallel to the left normal") {
        const Gauge ran = Gauge::randers(0.5);
        const ParamCurve circle = ParamCurve::circle(1.0);
        const AssociatedGauge fa(ran);
        const ArcLengthTable table(ran, circle, 1e-12);
        const auto evolute_of_s = [&](double s) {
            return evolute_point(fa, circle, table.tau_of_s(s));
        };
        // Stay away from the four stationary points of the evolute, where
        // E' vanishes and the direction is undefined.
        for (double tau_target : {0.4, 1.0, 2.2, 4.0}) {
            const double s = table.s_of_tau(tau_target);
            const Vec2 deriv = d1_in_s(evolute_of_s, s, 0.02);
            const Vec2 left = left_normal(fa, circle, table.tau_of_s(s));
            const double residual =
                std::abs(det_form(deriv, left)) / (deriv.norm() * left.norm());
            CHECK(residual <= 1e-5);
        }
    }
    SUBCASE("flat curves are rejected with the offending samples") {
        CHECK_THROWS_AS(evolute(Gauge::euclidean(), ParamCurve::segment({0, 0}, {1, 0}), 16),
                        NumericError);
    }
}

TEST_CASE("involute of reference curves") {
    const Gauge euc = Gauge::euclidean();
    SUBCASE("involute of a straight segment collapses to a point") {
        const Vec2 p{1.0, -2.0};
        const Vec2 w{0.6, 0.8};  // Euclidean unit direction
        const SampledCurve inv = involute(euc, ParamCurve::segment(p, w, 0.0, 3.0), 2.0, 32);
        for (const auto& sm : inv.samples) CHECK(near(sm.point, p + 2.0 * w, 1e-10));
    }
    SUBCASE("circle with c = 0: unwound distance equals |s|") {
        const ParamCurve circle = ParamCurve::circle(1.0);
        const ArcLengthTable table(euc, circle, 1e-12);
        const SampledCurve inv = involute(euc, circle, 0.0, 64);
        for (const auto& sm : inv.samples) {
            const Vec2 gamma = circle.value(table.tau_of_s(sm.s));
            CHECK(near((sm.point - gamma).norm(), std::abs(sm.s), 1e-9));
        }
    }
    SUBCASE("speed law F(I'(s)) = (c - s) k_l(s) where positive") {
        const Gauge ran = Gauge::randers(0.5);
        const ParamCurve circle = ParamCurve::circle(1.0);
        const ArcLengthTable table(ran, circle, 1e-12);
        const double c = 4.0;
        const auto involute_of_s = [&](double s) {
            return involute_point(ran, circle, table, c, table.tau_of_s(s));
        };
        for (double s : {0.5, 1.5, 2.5, 3.3}) {
            const double tau = table.tau_of_s(s);
            const double want = (c - s) * arc_length_curvature(ran, circle, tau);
            REQUIRE(want > 0.0);
            CHECK(near(ran.eval(d1_in_s(involute_of_s, s, 5e-3)), want, 1e-5));
        }
    }
    SUBCASE("circular curvature of the involute is 1/(c - s)") {
        const ParamCurve circle = ParamCurve::circle(1.0);
        const double c = 10.0;
        const SampledCurve inv = involute(euc, circle, c, 8192);
        const ParamCurve lifted = lift(inv);
        const AssociatedGauge fa(euc);
        for (double s : {0.8, 2.0, 3.5, 5.0}) {
            CHECK(near(circular_curvature(fa, lifted, s), 1.0 / (c - s), 1e-5));
        }
    }
}

TEST_CASE("round trip: evolute of the involute returns the curve") {
    const ParamCurve circle = ParamCurve::circle(1.0);
    SUBCASE("Euclidean, c = 10 (case 1)") {
        const RoundTripReport r = check_theorem_4_1(Gauge::euclidean(), circle, 10.0);
        REQUIRE(r.applicable());
        CHECK(r.theorem_case == 1);
        CHECK(r.points_checked > 200);
        CHECK(r.max_deviation <= 1e-5);
    }
    SUBCASE("Randers, c = 10 (case 1)") {
        const RoundTripReport r = check_theorem_4_1(Gauge::randers(0.5), circle, 10.0);
        REQUIRE(r.applicable());
        CHECK(r.theorem_case == 1);
        CHECK(r.max_deviation <= 1e-4);
    }
    SUBCASE("Euclidean, c = -5 flips to the reverse construction (case 2)") {
        const RoundTripReport r = check_theorem_4_1(Gauge::euclidean(), circle, -5.0);
        REQUIRE(r.applicable());
        CHECK(r.theorem_case == 2);
        CHECK(r.max_deviation <= 1e-5);
    }
    SUBCASE("sign change inside the arc: hypotheses not met") {
        const RoundTripReport r = check_theorem_4_1(Gauge::euclidean(), circle, 3.0);
        CHECK_FALSE(r.applicable());
        CHECK(r.theorem_case == 0);
        CHECK(r.message.find("sign") != std::string::npos);
    }
}

TEST_CASE("round trip: involute of the evolute returns the curve") {
    SUBCASE("Euclidean ellipse quarter arc (k_c decreasing: case 2)") {
        const ParamCurve arc = ParamCurve::ellipse(2.0, 1.0, 0.1, kHalfPi - 0.1);
        const RoundTripReport r = check_theorem_4_2(Gauge::euclidean(), arc);
        REQUIRE(r.applicable());
        CHECK(r.theorem_case == 2);
        CHECK(r.max_deviation <= 1e-4);
    }
    SUBCASE("second ellipse quarter (k_c increasing: case 1)") {
        const ParamCurve arc = ParamCurve::ellipse(2.0, 1.0, kHalfPi + 0.1, 3.0415926);
        const RoundTripReport r = check_theorem_4_2(Gauge::euclidean(), arc);
        REQUIRE(r.applicable());
        CHECK(r.theorem_case == 1);
        CHECK(r.max_deviation <= 1e-4);
    }
    SUBCASE("Randers circle arc (k_c increasing: case 1)") {
        const ParamCurve arc = ParamCurve::circle(1.0, 0.1, kHalfPi - 0.1);
        const RoundTripReport r = check_theorem_4_2(Gauge::randers(0.5), arc);
        REQUIRE(r.applicable());
        CHECK(r.theorem_case == 1);
        CHECK(r.max_deviation <= 1e-3);
    }
    SUBCASE("constant curvature: hypotheses not met") {
        const RoundTripReport r = check_theorem_4_2(Gauge::euclidean(), ParamCurve::circle(1.0));
        CHECK_FALSE(r.applicable());
        CHECK(r.theorem_case == 0);
    }
}

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gauge2d/curve.hpp"
#include "gauge2d/gauge.hpp"
#include "gauge2d/vec.hpp"

namespace gauge2d {

enum class Command {
    GaugeEval,
    Associated,
    Polar,
    CurvatureProfile,
    Evolute,
    Involute,
    Roundtrip41,
    Roundtrip42,
    Validate,
};

struct GaugeSpec {
    std::string kind = "euclidean";  // euclidean | randers | polygon
    double b = 0.0;
    std::vector<Vec2> vertices;
};

struct CurveSpec {
    std::string kind = "circle";  // circle | ellipse | lissajous | segment | trigpoly
    double r = 1.0;
    double a = 2.0, b = 1.0;
    double omega = 2.0;
    Vec2 p{0.0, 0.0}, w{1.0, 0.0};
    std::vector<double> x_coeffs, y_coeffs;
    std::optional<double> tau_min, tau_max;
};

/// Declarative description of one CLI job. Parsed from a key = value file
/// with [gauge], [curve] and [output] sections; flags can override samples,
/// seed, tol, c, x and the output paths afterwards.
struct JobSpec {
    Command command = Command::CurvatureProfile;
    GaugeSpec gauge;
    CurveSpec curve;
    int samples = 256;
    std::uint64_t seed = 0x5eedu;
    std::optional<double> tol;  // quadrature tolerance override
    std::optional<double> c;    // involute constant
    std::optional<Vec2> x;      // evaluation point for gauge-eval
    std::string out_csv;        // empty: CSV goes to standard output
    std::string out_svg;        // empty: no figure
};

JobSpec parse_job_text(const std::string& text);
JobSpec parse_job_file(const std::string& path);

Gauge build_gauge(const GaugeSpec& spec);
ParamCurve build_curve(const CurveSpec& spec);

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int parse = 2;        // malformed or invalid job input
inline constexpr int capability = 3;   // operation unsupported by the gauge kind
inline constexpr int numeric = 4;      // numeric or I/O failure
inline constexpr int not_applicable = 5;  // theorem hypotheses not met
}  // namespace exit_code

/// Executes the job, writing requested artifacts. CSV goes to `out` when no
/// path was given. Failures print a single-line machine-readable record to
/// `err` and are folded into the returned exit code.
int run(const JobSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace gauge2d

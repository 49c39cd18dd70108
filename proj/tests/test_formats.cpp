#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gauge2d/csv.hpp"
#include "gauge2d/curvature.hpp"
#include "gauge2d/errors.hpp"
#include "gauge2d/jobspec.hpp"
#include "gauge2d/svg.hpp"

using namespace gauge2d;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    const fs::path dir = fs::temp_directory_path() / "gauge2d_tests";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int count_lines(const std::string& text) {
    int n = 0;
    for (char ch : text)
        if (ch == '\n') ++n;
    return n;
}

const char* kProfileJob = R"(
command = curvature-profile
samples = 8

[gauge]
kind = euclidean

[curve]
kind = circle
r = 2
)";

}  // namespace

TEST_CASE("profile CSV layout and round-trip precision") {
    const CurvatureProfile prof = profile(Gauge::randers(0.4), ParamCurve::ellipse(2.0, 1.0), 8);
    std::ostringstream out;
    emit_csv(prof, out);
    const std::string text = out.str();
    CHECK(count_lines(text) == 9);  // header + 8 records
    std::istringstream in(text);
    std::string header;
    std::getline(in, header);
    CHECK(header == "s,tau,x1,x2,t1,t2,n1,n2,l1,l2,k_m,k_n,k_c,k_l");
    CHECK(text.find("\r") == std::string::npos);

    // Every emitted number reparses to one unit in the 12th significant digit.
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        std::istringstream cells(line);
        std::string cell;
        std::vector<double> vals;
        while (std::getline(cells, cell, ',')) vals.push_back(std::stod(cell));
        REQUIRE(vals.size() == 14);
        const CurvatureSample& r = prof.samples[row++];
        const double originals[14] = {r.s,  r.tau, r.point.x1, r.point.x2, r.tangent.x1,
                                      r.tangent.x2, r.right_normal.x1, r.right_normal.x2,
                                      r.left_normal.x1, r.left_normal.x2, r.k_m, r.k_n,
                                      r.k_c, r.k_l};
        for (int i = 0; i < 14; ++i)
            CHECK(std::abs(vals[i] - originals[i]) <=
                  1e-11 * std::max(1.0, std::abs(originals[i])));
    }

    SUBCASE("empty profile produces no file") {
        const fs::path path = temp_dir() / "empty.csv";
        fs::remove(path);
        CHECK_THROWS_AS(emit_csv(CurvatureProfile{}, path.string()), DomainError);
        CHECK_FALSE(fs::exists(path));
    }
}

TEST_CASE("sampled-curve CSV") {
    SampledCurve c;
    c.samples = {{0.0, {1.0, 2.0}}, {1.0, {3.0, 4.0}}};
    std::ostringstream out;
    emit_csv(c, out);
    CHECK(out.str() == "s,x1,x2\n0,1,2\n1,3,4\n");
}

TEST_CASE("SVG emission") {
    SampledCurve base;
    for (int i = 0; i < 32; ++i) {
        const double t = 6.283185307179586 * i / 31;
        base.samples.push_back({t, {2.0 * std::cos(t), std::sin(t)}});
    }
    SampledCurve evo = base;
    for (auto& sm : evo.samples) sm.point = 0.4 * sm.point;
    std::ostringstream out;
    emit_svg({{base, CurveStyle::Base, "curve"}, {evo, CurveStyle::Evolute, "evolute"}}, out);
    const std::string svg = out.str();
    CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    // One polyline per curve; the evolute is dashed, the base solid.
    CHECK(count_lines(svg) == 2 + 2 + 1);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);
    CHECK(svg.find("data-label=\"curve\"") != std::string::npos);
    // y-flip: the viewBox's y-origin is the negated top of the joint box
    // (max |y| is 1 plus the 5% margin here).
    CHECK(svg.find("viewBox=\"") != std::string::npos);
    const auto vb = svg.find("viewBox=\"");
    std::istringstream box(svg.substr(vb + 9));
    double x0, y0;
    box >> x0 >> y0;
    CHECK(x0 < -2.0);
    CHECK(y0 < -1.0);

    SUBCASE("two-point segments are valid curves") {
        SampledCurve seg;
        seg.samples = {{0.0, {0.0, 0.0}}, {1.0, {1.0, 1.0}}};
        std::ostringstream o2;
        emit_svg({{seg, CurveStyle::Involute, "seg"}}, o2);
        CHECK(o2.str().find("polyline") != std::string::npos);
    }
    SUBCASE("single-point curves are rejected") {
        SampledCurve pt;
        pt.samples = {{0.0, {0.0, 0.0}}};
        std::ostringstream o3;
        CHECK_THROWS_AS(emit_svg({{pt, CurveStyle::Base, "pt"}}, o3), DomainError);
    }
}

TEST_CASE("job specification parsing") {
    SUBCASE("full profile job") {
        const JobSpec spec = parse_job_text(kProfileJob);
        CHECK(spec.command == Command::CurvatureProfile);
        CHECK(spec.samples == 8);
        CHECK(spec.gauge.kind == "euclidean");
        CHECK(spec.curve.kind == "circle");
        CHECK(spec.curve.r == 2.0);
        CHECK(spec.out_csv.empty());
    }
    SUBCASE("gauge, curve, output sections with comments") {
        const JobSpec spec = parse_job_text(R"(
# A Randers evolute job.
command = evolute
samples = 32
[gauge]
kind = randers
b = 0.5
[curve]
kind = ellipse
a = 2
b = 1
tau_min = 0.1
tau_max = 1.4
[output]
csv = out.csv   # relative path
svg = out.svg
)");
        CHECK(spec.command == Command::Evolute);
        CHECK(spec.gauge.b == 0.5);
        CHECK(spec.curve.tau_min.value() == 0.1);
        CHECK(spec.out_csv == "out.csv");
        CHECK(spec.out_svg == "out.svg");
    }
    SUBCASE("vertex lists") {
        const JobSpec spec = parse_job_text(R"(
command = polar
[gauge]
kind = polygon
vertices = 1,0; 0,1; -1,-1
)");
        REQUIRE(spec.gauge.vertices.size() == 3);
        CHECK(spec.gauge.vertices[2].x1 == -1.0);
    }
    SUBCASE("parse errors") {
        CHECK_THROWS_AS(parse_job_text("command = warp-drive\n"), ParseError);
        CHECK_THROWS_AS(parse_job_text("samples = 8\n"), ParseError);  // no command
        CHECK_THROWS_AS(parse_job_text("command = polar\n[mystery]\nkey = 1\n"), ParseError);
        CHECK_THROWS_AS(parse_job_text("command = polar\nfrobnicate = 1\n"), ParseError);
        CHECK_THROWS_AS(parse_job_text("command = validate\nsamples = one\n"), ParseError);
        CHECK_THROWS_AS(parse_job_text("command = validate\nsamples = 1\n"), ParseError);
        CHECK_THROWS_AS(parse_job_text("command = polar\ncommand = validate\n"), ParseError);
    }
}

TEST_CASE("job execution end to end") {
    const fs::path dir = temp_dir();
    SUBCASE("polar triangle values") {
        JobSpec spec = parse_job_text(R"(
command = polar
[gauge]
kind = polygon
vertices = 1,0; 0,1; -1,-1
)");
        const fs::path csv = dir / "polar.csv";
        spec.out_csv = csv.string();
        std::ostringstream out, err;
        CHECK(run(spec, out, err) == exit_code::ok);
        CHECK(slurp(csv) == "x1,x2\n-1,1\n-1,-2\n2,1\n");
    }
    SUBCASE("profile on stdout: circle of radius two") {
        const JobSpec spec = parse_job_text(kProfileJob);
        std::ostringstream out, err;
        CHECK(run(spec, out, err) == exit_code::ok);
        std::istringstream in(out.str());
        std::string line;
        std::getline(in, line);  // header
        int rows = 0;
        while (std::getline(in, line)) {
            ++rows;
            const auto k_m_pos = line.rfind(",0.5,0.5,0.5,0.5");
            CHECK(k_m_pos != std::string::npos);
        }
        CHECK(rows == 8);
    }
    SUBCASE("capability failures map to exit code 3") {
        JobSpec spec = parse_job_text(R"(
command = curvature-profile
[gauge]
kind = polygon
vertices = 1,0; 0,1; -1,-1
[curve]
kind = circle
)");
        std::ostringstream out, err;
        CHECK(run(spec, out, err) == exit_code::capability);
        CHECK(err.str().find("\"code\":3") != std::string::npos);
    }
    SUBCASE("invalid job inputs map to exit code 2") {
        JobSpec spec = parse_job_text(kProfileJob);
        spec.gauge.kind = "randers";
        spec.gauge.b = 1.5;
        std::ostringstream out, err;
        CHECK(run(spec, out, err) == exit_code::parse);
    }
    SUBCASE("non-applicable round trip maps to exit code 5") {
        JobSpec spec = parse_job_text(R"(
command = roundtrip-4.2
[gauge]
kind = euclidean
[curve]
kind = circle
r = 1
)");
        const fs::path csv = dir / "na.csv";
        spec.out_csv = csv.string();
        std::ostringstream out, err;
        CHECK(run(spec, out, err) == exit_code::not_applicable);
        CHECK(slurp(csv).find("status,not-applicable") != std::string::npos);
    }
    SUBCASE("gauge evaluation row") {
        JobSpec spec = parse_job_text(R"(
command = gauge-eval
x = 3,4
[gauge]
kind = euclidean
)");
        std::ostringstream out, err;
        CHECK(run(spec, out, err) == exit_code::ok);
        CHECK(out.str() == "x1,x2,F\n3,4,5\n");
    }
    SUBCASE("validate reports a clean Randers gauge") {
        JobSpec spec = parse_job_text(R"(
command = validate
samples = 500
[gauge]
kind = randers
b = 0.5
)");
        std::ostringstream out, err;
        CHECK(run(spec, out, err) == exit_code::ok);
        CHECK(out.str().find("smooth_consistent,true") != std::string::npos);
    }
}

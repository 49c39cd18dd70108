#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gauge2d/errors.hpp"
#include "gauge2d/jobspec.hpp"
#include "gauge2d/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"gauge2d: differential geometry of planar curves for gauges "
                 "(asymmetric convex distance functions)"};

    std::string spec_path;
    std::string out_csv, out_svg;
    std::optional<int> samples;
    std::optional<std::uint64_t> seed;
    std::optional<double> tol, c;
    std::optional<std::string> x;
    bool version = false;

    app.add_option("--spec", spec_path, "job specification file");
    app.add_option("--out-csv", out_csv, "CSV output path (overrides the job file)");
    app.add_option("--out-svg", out_svg, "SVG output path (overrides the job file)");
    app.add_option("--samples", samples, "sample count override");
    app.add_option("--seed", seed, "random seed override (validate)");
    app.add_option("--tol", tol, "quadrature tolerance override");
    app.add_option("--c", c, "involute constant override");
    app.add_option("--x", x, "evaluation point override, format x1,x2");
    app.add_flag("--version", version, "print library and format versions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : gauge2d::exit_code::parse;
    }

    if (version) {
        std::cout << "gauge2d " << gauge2d::kLibraryVersion << " (format "
                  << gauge2d::kFormatVersion << ")\n";
        return gauge2d::exit_code::ok;
    }
    if (spec_path.empty()) {
        std::cerr << "{\"error\":{\"code\":2,\"kind\":\"parse\",\"message\":\"--spec is "
                     "required\"}}\n";
        return gauge2d::exit_code::parse;
    }

    gauge2d::JobSpec spec;
    try {
        spec = gauge2d::parse_job_file(spec_path);
        if (!out_csv.empty()) spec.out_csv = out_csv;
        if (!out_svg.empty()) spec.out_svg = out_svg;
        if (samples) spec.samples = *samples;
        if (seed) spec.seed = *seed;
        if (tol) spec.tol = *tol;
        if (c) spec.c = *c;
        if (x) {
            const auto comma = x->find(',');
            if (comma == std::string::npos) throw gauge2d::ParseError("--x expects x1,x2");
            spec.x = gauge2d::Vec2{std::stod(x->substr(0, comma)), std::stod(x->substr(comma + 1))};
        }
        if (spec.samples < 2) throw gauge2d::ParseError("samples must be at least 2");
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":{\"code\":2,\"kind\":\"parse\",\"message\":\"" << e.what()
                  << "\"}}\n";
        return gauge2d::exit_code::parse;
    }

    return gauge2d::run(spec, std::cout, std::cerr);
}

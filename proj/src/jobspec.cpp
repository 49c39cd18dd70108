#include "gauge2d/jobspec.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "gauge2d/associated.hpp"
#include "gauge2d/csv.hpp"
#include "gauge2d/curvature.hpp"
#include "gauge2d/errors.hpp"
#include "gauge2d/evolute_involute.hpp"
#include "gauge2d/svg.hpp"

namespace gauge2d {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, const std::string& key) {
    errno = 0;
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || trim(end) != "" || errno == ERANGE)
        throw ParseError("invalid number for '" + key + "': " + v);
    return x;
}

int parse_int(const std::string& v, const std::string& key) {
    const double x = parse_double(v, key);
    const int i = static_cast<int>(x);
    if (x != static_cast<double>(i)) throw ParseError("expected integer for '" + key + "': " + v);
    return i;
}

std::uint64_t parse_u64(const std::string& v, const std::string& key) {
    errno = 0;
    char* end = nullptr;
    const unsigned long long x = std::strtoull(v.c_str(), &end, 10);
    if (end == v.c_str() || trim(end) != "" || errno == ERANGE)
        throw ParseError("invalid unsigned integer for '" + key + "': " + v);
    return x;
}

Vec2 parse_vec(const std::string& v, const std::string& key) {
    const auto comma = v.find(',');
    if (comma == std::string::npos)
        throw ParseError("expected 'x1,x2' for '" + key + "': " + v);
    return {parse_double(trim(v.substr(0, comma)), key),
            parse_double(trim(v.substr(comma + 1)), key)};
}

std::vector<Vec2> parse_vec_list(const std::string& v, const std::string& key) {
    std::vector<Vec2> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ';')) {
        item = trim(item);
        if (item.empty()) continue;
        out.push_back(parse_vec(item, key));
    }
    if (out.empty()) throw ParseError("empty vertex list for '" + key + "'");
    return out;
}

std::vector<double> parse_double_list(const std::string& v, const std::string& key) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (ss >> item) out.push_back(parse_double(item, key));
    if (out.empty()) throw ParseError("empty number list for '" + key + "'");
    return out;
}

Command parse_command(const std::string& v) {
    static const std::map<std::string, Command> table = {
        {"gauge-eval", Command::GaugeEval},
        {"associated", Command::Associated},
        {"polar", Command::Polar},
        {"curvature-profile", Command::CurvatureProfile},
        {"evolute", Command::Evolute},
        {"involute", Command::Involute},
        {"roundtrip-4.1", Command::Roundtrip41},
        {"roundtrip-4.2", Command::Roundtrip42},
        {"validate", Command::Validate},
    };
    const auto it = table.find(v);
    if (it == table.end()) throw ParseError("unknown command: " + v);
    return it->second;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        if (ch == '\n') {
            out += "\\n";
            continue;
        }
        out.push_back(ch);
    }
    return out;
}

void error_record(std::ostream& err, int code, const std::string& kind, const std::string& msg) {
    err << "{\"error\":{\"code\":" << code << ",\"kind\":\"" << kind << "\",\"message\":\""
        << json_escape(msg) << "\"}}\n";
}

}  // namespace

JobSpec parse_job_text(const std::string& text) {
    JobSpec spec;
    bool have_command = false;
    std::string section;  // "", "job", "gauge", "curve", "output"
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError("line " + std::to_string(line_no) + ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "job" && section != "gauge" && section != "curve" &&
                section != "output")
                throw ParseError("line " + std::to_string(line_no) + ": unknown section [" +
                                 section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ParseError("line " + std::to_string(line_no) + ": empty key or value");

        const std::string scope = (section.empty() || section == "job") ? "job" : section;
        if (scope == "job") {
            if (key == "command") {
                if (have_command)
                    throw ParseError("line " + std::to_string(line_no) +
                                     ": command set more than once");
                spec.command = parse_command(value);
                have_command = true;
            } else if (key == "samples") {
                spec.samples = parse_int(value, key);
            } else if (key == "seed") {
                spec.seed = parse_u64(value, key);
            } else if (key == "tol") {
                spec.tol = parse_double(value, key);
            } else if (key == "c") {
                spec.c = parse_double(value, key);
            } else if (key == "x") {
                spec.x = parse_vec(value, key);
            } else {
                throw ParseError("line " + std::to_string(line_no) + ": unknown job key '" + key +
                                 "'");
            }
        } else if (scope == "gauge") {
            if (key == "kind") spec.gauge.kind = value;
            else if (key == "b") spec.gauge.b = parse_double(value, key);
            else if (key == "vertices") spec.gauge.vertices = parse_vec_list(value, key);
            else
                throw ParseError("line " + std::to_string(line_no) + ": unknown gauge key '" +
                                 key + "'");
        } else if (scope == "curve") {
            if (key == "kind") spec.curve.kind = value;
            else if (key == "r") spec.curve.r = parse_double(value, key);
            else if (key == "a") spec.curve.a = parse_double(value, key);
            else if (key == "b") spec.curve.b = parse_double(value, key);
            else if (key == "omega") spec.curve.omega = parse_double(value, key);
            else if (key == "p") spec.curve.p = parse_vec(value, key);
            else if (key == "w") spec.curve.w = parse_vec(value, key);
            else if (key == "x_coeffs") spec.curve.x_coeffs = parse_double_list(value, key);
            else if (key == "y_coeffs") spec.curve.y_coeffs = parse_double_list(value, key);
            else if (key == "tau_min") spec.curve.tau_min = parse_double(value, key);
            else if (key == "tau_max") spec.curve.tau_max = parse_double(value, key);
            else
                throw ParseError("line " + std::to_string(line_no) + ": unknown curve key '" +
                                 key + "'");
        } else {  // output
            if (key == "csv") spec.out_csv = value;
            else if (key == "svg") spec.out_svg = value;
            else
                throw ParseError("line " + std::to_string(line_no) + ": unknown output key '" +
                                 key + "'");
        }
    }
    if (!have_command) throw ParseError("job file does not set 'command'");
    if (spec.samples < 2) throw ParseError("samples must be at least 2");
    return spec;
}

JobSpec parse_job_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read job file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_job_text(ss.str());
}

Gauge build_gauge(const GaugeSpec& spec) {
    if (spec.kind == "euclidean") return Gauge::euclidean();
    if (spec.kind == "randers") return Gauge::randers(spec.b);
    if (spec.kind == "polygon") return Gauge::polygon(spec.vertices);
    throw ParseError("unknown gauge kind: " + spec.kind);
}

ParamCurve build_curve(const CurveSpec& spec) {
    const double lo = spec.tau_min.value_or(0.0);
    const double hi = spec.tau_max.value_or(spec.kind == "segment" ? 1.0 : ParamCurve::k_two_pi);
    if (spec.kind == "circle") return ParamCurve::circle(spec.r, lo, hi);
    if (spec.kind == "ellipse") return ParamCurve::ellipse(spec.a, spec.b, lo, hi);
    if (spec.kind == "lissajous") return ParamCurve::lissajous(spec.a, spec.b, spec.omega, lo, hi);
    if (spec.kind == "segment") return ParamCurve::segment(spec.p, spec.w, lo, hi);
    if (spec.kind == "trigpoly") return ParamCurve::trig_poly(spec.x_coeffs, spec.y_coeffs, lo, hi);
    throw ParseError("unknown curve kind: " + spec.kind);
}

namespace {

/// Uniform-in-tau sampling, good enough for plotting.
SampledCurve sample_for_plot(const ParamCurve& curve, int n, const std::string& meta) {
    SampledCurve out;
    out.source_meta = meta;
    out.samples.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double tau =
            curve.tau_min() + (curve.tau_max() - curve.tau_min()) * i / (n - 1);
        out.samples.push_back({tau, curve.value(tau)});
    }
    return out;
}

SampledCurve polygon_outline(const std::vector<Vec2>& vertices, const std::string& meta) {
    SampledCurve out;
    out.source_meta = meta;
    out.closed = true;
    for (std::size_t i = 0; i <= vertices.size(); ++i)
        out.samples.push_back({static_cast<double>(i), vertices[i % vertices.size()]});
    return out;
}

struct CsvSink {
    const JobSpec& spec;
    std::ostream& fallback;

    template <typename T>
    void write(const T& data) const {
        if (spec.out_csv.empty())
            emit_csv(data, fallback);
        else
            emit_csv(data, spec.out_csv);
    }

    void write_rows(const std::string& header, const std::vector<std::string>& rows) const {
        std::ostringstream body;
        body << header << '\n';
        for (const std::string& r : rows) body << r << '\n';
        if (spec.out_csv.empty()) {
            fallback << body.str();
        } else {
            std::ofstream file(spec.out_csv, std::ios::binary);
            if (!file) throw IoError("cannot open for writing: " + spec.out_csv);
            file << body.str();
            file.flush();
            if (!file) throw IoError("write failed: " + spec.out_csv);
        }
    }
};

int run_impl(const JobSpec& spec, std::ostream& out) {
    const CsvSink sink{spec, out};
    const Gauge gauge = build_gauge(spec.gauge);

    switch (spec.command) {
        case Command::GaugeEval: {
            if (!spec.x) throw ParseError("gauge-eval requires 'x = x1,x2'");
            const double f = gauge.eval(*spec.x);
            sink.write_rows("x1,x2,F", {format_sig12(spec.x->x1) + "," +
                                        format_sig12(spec.x->x2) + "," + format_sig12(f)});
            return exit_code::ok;
        }
        case Command::Polar: {
            if (spec.gauge.kind != "polygon")
                throw DomainError("polar requires a polygon gauge");
            const std::vector<Vec2> polar = polygon_polar(spec.gauge.vertices);
            std::vector<std::string> rows;
            for (const Vec2& v : polar)
                rows.push_back(format_sig12(v.x1) + "," + format_sig12(v.x2));
            sink.write_rows("x1,x2", rows);
            if (!spec.out_svg.empty())
                emit_svg({{polygon_outline(spec.gauge.vertices, "unit-disk"), CurveStyle::Base,
                           "unit-disk"},
                          {polygon_outline(polar, "polar-disk"), CurveStyle::Evolute,
                           "polar-disk"}},
                         spec.out_svg);
            return exit_code::ok;
        }
        case Command::Associated: {
            const AssociatedGauge fa(gauge);
            SampledCurve circle_a;
            circle_a.source_meta = "associated-unit-circle";
            circle_a.closed = true;
            const Gauge fa_gauge = fa.as_gauge();
            for (int i = 0; i < spec.samples; ++i) {
                const double theta = ParamCurve::k_two_pi * i / (spec.samples - 1);
                circle_a.samples.push_back({theta, fa_gauge.unit_circle_point(theta)});
            }
            sink.write(circle_a);
            if (!spec.out_svg.empty()) {
                SampledCurve circle_s;
                circle_s.source_meta = "unit-circle";
                circle_s.closed = true;
                for (int i = 0; i < spec.samples; ++i) {
                    const double theta = ParamCurve::k_two_pi * i / (spec.samples - 1);
                    circle_s.samples.push_back({theta, gauge.unit_circle_point(theta)});
                }
                emit_svg({{circle_s, CurveStyle::Base, "unit-circle"},
                          {circle_a, CurveStyle::Evolute, "associated-unit-circle"}},
                         spec.out_svg);
            }
            return exit_code::ok;
        }
        case Command::Validate: {
            const ValidationReport report = validate(gauge, spec.samples, spec.seed);
            sink.write_rows(
                "check,value",
                {"n_samples," + std::to_string(report.n_samples),
                 "worst_homogeneity," + format_sig12(report.worst_homogeneity),
                 "worst_subadditivity," + format_sig12(report.worst_subadditivity),
                 "min_positivity_ratio," + format_sig12(report.min_positivity_ratio),
                 std::string("zero_at_origin,") + (report.zero_at_origin ? "true" : "false"),
                 std::string("smooth_consistent,") +
                     (report.smooth_consistent ? "true" : "false"),
                 std::string("strictly_convex_consistent,") +
                     (report.strictly_convex_consistent ? "true" : "false")});
            return exit_code::ok;
        }
        default: break;
    }

    const ParamCurve curve = build_curve(spec.curve);
    switch (spec.command) {
        case Command::CurvatureProfile: {
            ProfileOptions opts;
            if (spec.tol) opts.quad_tol = *spec.tol;
            const CurvatureProfile prof = profile(gauge, curve, spec.samples, opts);
            sink.write(prof);
            if (!spec.out_svg.empty())
                emit_svg({{sample_for_plot(curve, spec.samples, "curve"), CurveStyle::Base,
                           "curve"}},
                         spec.out_svg);
            return exit_code::ok;
        }
        case Command::Evolute: {
            const SampledCurve evo = evolute(gauge, curve, spec.samples);
            sink.write(evo);
            if (!spec.out_svg.empty())
                emit_svg({{sample_for_plot(curve, spec.samples, "curve"), CurveStyle::Base,
                           "curve"},
                          {evo, CurveStyle::Evolute, "evolute"}},
                         spec.out_svg);
            return exit_code::ok;
        }
        case Command::Involute: {
            if (!spec.c) throw ParseError("involute requires 'c = <constant>'");
            const SampledCurve inv = involute(gauge, curve, *spec.c, spec.samples);
            sink.write(inv);
            if (!spec.out_svg.empty())
                emit_svg({{sample_for_plot(curve, spec.samples, "curve"), CurveStyle::Base,
                           "curve"},
                          {inv, CurveStyle::Involute, "involute"}},
                         spec.out_svg);
            return exit_code::ok;
        }
        case Command::Roundtrip41:
        case Command::Roundtrip42: {
            RoundTripOptions opts;
            if (spec.tol) opts.quad_tol = *spec.tol;
            RoundTripReport report;
            if (spec.command == Command::Roundtrip41) {
                if (!spec.c) throw ParseError("roundtrip-4.1 requires 'c = <constant>'");
                report = check_theorem_4_1(gauge, curve, *spec.c, opts);
            } else {
                report = check_theorem_4_2(gauge, curve, opts);
            }
            sink.write_rows(
                "key,value",
                {std::string("status,") + (report.applicable() ? "applicable" : "not-applicable"),
                 "case," + std::to_string(report.theorem_case),
                 "max_deviation," + format_sig12(report.max_deviation),
                 "constant," + format_sig12(report.constant),
                 "points_checked," + std::to_string(report.points_checked),
                 "message," + report.message});
            return report.applicable() ? exit_code::ok : exit_code::not_applicable;
        }
        default: break;
    }
    throw ParseError("command not handled");  // unreachable
}

}  // namespace

int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
    try {
        const int code = run_impl(spec, out);
        if (code == exit_code::not_applicable)
            error_record(err, code, "not_applicable", "theorem hypotheses not met (see report)");
        return code;
    } catch (const ParseError& e) {
        error_record(err, exit_code::parse, "parse", e.what());
        return exit_code::parse;
    } catch (const DomainError& e) {
        error_record(err, exit_code::parse, "domain", e.what());
        return exit_code::parse;
    } catch (const CapabilityError& e) {
        error_record(err, exit_code::capability, "capability", e.what());
        return exit_code::capability;
    } catch (const IoError& e) {
        error_record(err, exit_code::numeric, "io", e.what());
        return exit_code::numeric;
    } catch (const NumericError& e) {
        error_record(err, exit_code::numeric, "numeric", e.what());
        return exit_code::numeric;
    } catch (const std::exception& e) {
        error_record(err, exit_code::numeric, "internal", e.what());
        return exit_code::numeric;
    }
}

}  // namespace gauge2d

#include "gauge2d/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "gauge2d/errors.hpp"

namespace gauge2d {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.8g", v);
    return buf;
}

const char* stroke_color(CurveStyle s) {
    switch (s) {
        case CurveStyle::Base: return "#1f77b4";
        case CurveStyle::Evolute: return "#d62728";
        case CurveStyle::Involute: return "#2ca02c";
    }
    return "#000000";
}

}  // namespace

void emit_svg(const std::vector<StyledCurve>& curves, std::ostream& out) {
    if (curves.empty()) throw DomainError("emit_svg: no curves");
    double min_x = HUGE_VAL, max_x = -HUGE_VAL, min_y = HUGE_VAL, max_y = -HUGE_VAL;
    for (const StyledCurve& sc : curves) {
        if (sc.curve.samples.size() < 2)
            throw DomainError("emit_svg: every curve needs at least 2 points");
        for (const auto& sm : sc.curve.samples) {
            min_x = std::min(min_x, sm.point.x1);
            max_x = std::max(max_x, sm.point.x1);
            min_y = std::min(min_y, sm.point.x2);
            max_y = std::max(max_y, sm.point.x2);
        }
    }
    double w = max_x - min_x, h = max_y - min_y;
    const double pad = 0.05 * std::max({w, h, 1e-6});
    min_x -= pad;
    max_x += pad;
    min_y -= pad;
    max_y += pad;
    w = max_x - min_x;
    h = max_y - min_y;
    const double stroke = 0.006 * std::max(w, h);

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    // Flip y by emitting (x, -y) and framing the mirrored box.
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\""
        << num(800.0 * h / w) << "\" viewBox=\"" << num(min_x) << ' ' << num(-max_y) << ' '
        << num(w) << ' ' << num(h) << "\">\n";
    for (const StyledCurve& sc : curves) {
        out << "  <polyline fill=\"none\" stroke=\"" << stroke_color(sc.style)
            << "\" stroke-width=\"" << num(stroke) << "\"";
        if (sc.style == CurveStyle::Evolute)
            out << " stroke-dasharray=\"" << num(4.0 * stroke) << ' ' << num(2.0 * stroke) << "\"";
        else if (sc.style == CurveStyle::Involute)
            out << " stroke-dasharray=\"" << num(stroke) << ' ' << num(2.0 * stroke) << "\"";
        if (!sc.label.empty()) out << " data-label=\"" << sc.label << "\"";
        out << " points=\"";
        for (std::size_t i = 0; i < sc.curve.samples.size(); ++i) {
            if (i) out << ' ';
            out << num(sc.curve.samples[i].point.x1) << ',' << num(-sc.curve.samples[i].point.x2);
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
}

void emit_svg(const std::vector<StyledCurve>& curves, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    emit_svg(curves, out);
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace gauge2d

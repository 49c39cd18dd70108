#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gauge2d/curve.hpp"

namespace gauge2d {

enum class CurveStyle { Base, Evolute, Involute };

struct StyledCurve {
    SampledCurve curve;
    CurveStyle style = CurveStyle::Base;
    std::string label;
};

/// Standalone SVG with one polyline per curve. The viewport is the joint
/// bounding box plus a 5% margin; the y-axis is flipped so counter-clockwise
/// orientation appears counter-clockwise on screen. Base curves are solid,
/// evolutes dashed, involutes dotted. Every curve needs at least 2 points.
void emit_svg(const std::vector<StyledCurve>& curves, std::ostream& out);
void emit_svg(const std::vector<StyledCurve>& curves, const std::string& path);

}  // namespace gauge2d

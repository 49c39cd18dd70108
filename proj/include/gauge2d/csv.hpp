#pragma once

#include <ostream>
#include <string>

#include "gauge2d/curvature.hpp"
#include "gauge2d/curve.hpp"

namespace gauge2d {

/// Formats with 12 significant digits; re-parsing recovers the value to one
/// unit in the 12th digit.
std::string format_sig12(double v);

/// Columns: s,tau,x1,x2,t1,t2,n1,n2,l1,l2,k_m,k_n,k_c,k_l. One header row,
/// one row per sample, '\n' line endings. Empty profiles are rejected before
/// any file is created.
void emit_csv(const CurvatureProfile& profile, std::ostream& out);
void emit_csv(const CurvatureProfile& profile, const std::string& path);

/// Columns: s,x1,x2.
void emit_csv(const SampledCurve& curve, std::ostream& out);
void emit_csv(const SampledCurve& curve, const std::string& path);

}  // namespace gauge2d

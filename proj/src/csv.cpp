#include "gauge2d/csv.hpp"

#include <cstdio>
#include <fstream>

#include "gauge2d/errors.hpp"

namespace gauge2d {

std::string format_sig12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    return out;
}

void finish(std::ostream& out, const std::string& path) {
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace

void emit_csv(const CurvatureProfile& profile, std::ostream& out) {
    if (profile.samples.empty()) throw DomainError("emit_csv: empty profile");
    out << "s,tau,x1,x2,t1,t2,n1,n2,l1,l2,k_m,k_n,k_c,k_l\n";
    for (const CurvatureSample& r : profile.samples) {
        out << format_sig12(r.s) << ',' << format_sig12(r.tau) << ',' << format_sig12(r.point.x1)
            << ',' << format_sig12(r.point.x2) << ',' << format_sig12(r.tangent.x1) << ','
            << format_sig12(r.tangent.x2) << ',' << format_sig12(r.right_normal.x1) << ','
            << format_sig12(r.right_normal.x2) << ',' << format_sig12(r.left_normal.x1) << ','
            << format_sig12(r.left_normal.x2) << ',' << format_sig12(r.k_m) << ','
            << format_sig12(r.k_n) << ',' << format_sig12(r.k_c) << ',' << format_sig12(r.k_l)
            << '\n';
    }
}

void emit_csv(const CurvatureProfile& profile, const std::string& path) {
    if (profile.samples.empty()) throw DomainError("emit_csv: empty profile");
    auto out = open_out(path);
    emit_csv(profile, out);
    finish(out, path);
}

void emit_csv(const SampledCurve& curve, std::ostream& out) {
    if (curve.samples.empty()) throw DomainError("emit_csv: empty sampled curve");
    out << "s,x1,x2\n";
    for (const SampledCurve::Sample& r : curve.samples)
        out << format_sig12(r.s) << ',' << format_sig12(r.point.x1) << ','
            << format_sig12(r.point.x2) << '\n';
}

void emit_csv(const SampledCurve& curve, const std::string& path) {
    if (curve.samples.empty()) throw DomainError("emit_csv: empty sampled curve");
    auto out = open_out(path);
    emit_csv(curve, out);
    finish(out, path);
}

}  // namespace gauge2d

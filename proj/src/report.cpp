#include "qdilog/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "qdilog/errors.hpp"

namespace qdilog {

std::string method_name(Method m) {
    switch (m) {
        case Method::closed_form: return "closed_form";
        case Method::residue_sum: return "residue_sum";
        case Method::quadrature: return "quadrature";
    }
    return "unknown";
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void emit_complex(std::ostringstream& os, cplx v) {
    os << "{\"re\":" << fmt17(v.real()) << ",\"im\":" << fmt17(v.imag()) << "}";
}

} // namespace

std::string report_to_json(
    const EvaluationReport& report,
    const std::vector<std::pair<std::string, std::string>>& params) {
    auto sorted = params;  // canonical alphabetical key order
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::ostringstream os;
    os << "{\"value\":";
    emit_complex(os, report.value);
    os << ",\"method\":\"" << method_name(report.method) << "\"";
    os << ",\"params\":{";
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i) os << ",";
        os << "\"" << sorted[i].first << "\":" << sorted[i].second;
    }
    os << "},\"strip_points\":[";
    for (std::size_t i = 0; i < report.strip_points.size(); ++i) {
        if (i) os << ",";
        const auto& p = report.strip_points[i];
        os << "{\"w\":";
        emit_complex(os, p.w);
        os << ",\"z\":";
        emit_complex(os, p.z);
        os << ",\"log_z_im_over_pi\":" << fmt17(p.log_z.value.imag() / kPi) << "}";
    }
    os << "],\"diagnostics\":{";
    os << "\"est_error\":" << fmt17(report.diagnostics.est_error);
    os << ",\"lambda\":" << fmt17(report.diagnostics.lambda);
    os << ",\"contour_height\":" << fmt17(report.diagnostics.contour_height);
    os << ",\"truncation\":" << fmt17(report.diagnostics.truncation);
    os << ",\"panels\":" << report.diagnostics.panels;
    os << "}}";
    return os.str();
}

std::string report_json_roundtrip(const std::string& json_text) {
    const auto j = nlohmann::json::parse(json_text);
    std::ostringstream os;
    auto num = [](const nlohmann::json& v) { return fmt17(v.get<double>()); };
    auto cxs = [&](const nlohmann::json& v) {
        return "{\"re\":" + num(v.at("re")) + ",\"im\":" + num(v.at("im")) + "}";
    };
    os << "{\"value\":" << cxs(j.at("value"));
    os << ",\"method\":" << j.at("method").dump();
    os << ",\"params\":{";
    bool first = true;
    for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it) {
        if (!first) os << ",";
        first = false;
        os << "\"" << it.key() << "\":";
        if (it.value().is_number()) os << num(it.value());
        else os << it.value().dump();
    }
    os << "},\"strip_points\":[";
    first = true;
    for (const auto& p : j.at("strip_points")) {
        if (!first) os << ",";
        first = false;
        os << "{\"w\":" << cxs(p.at("w")) << ",\"z\":" << cxs(p.at("z"))
           << ",\"log_z_im_over_pi\":" << num(p.at("log_z_im_over_pi")) << "}";
    }
    const auto& d = j.at("diagnostics");
    os << "],\"diagnostics\":{";
    os << "\"est_error\":" << num(d.at("est_error"));
    os << ",\"lambda\":" << num(d.at("lambda"));
    os << ",\"contour_height\":" << num(d.at("contour_height"));
    os << ",\"truncation\":" << num(d.at("truncation"));
    os << ",\"panels\":" << d.at("panels").get<long long>();
    os << "}}";
    return os.str();
}

} // namespace qdilog

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qdilog/dilog.hpp"
#include "qdilog/unity.hpp"

namespace qdilog {

/// A gluing-equation solution lifted to the strip 0 < s Im(w) - lambda < 1.
/// All branch data (log z, the roots theta_+/-) derive from the single
/// datum w: z = e^{2 pi s w}, theta_+ = e^{2 pi b w}, theta_- = e^{2 pi w/b},
/// log z = 2 pi s w.
struct StripPoint {
    cplx w;
    cplx z;
    cplx theta_plus;
    cplx theta_minus;
    BranchedLog log_z;
};

enum class Method { closed_form, residue_sum, quadrature };

std::string method_name(Method m);

struct Diagnostics {
    double est_error = 0.0;
    double lambda = 0.0;
    double contour_height = 0.0;
    double truncation = 0.0;
    int panels = 0;
    std::vector<cplx> per_term;  // per strip point, index order; not serialized
};

struct EvaluationReport {
    cplx value{0.0, 0.0};
    Method method = Method::closed_form;
    std::vector<StripPoint> strip_points;
    double lambda = 0.0;
    Diagnostics diagnostics;
};

/// Doubles rendered with 17 significant digits (lossless round-trip).
std::string fmt17(double v);

/// Serialize per the fixed schema
///   {"value":{"re":..,"im":..},"method":..,"params":{..},
///    "strip_points":[{"w":{..},"z":{..},"log_z_im_over_pi":..}],
///    "diagnostics":{"est_error":..,"lambda":..,"contour_height":..,
///                   "truncation":..,"panels":..}}
/// params entries are (key, raw JSON fragment), emitted in the given order.
std::string report_to_json(
    const EvaluationReport& report,
    const std::vector<std::pair<std::string, std::string>>& params = {});

/// Parse a serialized report and re-emit it canonically.  Equality of the
/// re-emitted string with the original is the round-trip invariant.
std::string report_json_roundtrip(const std::string& json_text);

} // namespace qdilog

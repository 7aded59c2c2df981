#pragma once

#include <functional>
#include <utility>

#include "qdilog/admissible.hpp"
#include "qdilog/report.hpp"
#include "qdilog/state_sums.hpp"

namespace qdilog {

struct ContourConfig {
    double height = 0.0;       // Im of the contour in x-coordinates
    double half_width = 8.0;   // initial truncation T
    int panels = 32;           // initial panel count (auto-raised per oscillation)
    double tol = 1e-9;         // target absolute error
    int max_refinements = 8;
};

/// Composite Gauss-Legendre (order 16 per panel) over [-T, T] at the given
/// height, doubling the panel count until successive estimates differ by
/// less than tol.  Deterministic for a fixed config.
std::pair<cplx, double> integrate_line(const std::function<cplx(cplx)>& f,
                                       const ContourConfig& cfg);

/// Spec-dependent default contour height: Im(c_b)/2 for the AB family,
/// 3 Im(c_b)/4 for the pretzel.
double default_height(const IntegrandSpec& spec, const AdmissiblePair& pair);

/// The state-integral along Im x = cfg.height, with Phi evaluated through
/// the integral representation (independent of every closed-form path).
/// Truncation extends adaptively until the integrand magnitude at +-T is
/// below tol/(100 T).
EvaluationReport state_integral_numeric(const IntegrandSpec& spec,
                                        const AdmissiblePair& pair,
                                        ContourConfig cfg);

} // namespace qdilog

#include "qdilog/quadrature.hpp"

#include <cmath>
#include <optional>

#include "qdilog/errors.hpp"
#include "qdilog/faddeev.hpp"

namespace qdilog {

namespace {

struct GLNode { double x, w; };
constexpr GLNode kGL16[16] = {
    {-0.9894009349916499326, 0.027152459411754094852},
    {-0.94457502307323257608, 0.062253523938647892863},
    {-0.86563120238783174388, 0.09515851168249278481},
    {-0.7554044083550030339, 0.12462897125553387205},
    {-0.61787624440264374845, 0.14959598881657673208},
    {-0.45801677765722738634, 0.16915651939500253819},
    {-0.28160355077925891323, 0.18260341504492358887},
    {-0.095012509837637440185, 0.18945061045506849629},
    {0.095012509837637440185, 0.18945061045506849629},
    {0.28160355077925891323, 0.18260341504492358887},
    {0.45801677765722738634, 0.16915651939500253819},
    {0.61787624440264374845, 0.14959598881657673208},
    {0.7554044083550030339, 0.12462897125553387205},
    {0.86563120238783174388, 0.09515851168249278481},
    {0.94457502307323257608, 0.062253523938647892863},
    {0.9894009349916499326, 0.027152459411754094852},
};

const cplx kI{0.0, 1.0};

cplx sum_panels(const std::function<cplx(cplx)>& f, double height, double T, int n) {
    const double h = 2.0 * T / n;
    KahanSum sum;
    for (int p = 0; p < n; ++p) {
        const double a = -T + p * h;
        for (const auto& g : kGL16) {
            const double t = a + 0.5 * h * (g.x + 1.0);
            const cplx v = f(cplx{t, height});
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw NonFinite("integrate_line: integrand is non-finite");
            sum.add(0.5 * h * g.w * v);
        }
    }
    return sum.value();
}

void validate(const ContourConfig& cfg) {
    if (cfg.tol < 1e-13) throw DomainError("ContourConfig: tol below 1e-13 floor");
    if (cfg.panels < 1) throw DomainError("ContourConfig: panels must be positive");
    if (cfg.half_width <= 0.0) throw DomainError("ContourConfig: half_width <= 0");
    if (cfg.max_refinements < 1) throw DomainError("ContourConfig: max_refinements < 1");
}

struct LineResult { cplx value; double err; int panels; };

LineResult integrate_line_full(const std::function<cplx(cplx)>& f,
                               const ContourConfig& cfg) {
    validate(cfg);
    int n = cfg.panels;
    cplx prev = sum_panels(f, cfg.height, cfg.half_width, n);
    for (int r = 0; r < cfg.max_refinements; ++r) {
        n *= 2;
        const cplx cur = sum_panels(f, cfg.height, cfg.half_width, n);
        const double diff = std::abs(cur - prev);
        if (diff < cfg.tol) return {cur, diff, n};
        prev = cur;
    }
    throw NoConvergence("integrate_line: refinement limit reached");
}

} // namespace

std::pair<cplx, double> integrate_line(const std::function<cplx(cplx)>& f,
                                       const ContourConfig& cfg) {
    const LineResult r = integrate_line_full(f, cfg);
    return {r.value, r.err};
}

double default_height(const IntegrandSpec& spec, const AdmissiblePair& pair) {
    const double hc = pair.c_b.imag();
    return spec.kind == IntegrandSpec::Kind::AB ? 0.5 * hc : 0.75 * hc;
}

EvaluationReport state_integral_numeric(const IntegrandSpec& spec,
                                        const AdmissiblePair& pair,
                                        ContourConfig cfg) {
    validate(cfg);
    const double hc = pair.c_b.imag();
    const double h = cfg.height;
    const bool ab = spec.kind == IntegrandSpec::Kind::AB;
    if (ab) {
        if (!(h > 0.0 && h < hc))
            throw BandViolation("state_integral_numeric: height outside (0, Im c_b)");
    } else {
        if (!(h > 0.5 * hc && h < hc))
            throw BandViolation(
                "state_integral_numeric: height outside (Im c_b / 2, Im c_b)");
    }

    // probe the integrand magnitude with scattered Phi evaluations
    auto probe_mag = [&](double t) {
        const cplx x{t, h};
        if (ab) {
            return std::abs(std::exp(
                static_cast<double>(spec.B) * std::log(phi_strip(pair.b, x)) -
                static_cast<double>(spec.A) * kPi * kI * x * x));
        }
        const cplx y = 2.0 * x - pair.c_b;
        return std::abs(phi_strip(pair.b, x)) * std::abs(phi_strip(pair.b, x)) *
               std::abs(phi_strip(pair.b, y)) *
               std::abs(std::exp(-2.0 * kPi * kI * x * x));
    };
    double T = cfg.half_width;
    for (int guard = 0;; ++guard) {
        if (guard > 60 || T > 500.0)
            throw NoConvergence("state_integral_numeric: truncation did not settle");
        const double need = cfg.tol / (100.0 * T);
        if (probe_mag(T) < need && probe_mag(-T) < need) break;
        T *= 1.25;
    }

    // Phi on the contour line(s), kernel built once
    const detail::PhiLine line(pair.b, h, T, cfg.tol * 1e-3);
    std::optional<detail::PhiLine> line2;
    if (!ab) line2.emplace(pair.b, 2.0 * h - hc, 2.0 * T, cfg.tol * 1e-3);

    std::function<cplx(cplx)> f;
    if (ab) {
        const double A = static_cast<double>(spec.A);
        const double B = static_cast<double>(spec.B);
        f = [&line, A, B](cplx x) {
            return std::exp(B * line.log_phi(x) - A * kPi * kI * x * x);
        };
    } else {
        const cplx cb = pair.c_b;
        f = [&line, &line2, cb](cplx x) {
            return std::exp(2.0 * line.log_phi(x) + line2->log_phi(2.0 * x - cb) -
                            2.0 * kPi * kI * x * x);
        };
    }

    // panel count resolving the fastest local oscillation at |t| = T
    const double omega =
        2.0 * kPi * T *
        (ab ? static_cast<double>(spec.A + spec.B) : 8.0);
    const int auto_panels = static_cast<int>(std::ceil(2.0 * T / std::min(0.5, 8.0 / omega)));
    ContourConfig run = cfg;
    run.half_width = T;
    run.panels = std::max(cfg.panels, auto_panels);
    const LineResult res = integrate_line_full(f, run);

    EvaluationReport report;
    report.value = res.value;
    report.method = Method::quadrature;
    report.lambda = pair.s * (h - hc);
    report.diagnostics.est_error = res.err;
    report.diagnostics.lambda = report.lambda;
    report.diagnostics.contour_height = h;
    report.diagnostics.truncation = T;
    report.diagnostics.panels = res.panels;
    return report;
}

} // namespace qdilog

#include "qdilog/evaluator.hpp"

#include <array>
#include <cmath>

#include "qdilog/dilog.hpp"
#include "qdilog/errors.hpp"
#include "qdilog/faddeev.hpp"
#include "polyroots.hpp"

namespace qdilog {

namespace {

const cplx kI{0.0, 1.0};
constexpr double kTwoPi = 2.0 * kPi;

std::int64_t binom(std::int64_t n, std::int64_t k) {
    std::int64_t r = 1;
    for (std::int64_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

void snap_real(std::vector<cplx>& roots) {
    for (auto& z : roots)
        if (std::abs(z.imag()) < 1e-12 * std::max(1.0, std::abs(z)))
            z = cplx{z.real(), +0.0};
}

// residual winding 2 pi i kappa of log g(z) = A(log z - i pi) - B Log(1-z)
// at a gluing root; zero except at cut-boundary points.
std::int64_t multiplier_winding(std::int64_t A, std::int64_t B, cplx log_z,
                                cplx log_one_minus_z) {
    const cplx bracket = static_cast<double>(A) * (log_z - kI * kPi) -
                         static_cast<double>(B) * log_one_minus_z;
    return std::llround(bracket.imag() / kTwoPi);
}

cplx winding_factor(std::int64_t kappa, const AdmissiblePair& pair, cplx w) {
    if (kappa == 0) return {1.0, 0.0};
    const double s2 = pair.s * pair.s;
    const cplx beta =
        (1.0 + 2.0 * static_cast<double>(pair.M + pair.N) - 2.0 * kI * pair.s * w) /
        (4.0 * s2);
    return std::exp(kTwoPi * kI * static_cast<double>(kappa) * beta);
}

EvaluationReport make_closed_report(cplx value, Method method,
                                    std::vector<StripPoint> pts, double lambda,
                                    std::vector<cplx> per_term) {
    EvaluationReport rep;
    rep.value = value;
    rep.method = method;
    rep.strip_points = std::move(pts);
    rep.lambda = lambda;
    rep.diagnostics.lambda = lambda;
    rep.diagnostics.per_term = std::move(per_term);
    return rep;
}

} // namespace

std::vector<cplx> gluing_roots(const IntegrandSpec& spec) {
    if (spec.kind == IntegrandSpec::Kind::AB) {
        // (1-z)^B - (-1)^A z^A = 0
        std::vector<cplx> c(spec.B + 1);
        for (std::int64_t j = 0; j <= spec.B; ++j)
            c[j] = cplx{static_cast<double>(binom(spec.B, j) * ((j % 2) ? -1 : 1)), 0.0};
        c[spec.A] -= cplx{static_cast<double>((spec.A % 2) ? -1 : 1), 0.0};
        auto roots = detail::poly_roots(c);
        snap_real(roots);
        return roots;
    }
    // the two gluing cubics z -+ (1-z)(1-z^2) = 0
    auto plus = detail::poly_roots({{1, 0}, {-2, 0}, {-1, 0}, {1, 0}});   // z^3 - z^2 - 2z + 1
    auto minus = detail::poly_roots({{1, 0}, {0, 0}, {-1, 0}, {1, 0}});   // z^3 - z^2 + 1
    plus.insert(plus.end(), minus.begin(), minus.end());
    std::sort(plus.begin(), plus.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    snap_real(plus);
    return plus;
}

double default_lambda(const IntegrandSpec& spec, const AdmissiblePair& pair) {
    const auto [lo, hi] = spec.lambda_range(pair.M, pair.N);
    double lambda = -0.05 * (hi - lo);
    static constexpr std::array<double, 5> primes{2.0, 3.0, 5.0, 7.0, 11.0};
    for (double p : primes) {
        try {
            (void)strip_set(spec, pair, lambda);
            return lambda;
        } catch (const NonGenericLambda&) {
            lambda /= p;
        }
    }
    throw NonGenericLambda("default_lambda: no generic lambda found");
}

std::vector<StripPoint> strip_set(const IntegrandSpec& spec,
                                  const AdmissiblePair& pair, double lambda) {
    const auto [lo, hi] = spec.lambda_range(pair.M, pair.N);
    if (!(lambda > lo && lambda < hi))
        throw DomainError("strip_set: lambda outside the admissible range");
    const double s = pair.s;
    std::vector<StripPoint> pts;
    for (cplx z : gluing_roots(spec)) {
        const double arg = std::arg(z);
        const double frac = arg / kTwoPi;
        const auto k = static_cast<std::int64_t>(std::floor(lambda - frac)) + 1;
        const double u = frac + static_cast<double>(k) - lambda;
        if (u < 1e-6 || u > 1.0 - 1e-6)
            throw NonGenericLambda("strip_set: lift within 1e-6 of the strip boundary");
        const cplx logz{std::log(std::abs(z)), arg + kTwoPi * static_cast<double>(k)};
        const cplx w = logz / (kTwoPi * s);
        const cplx tp = std::exp(kTwoPi * pair.b * w);
        const cplx tm = std::exp(kTwoPi / pair.b * w);
        if (std::abs(ipow(tp, pair.N) - z) > 1e-10 * (1.0 + std::abs(z)))
            throw DomainError("strip_set: theta_+^N drifted from z");
        pts.push_back(StripPoint{w, z, tp, tm, BranchedLog(logz, z)});
    }
    return pts;
}

EvaluationReport evaluate_thm1(const IntegrandSpec& spec,
                               const AdmissiblePair& pair, double lambda) {
    if (spec.kind != IntegrandSpec::Kind::AB)
        throw DomainError("evaluate_thm1: AB-type integrand required");
    const auto pts = strip_set(spec, pair, lambda);
    const double M = static_cast<double>(pair.M), N = static_cast<double>(pair.N);
    const double A = static_cast<double>(spec.A), B = static_cast<double>(spec.B);
    const double s2 = M * N;
    const cplx pref =
        std::exp(kI * kPi * (B + 3.0 * A * (M + N + 1.0) * (M + N + 1.0) - 6.0 * M * N) /
                 (12.0 * M * N)) / pair.s;
    const double gamma = (2.0 * N + 1.0) * (2.0 * M + 1.0) * B / (4.0 * M * N);

    KahanSum sum;
    std::vector<cplx> per_term;
    for (const auto& pt : pts) {
        const cplx l1 = std::log(1.0 - pt.z);
        const cplx R = detail::rogers_core(pt.z, pt.log_z.value);
        const cplx sdn = slashed_cyclic_dilog(pair.N, pt.theta_plus, pair.q_plus);
        const cplx sdm = slashed_cyclic_dilog(pair.M, pt.theta_minus, pair.q_minus);
        const cplx G = big_g_mn(spec, pair, pt.theta_plus, pt.theta_minus);
        cplx term = std::exp(kI * B / (kTwoPi * s2) * R + gamma * l1) * G /
                    (spec.z_gprime(pt.z) * ipow(sdn, spec.B) * ipow(sdm, spec.B));
        term *= winding_factor(multiplier_winding(spec.A, spec.B, pt.log_z.value, l1),
                               pair, pt.w);
        sum.add(term);
        per_term.push_back(term);
    }
    return make_closed_report(pref * sum.value(), Method::closed_form, pts, lambda,
                              std::move(per_term));
}

EvaluationReport evaluate_cor_m1(const IntegrandSpec& spec, std::int64_t N,
                                 double lambda) {
    if (spec.kind != IntegrandSpec::Kind::AB)
        throw DomainError("evaluate_cor_m1: AB-type integrand required");
    const AdmissiblePair pair(1, N);
    const auto pts = strip_set(spec, pair, lambda);
    const double Nd = static_cast<double>(N);
    const double A = static_cast<double>(spec.A), B = static_cast<double>(spec.B);
    const cplx pref =
        std::exp(kI * kPi * (B + 3.0 * A * (Nd + 2.0) * (Nd + 2.0) - 6.0 * Nd) /
                 (12.0 * Nd)) / std::sqrt(Nd);
    const double gamma = (2.0 * Nd + 3.0) * B / (4.0 * Nd);

    KahanSum sum;
    std::vector<cplx> per_term;
    for (const auto& pt : pts) {
        const cplx l1 = std::log(1.0 - pt.z);
        const cplx R = detail::rogers_core(pt.z, pt.log_z.value);
        const cplx sdn = slashed_cyclic_dilog(N, pt.theta_plus, pair.q_plus);
        const cplx G = big_g_n(spec, N, pt.theta_plus);
        cplx term = std::exp(kI * B / (kTwoPi * Nd) * R + gamma * l1) * G /
                    (spec.z_gprime(pt.z) * ipow(sdn, spec.B));
        term *= winding_factor(multiplier_winding(spec.A, spec.B, pt.log_z.value, l1),
                               pair, pt.w);
        sum.add(term);
        per_term.push_back(term);
    }
    return make_closed_report(pref * sum.value(), Method::closed_form, pts, lambda,
                              std::move(per_term));
}

EvaluationReport evaluate_residue_sum(const IntegrandSpec& spec,
                                      const AdmissiblePair& pair, double lambda) {
    const auto pts = strip_set(spec, pair, lambda);
    const double A = static_cast<double>(spec.A);
    KahanSum sum;
    std::vector<cplx> per_term;
    for (const auto& pt : pts) {
        const cplx zp = kTwoPi * pair.s * pt.w;
        cplx f;
        if (spec.kind == IntegrandSpec::Kind::AB) {
            const cplx p = detail::phi_rational_core(pair, zp, /*slashed=*/true);
            f = ipow(p, spec.B) *
                std::exp(-A * kPi * kI * (pt.w + pair.c_b) * (pt.w + pair.c_b));
        } else {
            const cplx p1 = detail::phi_rational_core(pair, zp, true);
            const cplx p2 = detail::phi_rational_core(pair, 2.0 * zp, true);
            f = p1 * p1 * p2 *
                std::exp(-2.0 * kPi * kI * (pt.w + pair.c_b) * (pt.w + pair.c_b));
        }
        const cplx S = big_g_mn(spec, pair, pt.theta_plus, pt.theta_minus);
        const cplx term = f * S / spec.z_gprime(pt.z);
        sum.add(term);
        per_term.push_back(term);
    }
    return make_closed_report(sum.value() / (kI * pair.s), Method::residue_sum, pts,
                              lambda, std::move(per_term));
}

std::vector<TorsionPhase> pretzel_torsion_phases() {
    const auto roots = detail::poly_roots({{1, 0}, {-2, 0}, {-1, 0}, {1, 0}});
    std::vector<TorsionPhase> out;
    for (cplx z : roots) {
        const double x = z.real();
        const double W = 2.0 * rogers_ell_real(x) + rogers_ell_real(x * x);
        out.push_back({x, -std::exp(2.0 * kI * W / kPi)});
    }
    return out;
}

} // namespace qdilog

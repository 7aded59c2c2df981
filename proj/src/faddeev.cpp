#include "qdilog/faddeev.hpp"

#include <algorithm>
#include <cmath>

#include "qdilog/dilog.hpp"
#include "qdilog/errors.hpp"

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

// log sinh(u), stable for large |Re u|; the branch is immaterial because the
// result only ever feeds an exponential together with a second log sinh.
// For |Re u| > 20 the e^{-2|Re u|} correction is below double precision.
cplx log_sinh(cplx u) {
    const double re = u.real();
    if (re > 20.0) return u - std::log(2.0);
    if (re < -20.0) return -u - std::log(2.0) + cplx{0.0, kPi};
    return std::log(std::sinh(u));
}

// log of the x-independent part of the Phi integrand at z = t + i eps.
cplx kernel_log(double b, cplx z) {
    return -log_sinh(z * b) - log_sinh(z / b);
}

double strip_half_height(double b) { return 0.5 * (b + 1.0 / b); }

// integrate the log-Phi integrand over [-T, T] at height eps with n panels;
// also returns the L1 mass of the terms, which sets the roundoff floor of
// the oscillatory sum (the kernel peaks at e^{2|Re x| eps}).
std::pair<cplx, double> integrate_log_phi_once(double b, cplx x, double eps,
                                               double T, int n) {
    const double h = 2.0 * T / n;
    KahanSum sum;
    double l1 = 0.0;
    for (int p = 0; p < n; ++p) {
        const double a = -T + p * h;
        for (const auto& g : kGL16) {
            const double t = a + 0.5 * h * (g.x + 1.0);
            const cplx z{t, eps};
            const cplx v =
                0.5 * h * g.w * std::exp(-2.0 * kI * x * z + kernel_log(b, z)) / (4.0 * z);
            sum.add(v);
            l1 += std::abs(v);
        }
    }
    return {sum.value(), l1};
}

} // namespace

cplx phi_strip(double b, cplx x, double tol) {
    if (!(b > 0.0)) throw DomainError("phi_strip: b must be positive real");
    const double hb = strip_half_height(b);
    if (std::abs(x.imag()) >= 0.95 * hb)
        throw OutOfStrip("phi_strip: |Im x| too close to |Im c_b|");
    const double eps = 0.5 * kPi * std::min(b, 1.0 / b);
    // the integrand peaks at e^{2 Re(x) eps}; past a modest Re(x) the
    // oscillatory cancellation exceeds double precision, so route through
    // the inversion relation Phi(x) Phi(-x) = e^{i pi x^2} Phi(0)^2
    if (x.real() > 2.0 / eps) {
        const double b2 = b * b;
        const cplx log_phi0_sq = kI * kPi * (b2 + 1.0 / b2) / 12.0;
        return std::exp(log_phi0_sq + kI * kPi * x * x) / phi_strip(b, -x, tol);
    }
    const double rate = 2.0 * hb - 2.0 * std::abs(x.imag());
    const double T = (39.0 + 2.0 * std::max(0.0, x.real()) * eps) / rate + 1.0;
    const double width = std::min(0.5 * eps, 4.0 / std::max(1.0, std::abs(x.real())));
    int n = static_cast<int>(std::ceil(2.0 * T / width));

    auto [prev, l1] = integrate_log_phi_once(b, x, eps, T, n);
    for (int ref = 0; ref < 6; ++ref) {
        n *= 2;
        const auto [cur, l1c] = integrate_log_phi_once(b, x, eps, T, n);
        // the oscillatory cancellation puts the achievable floor at ~L1 * ulp
        if (std::abs(cur - prev) < std::max(tol, l1c * 2e-15)) return std::exp(cur);
        prev = cur;
        l1 = l1c;
    }
    throw NoConvergence("phi_strip: quadrature did not converge");
}

namespace detail {

PhiLine::PhiLine(double b, double height, double max_abs_re, double tol)
    : b_(b), height_(height) {
    const double hb = strip_half_height(b);
    if (std::abs(height) >= 0.95 * hb)
        throw OutOfStrip("PhiLine: |Im x| too close to |Im c_b|");
    eps_ = 0.5 * kPi * std::min(b, 1.0 / b);
    rate_ = 2.0 * hb - 2.0 * std::abs(height);
    // Re(x) beyond 2/eps goes through the inversion relation, so the direct
    // evaluation never sees a larger e^{2 Re(x) eps} amplitude than e^4
    re_cut_ = 2.0 / eps_;
    const double re_max = std::min(max_abs_re, re_cut_);
    const double T = (39.0 + 2.0 * re_max * eps_) / rate_ + 1.0;
    const double width =
        std::min({0.5 * eps_, 0.5, 4.0 / std::max(1.0, std::min(max_abs_re, re_cut_))});
    const int n = static_cast<int>(std::ceil(2.0 * T / width));
    const double h = 2.0 * T / n;
    t_.reserve(16 * n);
    kernel_.reserve(16 * n);
    for (int p = 0; p < n; ++p) {
        const double a = -T + p * h;
        for (const auto& g : kGL16) {
            const double t = a + 0.5 * h * (g.x + 1.0);
            const cplx z{t, eps_};
            t_.push_back(t);
            kernel_.push_back(0.5 * h * g.w * std::exp(kernel_log(b, z)) / (4.0 * z));
        }
    }
    const double b2 = b * b;
    log_phi0_sq_ = kI * kPi * (b2 + 1.0 / b2) / 12.0;
    (void)tol;
}

cplx PhiLine::log_phi(cplx x) const {
    if (x.real() > re_cut_)
        return log_phi0_sq_ + kI * kPi * x * x - log_phi(-x);
    // nodes with |t| beyond the decayed tail for THIS x contribute nothing
    const double t_cut = (40.0 + 2.0 * std::max(0.0, x.real()) * eps_) / rate_ + 1.0;
    const auto lo = std::lower_bound(t_.begin(), t_.end(), -t_cut);
    const auto hi = std::upper_bound(t_.begin(), t_.end(), t_cut);
    const std::size_t i0 = static_cast<std::size_t>(lo - t_.begin());
    const std::size_t i1 = static_cast<std::size_t>(hi - t_.begin());
    const cplx m2ix = -2.0 * kI * x;
    KahanSum sum;
    for (std::size_t j = i0; j < i1; ++j)
        sum.add(kernel_[j] * std::exp(m2ix * cplx{t_[j], eps_}));
    return sum.value();
}

cplx phi_reduced(const ShiftMultipliers& sm, cplx x, double tol) {
    const double b = sm.b;
    const double hb = strip_half_height(b);
    const double target = 0.40 * 2.0 * hb;
    const double step1 = std::max(b, 1.0 / b);
    const double step2 = std::min(b, 1.0 / b);

    // counts: coarse steps with the larger quasi-period, fine with the smaller
    const auto n1 = static_cast<long long>(std::llround(x.imag() / step1));
    const double r = x.imag() - static_cast<double>(n1) * step1;
    const auto n2 = static_cast<long long>(std::llround(r / step2));
    long long n_b, n_binv;  // counts of i*b and i*b^{-1} shifts removed from x
    if (step1 == b) { n_b = n1; n_binv = n2; }
    else { n_binv = n1; n_b = n2; }

    const cplx two_pi_binv = cplx{2.0 * kPi / b, 0.0};
    const cplx two_pi_b = cplx{2.0 * kPi * b, 0.0};
    cplx cur = x;
    cplx fac{1.0, 0.0};
    auto step_down = [&](cplx q, double stepsz, cplx freq) {
        const cplx den = 1.0 - q * std::exp(freq * (cur - cplx{0.0, stepsz} - sm.c_b));
        if (std::abs(den) < 1e-12)
            throw PoleProximity("phi: reduction factor vanishes (argument at a pole)");
        fac /= den;
        cur -= cplx{0.0, stepsz};
    };
    auto step_up = [&](cplx q, double stepsz, cplx freq) {
        fac *= 1.0 - q * std::exp(freq * (cur - sm.c_b));
        cur += cplx{0.0, stepsz};
    };
    // b^{-1} shifts first, then b shifts (order fixed for reproducibility)
    for (long long k = 0; k < std::llabs(n_binv); ++k)
        n_binv > 0 ? step_down(sm.qt_inv, 1.0 / b, two_pi_binv)
                   : step_up(sm.qt_inv, 1.0 / b, two_pi_binv);
    for (long long k = 0; k < std::llabs(n_b); ++k)
        n_b > 0 ? step_down(sm.q, b, two_pi_b)
                : step_up(sm.q, b, two_pi_b);
    if (std::abs(cur.imag()) > target + 0.26 * 2.0 * hb)
        throw DomainError("phi: strip reduction failed");
    return fac * phi_strip(b, cur, tol);
}

} // namespace detail

cplx phi(double b, cplx x, double tol) {
    const double b2 = b * b;
    detail::ShiftMultipliers sm{
        b,
        cplx{0.0, strip_half_height(b)},
        std::exp(cplx{0.0, 2.0 * kPi * b2}),
        std::exp(cplx{0.0, 2.0 * kPi / b2}),
    };
    return detail::phi_reduced(sm, x, tol);
}

cplx phi(const AdmissiblePair& pair, cplx x, double tol) {
    detail::ShiftMultipliers sm{pair.b, pair.c_b, pair.q_plus.value,
                                pair.q_minus.value};
    return detail::phi_reduced(sm, x, tol);
}

namespace detail {

cplx phi_rational_core(const AdmissiblePair& pair, cplx z, bool slashed) {
    const double s2 = pair.s * pair.s;
    const cplx ez = std::exp(z);
    const cplx expo = (cplx{0.0, 1.0} / (2.0 * kPi * s2)) * li2_core(ez) +
                      (1.0 + cplx{0.0, 1.0} * z / (2.0 * kPi * s2)) * std::log(1.0 - ez);
    const cplx xp = std::exp(z / static_cast<double>(pair.N));
    const cplx xm = std::exp(z / static_cast<double>(pair.M));
    const cplx dn = slashed ? slashed_cyclic_dilog(pair.N, xp, pair.q_plus)
                            : cyclic_dilog(pair.N, xp, pair.q_plus);
    const cplx dm = slashed ? slashed_cyclic_dilog(pair.M, xm, pair.q_minus)
                            : cyclic_dilog(pair.M, xm, pair.q_minus);
    return std::exp(expo) / (dn * dm);
}

} // namespace detail

cplx phi_rational(const AdmissiblePair& pair, cplx z) {
    if (detail::cut_distance(std::exp(z)) < 1e-13)
        throw CutProximity("phi_rational: e^z within 1e-13 of [1, inf)");
    return detail::phi_rational_core(pair, z, false);
}

cplx phi_rational_shifted(const AdmissiblePair& pair, cplx z) {
    if (detail::cut_distance(std::exp(z)) < 1e-13)
        throw CutProximity("phi_rational_shifted: e^z within 1e-13 of [1, inf)");
    return detail::phi_rational_core(pair, z, true);
}

} // namespace qdilog

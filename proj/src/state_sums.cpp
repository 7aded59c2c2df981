#include "qdilog/state_sums.hpp"

#include <cmath>

#include "qdilog/errors.hpp"

namespace qdilog {

namespace {

void check_factor(cplx f, double scale) {
    if (std::abs(f) < 1e-14 * (1.0 + scale))
        throw DivisionByZero("g_k: vanishing Pochhammer factor");
}

// Per-step multiplier r(y; q) of the recursion, with y = x q^j supplied as
// the pieces needed for exact root-of-unity powers:
//   AB:      r = (-qy)^A / (1 - qy)^B
//   pretzel: r = (qy)^2 / ( (1-qy)^2 (1 - q y^2) (1 - q^2 y^2) )
// where qy = x q^{j+1}, q y^2 = x^2 q^{2j+1}, q^2 y^2 = x^2 q^{2j+2}.
template <class PowFn>
cplx step_multiplier(const IntegrandSpec& spec, std::int64_t j, cplx x, PowFn qpow) {
    const double ax = std::abs(x);
    if (spec.kind == IntegrandSpec::Kind::AB) {
        const cplx qy = x * qpow(j + 1);
        check_factor(1.0 - qy, ax);
        return ipow(-qy, spec.A) / ipow(1.0 - qy, spec.B);
    }
    const cplx qy = x * qpow(j + 1);
    const cplx qy2 = x * x * qpow(2 * j + 1);
    const cplx q2y2 = x * x * qpow(2 * j + 2);
    check_factor(1.0 - qy, ax);
    check_factor(1.0 - qy2, ax * ax);
    check_factor(1.0 - q2y2, ax * ax);
    return (qy * qy) / (ipow(1.0 - qy, 2) * (1.0 - qy2) * (1.0 - q2y2));
}

template <class PowFn>
cplx g_k_impl(const IntegrandSpec& spec, std::int64_t k, cplx x, PowFn qpow) {
    cplx g{1.0, 0.0};
    if (k >= 0) {
        for (std::int64_t j = 0; j < k; ++j) g *= step_multiplier(spec, j, x, qpow);
        return g;
    }
    for (std::int64_t j = -1; j >= k; --j) {
        const cplx r = step_multiplier(spec, j, x, qpow);
        if (std::abs(r) == 0.0) throw DivisionByZero("g_k: zero step multiplier");
        g /= r;
    }
    return g;
}

} // namespace

IntegrandSpec IntegrandSpec::ab(std::int64_t A, std::int64_t B) {
    if (!(B > A && A > 0)) throw DomainError("IntegrandSpec: need B > A > 0");
    IntegrandSpec s;
    s.kind = Kind::AB;
    s.A = A;
    s.B = B;
    return s;
}

IntegrandSpec IntegrandSpec::pretzel() {
    IntegrandSpec s;
    s.kind = Kind::Pretzel;
    s.A = 0;
    s.B = 0;
    return s;
}

cplx IntegrandSpec::g(cplx x) const {
    if (kind == Kind::AB) return ipow(-x, A) / ipow(1.0 - x, B);
    const cplx d = ipow(1.0 - x, 2) * ipow(1.0 - x * x, 2);
    return x * x / d;
}

cplx IntegrandSpec::z_gprime(cplx z) const {
    if (kind == Kind::AB)
        return static_cast<double>(A) + static_cast<double>(B) * z / (1.0 - z);
    // z d/dz log g = 2 + 2z/(1-z) + 4z^2/(1-z^2), times the literal g(z)
    return g(z) * (2.0 + 2.0 * z / (1.0 - z) + 4.0 * z * z / (1.0 - z * z));
}

std::pair<double, double> IntegrandSpec::lambda_range(std::int64_t M,
                                                      std::int64_t N) const {
    const double mn = static_cast<double>(M + N);
    if (kind == Kind::AB) return {-mn / 2.0, 0.0};
    return {-mn / 4.0, 0.0};
}

cplx g_k(const IntegrandSpec& spec, std::int64_t k, cplx x, const Unity& q) {
    return g_k_impl(spec, k, x, [&q](std::int64_t e) { return unity_pow_value(q, e); });
}

cplx g_k(const IntegrandSpec& spec, std::int64_t k, cplx x, cplx q) {
    return g_k_impl(spec, k, x, [q](std::int64_t e) { return ipow(q, e); });
}

cplx big_g_n(const IntegrandSpec& spec, std::int64_t N, cplx x) {
    if (N < 1) throw DomainError("big_g_n: N must be positive");
    const Unity zeta(N, 1);
    KahanSum sum;
    for (std::int64_t k = 0; k < N; ++k) sum.add(g_k(spec, k, x, zeta));
    return sum.value();
}

cplx big_g_mn(const IntegrandSpec& spec, const AdmissiblePair& pair, cplx x_plus,
              cplx x_minus) {
    KahanSum sum;
    const std::int64_t mn = pair.M * pair.N;
    for (std::int64_t k = 0; k < mn; ++k)
        sum.add(g_k(spec, k * pair.P, x_plus, pair.q_plus) *
                g_k(spec, k * pair.Q, x_minus, pair.q_minus));
    return sum.value();
}

} // namespace qdilog

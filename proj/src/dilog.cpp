#include "qdilog/dilog.hpp"

#include <cmath>

namespace qdilog {

namespace {

constexpr double kPi2_6 = kPi * kPi / 6.0;

// B_k / (k+1)! for Li2(z) = sum_k c_k w^{k+1}, w = -Log(1-z).  Converges for
// |w| < 2*pi; used in the annulus where neither the power series nor the
// z -> 1-z, z -> 1/z maps reach the series disk (e.g. z near e^{i pi/3}).
constexpr int kNumLogSeries = 37;
constexpr double kLogSeriesCoeff[kNumLogSeries] = {
    1.0,
    -0.25,
    0.027777777777777777778,
    -0.00027777777777777777778,
    4.7241118669690098262e-6,
    -9.1857730746619635509e-8,
    1.8978869988970999072e-9,
    -4.0647616451442255268e-11,
    8.9216910204564525552e-13,
    -1.9939295860721075687e-14,
    4.5189800296199181917e-16,
    -1.0356517612181247014e-17,
    2.3952186210261867457e-19,
    -5.5817858743250093363e-21,
    1.3091507554183212858e-22,
    -3.0874198024267402932e-24,
    7.3159756527022034204e-26,
    -1.7408456572340007410e-27,
    4.1576356446138997196e-29,
    -9.9621484882846221032e-31,
    2.3940344248961653005e-32,
    -5.7683473553673900843e-34,
    1.3931794796470079778e-35,
    -3.3721219654850894705e-37,
    8.1782087775621026218e-39,
    -1.9870108311523859256e-40,
    4.8357785180405508963e-42,
    -1.1786937248718384327e-43,
    2.8770964081172571450e-45,
    -7.0320590981560280150e-47,
    1.7208603145033146291e-48,
    -4.2160723905604454917e-50,
    1.0340406405133039574e-51,
    -2.5386630625994653162e-53,
    6.2385531769245908878e-55,
    -1.5344398069134650392e-56,
    3.7772946355785502340e-58,
};
// exponents of w for the table rows: 1, 2, 3, then odd entries vanish
constexpr int kLogSeriesPow[kNumLogSeries] = {
    1,  2,  3,  5,  7,  9,  11, 13, 15, 17, 19, 21, 23, 25, 27, 29, 31, 33, 35,
    37, 39, 41, 43, 45, 47, 49, 51, 53, 55, 57, 59, 61, 63, 65, 67, 69, 71,
};

cplx li2_series(cplx z) {
    // direct power series, |z| <= 1/2
    cplx sum = 0.0, zp = z;
    for (int n = 1; n < 80; ++n) {
        const cplx term = zp / static_cast<double>(n * n);
        sum += term;
        zp *= z;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return sum;
}

cplx li2_log_series(cplx z) {
    const cplx w = -std::log(1.0 - z);
    cplx sum = 0.0;
    cplx wp = w;            // w^1
    const cplx w2 = w * w;
    int pw = 1;
    for (int i = 0; i < kNumLogSeries; ++i) {
        while (pw < kLogSeriesPow[i]) {
            wp *= (kLogSeriesPow[i] - pw == 1) ? w : w2;
            pw += (kLogSeriesPow[i] - pw == 1) ? 1 : 2;
        }
        const cplx term = kLogSeriesCoeff[i] * wp;
        sum += term;
        if (i > 2 && std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return sum;
}

} // namespace

namespace detail {

double cut_distance(cplx z) {
    if (z.real() >= 1.0) return std::abs(z.imag());
    return std::abs(z - cplx{1.0, 0.0});
}

cplx li2_core(cplx z) {
    const double az = std::abs(z);
    if (az == 0.0) return {0.0, 0.0};
    if (az <= 0.5) return li2_series(z);
    if (std::abs(1.0 - z) <= 0.5) {
        // reflection z -> 1-z
        return kPi2_6 - std::log(z) * std::log(1.0 - z) - li2_series(1.0 - z);
    }
    if (az >= 2.0) {
        // inversion z -> 1/z
        const cplx lmz = std::log(-z);
        return -li2_core(1.0 / z) - kPi2_6 - 0.5 * lmz * lmz;
    }
    return li2_log_series(z);
}

cplx rogers_core(cplx z, cplx log_z_value) {
    return li2_core(z) + 0.5 * log_z_value * std::log(1.0 - z) - kPi2_6;
}

} // namespace detail

BranchedLog::BranchedLog(cplx log_value, cplx z) : value(log_value), base(z) {
    if (std::abs(z) == 0.0) throw DomainError("BranchedLog: base must be nonzero");
    if (std::abs(std::exp(log_value) - z) > 1e-12 * std::abs(z))
        throw DomainError("BranchedLog: exp(value) does not match base");
}

cplx li2(cplx z) {
    if (detail::cut_distance(z) < 1e-13)
        throw CutProximity("li2: argument within 1e-13 of the cut [1, inf)");
    return detail::li2_core(z);
}

cplx rogers(cplx z, const BranchedLog& log_z) {
    if (std::abs(log_z.base - z) > 1e-12 * (1.0 + std::abs(z)))
        throw DomainError("rogers: log_z.base does not match z");
    if (std::abs(z) < 1e-13 || std::abs(z - 1.0) < 1e-13)
        throw DomainError("rogers: z must avoid {0, 1}");
    if (detail::cut_distance(z) < 1e-13)
        throw CutProximity("rogers: z within 1e-13 of the cut [1, inf)");
    return detail::rogers_core(z, log_z.value);
}

double rogers_ell_real(double x) {
    if (x < 0.0) return -rogers_ell_real(x / (x - 1.0));
    if (x > 1.0) return kPi * kPi / 3.0 - rogers_ell_real(1.0 / x);
    if (x == 0.0) return 0.0;
    if (x == 1.0) return kPi2_6;
    return detail::li2_core(cplx{x, 0.0}).real() + 0.5 * std::log(x) * std::log1p(-x);
}

cplx cyclic_dilog(std::int64_t N, cplx x, const Unity& q) {
    if (N < 1) throw DomainError("cyclic_dilog: N must be positive");
    cplx log_sum = 0.0;
    for (std::int64_t k = 1; k < N; ++k) {
        const cplx factor = 1.0 - unity_pow_value(q, k) * x;
        if (std::abs(factor) < 1e-13 * (1.0 + std::abs(x)))
            throw DomainError("cyclic_dilog: vanishing factor 1 - q^k x");
        log_sum += (static_cast<double>(k) / static_cast<double>(N)) * std::log(factor);
    }
    return std::exp(log_sum);
}

cplx slashed_cyclic_dilog(std::int64_t N, cplx x, const Unity& q) {
    return (1.0 - x * unity_pow_value(q, N)) * cyclic_dilog(N, x, q);
}

cplx pochhammer(cplx a, cplx q, std::int64_t n) {
    cplx r{1.0, 0.0};
    if (n >= 0) {
        cplx qj{1.0, 0.0};
        for (std::int64_t j = 0; j < n; ++j) {
            r *= 1.0 - a * qj;
            qj *= q;
        }
        return r;
    }
    cplx qmj{1.0, 0.0};
    for (std::int64_t j = 1; j <= -n; ++j) {
        qmj /= q;
        const cplx factor = 1.0 - a * qmj;
        if (std::abs(factor) < 1e-14 * (1.0 + std::abs(a)))
            throw DivisionByZero("pochhammer: vanishing factor at negative index");
        r /= factor;
    }
    return r;
}

} // namespace qdilog

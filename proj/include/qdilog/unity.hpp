#pragma once

#include <complex>
#include <cstdint>

#include "qdilog/errors.hpp"

namespace qdilog {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Exact root of unity zeta_order^exponent.  The value is always produced
/// from the reduced angle 2*pi*((exponent mod order)/order), never by
/// iterated multiplication, so powers do not drift in long state-sums.
struct Unity {
    std::int64_t order = 1;
    std::int64_t exponent = 0;
    cplx value{1.0, 0.0};

    Unity() = default;
    Unity(std::int64_t n, std::int64_t m) : order(n) {
        if (n < 1) throw DomainError("Unity: order must be positive");
        exponent = m % n;
        if (exponent < 0) exponent += n;
        value = angle_value(exponent, order);
    }

    /// this^k, again via the reduced exact angle.
    Unity pow(std::int64_t k) const {
        std::int64_t e = (exponent % order) * (k % order) % order;
        return Unity(order, e);
    }

    static cplx angle_value(std::int64_t m, std::int64_t n) {
        const double a = 2.0 * kPi * static_cast<double>(m) / static_cast<double>(n);
        return {std::cos(a), std::sin(a)};
    }
};

inline cplx unity_pow_value(const Unity& u, std::int64_t k) { return u.pow(k).value; }

/// Integer power by binary exponentiation; n may be negative.
inline cplx ipow(cplx base, std::int64_t n) {
    if (n < 0) return 1.0 / ipow(base, -n);
    cplx r{1.0, 0.0};
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

/// Compensated (Kahan) accumulator for complex sums whose terms span many
/// orders of magnitude.
struct KahanSum {
    cplx s{0.0, 0.0};
    cplx c{0.0, 0.0};
    void add(cplx x) {
        const cplx y = x - c;
        const cplx t = s + y;
        c = (t - s) - y;
        s = t;
    }
    cplx value() const { return s; }
};

} // namespace qdilog

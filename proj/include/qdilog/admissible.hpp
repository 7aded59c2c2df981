#pragma once

#include <cstdint>
#include <utility>

#include "qdilog/unity.hpp"

namespace qdilog {

/// Integers (P, Q) with M*P + N*Q = 1 and P the minimal-absolute-value
/// representative of M^{-1} mod N (P = 0 when N = 1).
std::pair<std::int64_t, std::int64_t> bezout(std::int64_t M, std::int64_t N);

/// Coprime pair (M, N) with b = sqrt(M/N), s = sqrt(M*N), and the derived
/// symbols used throughout: c_b = i(b + 1/b)/2, q_+ = zeta_N^M, q_- = zeta_M^N,
/// and 1/q~ = e^{2 pi i b^{-2}} (= q_- as a value).
struct AdmissiblePair {
    std::int64_t M = 1, N = 1;
    std::int64_t P = 0, Q = 1;
    double b = 1.0;
    double s = 1.0;
    cplx c_b{0.0, 1.0};
    Unity q_plus;   // zeta_N^M
    Unity q_minus;  // zeta_M^N
    cplx q_tilde_inverse{1.0, 0.0};

    AdmissiblePair(std::int64_t M, std::int64_t N);

    /// Same pair with an alternative Bezout representative (P + R*N, Q - R*M).
    AdmissiblePair with_bezout(std::int64_t P, std::int64_t Q) const;
};

} // namespace qdilog

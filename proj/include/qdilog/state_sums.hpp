#pragma once

#include <cstdint>
#include <utility>

#include "qdilog/admissible.hpp"
#include "qdilog/unity.hpp"

namespace qdilog {

/// The integrand family of a 1-dimensional state-integral: either the
/// AB type  Phi_b(x)^B e^{-A pi i x^2}  with total multiplier
/// g(x) = (-x)^A (1-x)^{-B},  or the pretzel integrand
/// Phi_b(x)^2 Phi_b(2x - c_b) e^{-2 pi i x^2}  with
/// g(x) = x^2 / ((1-x)^2 (1-x^2)^2).
struct IntegrandSpec {
    enum class Kind { AB, Pretzel };
    Kind kind = Kind::AB;
    std::int64_t A = 1, B = 2;

    static IntegrandSpec ab(std::int64_t A, std::int64_t B);
    static IntegrandSpec pretzel();

    cplx g(cplx x) const;

    /// z g'(z) at a gluing root.  AB uses the simplification
    /// g'(z) = A/z + B/(1-z) valid when g(z) = 1; the pretzel derivative is
    /// the exact derivative of the rational function.
    cplx z_gprime(cplx z) const;

    /// open interval of admissible contour offsets lambda
    std::pair<double, double> lambda_range(std::int64_t M, std::int64_t N) const;
};

/// Quasi-periodicity multiplier g_k(x, q) for any integer k, computed by the
/// recursion r_{k+1}/r_k = r(x q^k), r_0 = 1 (one code path for both
/// integrand kinds).  The closed forms
///   AB:      (-x)^{Ak} q^{A k(k+1)/2} / (qx;q)_k^B
///   pretzel: q^{k(k+1)} x^{2k} / ( (qx;q)_k^2 (qx^2;q)_{2k} )
/// are the test oracles.  Both signs share the formula; the sign only selects
/// which (x, q) the caller passes.
cplx g_k(const IntegrandSpec& spec, std::int64_t k, cplx x, const Unity& q);
cplx g_k(const IntegrandSpec& spec, std::int64_t k, cplx x, cplx q);

/// Truncated Nahm sum G_N(x) = sum_{k=0}^{N-1} g_k(x, zeta_N).
cplx big_g_n(const IntegrandSpec& spec, std::int64_t N, cplx x);

/// Bidirectional state-sum
///   G_{M,N}(x_+, x_-) = sum_{k=0}^{MN-1} g_{kP}(x_+, zeta_N^M) g_{kQ}(x_-, zeta_M^N)
/// using the pair's stored Bezout (P, Q).  Independent of (P, Q) exactly when
/// x_+^N = x_-^M.
cplx big_g_mn(const IntegrandSpec& spec, const AdmissiblePair& pair, cplx x_plus,
              cplx x_minus);

} // namespace qdilog

#pragma once

#include <complex>
#include <cstdint>

#include "qdilog/errors.hpp"
#include "qdilog/unity.hpp"

namespace qdilog {

/// A chosen value of log z together with z itself.  exp(value) must equal
/// base to 1e-12 relative; the constructor enforces this.
struct BranchedLog {
    cplx value;
    cplx base;

    BranchedLog(cplx log_value, cplx z);
};

/// Principal-branch dilogarithm Li_2.  Errors with CutProximity if z is
/// within 1e-13 of the cut [1, inf).
cplx li2(cplx z);

/// Rogers dilogarithm Li_2(z) + (1/2)*log_z*Log(1-z) - pi^2/6 with the
/// caller-supplied branch of log z and principal Log(1-z).
cplx rogers(cplx z, const BranchedLog& log_z);

/// Continuous real extension of the Rogers L-function:
///   L(x) = Li_2(x) + (1/2) ln x ln(1-x)         on [0,1],
///   L(x) = pi^2/3 - L(1/x)                      for x > 1,
///   L(x) = -L(x/(x-1))                          for x < 0.
/// Used for torsion checks in totally real fields.
double rogers_ell_real(double x);

/// Cyclic quantum dilogarithm D_N(x;q) = prod_{k=1}^{N-1} (1-q^k x)^{k/N},
/// principal logarithm per factor, q^k from the exact reduced angle.
cplx cyclic_dilog(std::int64_t N, cplx x, const Unity& q);

/// (1 - x q^N) * D_N(x;q).
cplx slashed_cyclic_dilog(std::int64_t N, cplx x, const Unity& q);

/// q-Pochhammer (a;q)_n for any integer n:
///   n >= 0 : prod_{j=0}^{n-1} (1 - a q^j)
///   n <  0 : prod_{j=1}^{|n|} (1 - a q^{-j})^{-1}
/// The negative-index extension is the unique one compatible with the
/// index-addition identity (a;q)_{k+l} = (a;q)_k (a q^k;q)_l.
cplx pochhammer(cplx a, cplx q, std::int64_t n);

namespace detail {

/// li2 without the cut guard.  With a signed-zero imaginary part the result
/// is the one-sided boundary value (Im z = +0 gives the limit from above).
cplx li2_core(cplx z);

/// rogers without guards, log branch passed as a plain value.
cplx rogers_core(cplx z, cplx log_z_value);

/// Distance from z to the ray [1, inf).
double cut_distance(cplx z);

} // namespace detail

} // namespace qdilog

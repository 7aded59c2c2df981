#pragma once

#include <vector>

#include "qdilog/admissible.hpp"
#include "qdilog/report.hpp"
#include "qdilog/state_sums.hpp"

namespace qdilog {

/// All solutions of the gluing equation g(z) = 1 as roots of the
/// polynomialized equation: AB (1-z)^B = (-z)^A (degree B); pretzel the two
/// cubics z = +-(1-z)(1-z^2).  Sorted by (Re, Im); real roots carry a +0
/// imaginary part so downstream cut-boundary evaluations take the limit
/// from above consistently.
std::vector<cplx> gluing_roots(const IntegrandSpec& spec);

/// Lift each gluing root to the unique w with z = e^{2 pi s w} and
/// 0 < s Im(w) - lambda < 1.
std::vector<StripPoint> strip_set(const IntegrandSpec& spec,
                                  const AdmissiblePair& pair, double lambda);

/// lambda = -0.05 |range|, nudged through successive prime reciprocals if a
/// lift lands non-generically.
double default_lambda(const IntegrandSpec& spec, const AdmissiblePair& pair);

/// Closed-form evaluation of the AB state-integral at b^2 = M/N:
/// prefactor e^{pi i (B + 3A(M+N+1)^2 - 6MN)/(12MN)} / s times the sum over
/// strip points of
///   e^{(iB/2 pi s^2) R(z)} (1-z)^{(2N+1)(2M+1)B/(4MN)}
///     / ( z g'(z) sD_N(th_+)^B sD_M(th_-)^B ) * G_{M,N}(th_+, th_-),
/// R with log z = 2 pi s w and principal Log(1-z).  When the multiplier's
/// logarithm log g(z) = A(log z - i pi) - B Log(1-z) winds to 2 pi i kappa
/// with kappa != 0 at a strip point (which happens at real roots z > 1), the
/// summand carries the residual factor g(z)^beta = e^{2 pi i kappa beta},
/// beta = (1 + 2(M+N) - 2 i s w)/(4 s^2); omitting it breaks the identity
/// with the contour integral.
EvaluationReport evaluate_thm1(const IntegrandSpec& spec,
                               const AdmissiblePair& pair, double lambda);

/// The M = 1 specialization (single truncated Nahm sum, one slashed-D).
EvaluationReport evaluate_cor_m1(const IntegrandSpec& spec, std::int64_t N,
                                 double lambda);

/// Generic residue assembly i^{-1} s^{-1} sum f(w) S(th_+, th_-) / (z g'(z))
/// with f the actual shifted integrand built from the closed forms of Phi.
/// Works for both AB and pretzel integrands.
EvaluationReport evaluate_residue_sum(const IntegrandSpec& spec,
                                      const AdmissiblePair& pair, double lambda);

/// Complex-volume exponentials for the three pretzel gluing roots in the
/// totally real cubic field (z^3 - z^2 - 2z + 1, discriminant 49):
///   u = -exp( 2 i (2 L(z) + L(z^2)) / pi )
/// with L the continuous real Rogers dilogarithm.  Each u is unimodular
/// with u^42 = 1; the triple is (e(-19/42), e(-13/42), e(11/42)) in
/// ascending root order.
struct TorsionPhase {
    double z;
    cplx u;
};
std::vector<TorsionPhase> pretzel_torsion_phases();

} // namespace qdilog

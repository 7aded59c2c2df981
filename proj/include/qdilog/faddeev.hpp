#pragma once

#include <vector>

#include "qdilog/admissible.hpp"
#include "qdilog/unity.hpp"

namespace qdilog {

/// Faddeev quantum dilogarithm via the integral representation
///   Phi_b(x) = exp( int_{R+i eps'} e^{-2ixz} / (4 sinh(zb) sinh(z/b)) dz/z ),
/// eps' = (pi/2) min(b, 1/b), valid for |Im x| < 0.95 |Im c_b|.
cplx phi_strip(double b, cplx x, double tol = 1e-12);

/// Phi_b(x) for x anywhere off the pole lattice c_b + i N b + i N b^{-1}:
/// the argument is reduced into the strip with the shift equations
/// (b^{-1} steps first, then b steps) and evaluated by phi_strip.
cplx phi(double b, cplx x, double tol = 1e-12);
cplx phi(const AdmissiblePair& pair, cplx x, double tol = 1e-12);

/// Closed form at b^2 = M/N:
///   Phi_b(z/(2 pi s) - c_b) =
///     e^{(i/2 pi s^2) Li2(e^z)} (1-e^z)^{1 + iz/(2 pi s^2)}
///       / ( D_N(e^{z/N}; q_+) D_M(e^{z/M}; q_-) ).
cplx phi_rational(const AdmissiblePair& pair, cplx z);

/// Same numerator over slashed-D denominators; equals Phi_b(z/(2 pi s) + c_b).
cplx phi_rational_shifted(const AdmissiblePair& pair, cplx z);

namespace detail {

/// log Phi_b on a fixed horizontal line Im x = height.  The quadrature
/// kernel (everything except e^{-2ixz}) is precomputed once; evaluating
/// log Phi at a point costs one complex exponential per node.  Used by the
/// state-integral quadrature, where thousands of Phi values are needed on
/// one line.
class PhiLine {
  public:
    PhiLine(double b, double height, double max_abs_re, double tol);
    cplx log_phi(cplx x) const;

  private:
    double b_, height_, eps_, rate_, re_cut_;
    cplx log_phi0_sq_;
    std::vector<double> t_;      // node abscissas, ascending
    std::vector<cplx> kernel_;   // weight * integrand / e^{-2ixz} factor
};

struct ShiftMultipliers {
    double b;
    cplx c_b;
    cplx q;          // e^{2 pi i b^2}
    cplx qt_inv;     // e^{2 pi i b^{-2}}
};

cplx phi_reduced(const ShiftMultipliers& sm, cplx x, double tol);

cplx phi_rational_core(const AdmissiblePair& pair, cplx z, bool slashed);

} // namespace detail

} // namespace qdilog

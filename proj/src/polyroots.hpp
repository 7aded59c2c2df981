#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "qdilog/errors.hpp"
#include "qdilog/unity.hpp"

namespace qdilog::detail {

inline cplx poly_eval(const std::vector<cplx>& c, cplx z) {
    cplx v{0.0, 0.0};
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + *it;
    return v;
}

inline cplx poly_eval_deriv(const std::vector<cplx>& c, cplx z) {
    cplx v{0.0, 0.0};
    for (std::size_t j = c.size() - 1; j >= 1; --j) v = v * z + static_cast<double>(j) * c[j];
    return v;
}

/// All roots of sum_j coeff[j] z^j (coeff ascending), Aberth-Ehrlich with a
/// final Newton polish.  Coefficients must have a nonzero leading term.
inline std::vector<cplx> poly_roots(std::vector<cplx> coeff) {
    while (!coeff.empty() && std::abs(coeff.back()) == 0.0) coeff.pop_back();
    if (coeff.size() < 2) return {};
    const std::size_t n = coeff.size() - 1;

    // initial guesses on a circle of the Cauchy-bound radius
    double r = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        r = std::max(r, std::abs(coeff[j] / coeff[n]));
    r = 1.0 + r;
    std::vector<cplx> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = 2.0 * kPi * (static_cast<double>(i) + 0.25) / static_cast<double>(n) + 0.4;
        z[i] = r * cplx{std::cos(a), std::sin(a)};
    }

    for (int iter = 0; iter < 200; ++iter) {
        double moved = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const cplx p = poly_eval(coeff, z[i]);
            const cplx dp = poly_eval_deriv(coeff, z[i]);
            if (std::abs(p) == 0.0) continue;
            const cplx newton = p / dp;
            cplx rep{0.0, 0.0};
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) rep += 1.0 / (z[i] - z[j]);
            const cplx step = newton / (1.0 - newton * rep);
            z[i] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-14 * (1.0 + r)) break;
    }
    // Newton polish
    for (std::size_t i = 0; i < n; ++i) {
        for (int k = 0; k < 4; ++k) {
            const cplx p = poly_eval(coeff, z[i]);
            const cplx dp = poly_eval_deriv(coeff, z[i]);
            if (std::abs(dp) == 0.0) break;
            z[i] -= p / dp;
        }
        if (std::abs(poly_eval(coeff, z[i])) > 1e-13 * (1.0 + std::abs(coeff[n])) * (1.0 + r))
            throw NoConvergence("poly_roots: residual above 1e-13 after polishing");
    }
    std::sort(z.begin(), z.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (std::abs(z[i + 1] - z[i]) < 1e-8 * (1.0 + r))
            throw DegenerateRoot("poly_roots: coincident roots (simple-pole method)");
    return z;
}

} // namespace qdilog::detail

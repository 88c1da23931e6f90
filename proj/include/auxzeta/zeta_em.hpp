#pragma once

#include <cmath>
#include <complex>

#include "auxzeta/errors.hpp"
#include "auxzeta/gamma.hpp"

namespace auxzeta {

namespace detail {
// B_{2k} / (2k)! for the Euler-Maclaurin correction terms, k = 1..6.
inline constexpr double kEMCoef[6] = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0};

inline int em_terms_auto(cplx s) {
    const double t = std::abs(s.imag());
    const double sig = s.real();
    int n = (int)std::ceil(2.0 * t) + 16;
    if (sig < 0.0) n += (int)std::ceil(-2.0 * sig);
    return std::max(50, n);
}
}  // namespace detail

// Euler-Maclaurin zeta; the independent oracle used by the Riemann-Siegel
// closure checks.
// Heuristic accuracy ~1e-12 for |t| <= 500 with the automatic term count.
inline cplx zeta_em(cplx s, int n_terms = 0) {
    if (s == cplx(1.0, 0.0)) throw pole_error("zeta_em: pole at s = 1", s);
    if (n_terms == 0) n_terms = detail::em_terms_auto(s);
    if (n_terms < 10) throw regime_error("zeta_em: n_terms must be >= 10");
    const double N = (double)n_terms;
    // accumulate in increasing magnitude: |n^{-s}| = n^{-sigma}
    cplx sum = 0.0;
    if (s.real() >= 0.0) {
        for (int n = n_terms - 1; n >= 1; --n) sum += std::exp(-s * std::log((double)n));
    } else {
        for (int n = 1; n <= n_terms - 1; ++n) sum += std::exp(-s * std::log((double)n));
    }
    const cplx lN = std::log(N);
    cplx z = sum + std::exp((1.0 - s) * lN) / (s - 1.0) + 0.5 * std::exp(-s * lN);
    // correction terms: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^(-s-2k+1)
    cplx rising = s;
    for (int k = 1; k <= 6; ++k) {
        z += detail::kEMCoef[k - 1] * rising * std::exp(-(s + (2.0 * k - 1.0)) * lN);
        rising *= (s + (2.0 * k - 1.0)) * (s + (2.0 * k));
    }
    return z;
}

}  // namespace auxzeta

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "auxzeta/errors.hpp"

namespace auxzeta {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kLog2Pi = 1.8378770664093454835606594728112353;

namespace detail {

// Stirling coefficients B_{2k} / ((2k-1)(2k)).
inline constexpr double kStirling[10] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0};

inline cplx log_gamma_stirling(cplx z) {
    const cplx lz = std::log(z);
    cplx s = (z - 0.5) * lz - z + 0.5 * kLog2Pi;
    const cplx z2 = z * z;
    cplx zp = z;
    for (double c : kStirling) {
        s += c / zp;
        zp *= z2;
    }
    return s;
}

inline cplx log_gamma_right(cplx z) {
    // Recurrence shift until Re z >= 10, then Stirling.  Every shifted point
    // stays in the right half plane, so the principal logs never wrap.
    cplx shift = 0.0;
    while (z.real() < 10.0) {
        shift += std::log(z);
        z += 1.0;
    }
    return log_gamma_stirling(z) - shift;
}

}  // namespace detail

// Principal-branch log Gamma on the plane cut along the negative reals.
// exp(log_gamma(z)) = Gamma(z); relative accuracy ~1e-14 away from poles.
inline cplx log_gamma(cplx z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
        throw pole_error("log_gamma: pole at z = " + std::to_string((long long)z.real()), z);
    }
    if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
    if (z.real() >= 0.0) return detail::log_gamma_right(z);
    // Reflection, Im z >= 0.  With L(z) a continuous log of sin(pi z) on the
    // upper half plane, log Gamma(z) = log pi - L(z) - log Gamma(1 - z) holds
    // with no extra winding term.
    const cplx two_pi_i_z = cplx(0.0, 2.0 * kPi) * z;
    const cplx L = cplx(0.0, kPi / 2) - std::log(2.0) - cplx(0.0, kPi) * z +
                   std::log(1.0 - std::exp(two_pi_i_z));
    return std::log(kPi) - L - detail::log_gamma_right(1.0 - z);
}

// log of the functional-equation factor chi(s) = pi^(s-1/2) G((1-s)/2) / G(s/2).
inline cplx log_chi(cplx s) {
    const cplx h = 0.5 * (1.0 - s);
    if (h.imag() == 0.0 && h.real() <= 0.0 && h.real() == std::floor(h.real())) {
        throw pole_error("chi: pole of Gamma((1-s)/2) at s = " + std::to_string(s.real()), s);
    }
    return (s - 0.5) * std::log(kPi) + log_gamma(h) - log_gamma(0.5 * s);
}

inline cplx chi(cplx s) { return std::exp(log_chi(s)); }

// Riemann-Siegel theta, continuous with theta(0) = 0.
inline double theta(double t) {
    if (std::abs(t) > 1e6) throw regime_error("theta: |t| exceeds 1e6");
    return std::imag(log_gamma(cplx(0.25, 0.5 * t))) - 0.5 * t * std::log(kPi);
}

}  // namespace auxzeta

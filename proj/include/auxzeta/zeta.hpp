#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "auxzeta/errors.hpp"
#include "auxzeta/gamma.hpp"
#include "auxzeta/rzeta.hpp"
#include "auxzeta/zeta_em.hpp"

namespace auxzeta {

// Hardy's Z: zeta(1/2+it) = e^{-i theta(t)} Z(t).  Also cross-checked against
// 2 Re{e^{i theta} R(1/2+it)}, the identity tying R to the critical line.
inline double z_function(double t, bool check_against_r = true) {
    if (!(t > 0.0) || t > kQuadratureTCap) throw regime_error("z_function: requires 0 < t <= 500");
    const cplx phase = std::exp(cplx(0.0, theta(t)));
    const cplx zv = phase * zeta_em(cplx(0.5, t));
    if (check_against_r) {
        const cplx r = rzeta_quadrature(cplx(0.5, t), 1e-12).value;
        const double other = 2.0 * std::real(phase * r);
        if (std::abs(zv.real() - other) > 1e-9 * (1.0 + std::abs(zv)))
            throw accuracy_error("z_function: zeta-path and R-path disagree", zv, std::abs(zv.real() - other));
    }
    return zv.real();
}

// W(s) defined by R(s) = zeta(s)(1 + W(s)) for sigma >= 2, with the decay
// bound |W| <= C (|s|/2 pi e)^{(1-sigma)/2}.
inline ApproxWithError w_factor(cplx s, double fitted_C = 10.0) {
    if (!(s.real() >= 2.0) || !(s.imag() >= 0.0) || std::abs(s) <= 2.0 * kPi * std::exp(2.0))
        throw regime_error("w_factor: requires sigma >= 2, t >= 0, |s| > 2 pi e^2");
    ApproxWithError r;
    r.value = rzeta_quadrature(s, 1e-13).value / zeta_em(s) - 1.0;
    r.claimed_rel_error = fitted_C * std::pow(std::abs(s) / (2.0 * kPi * std::exp(1.0)),
                                              0.5 * (1.0 - s.real()));
    return r;
}

// Continuous phase of R on the critical line: R(1/2+it) = e^{-i omega(t)} g(t)
// with omega and g real analytic.  omega is tracked modulo pi (g may change
// sign) with consecutive steps kept below pi/2.
struct PhaseTrack {
    std::vector<double> t_grid;
    std::vector<double> omega_values;
    std::vector<double> g_values;
    std::vector<double> perturbed_samples;  // grid points nudged off a zero of R

    double omega_at(double t) const {
        // linear interpolation; the grid satisfies the < pi/2 step criterion
        if (t <= t_grid.front()) return omega_values.front();
        if (t >= t_grid.back()) return omega_values.back();
        auto it = std::lower_bound(t_grid.begin(), t_grid.end(), t);
        const std::size_t i = (std::size_t)(it - t_grid.begin());
        const double w = (t - t_grid[i - 1]) / (t_grid[i] - t_grid[i - 1]);
        return omega_values[i - 1] * (1.0 - w) + omega_values[i] * w;
    }
    double count_estimate(double T) const { return omega_at(T) / (2.0 * kPi); }
};

namespace detail {
inline double mod_pi_near(double raw, double prev) {
    // representative of raw (mod pi) nearest to prev
    const double k = std::round((prev - raw) / kPi);
    return raw + k * kPi;
}
}  // namespace detail

inline PhaseTrack omega_track(double t0, double t_max, double step = 0.05,
                              double quad_tol = 1e-10) {
    if (!(t0 > 0.0) || !(t_max > t0)) throw regime_error("omega_track: need 0 < t0 < t_max");
    PhaseTrack track;
    auto r_at = [&](double& t) {
        cplx v = rzeta_quadrature(cplx(0.5, t), quad_tol).value;
        int tries = 0;
        while (std::abs(v) < 1e-13 && tries < 3) {
            t += 0.5 * step;  // sample sits on a zero of R; nudge and record
            track.perturbed_samples.push_back(t);
            v = rzeta_quadrature(cplx(0.5, t), quad_tol).value;
            ++tries;
        }
        return v;
    };
    double t = t0;
    cplx v = r_at(t);
    double omega = -std::arg(v);  // principal base value
    auto push = [&](double tv, double om, cplx rv) {
        track.t_grid.push_back(tv);
        track.omega_values.push_back(om);
        track.g_values.push_back(std::real(std::exp(cplx(0.0, om)) * rv));
    };
    push(t, omega, v);
    while (t < t_max) {
        double h = std::min(step, t_max - t);
        for (;;) {
            double tm = t + 0.5 * h;
            double tn = t + h;
            const cplx vm = r_at(tm);
            const cplx vn = r_at(tn);
            // a pi-slip would break the half-step consistency, so require the
            // two half steps to reproduce the direct step
            const double om_m = detail::mod_pi_near(-std::arg(vm), omega);
            const double om_n = detail::mod_pi_near(-std::arg(vn), om_m);
            const double om_direct = detail::mod_pi_near(-std::arg(vn), omega);
            const bool consistent = std::abs(om_n - om_direct) < 1e-9;
            const bool small_steps =
                std::abs(om_m - omega) < 0.45 * kPi && std::abs(om_n - om_m) < 0.45 * kPi;
            if ((consistent && small_steps) || h < 1e-9) {
                push(tm, om_m, vm);
                push(tn, om_n, vn);
                t = tn;
                v = vn;
                omega = om_n;
                break;
            }
            h *= 0.5;
        }
    }
    return track;
}

}  // namespace auxzeta

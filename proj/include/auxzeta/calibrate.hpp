#pragma once

#include <cmath>
#include <vector>

#include "auxzeta/config.hpp"
#include "auxzeta/critical_line.hpp"
#include "auxzeta/rzeta.hpp"
#include "auxzeta/verify.hpp"
#include "auxzeta/zeros.hpp"
#include "auxzeta/zeta.hpp"

namespace auxzeta {

// Fits every existential constant on fixed desk-scale grids and applies a
// 1.5x safety margin.  Deterministic, so re-running calibrate reproduces the
// pinned file bit for bit.
inline FittedConstants calibrate(const ZeroCatalog& catalog, double T_ref = 200.0) {
    if (catalog.t_frontier < 150.0)
        throw missing_input_error("calibrate: needs a catalog scanned to at least T = 150");
    FittedConstants c;
    const double margin = 1.5;

    // |U(s)| = |product / R - 1| against t^(-1/21) on the regime ray
    double a_fit = 0.0;
    for (double t : {100.0, 150.0, 200.0, 300.0, 400.0}) {
        const cplx s(1.0 - std::pow(t, 3.0 / 7.0), t);
        const cplx r = rzeta_quadrature(s, 1e-12).value;
        const cplx p = rzeta_left_asymptotic(s, 1.0).value;
        a_fit = std::max(a_fit, std::abs(p / r - 1.0) / std::pow(t, -1.0 / 21.0));
    }
    c.u_bound_A = margin * a_fit;

    // main-sum remainder constant
    double cm = 0.0;
    for (double sig : {0.5, 1.0, 2.0, 3.0}) {
        for (double t : {60.0, 120.0, 240.0, 400.0}) {
            const cplx s(sig, t);
            const cplx r = rzeta_quadrature(s, 1e-13).value;
            const cplx m = detail::dirichlet_partial_sum(s, xi_decomposition(s).ell);
            cm = std::max(cm, std::abs(r - m) / std::pow(std::abs(s) / (2.0 * kPi * std::exp(1.0)),
                                                          -0.5 * sig));
        }
    }
    c.mainsum_C = margin * cm;

    // W-factor decay constant
    double cw = 0.0;
    for (double sig : {2.0, 3.0, 5.0, 8.0}) {
        for (double t : {80.0, 160.0, 320.0}) {
            const cplx s(sig, t);
            const auto w = w_factor(s, 1.0);
            cw = std::max(cw, std::abs(w.value) / w.claimed_rel_error);
        }
    }
    c.w_factor_C = margin * cw;

    // large-sigma decay constant
    const auto decay = check_sigma_decay({4.0, 5.0, 6.0, 7.0}, std::min(T_ref, 300.0), 1e30);
    c.sigma_decay_C = margin * decay.fitted_constants["C"].get<double>();

    // omega/2pi vs right-zero count
    {
        const double T = std::min(T_ref, catalog.t_frontier);
        PhaseTrack track = omega_track(1.0, T);
        double worst = 0.0;
        for (double Tq : {0.5 * T, T}) {
            const double n_right = (double)count_stats(catalog, 0.5, Tq).n_gt;
            const double est = track.count_estimate(Tq);
            worst = std::max(worst, std::abs(est - n_right) / std::log(Tq));
        }
        c.omega_count_kappa = margin * worst;
    }

    const double Tcat = std::min(T_ref, catalog.t_frontier);
    double k1 = 0.0, k2 = 0.0;
    for (double T : {0.75 * Tcat, Tcat}) {
        for (double sig : {0.5, 1.0})
            k1 = std::max(k1, check_right_excess(sig, T, catalog, 1e30)
                                  .fitted_constants["ratio"].get<double>());
        for (double sig : {3.0, 4.0, 5.0})
            k2 = std::max(k2, check_left_excess(sig, T, catalog, 1e30)
                                  .fitted_constants["ratio"].get<double>());
    }
    c.kappa1 = margin * k1;
    c.kappa2 = margin * k2;

    double k3 = 0.0, k4 = 0.0, k5 = 0.0;
    for (double T : {100.0, 200.0, 400.0}) {
        k3 = std::max(k3, per_integral_check(T, 1e30).residual);
        k4 = std::max(k4, littlemean_check(T, 1e30).fitted_constants["ratio"].get<double>());
        k5 = std::max(k5, mean_j_check(T, 1e30).residual / std::pow(T, 3.0 / 7.0 + 0.5));
    }
    c.kappa3 = margin * k3;
    c.kappa4 = margin * k4;
    c.kappa5 = margin * k5;

    double k6 = 0.0, k8 = 0.0;
    for (double sig : {0.0, 2.0, 4.0})
        k6 = std::max(k6, comb_decomposition_check(sig, Tcat, catalog, 1e30)
                              .fitted_constants["ratio"].get<double>());
    for (double sig : {-14.0, -10.0, -6.0})
        k8 = std::max(k8, gamma_mean_left_check(sig, Tcat, 1e30)
                              .fitted_constants["ratio"].get<double>());
    c.kappa6 = margin * k6;
    c.kappa8 = margin * k8;
    c.kappa7 = margin * std::max(comb_mean_left_check(Tcat, catalog, 1e30)
                                     .fitted_constants["ratio"].get<double>(),
                                 comb_mean_left_check(0.75 * Tcat, catalog, 1e30)
                                     .fitted_constants["ratio"].get<double>());
    return c;
}

}  // namespace auxzeta

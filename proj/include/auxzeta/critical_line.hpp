#pragma once

#include <cmath>
#include <vector>

#include "auxzeta/gamma.hpp"
#include "auxzeta/zeros.hpp"
#include "auxzeta/zeta.hpp"

namespace auxzeta {

// Counts that support the critical-line connection: a point 1/2 + it is a
// zero of zeta iff it is a zero of R or cos(theta(t) - omega(t)) = 0.
struct CriticalLineCounts {
    long z_sign_changes = 0;
    long cos_zeros = 0;
    long r_zeros_on_line = 0;
    bool within_one = false;
};

// Sign changes of Z on (t0, T] over a fixed fine grid.
inline long z_sign_change_count(double t0, double T, double step = 0.02) {
    long count = 0;
    double prev = z_function(t0, false);
    const long n = (long)std::ceil((T - t0) / step);
    for (long k = 1; k <= n; ++k) {
        const double t = std::min(T, t0 + step * (double)k);
        const double cur = z_function(t, false);
        if ((prev < 0.0 && cur > 0.0) || (prev > 0.0 && cur < 0.0)) ++count;
        if (cur != 0.0) prev = cur;
    }
    return count;
}

// Zeros of cos(theta - omega) counted as crossings of phi = pi/2 + k pi by
// the continuous phase difference phi(t) = theta(t) - omega(t).
inline long cos_theta_omega_zero_count(const PhaseTrack& track, double t0, double T) {
    long count = 0;
    auto level = [](double phi) {
        // index of the last half-integer-pi level at or below phi
        return (long)std::floor(phi / kPi - 0.5);
    };
    double prev_phi = theta(track.t_grid.front()) - track.omega_values.front();
    long prev_lvl = level(prev_phi);
    for (std::size_t i = 1; i < track.t_grid.size(); ++i) {
        const double t = track.t_grid[i];
        if (t < t0 || t > T + 1e-12) {
            prev_phi = theta(t) - track.omega_values[i];
            prev_lvl = level(prev_phi);
            continue;
        }
        const double phi = theta(t) - track.omega_values[i];
        const long lvl = level(phi);
        count += std::llabs(lvl - prev_lvl);
        prev_phi = phi;
        prev_lvl = lvl;
    }
    return count;
}

inline CriticalLineCounts critical_line_counts(const ZeroCatalog& catalog, double t0, double T,
                                               double omega_step = 0.05) {
    CriticalLineCounts c;
    c.z_sign_changes = z_sign_change_count(t0, T);
    PhaseTrack track = omega_track(t0, T, omega_step);
    c.cos_zeros = cos_theta_omega_zero_count(track, t0, T);
    for (const auto& r : catalog.records)
        if (r.gamma > t0 && r.gamma <= T && std::abs(r.beta - 0.5) < 1e-9)
            c.r_zeros_on_line += r.multiplicity;
    c.within_one = std::llabs(c.z_sign_changes - (c.cos_zeros + c.r_zeros_on_line)) <= 1;
    return c;
}

}  // namespace auxzeta

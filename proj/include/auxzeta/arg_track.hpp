#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "auxzeta/errors.hpp"
#include "auxzeta/gamma.hpp"

namespace auxzeta {

// A continuous determination of arg f along a straight segment, sampled
// adaptively so consecutive argument values differ by less than pi/2.
struct ContinuousArg {
    cplx base_point;
    double base_value = 0.0;
    struct Sample {
        cplx z;
        double arg;
        cplx f;
    };
    std::vector<Sample> path;

    double final_value() const { return path.empty() ? base_value : path.back().arg; }
};

namespace detail {

inline double principal_delta(cplx f1, cplx f0) {
    if (f0 == cplx(0.0, 0.0) || f1 == cplx(0.0, 0.0) || !std::isfinite(std::abs(f0)) ||
        !std::isfinite(std::abs(f1)))
        throw zero_on_path_error("argument tracking hit a zero/non-finite value", f0);
    return std::arg(f1 / f0);
}

template <class F>
void track_segment(F&& f, ContinuousArg& track, cplx z1, int depth_budget = 46) {
    const auto last = track.path.back();
    const cplx z0 = last.z;
    const cplx f1 = f(z1);
    const double d = principal_delta(f1, last.f);
    bool split = std::abs(d) >= kPi / 2.0;
    if (!split && std::abs(d) >= 0.05) {
        // guard against whole-turn aliasing: the two half steps must add up
        const cplx mid = 0.5 * (z0 + z1);
        const cplx fm = f(mid);
        const double d1 = principal_delta(fm, last.f);
        const double d2 = principal_delta(f1, fm);
        if (std::abs(d1 + d2 - d) > 1e-9 || std::abs(d1) >= kPi / 2.0 || std::abs(d2) >= kPi / 2.0) {
            split = true;
        } else {
            track.path.push_back({mid, last.arg + d1, fm});
            track.path.push_back({z1, last.arg + d1 + d2, f1});
            return;
        }
    }
    if (!split) {
        track.path.push_back({z1, last.arg + d, f1});
        return;
    }
    if (depth_budget == 0)
        throw zero_on_path_error("argument step did not resolve below pi/2", z1);
    const cplx mid = 0.5 * (z0 + z1);
    if (mid == z0 || mid == z1)
        throw zero_on_path_error("argument tracking hit resolution floor near a zero", mid);
    track_segment(f, track, mid, depth_budget - 1);
    track_segment(f, track, z1, depth_budget - 1);
}

}  // namespace detail

// Track arg f continuously from z0 to z1, starting at base_arg (defaults to
// the principal argument at z0).
template <class F>
ContinuousArg track_arg(F&& f, cplx z0, cplx z1, double base_arg,
                        int initial_splits = 8) {
    ContinuousArg track;
    track.base_point = z0;
    track.base_value = base_arg;
    track.path.push_back({z0, base_arg, f(z0)});
    for (int k = 1; k <= initial_splits; ++k) {
        const cplx z = z0 + (z1 - z0) * ((double)k / initial_splits);
        detail::track_segment(f, track, z);
    }
    return track;
}

template <class F>
ContinuousArg track_arg(F&& f, cplx z0, cplx z1) {
    return track_arg(f, z0, z1, std::arg(f(z0)));
}

// Continue an existing track along a further segment (polyline support).
template <class F>
void extend_track(F&& f, ContinuousArg& track, cplx z1, int initial_splits = 8) {
    const cplx z0 = track.path.back().z;
    for (int k = 1; k <= initial_splits; ++k) {
        const cplx z = z0 + (z1 - z0) * ((double)k / initial_splits);
        detail::track_segment(f, track, z);
    }
}

// Integral of the tracked (continuous) argument over the segment [z0, z1]
// parameterized by arc position; used by the Littlewood boundary terms.
// Refines by interval halving until the Simpson/trapezoid gap is below tol.
template <class F>
double integrate_track(F&& f, const ContinuousArg& track, double tol) {
    const double len = std::abs(track.path.back().z - track.path.front().z);
    // The tracked samples give a continuous skeleton; integrate the argument
    // as a function of arc length with local Simpson refinement.
    std::function<double(cplx, double, cplx, cplx, double, double, int)> simp =
        [&](cplx za, double aa, cplx fa, cplx zb, double ab, double budget, int depth) -> double {
        const cplx zm = 0.5 * (za + zb);
        const cplx fm = f(zm);
        const double am = aa + detail::principal_delta(fm, fa);
        const double h = std::abs(zb - za);
        const double trap = 0.5 * (aa + ab) * h;
        const double simpson = (aa + 4.0 * am + ab) * h / 6.0;
        if (std::abs(simpson - trap) < budget || depth >= 30) return simpson;
        return simp(za, aa, fa, zm, am, budget * 0.5, depth + 1) +
               simp(zm, am, fm, zb, ab, budget * 0.5, depth + 1);
    };
    double total = 0.0;
    const auto& p = track.path;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        const double seg = std::abs(p[i + 1].z - p[i].z);
        total += simp(p[i].z, p[i].arg, p[i].f, p[i + 1].z, p[i + 1].arg,
                      tol * (seg / std::max(len, 1e-300)), 0);
    }
    return total;
}

// Convenience wrapper: track from z0 to z1 and integrate the argument.
template <class F>
double integrate_arg(F&& f, cplx z0, cplx z1, double base_arg, double tol) {
    ContinuousArg track = track_arg(f, z0, z1, base_arg, 16);
    return integrate_track(f, track, tol);
}

}  // namespace auxzeta

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "auxzeta/arg_track.hpp"
#include "auxzeta/errors.hpp"
#include "auxzeta/parallel.hpp"
#include "auxzeta/rzeta.hpp"

namespace auxzeta {

struct RectangleRegion {
    double sigma_min, sigma_max;
    double t_min, t_max;

    void validate() const {
        if (!(sigma_min < sigma_max) || !(0.0 < t_min) || !(t_min < t_max))
            throw regime_error("RectangleRegion: need sigma_min < sigma_max, 0 < t_min < t_max");
    }
    double width() const { return sigma_max - sigma_min; }
    double height() const { return t_max - t_min; }
};

enum class Target { R, F };

using EvalFn = std::function<cplx(cplx)>;

inline EvalFn make_eval(Target which, double quad_tol = 1e-11) {
    if (which == Target::R)
        return [quad_tol](cplx s) { return rzeta_quadrature(s, quad_tol).value; };
    return [quad_tol](cplx s) { return big_f(s, quad_tol); };
}

// One zero rho = beta + i gamma of R with its refinement residual and the
// rectangle the scan attributed it to.
struct ZeroRecord {
    double beta = 0.0;
    double gamma = 0.0;
    int multiplicity = 1;
    double residual = 0.0;
    RectangleRegion source_rect{0, 1, 0.1, 1};
    bool multiplicity_candidate = false;  // merged cluster flag
};

struct ZeroCatalog {
    std::vector<ZeroRecord> records;  // ordered by gamma
    double t_frontier = 0.0;
    std::pair<double, double> beta_window{0.0, 0.0};
    double t_floor = 0.05;  // scans start here; (0, t_floor] guarded by modulus checks

    long total_multiplicity(double T) const {
        long n = 0;
        for (const auto& r : records)
            if (r.gamma <= T) n += r.multiplicity;
        return n;
    }
};

inline std::pair<double, double> default_beta_window(double T) {
    return {1.0 - std::pow(T, 3.0 / 7.0) - 2.0, 5.0};
}

// ---------------------------------------------------------------------------
// winding counts

namespace detail {

template <class F>
long winding_count_once(F&& f, const RectangleRegion& rect) {
    const cplx A(rect.sigma_min, rect.t_min);
    const cplx B(rect.sigma_max, rect.t_min);
    const cplx C(rect.sigma_max, rect.t_max);
    const cplx D(rect.sigma_min, rect.t_max);
    auto splits = [](cplx u, cplx v) { return std::max(4, (int)std::ceil(2.0 * std::abs(v - u))); };
    ContinuousArg track = track_arg(f, A, B, std::arg(f(A)), splits(A, B));
    extend_track(f, track, C, splits(B, C));
    extend_track(f, track, D, splits(C, D));
    extend_track(f, track, A, splits(D, A));
    const double total = track.final_value() - track.base_value;
    const double n = total / (2.0 * kPi);
    const long rounded = (long)std::llround(n);
    if (std::abs(n - (double)rounded) > 0.2)
        throw zero_on_path_error("winding_count: non-integer winding, zero suspected near boundary",
                                 A);
    return rounded;
}

}  // namespace detail

// Total multiplicity of zeros inside the rectangle via the argument
// principle.  A zero sitting (numerically) on the boundary triggers a
// deterministic 1e-4 outward perturbation, retried up to 3 times.
template <class F>
long winding_count_fn(F&& f, RectangleRegion rect) {
    rect.validate();
    const double eps_t = 1e-4, eps_sigma = 1e-4;
    for (int attempt = 0;; ++attempt) {
        try {
            return detail::winding_count_once(f, rect);
        } catch (const zero_on_path_error& e) {
            if (attempt >= 3)
                throw boundary_zero_error(std::string("winding_count: persistent boundary zero: ") +
                                          e.what());
            rect.t_min = std::max(1e-6, rect.t_min - eps_t);
            rect.t_max += eps_t;
            rect.sigma_min -= eps_sigma;
            rect.sigma_max += eps_sigma;
        }
    }
}

inline long winding_count(const RectangleRegion& rect, Target which = Target::R,
                          double quad_tol = 1e-11) {
    return winding_count_fn(make_eval(which, quad_tol), rect);
}

// ---------------------------------------------------------------------------
// refinement

namespace detail {

template <class F>
double local_scale(F&& f, cplx center, double radius = 0.1) {
    double m = 0.0;
    for (int k = 0; k < 16; ++k) {
        const double a = 2.0 * kPi * k / 16.0;
        m = std::max(m, std::abs(f(center + std::polar(radius, a))));
    }
    return m;
}

struct NewtonResult {
    cplx root;
    double residual;
    int iterations;
};

template <class F>
NewtonResult newton_zero(F&& f, cplx seed, double target_resid, int max_iter = 50) {
    const double h = 1e-6;  // central-difference step
    cplx z = seed;
    double best = std::abs(f(z));
    cplx best_z = z;
    for (int it = 0; it < max_iter; ++it) {
        const cplx fz = f(z);
        const double az = std::abs(fz);
        if (az < best) {
            best = az;
            best_z = z;
        }
        if (az <= target_resid) return {z, az, it};
        const cplx df = (f(z + h) - f(z - h)) / (2.0 * h);
        if (df == cplx(0.0, 0.0)) break;
        const cplx step = fz / df;
        if (std::abs(step) > 1.0) break;  // diverging
        z -= step;
    }
    if (best <= target_resid) return {best_z, best, max_iter};
    std::ostringstream os;
    os << "newton_zero: no convergence from seed (" << seed.real() << "," << seed.imag()
       << ") after " << max_iter << " iterations; best iterate (" << best_z.real() << ","
       << best_z.imag() << ") with residual " << best << " vs target " << target_resid;
    throw refinement_failed_error(os.str());
}

}  // namespace detail

// Newton refinement of a seed that is known (by winding) to sit near a zero.
inline ZeroRecord refine_zero(cplx seed, Target which = Target::R, double quad_tol = 1e-12) {
    auto f = make_eval(which, quad_tol);
    RectangleRegion box{seed.real() - 0.05, seed.real() + 0.05,
                        std::max(1e-6, seed.imag() - 0.05), seed.imag() + 0.05};
    if (winding_count_fn(f, box) < 1)
        throw refinement_failed_error("refine_zero: no zero inside the seed box (winding 0)");
    const double scale = detail::local_scale(f, seed);
    auto nr = detail::newton_zero(f, seed, 1e-10 * scale);
    ZeroRecord rec;
    rec.beta = nr.root.real();
    rec.gamma = nr.root.imag();
    rec.residual = nr.residual;
    rec.source_rect = box;
    const double mb = 1e-4;
    RectangleRegion tiny{rec.beta - mb, rec.beta + mb, std::max(1e-6, rec.gamma - mb),
                         rec.gamma + mb};
    rec.multiplicity = (int)std::max<long>(1, winding_count_fn(f, tiny));
    return rec;
}

// ---------------------------------------------------------------------------
// catalog scan

struct ScanOptions {
    double t_floor = 0.05;       // lower edge of the scanned strip
    double strip_height = 2.0;   // initial subdivision in t
    double quad_tol = 1e-11;
    Target which = Target::R;
    unsigned threads = 1;  // strips are independent; merge order is fixed
};

namespace detail {

template <class F>
void scan_cell(F&& f, const RectangleRegion& cell, long expected, std::vector<ZeroRecord>& out,
               int depth) {
    if (expected == 0) return;
    if (depth > 60) throw scan_error("scan_catalog: subdivision depth exceeded");
    const double w = cell.width(), h = cell.height();
    const bool small_enough = std::max(w, h) <= 0.25;
    const bool floor_reached = std::max(w, h) <= 2e-3;
    if ((expected == 1 && small_enough) || floor_reached) {
        const cplx seed(0.5 * (cell.sigma_min + cell.sigma_max), 0.5 * (cell.t_min + cell.t_max));
        const double scale = local_scale(f, seed, 0.5 * std::max(w, h) + 0.05);
        auto nr = newton_zero(f, seed, 1e-10 * std::max(scale, 1e-300));
        const bool inside = nr.root.real() > cell.sigma_min - 0.05 &&
                            nr.root.real() < cell.sigma_max + 0.05 &&
                            nr.root.imag() > cell.t_min - 0.05 && nr.root.imag() < cell.t_max + 0.05;
        if (inside || floor_reached) {
            ZeroRecord rec;
            rec.beta = nr.root.real();
            rec.gamma = nr.root.imag();
            rec.residual = nr.residual;
            rec.source_rect = cell;
            rec.multiplicity = (int)expected;
            rec.multiplicity_candidate = expected > 1;
            out.push_back(rec);
            return;
        }
        // Newton escaped the cell: keep splitting instead
    }
    // split the longer side; if a child disagrees with the parent count the
    // cut probably sits on a zero, so retry with shifted cut fractions
    static constexpr double kCuts[3] = {0.5, 0.42, 0.58};
    for (double frac : kCuts) {
        RectangleRegion a = cell, b = cell;
        if (h >= w) {
            const double cut = cell.t_min + frac * h;
            a.t_max = cut;
            b.t_min = cut;
        } else {
            const double cut = cell.sigma_min + frac * w;
            a.sigma_max = cut;
            b.sigma_min = cut;
        }
        long na, nb;
        try {
            na = winding_count_fn(f, a);
            nb = winding_count_fn(f, b);
        } catch (const boundary_zero_error&) {
            continue;
        }
        if (na + nb != expected) continue;
        scan_cell(f, a, na, out, depth + 1);
        scan_cell(f, b, nb, out, depth + 1);
        return;
    }
    throw scan_error("scan_catalog: could not split cell cleanly around t in [" +
                     std::to_string(cell.t_min) + "," + std::to_string(cell.t_max) + "]");
}

}  // namespace detail

inline ZeroCatalog scan_catalog(double T, std::pair<double, double> beta_window,
                                const ScanOptions& opts = {}) {
    if (!(T > opts.t_floor)) throw regime_error("scan_catalog: T must exceed the scan floor");
    if (T > kQuadratureTCap) throw regime_error("scan_catalog: T beyond quadrature envelope (500)");
    auto f = make_eval(opts.which, opts.quad_tol);
    ZeroCatalog cat;
    cat.t_frontier = T;
    cat.beta_window = beta_window;
    cat.t_floor = opts.t_floor;

    std::vector<RectangleRegion> strips;
    for (double lo = opts.t_floor; lo < T; lo += opts.strip_height) {
        strips.push_back({beta_window.first, beta_window.second, lo,
                          std::min(T, lo + opts.strip_height)});
    }
    std::vector<std::vector<ZeroRecord>> found(strips.size());
    parallel_for(strips.size(), [&](std::size_t i) {
        const long n = winding_count_fn(f, strips[i]);
        detail::scan_cell(f, strips[i], n, found[i], 0);
    }, opts.threads);
    for (auto& part : found)
        for (auto& r : part) cat.records.push_back(r);
    std::sort(cat.records.begin(), cat.records.end(),
              [](const ZeroRecord& a, const ZeroRecord& b) { return a.gamma < b.gamma; });
    // merge duplicate captures / flag near-coincident roots
    std::vector<ZeroRecord> merged;
    for (const auto& r : cat.records) {
        if (!merged.empty()) {
            auto& last = merged.back();
            const double d = std::hypot(last.beta - r.beta, last.gamma - r.gamma);
            if (d < 1e-8) continue;  // same root found from two cells
            if (d < 1e-6) {
                last.multiplicity += r.multiplicity;
                last.multiplicity_candidate = true;
                continue;
            }
        }
        merged.push_back(r);
    }
    cat.records = std::move(merged);

    // completeness: one boundary walk around the whole window must agree
    RectangleRegion full{beta_window.first, beta_window.second, opts.t_floor, T};
    const long total = winding_count_fn(f, full);
    long sum = 0;
    for (const auto& r : cat.records) sum += r.multiplicity;
    if (total != sum)
        throw scan_error("scan_catalog: window winding " + std::to_string(total) +
                         " != refined record total " + std::to_string(sum));
    return cat;
}

// ---------------------------------------------------------------------------
// statistics

struct CountStats {
    long n_r = 0;      // all zeros to height T
    long n_le = 0;     // beta <= sigma
    long n_gt = 0;     // beta > sigma
    double sum_beta = 0.0;
    double sum_excess_le = 0.0;  // sum (sigma - beta) over beta <= sigma
    double sum_excess_gt = 0.0;  // sum (beta - sigma) over beta > sigma
};

inline CountStats count_stats(const ZeroCatalog& cat, double sigma, double T) {
    if (T > cat.t_frontier + 1e-12) throw regime_error("count_stats: T beyond catalog frontier");
    if (sigma < cat.beta_window.first || sigma > cat.beta_window.second)
        throw regime_error("count_stats: sigma outside certified beta window");
    CountStats st;
    for (const auto& r : cat.records) {
        if (r.gamma > T) break;
        const long m = r.multiplicity;
        st.n_r += m;
        st.sum_beta += m * r.beta;
        if (r.beta <= sigma) {
            st.n_le += m;
            st.sum_excess_le += m * (sigma - r.beta);
        } else {
            st.n_gt += m;
            st.sum_excess_gt += m * (r.beta - sigma);
        }
    }
    return st;
}

// Expected count of zeros to height T (explicit three-term form).
inline double expected_zero_count(double T) {
    return T / (4.0 * kPi) * std::log(T / (2.0 * kPi)) - T / (4.0 * kPi) -
           0.5 * std::sqrt(T / (2.0 * kPi));
}

// Helper appearing in the left-density bound; has a maximum near
// sigma' = -3/5 with value > 7/18.
inline double density_gain(double sigma_prime) {
    return -1.0 + std::log((1.0 - 2.0 * sigma_prime) * (3.0 - 2.0 * sigma_prime) / 2.0) /
                      (0.5 - sigma_prime);
}

struct DensityReport {
    double lhs = 0.0;         // N(beta <= 1/2, T)
    double rhs = 0.0;         // 35 T / 396 pi + (5 / 11 pi) * integral
    double slack = 0.0;       // lhs - rhs
    double gain_at_opt = 0.0; // density_gain(-3/5)
    bool gain_exceeds_7_18 = false;
    bool holds = false;
};

inline DensityReport density_check(const ZeroCatalog& cat, double T, double logR_half_integral) {
    DensityReport rep;
    rep.lhs = (double)count_stats(cat, 0.5, T).n_le;
    rep.rhs = 35.0 * T / (396.0 * kPi) + 5.0 / (11.0 * kPi) * logR_half_integral;
    rep.slack = rep.lhs - rep.rhs;
    rep.gain_at_opt = density_gain(-0.6);
    rep.gain_exceeds_7_18 = rep.gain_at_opt > 7.0 / 18.0;
    rep.holds = rep.slack >= 0.0 && rep.gain_exceeds_7_18;
    return rep;
}

}  // namespace auxzeta

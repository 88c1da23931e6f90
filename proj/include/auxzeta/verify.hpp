#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "auxzeta/arg_track.hpp"
#include "auxzeta/errors.hpp"
#include "auxzeta/gamma.hpp"
#include "auxzeta/periodic.hpp"
#include "auxzeta/quadrature.hpp"
#include "auxzeta/rzeta.hpp"
#include "auxzeta/zeros.hpp"

namespace auxzeta {

inline constexpr double kDefaultT0 = 101.0;  // above 32 pi

// Uniform report shape shared by every checker; serializes to the JSON
// schema {check_name, inputs, lhs, rhs, residual, normalizer,
// fitted_constants, pass}.
struct Report {
    std::string check_name;
    nlohmann::json inputs = nlohmann::json::object();
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    double normalizer = 1.0;
    nlohmann::json fitted_constants = nlohmann::json::object();
    bool pass = false;

    nlohmann::json to_json() const {
        return nlohmann::json{{"check_name", check_name}, {"inputs", inputs},
                              {"lhs", lhs},               {"rhs", rhs},
                              {"residual", residual},     {"normalizer", normalizer},
                              {"fitted_constants", fitted_constants}, {"pass", pass}};
    }
};

// ---------------------------------------------------------------------------
// log-modulus line integrals

enum class LineTarget { R, F, GammaHalf, Custom };

struct LogModulusIntegral {
    QuadratureEstimate<double> q;
    bool shifted_off_line = false;  // a catalog zero sat exactly on the line
};

namespace detail {

inline LogModulusIntegral log_modulus_integral_impl(const std::function<double(double)>& g,
                                                    double sigma, double t0, double T,
                                                    const ZeroCatalog* catalog, double abs_tol) {
    std::vector<double> graded;
    bool on_line = false;
    if (catalog) {
        for (const auto& r : catalog->records) {
            if (r.gamma <= t0 || r.gamma >= T) continue;
            const double d = std::abs(r.beta - sigma);
            if (d < 1e-6) on_line = true;
            if (d < 1e-2) graded.push_back(r.gamma);
        }
    }
    LogModulusIntegral out;
    out.shifted_off_line = on_line;
    out.q = integrate_graded<double>(g, t0, T, graded, abs_tol);
    return out;
}

}  // namespace detail

// Integral of log|f(sigma + i t)| over [t0, T].  Zeros of R/F near the line
// (from the catalog) get graded subdivision; zeros essentially on the line
// shift the integration to sigma +- 1e-6 and flag the report.
inline LogModulusIntegral log_modulus_line_integral(
    LineTarget which, double sigma, double t0, double T,
    const ZeroCatalog* catalog = nullptr,
    const std::function<cplx(cplx)>& custom = nullptr, double abs_tol = 0.0,
    double quad_tol = 1e-11) {
    if (!(t0 >= 1.0)) throw regime_error("log_modulus_line_integral: t0 must be >= 1");
    if (!(T >= t0)) throw regime_error("log_modulus_line_integral: need T >= t0");
    if ((which == LineTarget::R || which == LineTarget::F) && T > kQuadratureTCap)
        throw regime_error("log_modulus_line_integral: T beyond quadrature envelope");
    if (T == t0) return {};
    if (abs_tol <= 0.0) abs_tol = 1e-6 * (T - t0);

    auto integrand_at = [&](double sig) {
        return std::function<double(double)>([&, sig](double t) -> double {
            const cplx s(sig, t);
            switch (which) {
                case LineTarget::R:
                    return std::log(std::abs(rzeta_quadrature(s, quad_tol).value));
                case LineTarget::F:
                    return std::log(std::abs(big_f(s, quad_tol)));
                case LineTarget::GammaHalf:
                    return std::real(log_gamma(0.5 * s));
                case LineTarget::Custom:
                    return std::log(std::abs(custom(s)));
            }
            return 0.0;
        });
    };

    auto first = detail::log_modulus_integral_impl(integrand_at(sigma), sigma, t0, T, catalog, abs_tol);
    if (!first.shifted_off_line) return first;
    // a zero lies on the line: average the two sided integrals and flag
    auto left = detail::log_modulus_integral_impl(integrand_at(sigma - 1e-6), sigma, t0, T, catalog, abs_tol);
    auto right = detail::log_modulus_integral_impl(integrand_at(sigma + 1e-6), sigma, t0, T, catalog, abs_tol);
    LogModulusIntegral out;
    out.shifted_off_line = true;
    out.q.value = 0.5 * (left.q.value + right.q.value);
    out.q.abs_error_estimate = left.q.abs_error_estimate + right.q.abs_error_estimate;
    out.q.nodes_used = left.q.nodes_used + right.q.nodes_used;
    out.q.singular_points_excluded = left.q.singular_points_excluded;
    return out;
}

// Closed form of the Gamma mean value: the antiderivative of
// Im((s-1)/2 log(s/2) - s/2 + (1/2) log 2 pi + 1/(6 s)).
inline double gamma_half_mean_closed_form(double sigma, double t0, double T) {
    auto G = [](cplx s) {
        return (0.25 * s * s - 0.5 * s) * std::log(0.5 * s) - 0.375 * s * s + 0.5 * s +
               0.5 * s * kLog2Pi + std::log(s) / 6.0;
    };
    return std::imag(G(cplx(sigma, T)) - G(cplx(sigma, t0)));
}

// ---------------------------------------------------------------------------
// Littlewood closure

// 2 pi sum_{zeros in rect} (beta - a)
//   = int_c^d log|f(a+iy)| dy - int_c^d log|f(b+iy)| dy
//     - int_a^b arg f(x+ic) dx + int_a^b arg f(x+id) dx
// with arg f continued along the broken line A -> B -> C -> D.
inline Report littlewood_closure(const RectangleRegion& rect, Target which,
                                 const ZeroCatalog& catalog, double quad_tol = 1e-11,
                                 double line_tol = 0.0) {
    rect.validate();
    const double a = rect.sigma_min, b = rect.sigma_max;
    const double c = rect.t_min, d = rect.t_max;
    if (line_tol <= 0.0) line_tol = 1e-6 * (d - c);

    double zero_side = 0.0;
    for (const auto& r : catalog.records) {
        if (r.gamma > c && r.gamma <= d && r.beta >= a && r.beta <= b)
            zero_side += 2.0 * kPi * r.multiplicity * (r.beta - a);
    }

    const LineTarget lt = which == Target::R ? LineTarget::R : LineTarget::F;
    const auto left = log_modulus_line_integral(lt, a, c, d, &catalog, nullptr, line_tol, quad_tol);
    const auto right = log_modulus_line_integral(lt, b, c, d, &catalog, nullptr, line_tol, quad_tol);

    auto f = make_eval(which, quad_tol);
    const cplx A(a, c), B(b, c), C(b, d), D(a, d);
    const double arg_tol = line_tol;
    ContinuousArg bottom_track = track_arg(f, A, B, std::arg(f(A)), 16);
    const double bottom = integrate_track(f, bottom_track, arg_tol);
    ContinuousArg side_track = track_arg(f, B, C, bottom_track.final_value(), 16);
    ContinuousArg top_track = track_arg(f, C, D, side_track.final_value(), 16);
    const double top = integrate_track(f, top_track, arg_tol);

    const double boundary_side = left.q.value - right.q.value - bottom + top;

    Report rep;
    rep.check_name = "littlewood-closure";
    rep.inputs = {{"rect", {a, b, c, d}}, {"target", which == Target::R ? "R" : "F"}};
    rep.lhs = zero_side;
    rep.rhs = boundary_side;
    rep.residual = std::abs(zero_side - boundary_side);
    rep.normalizer = 1.0;
    rep.fitted_constants = {{"quad_error", left.q.abs_error_estimate + right.q.abs_error_estimate}};
    rep.pass = rep.residual <= 1e-4;
    return rep;
}

// ---------------------------------------------------------------------------
// Littlewood consequences on vertical lines

// int_{t0}^T log|R(sigma+it)| dt vs 2 pi sum_{beta > sigma} (beta - sigma),
// residual measured against log T.
inline Report check_right_excess(double sigma, double T, const ZeroCatalog& catalog,
                                 double kappa1 = 10.0, double t0 = kDefaultT0) {
    if (!(sigma <= 1.0)) throw regime_error("check_right_excess: requires sigma <= 1");
    const auto integral = log_modulus_line_integral(LineTarget::R, sigma, t0, T, &catalog);
    const auto st = count_stats(catalog, sigma, T);
    Report rep;
    rep.check_name = "right-excess";
    rep.inputs = {{"sigma", sigma}, {"T", T}, {"t0", t0}};
    rep.lhs = integral.q.value;
    rep.rhs = 2.0 * kPi * st.sum_excess_gt;
    rep.residual = std::abs(rep.lhs - rep.rhs);
    rep.normalizer = std::log(T);
    rep.fitted_constants = {{"kappa1", kappa1}, {"ratio", rep.residual / rep.normalizer}};
    rep.pass = rep.residual <= kappa1 * rep.normalizer;
    return rep;
}

// 2 pi sum_{beta <= sigma} (sigma - beta)
//   = sigma (T/2 log(T/2pi) - T/2) + (T/2) log 2 + int_{t0}^T log|R| dt
//     + O(T^{20/21})
inline Report check_left_excess(double sigma, double T, const ZeroCatalog& catalog,
                                double kappa2 = 5.0, double t0 = kDefaultT0) {
    if (!(sigma <= 10.0)) throw regime_error("check_left_excess: requires sigma <= 10");
    const auto integral = log_modulus_line_integral(LineTarget::R, sigma, t0, T, &catalog);
    const auto st = count_stats(catalog, sigma, T);
    Report rep;
    rep.check_name = "left-excess";
    rep.inputs = {{"sigma", sigma}, {"T", T}, {"t0", t0}};
    rep.lhs = 2.0 * kPi * st.sum_excess_le;
    rep.rhs = sigma * (0.5 * T * std::log(T / (2.0 * kPi)) - 0.5 * T) + 0.5 * T * std::log(2.0) +
              integral.q.value;
    rep.residual = std::abs(rep.lhs - rep.rhs);
    rep.normalizer = std::pow(T, 20.0 / 21.0);
    rep.fitted_constants = {{"kappa2", kappa2}, {"ratio", rep.residual / rep.normalizer}};
    rep.pass = rep.residual <= kappa2 * rep.normalizer;
    return rep;
}

// |int_{t0}^T log|R(sigma+it)| dt| <= C 2^{-sigma} for sigma >= 3.5, with one
// C fitted across the sigma list; the integrals must also decrease in sigma.
inline Report check_sigma_decay(const std::vector<double>& sigmas, double T, double C_cap = 50.0,
                                double t0 = kDefaultT0) {
    std::vector<double> values;
    for (double sig : sigmas) {
        if (!(sig >= 3.5)) throw regime_error("check_sigma_decay: each sigma must be >= 3.5");
        values.push_back(log_modulus_line_integral(LineTarget::R, sig, t0, T).q.value);
    }
    double C = 0.0;
    bool monotone = true;
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        C = std::max(C, std::abs(values[i]) * std::pow(2.0, sigmas[i]));
        if (i > 0 && std::abs(values[i]) > std::abs(values[i - 1]) + 1e-9) monotone = false;
    }
    Report rep;
    rep.check_name = "sigma-decay";
    rep.inputs = {{"sigmas", sigmas}, {"T", T}, {"t0", t0}};
    rep.lhs = C;
    rep.rhs = C_cap;
    rep.residual = std::max(0.0, C - C_cap);
    rep.normalizer = 1.0;
    rep.fitted_constants = {{"C", C}, {"monotone", monotone}};
    rep.pass = C <= C_cap && monotone;
    return rep;
}

// ---------------------------------------------------------------------------
// Backlund bound

// |Re (1/2 pi i) int_a^b f'/f dz| <= (1/2) log(M/|f(a)|) / log(R/|b-a|)
inline Report backlund_bound_check_fn(const EvalFn& f, cplx a, cplx b, double R_disc,
                                      const ZeroCatalog* catalog = nullptr) {
    if (!(std::abs(b - a) > 0.0) || !(std::abs(b - a) < R_disc))
        throw regime_error("backlund_bound_check: need 0 < |b-a| < R");
    if (catalog) {
        for (const auto& r : catalog->records) {
            // reject zeros sitting on the segment
            const cplx rho(r.beta, r.gamma);
            const cplx d = b - a;
            const double u = std::clamp(std::real(std::conj(d) * (rho - a)) / std::norm(d), 0.0, 1.0);
            if (std::abs(a + u * d - rho) < 1e-6)
                throw zero_on_path_error("backlund_bound_check: zero on segment", rho);
        }
    }
    const double lhs = std::abs(track_arg(f, a, b).final_value() - std::arg(f(a))) / (2.0 * kPi);
    double M = 0.0;
    for (int k = 0; k < 720; ++k)
        M = std::max(M, std::abs(f(a + std::polar(R_disc, 2.0 * kPi * k / 720.0))));
    for (int ring = 1; ring <= 6; ++ring)
        for (int k = 0; k < 60; ++k)
            M = std::max(M, std::abs(f(a + std::polar(R_disc * ring / 7.0, 2.0 * kPi * k / 60.0))));
    const double rhs = 0.5 * std::log(M / std::abs(f(a))) / std::log(R_disc / std::abs(b - a));
    Report rep;
    rep.check_name = "backlund-bound";
    rep.inputs = {{"a", {a.real(), a.imag()}}, {"b", {b.real(), b.imag()}}, {"R", R_disc}};
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.residual = std::max(0.0, lhs - rhs);
    rep.normalizer = 1.0;
    rep.fitted_constants = {{"max_modulus", M}};
    rep.pass = lhs <= rhs + 1e-6;
    return rep;
}

inline Report backlund_bound_check(Target which, cplx a, cplx b, double R_disc,
                                   const ZeroCatalog& catalog, double quad_tol = 1e-11) {
    return backlund_bound_check_fn(make_eval(which, quad_tol), a, b, R_disc, &catalog);
}

// ---------------------------------------------------------------------------
// Jensen / mean square on the far left

// int_{t0}^T log|f| <= (T/2) log((1/T) int_0^T |f|^2), plus comparison of the
// mean square with its explicit asymptotic at sigma' <= 1/4.
inline Report jensen_meansquare_check(double sigma_prime, double T, double t0 = kDefaultT0,
                                      double rel_band = 0.2, double quad_tol = 1e-11) {
    if (!(sigma_prime <= 0.25)) throw regime_error("jensen_meansquare_check: sigma' must be <= 1/4");
    if (T > kQuadratureTCap) throw regime_error("jensen_meansquare_check: T beyond envelope");
    const auto ilog = log_modulus_line_integral(LineTarget::R, sigma_prime, t0, T);
    auto sq = integrate_adaptive<double>(
        [&](double t) {
            const cplx v = rzeta_quadrature(cplx(sigma_prime, t), quad_tol).value;
            return std::norm(v);
        },
        0.0, T, 1e-6 * T * std::pow(T / (2.0 * kPi), 0.5 - sigma_prime));
    const double mean_sq = sq.value / T;
    const double asym = 2.0 / ((1.0 - 2.0 * sigma_prime) * (3.0 - 2.0 * sigma_prime)) *
                        std::pow(T / (2.0 * kPi), 0.5 - sigma_prime);
    Report rep;
    rep.check_name = "jensen-meansquare";
    rep.inputs = {{"sigma_prime", sigma_prime}, {"T", T}, {"t0", t0}};
    rep.lhs = ilog.q.value;
    rep.rhs = 0.5 * T * std::log(mean_sq);
    rep.residual = std::max(0.0, rep.lhs - rep.rhs);
    rep.normalizer = 1.0;
    rep.fitted_constants = {{"mean_square", mean_sq},
                            {"mean_square_asymptotic", asym},
                            {"mean_square_rel_dev", std::abs(mean_sq - asym) / asym}};
    rep.pass = rep.lhs <= rep.rhs + 1e-6 && std::abs(mean_sq - asym) / asym <= rel_band;
    return rep;
}

// ---------------------------------------------------------------------------
// per / eta / J mean values along vertical segments

// Im int_{1+i t0}^{1+i T} log((1-e^{2 pi i eta})/(1+e^{4 pi i eta})) ds
//   = -sqrt(T/2pi) per(sqrt(T/2pi)) + O(1).
// Along sigma = 1, eta = sqrt(t/2pi) is real, so the integrand has integrable
// log-singularities at eta in Z (numerator) and eta in (2Z+1)/4 (denominator);
// the integral is evaluated in the eta variable with graded splits there.
inline Report per_integral_check(double T, double kappa3 = 20.0, double t0 = 2.0,
                                 PerSeries trunc = {}) {
    if (T > kQuadratureTCap) throw regime_error("per_integral_check: T beyond envelope");
    const double tau0 = std::sqrt(t0 / (2.0 * kPi));
    const double tau = std::sqrt(T / (2.0 * kPi));
    std::vector<double> sing;
    for (long k = (long)std::ceil(tau0); k <= (long)std::floor(tau); ++k) sing.push_back((double)k);
    for (long k = 0; 0.25 * (2.0 * k + 1.0) < tau; ++k) {
        const double q = 0.25 * (2.0 * k + 1.0);
        if (q > tau0) sing.push_back(q);
    }
    auto g = [](double e) {
        const cplx z = std::exp(cplx(0.0, 2.0 * kPi) * e);
        return 4.0 * kPi * e * std::real(detail::log_fraction_term(z));
    };
    auto q = integrate_graded<double>(g, tau0, tau, sing, 1e-7 * (tau - tau0), 0.05);
    const double rhs = -tau * per(tau, trunc);
    Report rep;
    rep.check_name = "per-mean";
    rep.inputs = {{"T", T}, {"t0", t0}};
    rep.lhs = q.value;
    rep.rhs = rhs;
    rep.residual = std::abs(q.value - rhs);
    rep.normalizer = 1.0;
    rep.fitted_constants = {{"kappa3", kappa3}};
    rep.pass = rep.residual <= kappa3;
    return rep;
}

// int_{t0}^T log|e^{pi i eta}| dt on sigma0 = 1 - T^{3/7}
//   = -pi (1-sigma0) sqrt(T/2pi) + (sqrt(pi)/3)(1-sigma0)^{3/2} + O(T^{3/14})
inline Report littlemean_check(double T, double kappa4 = 10.0, double t0 = 2.0,
                               std::optional<double> sigma0_override = std::nullopt) {
    const double sigma0 = sigma0_override.value_or(1.0 - std::pow(T, 3.0 / 7.0));
    auto integrand = [&](double t) {
        return -kPi * eta_branch(cplx(sigma0, t)).eta.imag();
    };
    auto q = integrate_adaptive<double>(integrand, t0, T, 1e-8 * (T - t0));
    const double one_minus = 1.0 - sigma0;
    const double closed = -kPi * one_minus * std::sqrt(T / (2.0 * kPi)) +
                          std::sqrt(kPi) / 3.0 * std::pow(one_minus, 1.5);
    Report rep;
    rep.check_name = "eta-log-mean";
    rep.inputs = {{"T", T}, {"t0", t0}, {"sigma0", sigma0}};
    rep.lhs = q.value;
    rep.rhs = closed;
    rep.residual = std::abs(q.value - closed);
    rep.normalizer = std::pow(T, 3.0 / 14.0);
    rep.fitted_constants = {{"kappa4", kappa4}, {"ratio", rep.residual / rep.normalizer}};
    rep.pass = rep.residual <= kappa4 * rep.normalizer;
    return rep;
}

namespace detail {
// Leading closed form of int log|J| (evaluated as a difference between the
// endpoints so the t0 contribution is not lost at desk scale).
inline double mean_j_main_form(double t) {
    return -kPi * t * t / 8.0 + 0.5 * t * std::log(t) - 0.5 * t + 0.5 * t * std::log(2.0 * kPi);
}
inline double mean_j_refined_form(double t, double sigma0, PerSeries trunc) {
    const double root = std::sqrt(t / (2.0 * kPi));
    return mean_j_main_form(t) + kPi * sigma0 * root - (kPi + per(root, trunc)) * root +
           std::sqrt(kPi) / 3.0 * std::pow(1.0 - sigma0, 1.5);
}
}  // namespace detail

// int_{t0}^T log|J(sigma0 + it)| dt against the main asymptotic form and the
// refined form carrying the per(sqrt(T/2pi)) secondary term.
inline Report mean_j_check(double T, double kappa5 = 10.0, double t0 = 20.0,
                           PerSeries trunc = {}) {
    if (!(T <= 400.0)) throw regime_error("mean_j_check: requires T <= 400");
    const double sigma0 = 1.0 - std::pow(T, 3.0 / 7.0);
    auto integrand = [&](double t) { return std::real(log_j(cplx(sigma0, t), t0)); };
    auto q = integrate_adaptive<double>(integrand, t0, T, 1e-7 * (T - t0));
    const double main = detail::mean_j_main_form(T) - detail::mean_j_main_form(t0);
    const double refined = detail::mean_j_refined_form(T, sigma0, trunc) -
                           detail::mean_j_refined_form(t0, sigma0, trunc);
    Report rep;
    rep.check_name = "j-log-mean";
    rep.inputs = {{"T", T}, {"t0", t0}, {"sigma0", sigma0}};
    rep.lhs = q.value;
    rep.rhs = main;
    rep.residual = std::abs(q.value - main);
    rep.normalizer = std::pow(T, 3.0 / 7.0 + 0.5);
    rep.fitted_constants = {{"kappa5", kappa5},
                            {"refined_residual", std::abs(q.value - refined)},
                            {"main_residual", rep.residual}};
    rep.pass = rep.residual <= kappa5 * rep.normalizer;
    return rep;
}

// ---------------------------------------------------------------------------
// comb-factor decompositions of log|F|

namespace detail {
// T-dependence of the decomposition int log|F| - int log|R|.
inline double comb_decomposition_form(double sigma, double t) {
    return -kPi * t * t / 8.0 + (sigma + 1.0) * (0.5 * t * std::log(t / (2.0 * kPi)) - 0.5 * t) +
           0.5 * t * (std::log(2.0) + 2.0 * std::log(2.0 * kPi)) - kPi * sigma * sigma / 8.0;
}
// left-region leading form of int log|Gamma((sigma+it)/2)|.
inline double gamma_mean_left_form(double sigma, double t) {
    return -kPi * t * t / 8.0 + (sigma - 1.0) * (0.5 * t * std::log(0.5 * t) - 0.5 * t) +
           0.5 * t * std::log(2.0 * kPi) - kPi * sigma * sigma / 8.0;
}
}  // namespace detail

// int log|F(sigma+it)| - int log|R(sigma+it)| vs the explicit Gamma-and-s
// factor asymptotic; residual measured against sqrt(T).
inline Report comb_decomposition_check(double sigma, double T, const ZeroCatalog& catalog,
                                       double kappa6 = 10.0, double t0 = kDefaultT0) {
    if (!(sigma <= 10.0)) throw regime_error("comb_decomposition_check: sigma <= 10 required");
    const auto iF = log_modulus_line_integral(LineTarget::F, sigma, t0, T, &catalog);
    const auto iR = log_modulus_line_integral(LineTarget::R, sigma, t0, T, &catalog);
    const double remainder = iF.q.value - iR.q.value;
    const double closed = detail::comb_decomposition_form(sigma, T) -
                          detail::comb_decomposition_form(sigma, t0);
    Report rep;
    rep.check_name = "comb-decomposition";
    rep.inputs = {{"sigma", sigma}, {"T", T}, {"t0", t0}};
    rep.lhs = remainder;
    rep.rhs = closed;
    rep.residual = std::abs(remainder - closed);
    rep.normalizer = std::sqrt(T);
    rep.fitted_constants = {{"kappa6", kappa6}, {"ratio", rep.residual / rep.normalizer}};
    rep.pass = rep.residual <= kappa6 * rep.normalizer;
    return rep;
}

// int log|F(sigma0+it)| on sigma0 = 1 - T^{3/7} vs the leading form with the
// O(T^{20/21}) error envelope.
inline Report comb_mean_left_check(double T, const ZeroCatalog& catalog, double kappa7 = 10.0,
                                   double t0 = kDefaultT0) {
    const double sigma0 = 1.0 - std::pow(T, 3.0 / 7.0);
    const auto iF = log_modulus_line_integral(LineTarget::F, sigma0, t0, T, &catalog);
    const double closed = detail::mean_j_main_form(T) - detail::mean_j_main_form(t0);
    Report rep;
    rep.check_name = "comb-mean-left";
    rep.inputs = {{"T", T}, {"t0", t0}, {"sigma0", sigma0}};
    rep.lhs = iF.q.value;
    rep.rhs = closed;
    rep.residual = std::abs(iF.q.value - closed);
    rep.normalizer = std::pow(T, 20.0 / 21.0);
    rep.fitted_constants = {{"kappa7", kappa7}, {"ratio", rep.residual / rep.normalizer}};
    rep.pass = rep.residual <= kappa7 * rep.normalizer;
    return rep;
}

// Standalone check of the Gamma mean value in its left-region form.
inline Report gamma_mean_left_check(double sigma, double T, double kappa8 = 10.0,
                                    double t0 = kDefaultT0) {
    const auto iG = log_modulus_line_integral(LineTarget::GammaHalf, sigma, t0, T);
    const double closed = detail::gamma_mean_left_form(sigma, T) -
                          detail::gamma_mean_left_form(sigma, t0);
    Report rep;
    rep.check_name = "gamma-mean-left";
    rep.inputs = {{"sigma", sigma}, {"T", T}, {"t0", t0}};
    rep.lhs = iG.q.value;
    rep.rhs = closed;
    rep.residual = std::abs(iG.q.value - closed);
    rep.normalizer = std::sqrt(T);
    rep.fitted_constants = {{"kappa8", kappa8}, {"ratio", rep.residual / rep.normalizer}};
    rep.pass = rep.residual <= kappa8 * rep.normalizer;
    return rep;
}

// Direct test of the O*(3 sqrt 3 / 16) Gamma mean value bound.
inline Report gamma_mean_check(double sigma, double t0, double T) {
    const auto iG = log_modulus_line_integral(LineTarget::GammaHalf, sigma, t0, T, nullptr,
                                              nullptr, 1e-8 * (T - t0));
    const double closed = gamma_half_mean_closed_form(sigma, t0, T);
    const double bound = 3.0 * std::sqrt(3.0) / 16.0;
    Report rep;
    rep.check_name = "gamma-mean";
    rep.inputs = {{"sigma", sigma}, {"t0", t0}, {"T", T}};
    rep.lhs = iG.q.value;
    rep.rhs = closed;
    rep.residual = std::abs(iG.q.value - closed);
    rep.normalizer = bound;
    rep.pass = rep.residual <= bound;
    return rep;
}

}  // namespace auxzeta

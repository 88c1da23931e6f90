#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "auxzeta/errors.hpp"
#include "auxzeta/gamma.hpp"
#include "auxzeta/quadrature.hpp"
#include "auxzeta/zeta_em.hpp"

namespace auxzeta {

// Square-root variable eta = sqrt((s-1)/(2 pi i)) on the branch with
// Re(eta) + Im(eta) >= 0 (equality only at s = 1).
struct EtaBranch {
    cplx eta;
    cplx s;
    bool boundary = false;  // s == 1, eta == 0

    cplx exp_2pi_i_eta() const { return std::exp(cplx(0.0, 2.0 * kPi) * eta); }
    cplx pi_i_eta() const { return cplx(0.0, kPi) * eta; }
};

inline EtaBranch eta_branch(cplx s) {
    EtaBranch r;
    r.s = s;
    const cplx w = (s - 1.0) / cplx(0.0, 2.0 * kPi);
    cplx e = std::sqrt(w);
    if (e.real() + e.imag() < 0.0) e = -e;
    r.eta = e;
    r.boundary = (w == cplx(0.0, 0.0));
    return r;
}

// xi = sqrt(s/(2 pi i)) with 0 < -xi2 < xi1 in the main-sum regime, and the
// induced sum length ell = floor(xi1 - xi2).
struct XiDecomposition {
    cplx xi;
    long ell = 0;
};

inline XiDecomposition xi_decomposition(cplx s) {
    XiDecomposition d;
    cplx x = std::sqrt(s / cplx(0.0, 2.0 * kPi));
    if (x.real() < 0.0) x = -x;
    d.xi = x;
    d.ell = (long)std::floor(x.real() - x.imag());
    return d;
}

struct ApproxWithError {
    cplx value;
    double claimed_rel_error = 0.0;
};

namespace detail {

// log of (e^{pi i x} - e^{-pi i x}) picking the exponentially dominant factor,
// valid on both sides of the real axis.
inline cplx log_cross_denominator(cplx x) {
    const cplx pix = cplx(0.0, kPi) * x;
    if (x.imag() <= 0.0) return pix + std::log(1.0 - std::exp(-2.0 * pix));
    return -pix + cplx(0.0, kPi) + std::log(1.0 - std::exp(2.0 * pix));
}

// Exponent of the Siegel integrand x^{-s} e^{pi i x^2} / (e^{pi i x} - e^{-pi i x}).
inline cplx rzeta_integrand_exponent(cplx x, cplx s) {
    return -s * std::log(x) + cplx(0.0, kPi) * x * x - log_cross_denominator(x);
}

// Remainder integral over the slope +1 line crossing the real axis at
// m + 1/2, traversed downward (NE to SW).  R(s) = sum_{n<=m} n^{-s} + I_m(s).
inline QuadratureEstimate<cplx> siegel_line_integral(cplx s, long m, double abs_tol) {
    const double c = (double)m + 0.5;
    const cplx dir = std::polar(1.0, kPi / 4.0);  // e^{i pi/4}
    auto point = [&](double u) { return cplx(c, 0.0) - u * dir; };
    auto integrand = [&](double u) { return std::exp(rzeta_integrand_exponent(point(u), s)) * (-dir); };

    const double t = s.imag();
    // The NE tail (u < 0) carries the e^{t arg x} hump; make sure the initial
    // panel range walks past it before the e^{-pi u^2} decay takes over.
    const int k_left_min = 4 + (int)std::ceil(std::sqrt(std::max(0.0, t) / kPi));
    const int k_right_min = 3;
    const int k_cap = 90;

    auto re_phi = [&](double u) { return rzeta_integrand_exponent(point(u), s).real(); };
    double phi_max = re_phi(0.0);

    // walk outward from the crossing, tracking the running envelope maximum,
    // until the integrand has dropped 46 e-folds below it (past the hump)
    int k_left = 1;
    while (k_left < k_cap) {
        const double v = re_phi(-(double)k_left);
        phi_max = std::max(phi_max, v);
        if (v < phi_max - 46.0 && k_left >= k_left_min) break;
        ++k_left;
    }
    int k_right = 1;
    while (k_right < k_cap) {
        const double v = re_phi((double)k_right);
        phi_max = std::max(phi_max, v);
        if (v < phi_max - 46.0 && k_right >= k_right_min) break;
        ++k_right;
    }

    const double scale = std::exp(phi_max);
    const double floor_tol = 1e-14 * scale;
    const double tol = std::max(abs_tol, floor_tol);

    QuadratureEstimate<cplx> q;
    const double per_panel = 0.5 * tol / (double)(k_left + k_right);
    for (int k = -k_left; k < k_right; ++k) {
        auto part = integrate_adaptive<cplx>(integrand, (double)k, (double)(k + 1), per_panel, 200);
        q.value += part.value;
        q.abs_error_estimate += part.abs_error_estimate;
        q.nodes_used += part.nodes_used;
    }
    // truncation tails, dominated by the super-quadratic decay
    q.abs_error_estimate += std::exp(re_phi(-(double)k_left)) + std::exp(re_phi((double)k_right));

    if (q.abs_error_estimate > 10.0 * std::max(abs_tol, 1e-12 * scale)) {
        throw accuracy_error("rzeta_quadrature: adaptive refinement did not reach target", q.value,
                             q.abs_error_estimate);
    }
    return q;
}

inline cplx dirichlet_partial_sum(cplx s, long m) {
    cplx sum = 0.0;
    for (long n = m; n >= 1; --n) sum += std::exp(-s * std::log((double)n));
    return sum;
}

inline QuadratureEstimate<cplx> rzeta_quadrature_upper(cplx s, double target_abs_error) {
    const long m = std::max<long>(0, xi_decomposition(s).ell);
    auto q = siegel_line_integral(s, m, target_abs_error);
    q.value += dirichlet_partial_sum(s, m);
    return q;
}

}  // namespace detail

inline constexpr double kQuadratureTCap = 500.0;

// Ground-truth evaluation of R(s) by contour quadrature of Siegel's integral.
// The crossing point follows the saddle sqrt(s/2pi i) in both half planes, so
// the integrand peak matches the result scale and the evaluation stays
// relatively accurate even where |R| is astronomically large (t < 0).
inline QuadratureEstimate<cplx> rzeta_quadrature(cplx s, double target_abs_error = 1e-12,
                                                 double t_cap = kQuadratureTCap) {
    if (target_abs_error < 1e-13) throw regime_error("rzeta_quadrature: target_abs_error below 1e-13");
    if (std::abs(s.imag()) > t_cap)
        throw regime_error("rzeta_quadrature: |Im s| beyond the double-precision envelope");
    return detail::rzeta_quadrature_upper(s, target_abs_error);
}

// Main sum sum_{n=1}^{ell} n^{-s} with the remainder bound
// |R(s) - sum| <= C |s/(2 pi e)|^{-sigma/2}.
inline ApproxWithError rzeta_mainsum(cplx s, double fitted_C = 10.0) {
    if (!(s.imag() > 0.0) || !(s.real() > 0.0) || std::abs(s) <= 2.0 * kPi * std::exp(2.0))
        throw regime_error("rzeta_mainsum: requires t > 0, sigma > 0, |s| > 2 pi e^2");
    const auto d = xi_decomposition(s);
    ApproxWithError r;
    r.value = detail::dirichlet_partial_sum(s, d.ell);
    const double bound = fitted_C * std::pow(std::abs(s) / (2.0 * kPi * std::exp(1.0)), -0.5 * s.real());
    r.claimed_rel_error = bound / std::abs(r.value);
    return r;
}

inline bool in_left_asymptotic_regime(cplx s, double t0 = 100.0) {
    return s.imag() >= t0 && (1.0 - s.real()) >= std::pow(s.imag(), 3.0 / 7.0);
}

// Left-region asymptotic
//   R(s) = -chi(s) eta^{s-1} e^{-pi i eta^2} sqrt(2) e^{3 pi i/8}
//          sin(pi eta) / (2 cos(2 pi eta)) * (1 + U(s)),  |U| <= A t^{-1/21}.
// Refuses points where cos(2 pi eta) nearly vanishes: the displayed form has
// poles there that R itself does not.
inline ApproxWithError rzeta_left_asymptotic(cplx s, double fitted_A = 2.0, double t0 = 100.0) {
    const auto eb = eta_branch(s);
    const cplx ce = std::cos(2.0 * kPi * eb.eta);
    if (std::abs(ce) <= 1e-8)
        throw near_pole_error("rzeta_left_asymptotic: cos(2 pi eta) vanishes at this point");
    if (!in_left_asymptotic_regime(s, t0))
        throw regime_error("rzeta_left_asymptotic: requires t >= t0 and 1 - sigma >= t^(3/7)");
    // e^{-pi i eta^2} == e^{(1-s)/2} identically on this branch
    const cplx log_val = log_chi(s) + (s - 1.0) * std::log(eb.eta) + 0.5 * (1.0 - s) +
                         0.5 * std::log(2.0) + cplx(0.0, 3.0 * kPi / 8.0) +
                         std::log(std::sin(kPi * eb.eta)) - std::log(2.0 * ce) + cplx(0.0, kPi);
    ApproxWithError r;
    r.value = std::exp(log_val);
    r.claimed_rel_error = fitted_A * std::pow(s.imag(), -1.0 / 21.0);
    return r;
}

namespace detail {
// log((1 - z) / (1 + z^2)) by the two principal logs, with a series fallback
// so the tiny-|z| limit -z survives rounding.
inline cplx log_fraction_term(cplx z) {
    if (std::abs(z) < 1e-4) {
        const cplx z2 = z * z;
        return -z - 1.5 * z2 - z * z2 / 3.0 - 0.5 * z2 * z2;
    }
    return std::log(1.0 - z) - std::log(1.0 + z * z);
}
}  // namespace detail

// log J(s): explicit model of log F(s) in the left region.
inline cplx log_j(cplx s, double t0 = 100.0) {
    if (!in_left_asymptotic_regime(s, t0))
        throw regime_error("log_j: requires t >= t0 and 1 - sigma >= t^(3/7)");
    const auto eb = eta_branch(s);
    const cplx z = eb.exp_2pi_i_eta();
    return cplx(0.0, kPi / 4.0) * s + std::log(s) - 0.5 * std::log((1.0 - s) / (2.0 * kPi)) -
           cplx(0.0, 3.0 * kPi / 8.0) + eb.pi_i_eta() + detail::log_fraction_term(z);
}

namespace detail {
// s pi^{-s/2} Gamma(s/2) as a log; near s = 0 the pole of Gamma(s/2) is
// cancelled through the product form 2 Gamma(s/2 + 1).
inline cplx log_comb_factor(cplx s) {
    if (std::abs(s) < 1.0) {
        return std::log(2.0) - 0.5 * s * std::log(kPi) + log_gamma(0.5 * s + 1.0);
    }
    return std::log(s) - 0.5 * s * std::log(kPi) + log_gamma(0.5 * s);
}
}  // namespace detail

// F(s) = s pi^{-s/2} Gamma(s/2) R(s); entire, same zeros as R for t > 0.
inline cplx big_f(cplx s, double target_abs_error = 1e-12) {
    if (s.imag() == 0.0 && s.real() < 0.0) {
        const double d = std::abs(s.real() / 2.0 - std::round(s.real() / 2.0));
        if (d < 1e-8)
            throw pole_error("big_f: too close to a negative even integer on the real axis", s);
    }
    return std::exp(detail::log_comb_factor(s)) * rzeta_quadrature(s, target_abs_error).value;
}

enum class RMethod { quadrature, mainsum, asymptotic };

struct RzetaValue {
    cplx value;
    double abs_error = 0.0;
    RMethod method = RMethod::quadrature;
};

// Dispatching evaluator: quadrature inside the envelope, the asymptotic form
// beyond it when the regime admits one.
inline RzetaValue rzeta_eval(cplx s, double target_abs_error = 1e-12) {
    RzetaValue out;
    if (std::abs(s.imag()) <= kQuadratureTCap) {
        auto q = rzeta_quadrature(s, target_abs_error);
        out.value = q.value;
        out.abs_error = q.abs_error_estimate;
        out.method = RMethod::quadrature;
        return out;
    }
    if (s.imag() > 0.0 && in_left_asymptotic_regime(s)) {
        auto a = rzeta_left_asymptotic(s);
        out.value = a.value;
        out.abs_error = a.claimed_rel_error * std::abs(a.value);
        out.method = RMethod::asymptotic;
        return out;
    }
    throw regime_error("rzeta_eval: point outside quadrature envelope and asymptotic regime");
}

}  // namespace auxzeta

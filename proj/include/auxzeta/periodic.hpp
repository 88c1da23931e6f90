#pragma once

#include <cmath>
#include <string>

#include "auxzeta/errors.hpp"
#include "auxzeta/gamma.hpp"

namespace auxzeta {

// sin(pi x) with exact reduction: integer and half-integer arguments give
// exact 0 / +-1, which keeps the periodic sums below exactly periodic.
inline double sin_pi(double x) {
    double r = std::fmod(x, 2.0);
    if (r > 1.0) r -= 2.0;
    else if (r < -1.0) r += 2.0;
    if (r > 0.5) r = 1.0 - r;
    else if (r < -0.5) r = -1.0 - r;
    return std::sin(kPi * r);
}

// Truncation control for the per(x) Fourier series.  Both tails are
// dominated by sums of 1/n^2 with total coefficient <= 3.
struct PerSeries {
    long truncation_n = 100000;
    double tail_bound() const { return 3.0 / (double)truncation_n; }
};

// per(x) = sum 2 sin(2 pi n x)/n^2 - sum (-1)^n sin(4 pi n x)/n^2,
// 1-periodic; evaluated on frac(x) so periodicity is bit-exact.
inline double per(double x, PerSeries trunc = {}) {
    if (trunc.truncation_n < 1) throw regime_error("per: truncation_n must be >= 1");
    const double u = x - std::floor(x);
    double sum = 0.0;
    for (long n = trunc.truncation_n; n >= 1; --n) {
        const double inv = 1.0 / ((double)n * (double)n);
        const double alt = (n % 2 == 0) ? 1.0 : -1.0;
        sum += (2.0 * sin_pi(2.0 * (double)n * u) - alt * sin_pi(4.0 * (double)n * u)) * inv;
    }
    return sum;
}

// B3(frac(x)) with B3(x) = x (x - 1/2) (x - 1).
inline double bernoulli3_periodic(double x) {
    const double u = x - std::floor(x);
    return u * (u - 0.5) * (u - 1.0);
}

// |int_a^b f(x) B3~(x) dx| <= (-1)^n 3 (1 - 2^-(2n+2)) B_{2n+2}/(n+1) * max(f(a), f(b))
// for monotone nonnegative f; the constant for n = 1 is 3/64.
inline double odd_bernoulli_integral_bound(int n, double f_a, double f_b) {
    if (n < 1 || n > 3) throw regime_error("odd_bernoulli_integral_bound: order must be 1..3");
    if (f_a < 0.0 || f_b < 0.0) throw regime_error("odd_bernoulli_integral_bound: endpoints must be >= 0");
    // B4 = -1/30, B6 = 1/42, B8 = -1/30
    static constexpr double kB2n2[4] = {0.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0};
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const double c = sign * 3.0 * (1.0 - std::pow(2.0, -(2.0 * n + 2.0))) * kB2n2[n] / (n + 1.0);
    return c * std::max(f_a, f_b);
}

}  // namespace auxzeta

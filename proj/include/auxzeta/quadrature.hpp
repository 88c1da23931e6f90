#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "auxzeta/errors.hpp"

namespace auxzeta {

// Value of a line/contour integral together with an error estimate,
// the node count spent, and any points excised for log-singularities.
template <class T>
struct QuadratureEstimate {
    T value{};
    double abs_error_estimate = 0.0;
    long nodes_used = 0;
    std::vector<double> singular_points_excluded;
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights (positive half).
inline constexpr double kGK15X[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kGK15WK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kGK15WG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class T>
inline double vnorm(const T& v) {
    if constexpr (std::is_same_v<T, double>) return std::abs(v);
    else return std::abs(v);
}

template <class F, class T>
void gk15(F&& f, double a, double b, T& result, double& err, long& nodes) {
    const double mid = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    T fc = f(mid);
    T k15 = kGK15WK[7] * fc;
    T g7 = kGK15WG[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kGK15X[i];
        T fsum = f(mid - dx) + f(mid + dx);
        k15 += kGK15WK[i] * fsum;
        if (i % 2 == 1) g7 += kGK15WG[i / 2] * fsum;
    }
    k15 *= h;
    g7 *= h;
    result = k15;
    const double diff = vnorm(k15 - g7);
    // Scaled estimate in the QUADPACK spirit; conservative for smooth f.
    err = std::min(diff, 200.0 * diff * std::sqrt(200.0 * diff / (vnorm(k15) + 1e-300)));
    err = std::max(err, diff * 1e-3);
    nodes += 15;
}

struct Panel {
    double a, b;
    double err;
};

}  // namespace detail

// Adaptive Gauss-Kronrod over [a,b].  Bisects the worst panel until the
// summed error estimate is below abs_tol or the panel budget runs out.
template <class T, class F>
QuadratureEstimate<T> integrate_adaptive(F&& f, double a, double b, double abs_tol,
                                         int max_panels = 4000) {
    QuadratureEstimate<T> q;
    if (a == b) return q;
    struct Node {
        double a, b, err;
        T val;
    };
    std::vector<Node> panels;
    auto eval_panel = [&](double lo, double hi) {
        Node n;
        n.a = lo;
        n.b = hi;
        detail::gk15(f, lo, hi, n.val, n.err, q.nodes_used);
        return n;
    };
    panels.push_back(eval_panel(a, b));
    while ((int)panels.size() < max_panels) {
        double total_err = 0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            total_err += panels[i].err;
            if (panels[i].err > panels[worst].err) worst = i;
        }
        if (total_err <= abs_tol) break;
        Node old = panels[worst];
        const double mid = 0.5 * (old.a + old.b);
        if (mid <= old.a || mid >= old.b) break;  // resolution floor
        panels[worst] = eval_panel(old.a, mid);
        panels.push_back(eval_panel(mid, old.b));
    }
    T sum{};
    double err = 0;
    for (const auto& p : panels) {
        sum += p.val;
        err += p.err;
    }
    q.value = sum;
    q.abs_error_estimate = err;
    return q;
}

// Integration with known interior log-type singular points.  Each singular
// point gets a graded (geometric) subdivision on both sides so that the
// integrable blow-up never meets a Gauss panel head on.  The tiny sliver
// left around each point contributes O(eps log eps) and is folded into the
// error estimate.
template <class T, class F>
QuadratureEstimate<T> integrate_graded(F&& f, double a, double b,
                                       std::vector<double> singular, double abs_tol,
                                       double grade_radius = 1e-3) {
    QuadratureEstimate<T> q;
    if (a == b) return q;
    std::sort(singular.begin(), singular.end());
    // keep the graded regions disjoint even for clustered singular points
    double min_gap = std::abs(b - a);
    for (std::size_t i = 1; i < singular.size(); ++i)
        min_gap = std::min(min_gap, singular[i] - singular[i - 1]);
    grade_radius = std::min(grade_radius, 0.4 * min_gap);
    std::vector<std::pair<double, double>> smooth;  // panels away from singularities
    std::vector<std::pair<double, double>> graded;  // [x, s] with s singular endpoint
    double cursor = a;
    const double eps = 1e-12 * std::max(1.0, std::abs(b - a));
    for (double s : singular) {
        if (s <= a + eps || s >= b - eps) {
            if (s >= a - grade_radius && s <= b + grade_radius) q.singular_points_excluded.push_back(s);
            continue;
        }
        q.singular_points_excluded.push_back(s);
        const double lo = std::max(cursor, s - grade_radius);
        if (lo > cursor) smooth.emplace_back(cursor, lo);
        graded.emplace_back(lo, s);
        cursor = std::min(b, s + grade_radius);
        graded.emplace_back(cursor, s);
    }
    if (cursor < b) smooth.emplace_back(cursor, b);

    const double per_tol = abs_tol / std::max<std::size_t>(1, smooth.size() + graded.size());
    T sum{};
    double err = 0;
    for (auto [lo, hi] : smooth) {
        auto part = integrate_adaptive<T>(f, lo, hi, per_tol);
        sum += part.value;
        err += part.abs_error_estimate;
        q.nodes_used += part.nodes_used;
    }
    for (auto [x0, s] : graded) {
        // geometric panels closing in on s; stop at |panel| ~ eps
        double h = std::abs(s - x0);
        if (h <= eps) continue;
        const double sgn = (s > x0) ? 1.0 : -1.0;
        double d = h;
        while (d > eps) {
            const double dn = d * 0.5;
            const double lo = s - sgn * d;
            const double hi = s - sgn * dn;
            auto part = integrate_adaptive<T>(f, std::min(lo, hi), std::max(lo, hi), per_tol * dn / h);
            sum += part.value;
            err += part.abs_error_estimate;
            q.nodes_used += part.nodes_used;
            d = dn;
        }
        err += 40.0 * eps;  // |log| sliver bound near the excluded point
    }
    q.value = sum;
    q.abs_error_estimate = err;
    return q;
}

}  // namespace auxzeta

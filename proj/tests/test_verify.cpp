#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "auxzeta/verify.hpp"

using namespace auxzeta;
using Catch::Approx;

namespace {
const ZeroCatalog& catalog60v() {
    static ZeroCatalog cat = scan_catalog(60.0, default_beta_window(60.0));
    return cat;
}
}  // namespace

TEST_CASE("constant custom integrand gives (T - t0) log|c|", "[verify]") {
    const cplx c(3.0, -4.0);
    auto q = log_modulus_line_integral(LineTarget::Custom, 0.0, 2.0, 12.0, nullptr,
                                       [c](cplx) { return c; });
    CHECK(q.q.value == Approx(10.0 * std::log(5.0)).epsilon(1e-10));
}

TEST_CASE("gamma mean value matches the closed form within O*(3 sqrt3/16)", "[verify]") {
    auto rep = gamma_mean_check(-20.0, 2.0, 100.0);
    CHECK(rep.residual <= rep.normalizer);
    auto rep2 = gamma_mean_check(5.0, 2.0, 37.5);
    CHECK(rep2.residual <= rep2.normalizer);
    // degenerate T = t0: both sides vanish
    CHECK(gamma_half_mean_closed_form(3.0, 7.0, 7.0) == Approx(0.0).margin(1e-12));
}

TEST_CASE("littlewood closure on a zero-free rectangle", "[verify][littlewood]") {
    RectangleRegion rect{2.0, 4.0, 40.0, 50.0};
    auto rep = littlewood_closure(rect, Target::R, catalog60v());
    CHECK(rep.lhs == 0.0);
    CHECK(std::abs(rep.rhs) < 2e-5);
    CHECK(rep.pass);
}

TEST_CASE("littlewood closure with zeros inside (flagship shape, small T)", "[verify][littlewood]") {
    RectangleRegion rect{-1.0, 4.0, 20.0, 60.0};
    auto rep = littlewood_closure(rect, Target::R, catalog60v());
    CHECK(rep.lhs > 0.0);
    CHECK(rep.residual <= 1e-4);
    CHECK(rep.pass);
}

TEST_CASE("littlewood closure is additive across a split", "[verify][littlewood]") {
    RectangleRegion whole{-1.0, 4.0, 22.0, 46.0};
    RectangleRegion lower{-1.0, 4.0, 22.0, 34.0};
    RectangleRegion upper{-1.0, 4.0, 34.0, 46.0};
    auto rw = littlewood_closure(whole, Target::R, catalog60v());
    auto rl = littlewood_closure(lower, Target::R, catalog60v());
    auto ru = littlewood_closure(upper, Target::R, catalog60v());
    CHECK(rl.lhs + ru.lhs == Approx(rw.lhs).margin(1e-9));
    CHECK(rl.rhs + ru.rhs == Approx(rw.rhs).margin(5e-4));
}

TEST_CASE("right-excess residual stays O(log T) at desk scale", "[verify]") {
    auto rep = check_right_excess(1.0, 55.0, catalog60v(), 10.0, 12.0);
    CHECK(rep.pass);
    auto rep2 = check_right_excess(0.5, 55.0, catalog60v(), 10.0, 12.0);
    CHECK(rep2.pass);
    CHECK_THROWS_AS(check_right_excess(2.0, 55.0, catalog60v()), regime_error);
}

TEST_CASE("left-excess identity at desk scale", "[verify]") {
    auto rep = check_left_excess(4.0, 55.0, catalog60v(), 5.0, 12.0);
    CHECK(rep.pass);
    // subtracting sigma = 5 and sigma = 4 reports reproduces the zero count
    auto r5 = check_left_excess(5.0, 55.0, catalog60v(), 5.0, 12.0);
    const auto st = count_stats(catalog60v(), 4.0, 55.0);
    const double n_from_subtraction = (r5.lhs - rep.lhs) / (2.0 * kPi);
    // zeros between 4 and 5 are none, so the difference counts N(beta<=4)
    CHECK(n_from_subtraction == Approx((double)st.n_le).margin(0.5));
}

TEST_CASE("sigma-decay check at small T", "[verify]") {
    auto rep = check_sigma_decay({4.0, 5.0, 6.0, 7.0}, 150.0, 50.0);
    CHECK(rep.pass);
    CHECK(rep.fitted_constants["monotone"].get<bool>());
    CHECK_THROWS_AS(check_sigma_decay({2.0}, 150.0), regime_error);
}

TEST_CASE("backlund bound", "[verify]") {
    // constant-modulus holomorphic function: argument variation along the
    // segment is linear and far below the bound
    auto repc = backlund_bound_check(Target::R, {4.0, 100.0}, {-1.0, 100.0}, 10.0, catalog60v());
    CHECK(repc.pass);

    // shrinking |b - a| shrinks the left side too (trend sanity)
    auto rep_short = backlund_bound_check(Target::R, {4.0, 100.0}, {2.0, 100.0}, 10.0, catalog60v());
    CHECK(rep_short.lhs <= repc.lhs + 1e-9);
}

TEST_CASE("jensen mean square at sigma' = 0", "[verify]") {
    auto rep = jensen_meansquare_check(0.0, 150.0, 12.0, 0.5);
    CHECK(rep.lhs <= rep.rhs + 1e-6);  // Jensen inequality
    // mean square should sit near (2/3) sqrt(T/2pi) already at T = 150
    const double dev = rep.fitted_constants["mean_square_rel_dev"].get<double>();
    CHECK(dev < 0.5);
    CHECK_THROWS_AS(jensen_meansquare_check(0.3, 150.0), regime_error);
}

TEST_CASE("per-mean residual is O(1)", "[verify][per]") {
    for (double T : {50.0, 100.0}) {
        auto rep = per_integral_check(T, 20.0);
        CHECK(rep.pass);
        CHECK(std::abs(rep.residual) < 5.0);
    }
    // periodicity: replacing sqrt(T/2pi) by its fractional part does not move per
    const double tau = std::sqrt(100.0 / (2.0 * kPi));
    CHECK(per(tau) == per(tau - std::floor(tau)));
}

TEST_CASE("eta log-modulus mean", "[verify]") {
    auto rep = littlemean_check(200.0, 10.0);
    CHECK(rep.pass);
    // degenerate sigma0 = 1: both sides vanish
    auto rep0 = littlemean_check(200.0, 10.0, 2.0, 1.0);
    CHECK(std::abs(rep0.lhs) < 1e-9);
    CHECK(std::abs(rep0.rhs) < 1e-12);
}

TEST_CASE("j-mean against main and refined forms", "[verify]") {
    auto rep = mean_j_check(200.0, 10.0);
    CHECK(rep.pass);
    // refined form (with the per term) should usually be at least as close
    const double refined = rep.fitted_constants["refined_residual"].get<double>();
    CHECK(refined < rep.residual + 5.0);
}

TEST_CASE("comb decomposition against the explicit forms", "[verify]") {
    auto rep = comb_decomposition_check(4.0, 55.0, catalog60v(), 10.0, 12.0);
    CHECK(rep.pass);
    auto repg = gamma_mean_left_check(-10.0, 200.0, 10.0, 12.0);
    CHECK(repg.pass);
}

TEST_CASE("report serializes to the documented schema", "[verify]") {
    auto rep = littlemean_check(150.0);
    auto j = rep.to_json();
    for (const char* key : {"check_name", "inputs", "lhs", "rhs", "residual", "normalizer",
                            "fitted_constants", "pass"})
        CHECK(j.contains(key));
}

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "auxzeta/gamma.hpp"

using namespace auxzeta;
using Catch::Approx;

// Reference values computed beforehand with a 30-digit quadrature/series
// oracle (independent of this implementation).
namespace {
const cplx kLogGamma2p3i(-2.092851753092733349564189, 2.302396543466867626153708);
const cplx kLogGammaNeg(-6.992771008252735992770713, -10.09544377995270188896881);
const cplx kLogGammaNegConj(-19.93979217326757207690511, 15.25006155194642168388433);
const cplx kLogGammaHighT(-78.59888043270184250397969, 145.2086595242572283326545);
const double kTheta100 = 87.97216523178721962548313;
const double kTheta17p5 = -0.1786750014649945107358758;
const cplx kChi03(0.3437683172031725836451102, -1.084936541529963608945823);
}  // namespace

TEST_CASE("log_gamma matches the high-precision oracle", "[gamma]") {
    CHECK(std::abs(log_gamma({2.0, 3.0}) - kLogGamma2p3i) < 1e-13 * std::abs(kLogGamma2p3i));
    CHECK(std::abs(log_gamma({0.5, 0.0}) - cplx(0.5723649429247000870717137, 0.0)) < 1e-14);
    CHECK(std::abs(log_gamma({1.0, 0.0})) < 1e-14);
    CHECK(std::abs(log_gamma({-3.7, 2.1}) - kLogGammaNeg) < 1e-12 * std::abs(kLogGammaNeg));
    CHECK(std::abs(log_gamma({-7.3, -4.4}) - kLogGammaNegConj) < 1e-12 * std::abs(kLogGammaNegConj));
    CHECK(std::abs(log_gamma({0.25, 50.0}) - kLogGammaHighT) < 1e-12 * std::abs(kLogGammaHighT));
}

TEST_CASE("log_gamma holds up to the large-argument envelope", "[gamma]") {
    // high-precision oracle values; at |z| ~ 1e4 the attainable accuracy is a
    // few ulps of log Gamma itself, which keeps exp(result) within ~1e-12
    struct Case {
        cplx z, expect;
    } cases[] = {
        {{2000.0, 3000.0}, {11428.902582058684734909, 23535.7859035409815122895}},
        {{9000.0, -1000.0}, {72885.74029258271583252, -9106.97456355247731852252}},
        {{0.25, 5000.0}, {-7855.19199373881998276954, 37585.5732600828217436675}},
        {{-800.5, 30.0}, {-4647.1417412471416145623, -2315.83287441262609500401}},
    };
    for (const auto& c : cases) {
        CHECK(std::abs(log_gamma(c.z) - c.expect) < 1e-13 * std::abs(c.expect));
    }
}

TEST_CASE("log_gamma poles raise a domain error naming the pole", "[gamma]") {
    CHECK_THROWS_AS(log_gamma({0.0, 0.0}), pole_error);
    CHECK_THROWS_AS(log_gamma({-3.0, 0.0}), pole_error);
    try {
        log_gamma({-2.0, 0.0});
        FAIL("expected pole");
    } catch (const pole_error& e) {
        CHECK(e.pole == cplx(-2.0, 0.0));
    }
}

TEST_CASE("log_gamma satisfies the recurrence on random points", "[gamma]") {
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> ur(0.5, 50.0), ui(-100.0, 100.0);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const cplx z(ur(rng), ui(rng));
        const cplx lhs = log_gamma(z + 1.0);
        const cplx rhs = std::log(z) + log_gamma(z);
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("chi functional-equation identities", "[gamma]") {
    CHECK(std::abs(chi({0.5, 0.0}) - 1.0) < 1e-13);
    // chi(2) = -2 pi^2 via Gamma(-1/2) = -2 sqrt(pi)
    CHECK(std::abs(chi({2.0, 0.0}) - cplx(-2.0 * kPi * kPi, 0.0)) < 1e-11 * 2.0 * kPi * kPi);
    CHECK(std::abs(std::abs(chi({0.5, 37.5})) - 1.0) < 1e-12);
    CHECK(std::abs(chi({0.3, 12.0}) - kChi03) < 1e-12 * std::abs(kChi03));

    std::mt19937 rng(99);
    std::uniform_real_distribution<double> us(-6.0, 7.0), ut(0.2, 120.0);
    double worst = 0.0;
    for (int k = 0; k < 400; ++k) {
        const cplx s(us(rng), ut(rng));
        worst = std::max(worst, std::abs(chi(s) * chi(1.0 - s) - 1.0));
    }
    CHECK(worst < 1e-11);

    CHECK_THROWS_AS(chi({3.0, 0.0}), pole_error);  // Gamma((1-s)/2) pole
}

TEST_CASE("theta values and branch", "[gamma]") {
    CHECK(theta(0.0) == 0.0);
    CHECK(theta(100.0) == Approx(kTheta100).epsilon(1e-13));
    CHECK(theta(17.5) == Approx(kTheta17p5).margin(1e-13));

    // independent Stirling-series oracle: t/2 log(t/2pi) - t/2 - pi/8 + 1/(48 t);
    // the first omitted correction is 7/(5760 t^3) ~ 1.2e-9 at t = 100
    const double t = 100.0;
    const double oracle = 0.5 * t * std::log(t / (2.0 * kPi)) - 0.5 * t - kPi / 8.0 + 1.0 / (48.0 * t);
    CHECK(std::abs(theta(t) - oracle) < 2e-9);

    // exactly one sign change in (17, 18), located by bisection
    double lo = 17.0, hi = 18.0;
    REQUIRE(theta(lo) < 0.0);
    REQUIRE(theta(hi) > 0.0);
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (theta(mid) < 0.0 ? lo : hi) = mid;
    }
    CHECK(lo == Approx(17.8455995405).margin(1e-6));
    int sign_changes = 0;
    double prev = theta(17.0);
    for (double x = 17.01; x <= 18.0; x += 0.01) {
        const double cur = theta(x);
        if (prev < 0 && cur >= 0) ++sign_changes;
        prev = cur;
    }
    CHECK(sign_changes == 1);

    // branch stays continuous far out
    CHECK(theta(931.7) == Approx(1862.60380775757301072196).epsilon(1e-13));
    CHECK(theta(1e5) == Approx(433752.027229170781435645).epsilon(1e-13));
    CHECK_THROWS_AS(theta(2e6), regime_error);
}

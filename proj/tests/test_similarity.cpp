#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "stefan/similarity.hpp"

using namespace stefan;

// Flux amplitude whose front sits exactly at 1: front_to_flux(1) = e^{1/4}/2.
static const double kHUnit = 0.6420127083438707;

// Frozen oracle values, computed by adaptive quadrature / bisection before
// the implementation existed.
static const double kProfileAt0 = 0.5922965364693266;   // U(0) for kHUnit
static const double kProfileAtHalf = 0.2778542650909179;  // U(0.5)
static const double kOmega01 = 0.19804842507531145;     // omega for h = 0.1
static const double kOmega2 = 1.7921004415602255;       // omega for h = 2
static const double kOmega10 = 2.8034775792949076;      // omega for h = 10

TEST_CASE("solve_omega closes the defining equation") {
    for (double h : {0.1, 0.5, kHUnit, 1.0, 2.0, 10.0, 100.0}) {
        const double omega = solve_omega(h);
        CHECK(std::abs(front_to_flux(omega) - h) <= 1e-12 * std::fmax(1.0, h));
        CHECK(omega > 0.0);
    }
}

TEST_CASE("solve_omega reproduces frozen roots") {
    CHECK(std::abs(solve_omega(kHUnit) - 1.0) <= 1e-10);
    CHECK(std::abs(solve_omega(0.1) - kOmega01) <= 1e-12);
    CHECK(std::abs(solve_omega(2.0) - kOmega2) <= 1e-12);
    CHECK(std::abs(solve_omega(10.0) - kOmega10) <= 1e-12);
}

TEST_CASE("solve_omega agrees with a bisection oracle") {
    for (double h : {0.3, 1.7, 6.0}) {
        const double ref = oracles::bisect(
            [h](double x) { return front_to_flux(x) - h; }, 0.0, 16.0);
        CHECK(std::abs(solve_omega(h) - ref) <= 1e-11);
    }
}

TEST_CASE("solve_omega small-h asymptotics: omega ~ 2h") {
    const double h = 1e-8;
    const double omega = solve_omega(h);
    CHECK(std::abs(omega - 2e-8) <= 1e-15 * 2e-8);
}

TEST_CASE("solve_omega is strictly increasing in h") {
    CHECK(solve_omega(0.5) < solve_omega(1.0));
}

TEST_CASE("solve_omega rejects bad input") {
    CHECK_THROWS_AS(solve_omega(0.0), std::domain_error);
    CHECK_THROWS_AS(solve_omega(-1.0), std::domain_error);
    CHECK_THROWS_AS(solve_omega(1.0, 0.0), std::domain_error);
}

TEST_CASE("profile_value matches the frozen quadrature values") {
    const SelfSimilarProfile p = make_profile(kHUnit);
    CHECK(std::abs(profile_value(p, 0.0) - kProfileAt0) <= 1e-12);
    CHECK(std::abs(profile_value(p, 0.5) - kProfileAtHalf) <= 1e-12);
    CHECK(profile_value(p, p.omega) == 0.0);
}

TEST_CASE("profile_value matches live quadrature of the defining integral") {
    const SelfSimilarProfile p = make_profile(kHUnit);
    for (double eta : {0.0, 0.25, 0.7}) {
        const double ref =
            p.h * oracles::integrate(
                      [](double s) { return std::exp(-0.25 * s * s); }, eta,
                      p.omega);
        CHECK(std::abs(profile_value(p, eta) - ref) <= 1e-10);
    }
}

TEST_CASE("profile_value is nonnegative and strictly decreasing") {
    const SelfSimilarProfile p = make_profile(2.0);
    double prev = profile_value(p, 0.0);
    for (int i = 1; i <= 500; ++i) {
        const double eta = p.omega * i / 500.0;
        const double v = profile_value(p, eta);
        CHECK(v >= 0.0);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("profile_value rejects eta outside the front") {
    const SelfSimilarProfile p = make_profile(kHUnit);
    CHECK_THROWS_AS(profile_value(p, -0.1), std::domain_error);
    CHECK_THROWS_AS(profile_value(p, p.omega + 0.1), std::domain_error);
}

TEST_CASE("profile_slope pins both boundary conditions") {
    const SelfSimilarProfile p = make_profile(kHUnit);
    CHECK(profile_slope(p, 0.0) == -p.h);
    CHECK(std::abs(profile_slope(p, p.omega) + 0.5 * p.omega) <= 1e-12);

    // forward difference at 0 approaches the slope
    const double eps = 1e-6;
    const double fd = (profile_value(p, eps) - profile_value(p, 0.0)) / eps;
    CHECK(std::abs(fd + p.h) <= 1e-9);
}

TEST_CASE("profile slope magnitude decreases outward") {
    const SelfSimilarProfile p = make_profile(1.0);
    double prev = std::abs(profile_slope(p, 0.0));
    for (int i = 1; i <= 100; ++i) {
        const double cur = std::abs(profile_slope(p, p.omega * i / 100.0));
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("stationary equation residual shrinks at second order") {
    const SelfSimilarProfile p = make_profile(kHUnit);
    const auto residual = [&](double d) {
        double worst = 0.0;
        for (double eta = 0.1; eta <= 0.9; eta += 0.05) {
            const double upp = profile_value(p, eta + d);
            const double mid = profile_value(p, eta);
            const double low = profile_value(p, eta - d);
            const double second = (upp - 2.0 * mid + low) / (d * d);
            const double first = (upp - low) / (2.0 * d);
            worst = std::fmax(worst, std::abs(second + 0.5 * eta * first));
        }
        return worst;
    };
    const double r1 = residual(1e-2);
    const double r2 = residual(5e-3);
    CHECK(r1 / r2 > 3.0);
    CHECK(r1 / r2 < 5.0);
}

TEST_CASE("physical_self_similar spreads the front as sqrt(t+1)") {
    const SelfSimilarProfile p = make_profile(kHUnit);

    const auto at_front = physical_self_similar(p, p.omega, 0.0);
    CHECK(at_front.value == 0.0);
    CHECK(at_front.front == p.omega);

    CHECK(physical_self_similar(p, 0.0, 3.0).front == doctest::Approx(2.0 * p.omega).epsilon(1e-15));

    for (double t : {0.0, 1.0, 7.0}) {
        CHECK(physical_self_similar(p, 0.0, t).value == profile_value(p, 0.0));
    }

    // beyond the front the value is zero by extension
    CHECK(physical_self_similar(p, 10.0, 0.0).value == 0.0);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "stefan/bounds.hpp"
#include "stefan/similarity.hpp"
#include "stefan/solver.hpp"

using namespace stefan;

static const double kHUnit = 0.6420127083438707;

namespace {

SimilarityState stationary_state(const SelfSimilarProfile& p, int N) {
    SimilarityState s;
    s.b = p.omega;
    s.values.resize(N + 1);
    for (int i = 0; i <= N; ++i)
        s.values[i] = profile_value(p, p.omega * i / static_cast<double>(N));
    return s;
}

SimilarityState lower_state(const StationaryPerturbed& sp, int N) {
    SimilarityState s;
    s.b = sp.b_lambda;
    s.values.resize(N + 1);
    for (int i = 0; i <= N; ++i)
        s.values[i] = perturbed_value(sp, sp.b_lambda * i / static_cast<double>(N));
    return s;
}

SimilarityState upper_state(const UpperLinear& u, int N) {
    SimilarityState s;
    s.b = u.b_bar;
    s.values.resize(N + 1);
    for (int i = 0; i <= N; ++i)
        s.values[i] = upper_value(u, u.b_bar * i / static_cast<double>(N));
    return s;
}

SolverConfig config(int N, double dtau, double h, int iters = 1) {
    SolverConfig cfg;
    cfg.N = N;
    cfg.dtau = dtau;
    cfg.coupling_iters = iters;
    cfg.h = h;
    return cfg;
}

}  // namespace

TEST_CASE("front_fixed_coefficients are the exact transformed terms") {
    SimilarityState s;
    s.b = 2.0;
    s.values.assign(11, 0.0);
    const double bdot = 0.6;
    const FrontCoefficients c = front_fixed_coefficients(s, bdot);
    CHECK(c.diffusion == 0.25);
    CHECK(c.advection.size() == 11);
    CHECK(c.advection[0] == 0.0);  // factor xi kills advection at the origin
    for (int i = 0; i <= 10; ++i) {
        const double xi = i / 10.0;
        CHECK(c.advection[i] == doctest::Approx(xi * (0.3 + 0.5)).epsilon(1e-15));
    }

    SimilarityState bad = s;
    bad.b = 0.0;
    CHECK_THROWS_AS(front_fixed_coefficients(bad, 0.0), std::domain_error);
}

TEST_CASE("stefan_velocity vanishes on the stationary profile at O(dxi^2)") {
    const SelfSimilarProfile p = make_profile(kHUnit);
    const double v400 = std::abs(stefan_velocity(stationary_state(p, 400)));
    const double v800 = std::abs(stefan_velocity(stationary_state(p, 800)));
    CHECK(v400 <= 1e-4);
    CHECK(v400 / v800 > 3.0);
    CHECK(v400 / v800 < 5.0);
}

TEST_CASE("stefan_velocity is exact on the linear upper profile") {
    const UpperLinear u{1.5};
    const double v = stefan_velocity(upper_state(u, 64));
    // slope -b/2 exactly cancels the b/2 term
    CHECK(std::abs(v) <= 1e-12);
}

TEST_CASE("stefan_velocity on the subsolution is nonnegative up to grid error") {
    const StationaryPerturbed sp = choose_lambda(make_ramp(0.5, 1.0), kHUnit);
    CHECK(stefan_velocity(lower_state(sp, 400)) >= -1e-5);
}

TEST_CASE("step keeps the stationary state stationary to O(dtau dxi^2)") {
    const SelfSimilarProfile p = make_profile(kHUnit);
    for (int N : {400, 800}) {
        const SimilarityState s0 = stationary_state(p, N);
        const double dtau = 1e-4;
        const SimilarityState s1 = step(s0, config(N, dtau, kHUnit));
        double dv = 0.0;
        for (int i = 0; i <= N; ++i)
            dv = std::fmax(dv, std::abs(s1.values[i] - s0.values[i]));
        const double dxi2 = 1.0 / (static_cast<double>(N) * N);
        CHECK(dv <= 100.0 * dtau * dxi2);
        CHECK(std::abs(s1.b - p.omega) <= 100.0 * dtau * dxi2);
    }
}

TEST_CASE("the boundary flux heats an initially empty profile") {
    SimilarityState s;
    s.b = 1.0;
    s.values.assign(65, 0.0);
    const SimilarityState s1 = step(s, config(64, 1e-3, kHUnit));
    CHECK(s1.values[0] > 0.0);
}

TEST_CASE("one step preserves the ordering of sandwiched states") {
    const InitialData ramp = make_ramp(0.5, 1.0);
    const StationaryPerturbed sp = choose_lambda(ramp, kHUnit);
    const UpperLinear u = build_upper(ramp, kHUnit);
    const int N = 400;
    const SimilarityState lo1 = step(lower_state(sp, N), config(N, 1e-4, kHUnit));
    const SimilarityState hi1 = step(upper_state(u, N), config(N, 1e-4, kHUnit));
    CHECK(lo1.b <= hi1.b + 1e-10);
    // compare zero-extended profiles on a shared grid
    for (int i = 0; i <= 1000; ++i) {
        const double eta = hi1.b * i / 1000.0;
        const auto eval = [](const SimilarityState& st, double e) {
            if (e >= st.b) return 0.0;
            const double r = e / st.b * (st.values.size() - 1);
            const std::size_t j = static_cast<std::size_t>(r);
            const double t = r - static_cast<double>(j);
            return st.values[j] + t * (st.values[j + 1] - st.values[j]);
        };
        CHECK(eval(lo1, eta) <= eval(hi1, eta) + 1e-10);
    }
}

TEST_CASE("step reports front collapse instead of continuing") {
    SimilarityState s;
    s.b = 0.05;
    s.values = {0.0, 0.0, 0.5, 0.0, 0.0};  // steep drop toward the front
    CHECK_THROWS_AS(step(s, config(4, 0.5, kHUnit)), std::runtime_error);
}

TEST_CASE("run reports tau as step_index * dtau and records on stride") {
    const SelfSimilarProfile p = make_profile(kHUnit);
    const SimilarityState s0 = stationary_state(p, 16);
    const SolverConfig cfg = config(16, 1e-3, kHUnit);
    const Trajectory traj = run(s0, cfg, 0.05, 10);
    REQUIRE(traj.samples.size() == 6);  // initial + 5 strides
    for (std::size_t k = 0; k < traj.samples.size(); ++k) {
        const double expected = static_cast<double>(k) * 10.0 * 1e-3;
        CHECK(traj.samples[k].tau == expected);
    }
    // an off-stride horizon still records the final state
    const Trajectory tail = run(s0, cfg, 0.055, 10);
    CHECK(tail.samples.size() == 7);
    CHECK(tail.samples.back().tau == 55.0 * 1e-3);
}

TEST_CASE("run from the stationary state stays put") {
    const SelfSimilarProfile p = make_profile(kHUnit);
    const Trajectory traj =
        run(stationary_state(p, 200), config(200, 1e-4, kHUnit), 0.2, 100);
    for (const auto& s : traj.samples) CHECK(std::abs(s.b - p.omega) <= 1e-5);
}

TEST_CASE("fronts move the right way from the sandwich states") {
    const InitialData ramp = make_ramp(0.5, 1.0);
    const StationaryPerturbed sp = choose_lambda(ramp, kHUnit);
    const UpperLinear u = build_upper(ramp, kHUnit);
    const SolverConfig cfg = config(400, 1e-4, kHUnit);

    const Trajectory lo = run(lower_state(sp, 400), cfg, 1.0, 100);
    for (std::size_t k = 1; k < lo.samples.size(); ++k)
        CHECK(lo.samples[k].b >= lo.samples[k - 1].b - 1e-8);

    const Trajectory hi = run(upper_state(u, 400), cfg, 1.0, 100);
    for (std::size_t k = 1; k < hi.samples.size(); ++k)
        CHECK(hi.samples[k].b <= hi.samples[k - 1].b + 1e-8);
}

TEST_CASE("sandwiched runs keep every value inside [0, b_bar^2/2]") {
    const InitialData ramp = make_ramp(0.5, 1.0);
    const UpperLinear u = build_upper(ramp, kHUnit);
    const double cap = 0.5 * u.b_bar * u.b_bar;
    const SolverConfig cfg = config(200, 2e-4, kHUnit);

    const Trajectory runs[] = {
        run(lower_state(choose_lambda(ramp, kHUnit), 200), cfg, 1.0, 1),
        run(ramp, cfg, 1.0, 1),
        run(upper_state(u, 200), cfg, 1.0, 1),
    };
    for (const Trajectory& traj : runs) {
        double lowest = 0.0, highest = cap;
        for (const auto& s : traj.samples)
            for (double v : s.values) {
                lowest = std::fmin(lowest, v);
                highest = std::fmax(highest, v);
            }
        CHECK(lowest >= -1e-8);
        CHECK(highest <= cap + 1e-8);
    }
}

TEST_CASE("spatial convergence to the exact stationary pair is second order") {
    const SelfSimilarProfile p = make_profile(kHUnit);
    std::vector<double> err_b, err_v;
    for (int N : {50, 100, 200}) {
        const Trajectory traj =
            run(stationary_state(p, N), config(N, 1e-5, kHUnit), 0.25, 1 << 30);
        const auto& last = traj.samples.back();
        err_b.push_back(std::abs(last.b - p.omega));
        double ev = 0.0;
        for (int i = 0; i <= N; ++i) {
            const double exact = profile_value(p, p.omega * i / static_cast<double>(N));
            ev = std::fmax(ev, std::abs(last.values[i] - exact));
        }
        err_v.push_back(ev);
    }
    for (int k = 0; k < 2; ++k) {
        const double order_b = std::log2(err_b[k] / err_b[k + 1]);
        const double order_v = std::log2(err_v[k] / err_v[k + 1]);
        CHECK(std::abs(order_b - 2.0) <= 0.3);
        CHECK(std::abs(order_v - 2.0) <= 0.3);
    }
}

TEST_CASE("temporal order: first without the corrector, second with it") {
    const StationaryPerturbed sp = choose_lambda(make_ramp(0.5, 1.0), kHUnit);
    const int N = 200;
    const SimilarityState s0 = lower_state(sp, N);
    const auto final_b = [&](double dtau, int iters) {
        return run(s0, config(N, dtau, kHUnit, iters), 0.5, 1 << 30)
            .samples.back()
            .b;
    };
    const auto order = [&](int iters) {
        const double b1 = final_b(4e-3, iters);
        const double b2 = final_b(2e-3, iters);
        const double b3 = final_b(1e-3, iters);
        return std::log2(std::abs(b1 - b2) / std::abs(b2 - b3));
    };
    CHECK(std::abs(order(0) - 1.0) <= 0.3);
    CHECK(std::abs(order(3) - 2.0) <= 0.3);
}

TEST_CASE("serial and parallel execution produce identical trajectories") {
    // grid large enough to cross the parallel grain
    const SelfSimilarProfile p = make_profile(kHUnit);
    const int N = 5000;
    SolverConfig serial = config(N, 1e-3, kHUnit);
    serial.exec = kernels::Exec::serial;
    SolverConfig parallel = serial;
    parallel.exec = kernels::Exec::parallel;

    const SimilarityState s0 = stationary_state(p, N);
    SimilarityState a = s0, b = s0;
    for (int k = 0; k < 10; ++k) {
        a = step(a, serial);
        b = step(b, parallel);
    }
    CHECK(a.b == b.b);
    REQUIRE(a.values.size() == b.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i)
        CHECK(a.values[i] == b.values[i]);
}

TEST_CASE("run resamples piecewise-linear data onto the unit grid") {
    const InitialData ramp = make_ramp(0.5, 1.0);
    const SimilarityState s = resample_initial(ramp, 400);
    CHECK(s.b == 1.0);
    CHECK(s.values.back() == 0.0);
    for (int i = 0; i <= 400; ++i) {
        const double x = i / 400.0;
        CHECK(std::abs(s.values[i] - 0.5 * (1.0 - x)) <= 1e-15);
    }
    CHECK_THROWS_AS(resample_initial(ramp, 4), std::domain_error);
}

TEST_CASE("step validates its inputs") {
    const SelfSimilarProfile p = make_profile(kHUnit);
    SimilarityState s = stationary_state(p, 16);
    SolverConfig cfg = config(16, 1e-3, kHUnit);
    cfg.dtau = 0.0;
    CHECK_THROWS_AS(step(s, cfg), std::domain_error);
    cfg.dtau = 1e-3;
    cfg.h = 0.0;
    CHECK_THROWS_AS(step(s, cfg), std::domain_error);
    s.b = -1.0;
    CHECK_THROWS_AS(step(s, config(16, 1e-3, kHUnit)), std::domain_error);
    SimilarityState tiny;
    tiny.b = 1.0;
    tiny.values = {1.0, 0.0};
    CHECK_THROWS_AS(step(tiny, config(16, 1e-3, kHUnit)), std::domain_error);
}

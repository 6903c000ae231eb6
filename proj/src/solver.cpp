#include "stefan/solver.hpp"

#include <cmath>
#include <stdexcept>

namespace stefan {

namespace {

void require_state(const SimilarityState& state) {
    if (!(state.b > 0.0))
        throw std::domain_error("solver: front position must be positive");
    if (state.values.size() < 4)
        throw std::domain_error("solver: grid needs at least 4 nodes");
}

double one_sided_front_gradient(const std::vector<double>& v, double b,
                                double dxi) {
    const std::size_t N = v.size() - 1;
    return (3.0 * v[N] - 4.0 * v[N - 1] + v[N - 2]) / (2.0 * dxi * b);
}

struct Workspace {
    std::vector<double> lo, di, up, rhs;
    void resize(std::size_t n) {
        lo.resize(n);
        di.resize(n);
        up.resize(n);
        rhs.resize(n);
    }
};

// Theta-weighted implicit solve for V over one step, with coefficients
// frozen at (b_c, bdot_c).  Row 0 uses the ghost node eliminating the flux
// condition V_xi(0) = -h b_c; the front row stays pinned at zero.
std::vector<double> theta_solve(const std::vector<double>& v, double b_c,
                                double bdot_c, double h, double dtau,
                                double theta, kernels::Exec exec,
                                Workspace& ws) {
    const std::size_t N = v.size() - 1;
    const double dxi = 1.0 / static_cast<double>(N);
    const double rd = dtau / (b_c * b_c * dxi * dxi);
    const double adv = bdot_c / b_c + 0.5;
    const double ra_scale = dtau * adv / (2.0 * dxi);

    ws.resize(N);  // unknowns are rows 0..N-1; v[N] = 0 is eliminated
    auto& lo = ws.lo;
    auto& di = ws.di;
    auto& up = ws.up;
    auto& rhs = ws.rhs;

    kernels::for_each_index(exec, N - 1, [&](std::size_t k) {
        const std::size_t i = k + 1;
        const double xi = static_cast<double>(i) * dxi;
        const double ra = ra_scale * xi;
        lo[i] = -theta * (rd - ra);
        di[i] = 1.0 + 2.0 * theta * rd;
        up[i] = -theta * (rd + ra);
        rhs[i] = v[i] + (1.0 - theta) * (rd * (v[i + 1] - 2.0 * v[i] + v[i - 1]) +
                                         ra * (v[i + 1] - v[i - 1]));
    });
    di[0] = 1.0 + 2.0 * theta * rd;
    up[0] = -2.0 * theta * rd;
    rhs[0] = v[0] + (1.0 - theta) * 2.0 * rd * (v[1] - v[0]) +
             rd * 2.0 * dxi * h * b_c;

    // Thomas elimination; the system is near-diagonally-dominant and a
    // vanishing pivot only occurs for broken configurations.
    for (std::size_t i = 1; i < N; ++i) {
        if (std::abs(di[i - 1]) < 1e-300)
            throw std::runtime_error("solver: tridiagonal breakdown");
        const double m = lo[i] / di[i - 1];
        di[i] -= m * up[i - 1];
        rhs[i] -= m * rhs[i - 1];
    }
    if (std::abs(di[N - 1]) < 1e-300)
        throw std::runtime_error("solver: tridiagonal breakdown");

    std::vector<double> out(N + 1);
    out[N] = 0.0;
    out[N - 1] = rhs[N - 1] / di[N - 1];
    for (std::size_t i = N - 1; i-- > 0;)
        out[i] = (rhs[i] - up[i] * out[i + 1]) / di[i];
    return out;
}

double velocity_of(const std::vector<double>& v, double b, double dxi) {
    return -one_sided_front_gradient(v, b, dxi) - 0.5 * b;
}

}  // namespace

FrontCoefficients front_fixed_coefficients(const SimilarityState& state,
                                           double bdot) {
    require_state(state);
    const std::size_t N = state.values.size() - 1;
    const double dxi = 1.0 / static_cast<double>(N);
    FrontCoefficients c;
    c.diffusion = 1.0 / (state.b * state.b);
    c.advection.resize(N + 1);
    const double a = bdot / state.b + 0.5;
    for (std::size_t i = 0; i <= N; ++i)
        c.advection[i] = static_cast<double>(i) * dxi * a;
    return c;
}

double stefan_velocity(const SimilarityState& state) {
    require_state(state);
    const double dxi = 1.0 / static_cast<double>(state.values.size() - 1);
    return velocity_of(state.values, state.b, dxi);
}

SimilarityState step(const SimilarityState& state, const SolverConfig& cfg) {
    require_state(state);
    if (!(cfg.dtau > 0.0)) throw std::domain_error("solver: dtau must be positive");
    if (!(cfg.h > 0.0)) throw std::domain_error("solver: h must be positive");
    const std::size_t N = state.values.size() - 1;
    const double dxi = 1.0 / static_cast<double>(N);
    Workspace ws;

    const double bdot0 = velocity_of(state.values, state.b, dxi);

    // Predictor: fully implicit with coefficients frozen at the step start.
    std::vector<double> v_next = theta_solve(state.values, state.b, bdot0,
                                             cfg.h, cfg.dtau, 1.0, cfg.exec, ws);
    double b_next = state.b + cfg.dtau * bdot0;

    // Corrector sweeps: trapezoidal front update, midpoint-averaged
    // coefficients for V.
    for (int k = 0; k < cfg.coupling_iters; ++k) {
        if (!(b_next > 0.0)) throw std::runtime_error("solver: front collapse");
        const double bdot_k = velocity_of(v_next, b_next, dxi);
        b_next = state.b + 0.5 * cfg.dtau * (bdot0 + bdot_k);
        const double b_mid = 0.5 * (state.b + b_next);
        const double bdot_mid = 0.5 * (bdot0 + bdot_k);
        v_next = theta_solve(state.values, b_mid, bdot_mid, cfg.h, cfg.dtau,
                             0.5, cfg.exec, ws);
    }

    if (!(b_next > 0.0)) throw std::runtime_error("solver: front collapse");
    return {state.tau + cfg.dtau, b_next, std::move(v_next)};
}

namespace {

TrajectorySample make_sample(const SimilarityState& s) {
    const std::size_t N = s.values.size() - 1;
    const double dxi = 1.0 / static_cast<double>(N);
    const auto& v = s.values;
    const double grad0 = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * dxi * s.b);
    const double gradb = one_sided_front_gradient(v, s.b, dxi);
    return {s.tau, s.b, -grad0, -gradb, v};
}

}  // namespace

Trajectory run(const SimilarityState& init, const SolverConfig& cfg,
               double tau_end, int stride) {
    require_state(init);
    if (!(tau_end > 0.0)) throw std::domain_error("run: tau_end must be positive");
    if (stride < 1) throw std::domain_error("run: stride must be positive");

    Trajectory traj;
    traj.N = static_cast<int>(init.values.size()) - 1;
    traj.dtau = cfg.dtau;
    traj.stride = stride;
    traj.h = cfg.h;

    const long long steps =
        static_cast<long long>(std::ceil(tau_end / cfg.dtau - 1e-9));
    SimilarityState s = init;
    traj.samples.push_back(make_sample(s));
    for (long long k = 1; k <= steps; ++k) {
        s = step(s, cfg);
        s.tau = static_cast<double>(k) * cfg.dtau;  // keep tau free of drift
        if (k % stride == 0 || k == steps) traj.samples.push_back(make_sample(s));
    }
    return traj;
}

SimilarityState resample_initial(const InitialData& init, int N) {
    validate(init);
    if (N < 8) throw std::domain_error("resample_initial: N must be at least 8");
    SimilarityState s;
    s.tau = 0.0;
    s.b = init.b0;
    s.values.resize(static_cast<std::size_t>(N) + 1);
    for (int i = 0; i <= N; ++i) {
        const double x = init.b0 * static_cast<double>(i) / static_cast<double>(N);
        s.values[static_cast<std::size_t>(i)] = std::fmax(0.0, initial_value(init, x));
    }
    s.values.back() = 0.0;
    return s;
}

Trajectory run(const InitialData& init, const SolverConfig& cfg,
               double tau_end, int stride) {
    if (cfg.N < 8) throw std::domain_error("run: N must be at least 8");
    return run(resample_initial(init, cfg.N), cfg, tau_end, stride);
}

}  // namespace stefan

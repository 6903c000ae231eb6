#pragma once

#include <vector>

#include "stefan/bounds.hpp"
#include "stefan/kernels.hpp"

// Front-fixed integration of the similarity-variable melting problem
//
//   W_tau = W_etaeta + (eta/2) W_eta          on 0 < eta < b(tau)
//   -W_eta(0, tau) = h,  W(b, tau) = 0
//   db/dtau + b/2 = -W_eta(b, tau)
//
// mapped to the unit interval by xi = eta/b, V(xi, tau) = W(eta, tau):
//
//   V_tau = V_xixi / b^2 + xi (b'/b + 1/2) V_xi
//   V_xi(0) = -h b,  V(1) = 0,  b' = -V_xi(1)/b - b/2.
//
// Each step solves V implicitly on the fixed grid xi_i = i/N (tridiagonal,
// ghost node at the flux end) and advances b with the same one-sided
// gradient that drives the front.

namespace stefan {

struct SimilarityState {
    double tau = 0.0;
    double b = 0.0;
    std::vector<double> values;  // V at xi_i = i/N; values[N] = 0
};

struct SolverConfig {
    int N = 400;
    double dtau = 1e-4;
    // Corrector sweeps per step.  0 keeps the plain semi-implicit step,
    // first order in dtau.  Each sweep re-solves V with coefficients
    // averaged between the step ends and advances b by the trapezoid
    // rule; two or more sweeps reach second order in dtau.
    int coupling_iters = 1;
    double h = 0.0;
    kernels::Exec exec = kernels::Exec::parallel;
};

struct TrajectorySample {
    double tau;
    double b;
    double flux0;  // -W_eta at the flux end; tracks h
    double fluxb;  // -W_eta at the front; tracks b'/... + b/2
    std::vector<double> values;
};

struct Trajectory {
    int N = 0;
    double dtau = 0.0;
    int stride = 1;
    double h = 0.0;
    std::vector<TrajectorySample> samples;
};

struct FrontCoefficients {
    double diffusion;               // 1/b^2
    std::vector<double> advection;  // xi_i (bdot/b + 1/2), one per node
};

// Coefficients of the front-fixed equation; exact algebra, no
// discretization.  Throws std::domain_error if state.b <= 0.
FrontCoefficients front_fixed_coefficients(const SimilarityState& state,
                                           double bdot);

// b' from the one-sided second-order gradient at the front node.
double stefan_velocity(const SimilarityState& state);

// One step of dtau.  Throws std::runtime_error on tridiagonal breakdown or
// front collapse (b <= 0), both of which signal an invalid configuration.
SimilarityState step(const SimilarityState& state, const SolverConfig& cfg);

// Advance until tau >= tau_end, recording the initial state and every
// stride-th step.  tau is reported as step_index * dtau.
Trajectory run(const SimilarityState& init, const SolverConfig& cfg,
               double tau_end, int stride);

// Same, starting from piecewise-linear physical data resampled to the xi
// grid (front node forced to zero, values clamped nonnegative).
Trajectory run(const InitialData& init, const SolverConfig& cfg,
               double tau_end, int stride);

// Resample a piecewise-linear profile with front b onto the xi grid.
SimilarityState resample_initial(const InitialData& init, int N);

}  // namespace stefan

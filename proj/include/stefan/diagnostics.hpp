#pragma once

#include <string>
#include <vector>

#include "stefan/similarity.hpp"
#include "stefan/solver.hpp"

// Convergence and structure checks on computed trajectories: distance to
// the self-similar profile, pairwise ordering of runs, monotonicity in
// time, and the windowed energy of the spatial gradient.  Profiles with
// different supports are compared after extension by zero past the front.

namespace stefan {

struct Violation {
    double tau;
    std::string kind;  // "front" or "profile"
    double eta;        // offending position for profile violations, else 0
    double excess;     // how far past the tolerance
};

enum class Direction { nondecreasing, nonincreasing };

struct ReportRow {
    double tau;
    double b_gap;        // |b(tau) - omega|
    double profile_gap;  // sup over the common grid of |W - U|, zero-extended
};

struct ConvergenceReport {
    std::vector<ReportRow> rows;
    std::vector<double> energy_windows;  // [T, T+1] for integer T
};

// Piecewise-linear value of the state at eta, zero beyond the front.
double extend_by_zero(const SimilarityState& state, double eta);

// Max over a uniform grid on [0, max(b, omega)] of the zero-extended gap.
double sup_distance(const SimilarityState& state, const SelfSimilarProfile& p,
                    int grid_points = 2001);

// Empty iff at every shared sample time the lower run stays below the upper
// one, fronts and zero-extended profiles alike, within tol.  At most one
// violation per sample and kind is recorded (the worst).  Throws
// std::invalid_argument if the trajectories sample different times.
std::vector<Violation> check_ordering(const Trajectory& lower,
                                      const Trajectory& upper, double tol,
                                      int grid_points = 2001);

// Empty iff consecutive samples respect the direction for both the front
// and the zero-extended profile, within tol.
std::vector<Violation> check_monotone_in_time(const Trajectory& traj,
                                              Direction direction, double tol,
                                              int grid_points = 2001);

// Trapezoidal approximation (in both variables) of the window integral
//   integral_T^{T+1} integral_0^{b(tau)} W_eta^2 deta dtau.
// Requires samples at T and T+1; throws std::invalid_argument otherwise.
double energy_window(const Trajectory& traj, double T);

ConvergenceReport convergence_report(const Trajectory& traj,
                                     const SelfSimilarProfile& p,
                                     int grid_points = 2001);

}  // namespace stefan

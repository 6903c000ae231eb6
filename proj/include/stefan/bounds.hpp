#pragma once

#include <vector>

// Time-independent lower and upper solutions that sandwich any admissible
// initial state.  The lower family
//
//   U_lambda(eta) = h~ * integral_eta^{b_lambda} exp(-lambda s^2/4) ds
//
// has its front b_lambda defined by (b/2) e^{lambda b^2/4} = h~ and becomes a
// stationary subsolution for lambda > 1.  The upper solution is the straight
// line W(eta) = (b_bar/2)(b_bar - eta) with b_bar large enough to dominate
// the data, its slope, and the boundary flux.

namespace stefan {

struct StationaryPerturbed {
    double lambda;    // perturbation exponent; > 1 for subsolution status
    double h_tilde;   // flux bound, <= h
    double b_lambda;  // front of the perturbed profile
};

struct UpperLinear {
    double b_bar;  // front; the profile is (b_bar/2)(b_bar - eta)
};

struct Knot {
    double x;
    double v;
};

// Piecewise-linear initial temperature on [0, b0]: positive at 0, zero at
// the front, nonnegative, with chord slopes bounded by M.
struct InitialData {
    std::vector<Knot> knots;
    double b0;
    double M;
};

// Throws std::invalid_argument naming the violated requirement.
void validate(const InitialData& init);

double initial_value(const InitialData& init, double x);

InitialData make_ramp(double height, double b0);

// Front of the perturbed profile: |(b/2) e^{lambda b^2/4} - h_tilde| <= tol.
// lambda = 0 gives 2*h_tilde exactly.  Throws std::domain_error for
// h_tilde <= 0 or lambda < 0.
double solve_b_lambda(double h_tilde, double lambda, double tol = 1e-12);

// U_lambda(eta); linear for lambda = 0, strictly convex for lambda > 0.
// Throws std::domain_error outside [0, b_lambda].
double perturbed_value(const StationaryPerturbed& s, double eta);

// Picks lambda (doubling from 2) so that the perturbed profile sits below
// the initial data: b_lambda < b0, b_lambda < u0(0)/M when M > 0, and
// U_lambda(0) < u0(0).  Throws std::invalid_argument if u0(0) <= 0.
StationaryPerturbed choose_lambda(const InitialData& init, double h);

// b_bar = max(b0, 2h, sqrt(2*M*b0)); the resulting line dominates the data.
UpperLinear build_upper(const InitialData& init, double h);

double upper_value(const UpperLinear& u, double eta);

}  // namespace stefan

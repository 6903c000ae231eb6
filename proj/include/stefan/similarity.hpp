#pragma once

// Self-similar profile of the one-phase melting problem with boundary flux
// h/sqrt(t+1).  In the similarity variable eta = x/sqrt(t+1) the profile is
//
//   U(eta) = h * integral_eta^omega exp(-s^2/4) ds,
//
// where the front omega is the unique positive root of (x/2) e^{x^2/4} = h.
// U is the steady state every admissible solution approaches.

namespace stefan {

struct SelfSimilarProfile {
    double h;      // flux amplitude
    double omega;  // front position in the similarity variable
};

// The map x -> (x/2) e^{x^2/4} whose inverse defines omega.
double front_to_flux(double x);

// Unique positive omega with |front_to_flux(omega) - h| <= tol * max(1, h).
// Throws std::domain_error for h <= 0.
double solve_omega(double h, double tol = 1e-12);

SelfSimilarProfile make_profile(double h, double tol = 1e-12);

// U(eta) in closed form, h*sqrt(pi)*(erf(omega/2) - erf(eta/2)).
// Throws std::domain_error outside [0, omega].
double profile_value(const SelfSimilarProfile& p, double eta);

// U'(eta) = -h * exp(-eta^2/4).  At eta = omega this equals -omega/2.
double profile_slope(const SelfSimilarProfile& p, double eta);

struct PhysicalSample {
    double value;
    double front;
};

// The profile in physical variables: front omega*sqrt(t+1), value
// U(x/sqrt(t+1)) inside the front and 0 beyond it.
PhysicalSample physical_self_similar(const SelfSimilarProfile& p, double x,
                                     double t);

}  // namespace stefan

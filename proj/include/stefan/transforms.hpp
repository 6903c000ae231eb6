#pragma once

#include <vector>

#include "stefan/solver.hpp"

// Change of variables between the physical problem on 0 < x < s(t) and the
// similarity problem on 0 < eta < b(tau):
//
//   tau = ln(t+1),  eta = x / sqrt(t+1),  b = s / sqrt(t+1),
//
// with the temperature carried over unchanged, W(eta, tau) = u(x, t).

namespace stefan {

struct PhysicalState {
    double t = 0.0;
    double s = 0.0;
    std::vector<double> positions;  // x_i in [0, s], increasing
    std::vector<double> samples;    // u at x_i; samples at s is 0
};

// Resamples onto the uniform xi grid with the same node count as the input.
// Throws std::invalid_argument for inconsistent inputs.
SimilarityState to_similarity(const PhysicalState& ps);

// Inverse map; nodes land on x_i = xi_i * s exactly, values carried over.
PhysicalState to_physical(const SimilarityState& ss);

}  // namespace stefan

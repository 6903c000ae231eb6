#pragma once

#include <string>
#include <vector>

#include "stefan/bounds.hpp"

// Plain-text run configuration: one key=value pair per line, '#' starts a
// comment, unknown keys are rejected with their line number.

namespace stefan {

enum class Scenario { self_similar, lower, upper, custom };

struct RunSpec {
    Scenario scenario = Scenario::self_similar;
    std::vector<Knot> knots;  // required for custom; optional seed for
                              // lower/upper (default: ramp 0.5*(1 - x))
    double h = 0.0;           // required, positive
    int N = 400;
    double dtau = 1e-4;
    double tau_end = 10.0;
    int stride = 100;
    std::string out;  // filled from the command line, not the config file
};

// Parses and validates.  Throws std::runtime_error with "line N: ..." for
// malformed input and std::invalid_argument naming the violated invariant.
RunSpec parse_config(const std::string& text);

// The initial data a spec describes: custom knots, or the default ramp.
InitialData spec_initial_data(const RunSpec& spec);

const char* scenario_name(Scenario s);

}  // namespace stefan

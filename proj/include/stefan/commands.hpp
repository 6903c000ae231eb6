#pragma once

#include <iosfwd>
#include <string>

#include "stefan/config.hpp"

// Command entry points behind the CLI.  Each returns a process exit code:
// 0 on success, 1 when certify finds violations.  Invalid inputs throw;
// the CLI maps exceptions to exit code 2.

namespace stefan {

// Writes eta,U samples to out_path and prints omega to `info`.
int cmd_profile(double h, int samples, const std::string& out_path,
                std::ostream& info);

// Runs the scenario and writes the trajectory CSV to spec.out.
int cmd_run(const RunSpec& spec);

// Runs the lower/generic/upper triple for the spec's initial data, checks
// ordering, monotonicity, boundedness and the energy budget, prints a
// report to `info`, and writes a violations CSV to spec.out.
int cmd_certify(const RunSpec& spec, std::ostream& info);

}  // namespace stefan

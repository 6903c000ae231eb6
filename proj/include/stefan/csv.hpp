#pragma once

#include <string>

// Deterministic number formatting for CSV output: shortest decimal that
// round-trips the exact double, so identical runs emit identical bytes.

namespace stefan::csv {

std::string format(double v);
std::string format(int v);
std::string format(long long v);

}  // namespace stefan::csv

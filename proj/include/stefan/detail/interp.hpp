#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace stefan::detail {

// Piecewise-linear evaluation over strictly increasing abscissae.
// Clamps to the end values outside [xs.front(), xs.back()].
inline double pw_linear(const std::vector<double>& xs,
                        const std::vector<double>& vs, double x) {
    if (x <= xs.front()) return vs.front();
    if (x >= xs.back()) return vs.back();
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const std::size_t j = static_cast<std::size_t>(it - xs.begin());
    const double x0 = xs[j - 1], x1 = xs[j];
    const double t = (x - x0) / (x1 - x0);
    return vs[j - 1] + t * (vs[j] - vs[j - 1]);
}

// Same, over the uniform grid x_i = i/N * length, i = 0..N.
inline double pw_linear_uniform(const std::vector<double>& vs, double length,
                                double x) {
    const std::size_t N = vs.size() - 1;
    if (x <= 0.0) return vs.front();
    if (x >= length) return vs.back();
    const double r = x / length * static_cast<double>(N);
    std::size_t j = static_cast<std::size_t>(r);
    if (j >= N) j = N - 1;
    const double t = r - static_cast<double>(j);
    return vs[j] + t * (vs[j + 1] - vs[j]);
}

}  // namespace stefan::detail

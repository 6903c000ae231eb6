#pragma once

#include <cmath>
#include <stdexcept>

namespace stefan::detail {

// Solves f(x) = target for a strictly increasing f on (0, inf) with f(0) <= target.
// Brackets by doubling, bisects until the interval is narrow, then polishes
// with Newton steps kept inside the bracket.  tol_resid is absolute on f.
template <class F, class DF>
double increasing_root(F f, DF df, double target, double tol_resid) {
    double lo = 0.0, hi = 1.0;
    int expand = 0;
    while (f(hi) < target) {
        lo = hi;
        hi *= 2.0;
        if (++expand > 1024)
            throw std::runtime_error("root bracketing failed to enclose target");
    }
    for (int it = 0; it < 200 && (hi - lo) > 1e-3 * (1.0 + hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < target ? lo : hi) = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 100; ++it) {
        const double r = f(x) - target;
        if (std::abs(r) <= tol_resid) return x;
        (r < 0.0 ? lo : hi) = x;
        const double d = df(x);
        double xn = x - r / d;
        if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
        if (xn == x) return x;
        x = xn;
    }
    if (std::abs(f(x) - target) <= tol_resid) return x;
    throw std::runtime_error("root refinement did not reach tolerance");
}

}  // namespace stefan::detail

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

// Data-parallel grid kernels with a serial reference path.
//
// Every kernel is deterministic: the parallel path performs the same
// floating-point operations in the same association as the serial one,
// so results are bitwise identical for either Exec value.  Reductions
// achieve this by working on fixed-size chunks whose partials are
// combined serially in index order, independent of the thread count.

namespace stefan::kernels {

enum class Exec { serial, parallel };

// Below this element count the parallel path falls through to the serial
// loop; OpenMP fork/join overhead dominates on small grids.
inline constexpr std::size_t parallel_grain = 4096;

inline constexpr std::size_t chunk_width = 1024;

template <class F>
void for_each_index(Exec exec, std::size_t n, F&& f) {
#ifdef _OPENMP
    if (exec == Exec::parallel && n >= parallel_grain) {
        const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < nn; ++i) f(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < n; ++i) f(i);
}

namespace detail {

inline std::size_t chunk_count(std::size_t n) {
    return (n + chunk_width - 1) / chunk_width;
}

// Serial in-order sum of one chunk. Shared by both exec paths so the
// rounding sequence cannot diverge between them.
inline double sum_chunk(const double* v, std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
}

}  // namespace detail

// Chunked summation: per-chunk partials, then an in-order combine.
// The chunk decomposition depends only on n, never on the thread count.
inline double chunked_sum(Exec exec, const double* v, std::size_t n) {
    if (n == 0) return 0.0;
    const std::size_t nc = detail::chunk_count(n);
    std::vector<double> partial(nc);
    for_each_index(exec, nc, [&](std::size_t c) {
        const std::size_t lo = c * chunk_width;
        const std::size_t hi = lo + chunk_width < n ? lo + chunk_width : n;
        partial[c] = detail::sum_chunk(v, lo, hi);
    });
    return detail::sum_chunk(partial.data(), 0, nc);
}

inline double chunked_sum(Exec exec, const std::vector<double>& v) {
    return chunked_sum(exec, v.data(), v.size());
}

// Exact max reduction (max is associative, so chunking changes nothing).
inline double grid_max(Exec exec, const double* v, std::size_t n) {
    const std::size_t nc = detail::chunk_count(n);
    std::vector<double> partial(nc);
    for_each_index(exec, nc, [&](std::size_t c) {
        const std::size_t lo = c * chunk_width;
        const std::size_t hi = lo + chunk_width < n ? lo + chunk_width : n;
        double m = v[lo];
        for (std::size_t i = lo + 1; i < hi; ++i)
            if (v[i] > m) m = v[i];
        partial[c] = m;
    });
    double m = partial[0];
    for (std::size_t c = 1; c < nc; ++c)
        if (partial[c] > m) m = partial[c];
    return m;
}

inline double grid_max(Exec exec, const std::vector<double>& v) {
    return grid_max(exec, v.data(), v.size());
}

// Argmax with a deterministic tie-break: the lowest index wins.
inline std::size_t grid_argmax(Exec exec, const double* v, std::size_t n) {
    const std::size_t nc = detail::chunk_count(n);
    std::vector<std::size_t> part_idx(nc);
    for_each_index(exec, nc, [&](std::size_t c) {
        const std::size_t lo = c * chunk_width;
        const std::size_t hi = lo + chunk_width < n ? lo + chunk_width : n;
        std::size_t best = lo;
        for (std::size_t i = lo + 1; i < hi; ++i)
            if (v[i] > v[best]) best = i;
        part_idx[c] = best;
    });
    std::size_t best = part_idx[0];
    for (std::size_t c = 1; c < nc; ++c) {
        const std::size_t j = part_idx[c];
        if (v[j] > v[best]) best = j;
    }
    return best;
}

inline std::size_t grid_argmax(Exec exec, const std::vector<double>& v) {
    return grid_argmax(exec, v.data(), v.size());
}

}  // namespace stefan::kernels

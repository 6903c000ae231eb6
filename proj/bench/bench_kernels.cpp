// Serial vs OpenMP timings for the grid kernels and the tridiagonal
// assembly they back.  Run with --benchmark_filter to narrow.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "stefan/kernels.hpp"

namespace {

using stefan::kernels::Exec;

std::vector<double> test_field(std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = std::sin(0.001 * static_cast<double>(i)) + 1.0;
    return v;
}

Exec exec_of(const benchmark::State& state) {
    return state.range(1) ? Exec::parallel : Exec::serial;
}

void BM_assembly(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const Exec exec = exec_of(state);
    const std::vector<double> v = test_field(n + 1);
    std::vector<double> lo(n), di(n), up(n), rhs(n);
    const double rd = 0.3, ra_scale = 0.02;
    for (auto _ : state) {
        stefan::kernels::for_each_index(exec, n - 1, [&](std::size_t k) {
            const std::size_t i = k + 1;
            const double ra = ra_scale * static_cast<double>(i);
            lo[i] = -0.5 * (rd - ra);
            di[i] = 1.0 + rd;
            up[i] = -0.5 * (rd + ra);
            rhs[i] = v[i] + 0.5 * (rd * (v[i + 1] - 2.0 * v[i] + v[i - 1]) +
                                   ra * (v[i + 1] - v[i - 1]));
        });
        benchmark::DoNotOptimize(rhs.data());
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(n));
}

void BM_chunked_sum(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const Exec exec = exec_of(state);
    const std::vector<double> v = test_field(n);
    for (auto _ : state) {
        double s = stefan::kernels::chunked_sum(exec, v);
        benchmark::DoNotOptimize(s);
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(n));
}

void BM_grid_max(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const Exec exec = exec_of(state);
    const std::vector<double> v = test_field(n);
    for (auto _ : state) {
        double m = stefan::kernels::grid_max(exec, v);
        benchmark::DoNotOptimize(m);
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(n));
}

void grid_args(benchmark::internal::Benchmark* b) {
    for (int serial_parallel = 0; serial_parallel <= 1; ++serial_parallel)
        for (int size : {401, 1 << 12, 1 << 16, 1 << 20})
            b->Args({size, serial_parallel});
}

BENCHMARK(BM_assembly)->Apply(grid_args);
BENCHMARK(BM_chunked_sum)->Apply(grid_args);
BENCHMARK(BM_grid_max)->Apply(grid_args);

}  // namespace

BENCHMARK_MAIN();

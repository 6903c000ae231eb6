#include "stefan/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

#include "stefan/detail/interp.hpp"
#include "stefan/kernels.hpp"

namespace stefan {

namespace {

constexpr kernels::Exec kExec = kernels::Exec::parallel;

double extended(const std::vector<double>& values, double b, double eta) {
    if (eta >= b) return 0.0;
    return detail::pw_linear_uniform(values, b, eta);
}

double zero_extended_profile(const SelfSimilarProfile& p, double eta) {
    return eta >= p.omega ? 0.0 : profile_value(p, eta);
}

// Worst positive excess of lo - hi over the common grid; also where.
struct GapMax {
    double excess;
    double eta;
};

GapMax worst_profile_gap(const std::vector<double>& lo_vals, double lo_b,
                         const std::vector<double>& hi_vals, double hi_b,
                         int grid_points) {
    const double top = std::fmax(lo_b, hi_b);
    const std::size_t n = static_cast<std::size_t>(grid_points);
    std::vector<double> gap(n);
    kernels::for_each_index(kExec, n, [&](std::size_t i) {
        const double eta =
            top * static_cast<double>(i) / static_cast<double>(n - 1);
        gap[i] = extended(lo_vals, lo_b, eta) - extended(hi_vals, hi_b, eta);
    });
    const std::size_t j = kernels::grid_argmax(kExec, gap);
    return {gap[j], top * static_cast<double>(j) / static_cast<double>(n - 1)};
}

}  // namespace

double extend_by_zero(const SimilarityState& state, double eta) {
    if (!(eta >= 0.0))
        throw std::domain_error("extend_by_zero: eta must be nonnegative");
    return extended(state.values, state.b, eta);
}

double sup_distance(const SimilarityState& state, const SelfSimilarProfile& p,
                    int grid_points) {
    if (grid_points < 2)
        throw std::domain_error("sup_distance: need at least 2 grid points");
    const double top = std::fmax(state.b, p.omega);
    const std::size_t n = static_cast<std::size_t>(grid_points);
    std::vector<double> gap(n);
    kernels::for_each_index(kExec, n, [&](std::size_t i) {
        const double eta =
            top * static_cast<double>(i) / static_cast<double>(n - 1);
        gap[i] = std::abs(extended(state.values, state.b, eta) -
                          zero_extended_profile(p, eta));
    });
    return kernels::grid_max(kExec, gap);
}

std::vector<Violation> check_ordering(const Trajectory& lower,
                                      const Trajectory& upper, double tol,
                                      int grid_points) {
    if (lower.samples.size() != upper.samples.size())
        throw std::invalid_argument("check_ordering: sample counts differ");
    std::vector<Violation> out;
    for (std::size_t k = 0; k < lower.samples.size(); ++k) {
        const auto& lo = lower.samples[k];
        const auto& hi = upper.samples[k];
        if (lo.tau != hi.tau)
            throw std::invalid_argument("check_ordering: sample times differ");
        if (lo.b > hi.b + tol)
            out.push_back({lo.tau, "front", 0.0, lo.b - hi.b - tol});
        const GapMax g = worst_profile_gap(lo.values, lo.b, hi.values, hi.b,
                                           grid_points);
        if (g.excess > tol)
            out.push_back({lo.tau, "profile", g.eta, g.excess - tol});
    }
    return out;
}

std::vector<Violation> check_monotone_in_time(const Trajectory& traj,
                                              Direction direction, double tol,
                                              int grid_points) {
    if (traj.samples.size() < 2)
        throw std::invalid_argument("check_monotone_in_time: need at least 2 samples");
    std::vector<Violation> out;
    for (std::size_t k = 1; k < traj.samples.size(); ++k) {
        // nondecreasing: previous sample must sit below the next one
        const auto& lo = direction == Direction::nondecreasing
                             ? traj.samples[k - 1]
                             : traj.samples[k];
        const auto& hi = direction == Direction::nondecreasing
                             ? traj.samples[k]
                             : traj.samples[k - 1];
        const double tau = traj.samples[k].tau;
        if (lo.b > hi.b + tol)
            out.push_back({tau, "front", 0.0, lo.b - hi.b - tol});
        const GapMax g = worst_profile_gap(lo.values, lo.b, hi.values, hi.b,
                                           grid_points);
        if (g.excess > tol)
            out.push_back({tau, "profile", g.eta, g.excess - tol});
    }
    return out;
}

namespace {

// Inner integral of W_eta^2 over [0, b]: centered gradient inside, second
// order one-sided at both ends, trapezoid weights.
double gradient_energy(const std::vector<double>& v, double b) {
    const std::size_t N = v.size() - 1;
    const double dxi = 1.0 / static_cast<double>(N);
    const double scale = 1.0 / (2.0 * dxi * b);
    std::vector<double> w2(N + 1);
    kernels::for_each_index(kExec, N + 1, [&](std::size_t i) {
        double g;
        if (i == 0)
            g = (-3.0 * v[0] + 4.0 * v[1] - v[2]) * scale;
        else if (i == N)
            g = (3.0 * v[N] - 4.0 * v[N - 1] + v[N - 2]) * scale;
        else
            g = (v[i + 1] - v[i - 1]) * scale;
        double weight = (i == 0 || i == N) ? 0.5 : 1.0;
        w2[i] = weight * g * g;
    });
    return kernels::chunked_sum(kExec, w2) * dxi * b;  // deta = b * dxi
}

}  // namespace

double energy_window(const Trajectory& traj, double T) {
    if (!(T >= 0.0))
        throw std::invalid_argument("energy_window: T must be nonnegative");
    std::size_t first = traj.samples.size(), last = 0;
    for (std::size_t k = 0; k < traj.samples.size(); ++k) {
        const double tau = traj.samples[k].tau;
        if (tau >= T - 1e-12 && tau <= T + 1.0 + 1e-12) {
            if (first == traj.samples.size()) first = k;
            last = k;
        }
    }
    if (first >= last)
        throw std::invalid_argument("energy_window: window not covered by samples");
    if (std::abs(traj.samples[first].tau - T) > 1e-9 ||
        std::abs(traj.samples[last].tau - (T + 1.0)) > 1e-9)
        throw std::invalid_argument("energy_window: window endpoints not sampled");

    double acc = 0.0;
    double prev_tau = traj.samples[first].tau;
    double prev_inner = gradient_energy(traj.samples[first].values,
                                        traj.samples[first].b);
    for (std::size_t k = first + 1; k <= last; ++k) {
        const double tau = traj.samples[k].tau;
        const double inner = gradient_energy(traj.samples[k].values,
                                             traj.samples[k].b);
        acc += 0.5 * (tau - prev_tau) * (prev_inner + inner);
        prev_tau = tau;
        prev_inner = inner;
    }
    return acc;
}

ConvergenceReport convergence_report(const Trajectory& traj,
                                     const SelfSimilarProfile& p,
                                     int grid_points) {
    ConvergenceReport rep;
    rep.rows.reserve(traj.samples.size());
    for (const auto& s : traj.samples) {
        SimilarityState st{s.tau, s.b, s.values};
        rep.rows.push_back(
            {s.tau, std::abs(s.b - p.omega), sup_distance(st, p, grid_points)});
    }
    if (!traj.samples.empty()) {
        const auto sampled_at = [&](double tau) {
            for (const auto& s : traj.samples)
                if (std::abs(s.tau - tau) <= 1e-9) return true;
            return false;
        };
        const double tau_last = traj.samples.back().tau;
        for (double T = 0.0; T + 1.0 <= tau_last + 1e-9; T += 1.0) {
            if (sampled_at(T) && sampled_at(T + 1.0))
                rep.energy_windows.push_back(energy_window(traj, T));
        }
    }
    return rep;
}

}  // namespace stefan

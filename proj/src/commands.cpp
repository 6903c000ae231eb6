#include "stefan/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "stefan/csv.hpp"
#include "stefan/diagnostics.hpp"
#include "stefan/similarity.hpp"
#include "stefan/solver.hpp"

namespace stefan {

namespace {

std::ofstream open_out(const std::string& path) {
    if (path.empty()) throw std::invalid_argument("output path is required");
    std::ofstream f(path, std::ios::binary);  // binary: LF endings everywhere
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    return f;
}

SimilarityState sample_onto_grid(double b, int N, const auto& f) {
    SimilarityState s;
    s.tau = 0.0;
    s.b = b;
    s.values.resize(static_cast<std::size_t>(N) + 1);
    for (int i = 0; i <= N; ++i) {
        const double eta = b * static_cast<double>(i) / static_cast<double>(N);
        s.values[static_cast<std::size_t>(i)] = f(eta);
    }
    return s;
}

SimilarityState scenario_state(const RunSpec& spec) {
    switch (spec.scenario) {
        case Scenario::self_similar: {
            const SelfSimilarProfile p = make_profile(spec.h);
            return sample_onto_grid(p.omega, spec.N,
                                    [&](double eta) { return profile_value(p, eta); });
        }
        case Scenario::lower: {
            const StationaryPerturbed s =
                choose_lambda(spec_initial_data(spec), spec.h);
            return sample_onto_grid(s.b_lambda, spec.N,
                                    [&](double eta) { return perturbed_value(s, eta); });
        }
        case Scenario::upper: {
            const UpperLinear u = build_upper(spec_initial_data(spec), spec.h);
            return sample_onto_grid(u.b_bar, spec.N,
                                    [&](double eta) { return upper_value(u, eta); });
        }
        case Scenario::custom:
            return resample_initial(spec_initial_data(spec), spec.N);
    }
    throw std::logic_error("unreachable scenario");
}

SolverConfig solver_config(const RunSpec& spec) {
    SolverConfig cfg;
    cfg.N = spec.N;
    cfg.dtau = spec.dtau;
    cfg.h = spec.h;
    return cfg;
}

}  // namespace

int cmd_profile(double h, int samples, const std::string& out_path,
                std::ostream& info) {
    if (samples < 1) throw std::invalid_argument("samples must be positive");
    const SelfSimilarProfile p = make_profile(h);

    auto f = open_out(out_path);
    f << "eta,U\n";
    for (int i = 0; i <= samples; ++i) {
        const double eta =
            p.omega * static_cast<double>(i) / static_cast<double>(samples);
        f << csv::format(eta) << ',' << csv::format(profile_value(p, eta))
          << '\n';
    }

    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", p.omega);
    info << "omega = " << buf << "\n";
    return 0;
}

int cmd_run(const RunSpec& spec) {
    const Trajectory traj =
        run(scenario_state(spec), solver_config(spec), spec.tau_end, spec.stride);
    const SelfSimilarProfile p = make_profile(spec.h);
    const ConvergenceReport rep = convergence_report(traj, p);

    auto f = open_out(spec.out);
    f << "tau,b,b_gap,profile_gap,flux0,fluxb\n";
    for (std::size_t k = 0; k < traj.samples.size(); ++k) {
        const auto& s = traj.samples[k];
        const auto& r = rep.rows[k];
        f << csv::format(s.tau) << ',' << csv::format(s.b) << ','
          << csv::format(r.b_gap) << ',' << csv::format(r.profile_gap) << ','
          << csv::format(s.flux0) << ',' << csv::format(s.fluxb) << '\n';
    }
    return 0;
}

namespace {

struct NamedViolations {
    std::string check;
    std::vector<Violation> list;
};

// Values must stay inside [0, b_bar^2/2]; returns violations beyond tol.
std::vector<Violation> check_bounded(const Trajectory& traj, double cap,
                                     double tol) {
    std::vector<Violation> out;
    for (const auto& s : traj.samples) {
        const std::size_t N = s.values.size() - 1;
        double worst_low = 0.0, worst_high = 0.0;
        double eta_low = 0.0, eta_high = 0.0;
        for (std::size_t i = 0; i <= N; ++i) {
            const double eta =
                s.b * static_cast<double>(i) / static_cast<double>(N);
            if (-s.values[i] > worst_low) {
                worst_low = -s.values[i];
                eta_low = eta;
            }
            if (s.values[i] - cap > worst_high) {
                worst_high = s.values[i] - cap;
                eta_high = eta;
            }
        }
        if (worst_low > tol)
            out.push_back({s.tau, "profile", eta_low, worst_low - tol});
        if (worst_high > tol)
            out.push_back({s.tau, "profile", eta_high, worst_high - tol});
    }
    return out;
}

void report_check(std::ostream& info, const std::string& name,
                  const std::vector<Violation>& v) {
    info << name << ": " << (v.empty() ? "OK" : "FAIL");
    if (!v.empty()) info << " (" << v.size() << " violations)";
    info << "\n";
}

}  // namespace

int cmd_certify(const RunSpec& spec, std::ostream& info) {
    const double tol = 1e-8;
    const InitialData init = spec_initial_data(spec);
    validate(init);
    const SolverConfig cfg = solver_config(spec);

    RunSpec lo_spec = spec;
    lo_spec.scenario = Scenario::lower;
    RunSpec up_spec = spec;
    up_spec.scenario = Scenario::upper;

    const SimilarityState lo_state = scenario_state(lo_spec);
    const SimilarityState up_state = scenario_state(up_spec);
    const SimilarityState mid_state = resample_initial(init, spec.N);

    // Independent trajectories, safe to advance concurrently.
    auto run_one = [&](const SimilarityState& s) {
        return run(s, cfg, spec.tau_end, spec.stride);
    };
    auto fut_lo = std::async(std::launch::async, run_one, lo_state);
    auto fut_up = std::async(std::launch::async, run_one, up_state);
    const Trajectory mid = run_one(mid_state);
    const Trajectory lo = fut_lo.get();
    const Trajectory up = fut_up.get();

    const SelfSimilarProfile p = make_profile(spec.h);
    const double b_bar = up_state.b;
    const double cap = 0.5 * b_bar * b_bar;
    const double m1 = spec.h * 0.5 * b_bar * b_bar +
                      std::pow(b_bar, 5) / 8.0;

    std::vector<NamedViolations> checks;
    checks.push_back({"ordering lower<=generic", check_ordering(lo, mid, tol)});
    checks.push_back({"ordering generic<=upper", check_ordering(mid, up, tol)});
    checks.push_back({"ordering lower<=upper", check_ordering(lo, up, tol)});
    checks.push_back({"monotone lower nondecreasing",
                      check_monotone_in_time(lo, Direction::nondecreasing, tol)});
    checks.push_back({"monotone upper nonincreasing",
                      check_monotone_in_time(up, Direction::nonincreasing, tol)});
    checks.push_back({"bounded lower", check_bounded(lo, cap, tol)});
    checks.push_back({"bounded generic", check_bounded(mid, cap, tol)});
    checks.push_back({"bounded upper", check_bounded(up, cap, tol)});

    // Unit-window energy stays under the budget for every run.
    double max_window = 0.0;
    {
        std::vector<Violation> over;
        const Trajectory* runs[] = {&lo, &mid, &up};
        const char* names[] = {"lower", "generic", "upper"};
        for (int r = 0; r < 3; ++r) {
            const ConvergenceReport rep = convergence_report(*runs[r], p);
            for (std::size_t w = 0; w < rep.energy_windows.size(); ++w) {
                const double e = rep.energy_windows[w];
                max_window = std::fmax(max_window, e);
                if (e > m1)
                    over.push_back({static_cast<double>(w),
                                    std::string("energy ") + names[r], 0.0,
                                    e - m1});
            }
        }
        checks.push_back({"energy window <= budget", std::move(over)});
    }

    info << "certify: h=" << csv::format(spec.h) << " N=" << csv::format(spec.N)
         << " dtau=" << csv::format(spec.dtau)
         << " tau_end=" << csv::format(spec.tau_end)
         << " stride=" << csv::format(spec.stride) << "\n";
    info << "fronts at tau_end: lower " << csv::format(lo.samples.back().b)
         << " generic " << csv::format(mid.samples.back().b) << " upper "
         << csv::format(up.samples.back().b) << " (omega "
         << csv::format(p.omega) << ")\n";
    info << "energy: max window " << csv::format(max_window) << " budget "
         << csv::format(m1) << "\n";

    std::size_t total = 0;
    for (const auto& c : checks) {
        report_check(info, c.check, c.list);
        total += c.list.size();
    }

    auto f = open_out(spec.out);
    f << "check,tau,kind,eta,excess\n";
    for (const auto& c : checks) {
        for (const auto& v : c.list) {
            f << c.check << ',' << csv::format(v.tau) << ',' << v.kind << ',';
            if (v.kind == "profile") f << csv::format(v.eta);
            f << ',' << csv::format(v.excess) << '\n';
        }
    }

    info << "verdict: " << (total == 0 ? "PASS" : "FAIL") << " ("
         << total << " violations)\n";
    return total == 0 ? 0 : 1;
}

}  // namespace stefan

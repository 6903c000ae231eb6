#include "stefan/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "stefan/detail/interp.hpp"
#include "stefan/detail/root.hpp"

namespace stefan {

void validate(const InitialData& init) {
    if (init.knots.size() < 2)
        throw std::invalid_argument("initial data needs at least two knots");
    if (init.knots.front().x != 0.0)
        throw std::invalid_argument("initial data must start at x = 0");
    if (!(init.knots.front().v > 0.0))
        throw std::invalid_argument("initial value at x = 0 must be positive");
    for (std::size_t i = 1; i < init.knots.size(); ++i) {
        if (!(init.knots[i].x > init.knots[i - 1].x))
            throw std::invalid_argument("knot positions must be strictly increasing");
    }
    if (init.knots.back().x != init.b0)
        throw std::invalid_argument("last knot must sit at the front b0");
    if (init.knots.back().v != 0.0)
        throw std::invalid_argument("initial value at the front must be zero");
    if (!(init.b0 > 0.0)) throw std::invalid_argument("b0 must be positive");
    if (!(init.M >= 0.0)) throw std::invalid_argument("M must be nonnegative");
    for (std::size_t i = 0; i < init.knots.size(); ++i) {
        if (!(init.knots[i].v >= 0.0))
            throw std::invalid_argument("initial values must be nonnegative");
        if (i == 0) continue;
        const double slope = (init.knots[i].v - init.knots[i - 1].v) /
                             (init.knots[i].x - init.knots[i - 1].x);
        if (std::abs(slope) > init.M * (1.0 + 1e-14))
            throw std::invalid_argument("chord slope exceeds the stated bound M");
    }
}

double initial_value(const InitialData& init, double x) {
    std::vector<double> xs(init.knots.size()), vs(init.knots.size());
    for (std::size_t i = 0; i < init.knots.size(); ++i) {
        xs[i] = init.knots[i].x;
        vs[i] = init.knots[i].v;
    }
    return detail::pw_linear(xs, vs, x);
}

InitialData make_ramp(double height, double b0) {
    InitialData d;
    d.knots = {{0.0, height}, {b0, 0.0}};
    d.b0 = b0;
    d.M = height / b0;
    return d;
}

double solve_b_lambda(double h_tilde, double lambda, double tol) {
    if (!(h_tilde > 0.0))
        throw std::domain_error("solve_b_lambda: h_tilde must be positive");
    if (!(lambda >= 0.0))
        throw std::domain_error("solve_b_lambda: lambda must be nonnegative");
    if (lambda == 0.0) return 2.0 * h_tilde;
    const auto f = [lambda](double x) {
        return 0.5 * x * std::exp(0.25 * lambda * x * x);
    };
    const auto df = [lambda](double x) {
        return std::exp(0.25 * lambda * x * x) * (2.0 + lambda * x * x) * 0.25;
    };
    return detail::increasing_root(f, df, h_tilde, tol);
}

double perturbed_value(const StationaryPerturbed& s, double eta) {
    if (!(eta >= 0.0 && eta <= s.b_lambda))
        throw std::domain_error("perturbed_value: eta outside [0, b_lambda]");
    if (s.lambda == 0.0) return s.h_tilde * (s.b_lambda - eta);
    const double sl = std::sqrt(s.lambda);
    return s.h_tilde * std::sqrt(std::numbers::pi / s.lambda) *
           (std::erf(0.5 * sl * s.b_lambda) - std::erf(0.5 * sl * eta));
}

StationaryPerturbed choose_lambda(const InitialData& init, double h) {
    validate(init);
    if (!(h > 0.0)) throw std::domain_error("choose_lambda: h must be positive");
    const double u00 = init.knots.front().v;
    double cap = init.b0;
    if (init.M > 0.0) cap = std::fmin(cap, u00 / init.M);
    double lambda = 2.0;
    for (int it = 0; it < 200; ++it, lambda *= 2.0) {
        StationaryPerturbed s{lambda, h, solve_b_lambda(h, lambda)};
        if (s.b_lambda < cap && perturbed_value(s, 0.0) < u00) return s;
    }
    throw std::runtime_error("choose_lambda: no admissible lambda found");
}

UpperLinear build_upper(const InitialData& init, double h) {
    validate(init);
    if (!(h > 0.0)) throw std::domain_error("build_upper: h must be positive");
    const double b = std::fmax(init.b0,
                               std::fmax(2.0 * h, std::sqrt(2.0 * init.M * init.b0)));
    return {b};
}

double upper_value(const UpperLinear& u, double eta) {
    if (!(eta >= 0.0 && eta <= u.b_bar))
        throw std::domain_error("upper_value: eta outside [0, b_bar]");
    return 0.5 * u.b_bar * (u.b_bar - eta);
}

}  // namespace stefan

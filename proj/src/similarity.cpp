#include "stefan/similarity.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "stefan/detail/root.hpp"

namespace stefan {

double front_to_flux(double x) { return 0.5 * x * std::exp(0.25 * x * x); }

double solve_omega(double h, double tol) {
    if (!(h > 0.0)) throw std::domain_error("solve_omega: h must be positive");
    if (!(tol > 0.0)) throw std::domain_error("solve_omega: tol must be positive");
    const auto df = [](double x) {
        return std::exp(0.25 * x * x) * (2.0 + x * x) * 0.25;
    };
    return detail::increasing_root(front_to_flux, df, h, tol * std::fmax(1.0, h));
}

SelfSimilarProfile make_profile(double h, double tol) {
    return {h, solve_omega(h, tol)};
}

static void require_in_front(double eta, double front, const char* who) {
    if (!(eta >= 0.0 && eta <= front))
        throw std::domain_error(std::string(who) + ": eta outside [0, front]");
}

double profile_value(const SelfSimilarProfile& p, double eta) {
    require_in_front(eta, p.omega, "profile_value");
    const double spi = std::sqrt(std::numbers::pi);
    return p.h * spi * (std::erf(0.5 * p.omega) - std::erf(0.5 * eta));
}

double profile_slope(const SelfSimilarProfile& p, double eta) {
    require_in_front(eta, p.omega, "profile_slope");
    return -p.h * std::exp(-0.25 * eta * eta);
}

PhysicalSample physical_self_similar(const SelfSimilarProfile& p, double x,
                                     double t) {
    if (!(x >= 0.0) || !(t >= 0.0))
        throw std::domain_error("physical_self_similar: x and t must be nonnegative");
    const double r = std::sqrt(t + 1.0);
    const double front = p.omega * r;
    const double eta = x / r;
    const double value = eta <= p.omega ? profile_value(p, eta) : 0.0;
    return {value, front};
}

}  // namespace stefan

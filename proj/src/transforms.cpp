#include "stefan/transforms.hpp"

#include <cmath>
#include <stdexcept>

#include "stefan/detail/interp.hpp"

namespace stefan {

SimilarityState to_similarity(const PhysicalState& ps) {
    if (!(ps.t >= 0.0)) throw std::invalid_argument("to_similarity: t must be nonnegative");
    if (!(ps.s > 0.0)) throw std::invalid_argument("to_similarity: s must be positive");
    if (ps.positions.size() != ps.samples.size() || ps.positions.size() < 2)
        throw std::invalid_argument("to_similarity: positions and samples must match");
    const double r = std::sqrt(ps.t + 1.0);
    SimilarityState ss;
    ss.tau = std::log1p(ps.t);
    ss.b = ps.s / r;
    const std::size_t N = ps.positions.size() - 1;
    ss.values.resize(N + 1);
    for (std::size_t i = 0; i <= N; ++i) {
        // node eta_i = xi_i * b, physical position x = eta_i * sqrt(t+1)
        const double x = static_cast<double>(i) / static_cast<double>(N) * ss.b * r;
        ss.values[i] = detail::pw_linear(ps.positions, ps.samples, x);
    }
    ss.values.back() = 0.0;
    return ss;
}

PhysicalState to_physical(const SimilarityState& ss) {
    if (!(ss.b > 0.0)) throw std::invalid_argument("to_physical: b must be positive");
    if (ss.values.size() < 2)
        throw std::invalid_argument("to_physical: state has no grid");
    const double t = std::expm1(ss.tau);
    const double r = std::sqrt(t + 1.0);
    PhysicalState ps;
    ps.t = t;
    ps.s = ss.b * r;
    const std::size_t N = ss.values.size() - 1;
    ps.positions.resize(N + 1);
    ps.samples = ss.values;
    for (std::size_t i = 0; i <= N; ++i)
        ps.positions[i] = static_cast<double>(i) / static_cast<double>(N) * ss.b * r;
    return ps;
}

}  // namespace stefan

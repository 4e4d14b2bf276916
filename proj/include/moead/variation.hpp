#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "moead/types.hpp"

namespace moead {

struct SbxParams {
    double probability = 1.0;
    double distribution_index = 20.0;
};

struct MutationParams {
    double probability = -1.0;  // per variable; negative means 1/D
    double distribution_index = 20.0;
};

/// Simulated binary crossover producing two children from two parents.
///
/// Draw order per call: one crossover coin, then per variable a spread
/// draw, a sign coin and an exchange coin.
template <typename Rng>
std::pair<Vector, Vector> sbx(const Vector& p1, const Vector& p2, const SbxParams& params, Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const bool cross = unit(rng) <= params.probability;
    const double exponent = 1.0 / (params.distribution_index + 1.0);
    Vector beta(p1.size());
    for (Eigen::Index d = 0; d < p1.size(); ++d) {
        const double mu = unit(rng);
        double b = mu <= 0.5 ? std::pow(2.0 * mu, exponent) : std::pow(2.0 - 2.0 * mu, -exponent);
        if (unit(rng) < 0.5) b = -b;
        if (unit(rng) < 0.5) b = 1.0;
        beta(d) = cross ? b : 1.0;
    }
    const Vector mid = 0.5 * (p1 + p2);
    const Vector half = 0.5 * beta.cwiseProduct(p1 - p2);
    return {mid + half, mid - half};
}

/// Bounded polynomial mutation. `x` is clamped into [lower, upper] first.
/// Draw order: per variable a site coin, then (for mutated sites) a
/// perturbation draw.
template <typename Rng>
void polynomial_mutation(Vector& x, const Vector& lower, const Vector& upper, const MutationParams& params,
                         Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double rate = params.probability < 0.0 ? 1.0 / static_cast<double>(x.size()) : params.probability;
    const double eta = params.distribution_index;
    x = x.cwiseMax(lower).cwiseMin(upper);
    for (Eigen::Index d = 0; d < x.size(); ++d) {
        if (!(unit(rng) < rate)) continue;
        const double mu = unit(rng);
        const double span = upper(d) - lower(d);
        if (span <= 0.0) continue;
        if (mu <= 0.5) {
            const double delta = (x(d) - lower(d)) / span;
            const double v = 2.0 * mu + (1.0 - 2.0 * mu) * std::pow(1.0 - delta, eta + 1.0);
            x(d) += span * (std::pow(v, 1.0 / (eta + 1.0)) - 1.0);
        } else {
            const double delta = (upper(d) - x(d)) / span;
            const double v = 2.0 * (1.0 - mu) + 2.0 * (mu - 0.5) * std::pow(1.0 - delta, eta + 1.0);
            x(d) += span * (1.0 - std::pow(v, 1.0 / (eta + 1.0)));
        }
    }
    x = x.cwiseMax(lower).cwiseMin(upper);
}

}  // namespace moead

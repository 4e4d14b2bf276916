#include "moead/subset.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace moead {

Points dss_normalize(const Points& points) {
    const Vector lo = points.rowwise().minCoeff();
    const Vector hi = points.rowwise().maxCoeff();
    Vector range = hi - lo;
    for (Eigen::Index i = 0; i < range.size(); ++i)
        if (!(range(i) > 0.0)) range(i) = 1.0;
    return (points.colwise() - lo).array().colwise() / range.array();
}

std::vector<DssStep> dss_select_trace(const Points& points, std::size_t target_size) {
    const Eigen::Index n = points.cols();
    if (n == 0) throw std::invalid_argument("dss_select: empty source");
    if (target_size == 0) throw std::invalid_argument("dss_select: target size must be positive");
    const auto k = static_cast<Eigen::Index>(std::min<std::size_t>(target_size, static_cast<std::size_t>(n)));
    const Points z = dss_normalize(points);
    const Eigen::Index M = z.rows();

    std::vector<DssStep> steps;
    std::vector<char> taken(static_cast<std::size_t>(n), 0);
    Vector min_dist = Vector::Constant(n, std::numeric_limits<double>::infinity());
    auto take = [&](Eigen::Index idx, double d) {
        taken[idx] = 1;
        steps.push_back({idx, d});
        min_dist = min_dist.cwiseMin((z.colwise() - z.col(idx)).colwise().norm().transpose());
    };

    for (Eigen::Index obj = 0; obj < M && static_cast<Eigen::Index>(steps.size()) < k; ++obj) {
        Eigen::Index best = -1;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (taken[j]) continue;
            if (best < 0 || z(obj, j) < z(obj, best)) best = j;
        }
        take(best, std::numeric_limits<double>::infinity());
    }
    while (static_cast<Eigen::Index>(steps.size()) < k) {
        Eigen::Index best = -1;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (taken[j]) continue;
            if (best < 0 || min_dist(j) > min_dist(best)) best = j;
        }
        take(best, min_dist(best));
    }
    return steps;
}

std::vector<Eigen::Index> dss_select_indices(const Points& points, std::size_t target_size) {
    std::vector<Eigen::Index> out;
    for (const auto& step : dss_select_trace(points, target_size)) out.push_back(step.chosen);
    return out;
}

SolutionSet dss_select(const SelectionRequest& request) {
    if (request.source == nullptr || request.source->members.empty())
        throw std::invalid_argument("dss_select: empty source");
    const auto& members = request.source->members;
    auto chosen = dss_select_indices(objectives_of(members), request.target_size);
    std::sort(chosen.begin(), chosen.end());
    SolutionSet out;
    out.reserve(chosen.size());
    for (auto idx : chosen) out.push_back(members[static_cast<std::size_t>(idx)]);
    return out;
}

SolutionSet result_set(Framework framework, const RunResult& result, std::size_t selection_size) {
    if (framework == Framework::FinalPopulation) return result.population;
    return dss_select({&result.archive, selection_size});
}

}  // namespace moead

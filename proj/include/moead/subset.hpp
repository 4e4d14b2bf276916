#pragma once

#include <vector>

#include "moead/archive.hpp"
#include "moead/moead.hpp"
#include "moead/types.hpp"

namespace moead {

/// Distance-based subset selection of `target_size` points (columns).
///
/// Objectives are min-max normalised over `points` (constant objectives map
/// to 0). The selection is seeded with the minimiser of each objective in
/// index order, then grown greedily with the point whose minimum Euclidean
/// distance to the selected set is largest. Ties go to the lower index.
/// Returns selected column indices in selection order.
std::vector<Eigen::Index> dss_select_indices(const Points& points, std::size_t target_size);

/// One greedy step's record, exposed for verification.
struct DssStep {
    Eigen::Index chosen;
    double min_distance;  // to the selected set before this step; +inf for seeds
};

std::vector<DssStep> dss_select_trace(const Points& points, std::size_t target_size);

/// Min-max normalised copy of `points` as used by the selector.
Points dss_normalize(const Points& points);

struct SelectionRequest {
    const ArchiveSnapshot* source = nullptr;
    std::size_t target_size = 91;
};

/// Members chosen by DSS, in archive order. Throws std::invalid_argument for
/// an empty source or zero target.
SolutionSet dss_select(const SelectionRequest& request);

/// Result set of a run under `framework`: the final population, or the DSS
/// selection of `selection_size` archive members.
SolutionSet result_set(Framework framework, const RunResult& result, std::size_t selection_size);

}  // namespace moead

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "moead/pareto.hpp"
#include "moead/types.hpp"

namespace moead {

enum class ReferenceProvenance { FrontFile, DynamicUnion };

struct ReferenceSet {
    Points points;
    ReferenceProvenance provenance = ReferenceProvenance::FrontFile;
};

/// Inverted generational distance: mean over reference points of the
/// Euclidean distance to the nearest point of `result` (points as columns).
template <typename DerivedA, typename DerivedR>
double igd(const Eigen::MatrixBase<DerivedA>& result, const Eigen::MatrixBase<DerivedR>& reference) {
    if (result.cols() == 0 || reference.cols() == 0) throw std::invalid_argument("igd: empty point set");
    if (result.rows() != reference.rows()) throw std::invalid_argument("igd: dimension mismatch");
    double total = 0.0;
    for (Eigen::Index r = 0; r < reference.cols(); ++r) {
        total += std::sqrt((result.colwise() - reference.col(r)).colwise().squaredNorm().minCoeff());
    }
    return total / static_cast<double>(reference.cols());
}

template <typename DerivedA>
double igd(const Eigen::MatrixBase<DerivedA>& result, const ReferenceSet& reference) {
    return igd(result, reference.points);
}

/// Non-dominated, duplicate-free union of the objective vectors of `sets`.
/// Throws std::invalid_argument when every set is empty.
ReferenceSet build_dynamic_reference(const std::vector<Points>& sets);

}  // namespace moead

#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace moead {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Point sets are stored one point per column (M x n).
template <typename Scalar>
using PointsX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vector = VectorX<double>;
using Points = PointsX<double>;

/// A decision vector paired with its raw objective vector.
struct Solution {
    Vector x;
    Vector f;
    std::size_t eval_index = 0;
};

using SolutionSet = std::vector<Solution>;

/// Stacks the objective vectors of `set` as the columns of an M x n matrix.
Points objectives_of(const SolutionSet& set);

}  // namespace moead

#pragma once

#include <algorithm>
#include <iterator>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "moead/types.hpp"

namespace moead {

/// Pareto dominance for minimisation: a is no worse everywhere and strictly
/// better somewhere.
template <typename DerivedA, typename DerivedB>
bool dominates(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dominates: length mismatch");
    bool strictly = false;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a(i) > b(i)) return false;
        if (a(i) < b(i)) strictly = true;
    }
    return strictly;
}

/// a <= b componentwise (covers equality).
template <typename DerivedA, typename DerivedB>
bool weakly_dominates(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("weakly_dominates: length mismatch");
    return (a.array() <= b.array()).all();
}

/// Column indices of the non-dominated, duplicate-free subset of `points`,
/// in lexicographic order of the kept points. Among equal points the lowest
/// column index survives.
template <typename Derived>
std::vector<Eigen::Index> nondominated_indices(const Eigen::MatrixBase<Derived>& points) {
    const Eigen::Index n = points.cols();
    const Eigen::Index m = points.rows();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        for (Eigen::Index r = 0; r < m; ++r) {
            if (points(r, a) < points(r, b)) return true;
            if (points(r, a) > points(r, b)) return false;
        }
        return false;
    });
    // In lexicographic order no later point can dominate an earlier one, so a
    // single pass against the kept prefix suffices.
    std::vector<Eigen::Index> kept;
    if (m == 3) {
        // Staircase of kept (f2, f3) pairs: f3 strictly falls as f2 rises.
        // An earlier point has f1 <= ours, so 2-D coverage is enough.
        using Scalar = typename Derived::Scalar;
        std::map<Scalar, Scalar> stairs;
        for (Eigen::Index idx : order) {
            const Scalar b = points(1, idx);
            const Scalar c = points(2, idx);
            auto it = stairs.upper_bound(b);
            if (it != stairs.begin() && std::prev(it)->second <= c) continue;
            it = stairs.lower_bound(b);
            while (it != stairs.end() && it->second >= c) it = stairs.erase(it);
            stairs.emplace_hint(it, b, c);
            kept.push_back(idx);
        }
        return kept;
    }
    for (Eigen::Index idx : order) {
        bool covered = false;
        for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
            if (weakly_dominates(points.col(*it), points.col(idx))) {
                covered = true;
                break;
            }
        }
        if (!covered) kept.push_back(idx);
    }
    return kept;
}

template <typename Derived>
Points nondominated_filter(const Eigen::MatrixBase<Derived>& points) {
    const auto kept = nondominated_indices(points);
    Points out(points.rows(), static_cast<Eigen::Index>(kept.size()));
    for (std::size_t j = 0; j < kept.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = points.col(kept[j]);
    return out;
}

}  // namespace moead

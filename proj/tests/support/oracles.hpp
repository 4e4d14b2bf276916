#pragma once

// Brute-force reference implementations used as test oracles. Deliberately
// naive: quadratic loops over plain std::vector data, no shared code with
// the library beyond the Points type.

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "moead/types.hpp"

namespace oracle {

using Pt = std::vector<double>;

inline Pt col(const moead::Points& p, Eigen::Index j) {
    Pt out(static_cast<std::size_t>(p.rows()));
    for (Eigen::Index r = 0; r < p.rows(); ++r) out[static_cast<std::size_t>(r)] = p(r, j);
    return out;
}

inline std::vector<Pt> cols(const moead::Points& p) {
    std::vector<Pt> out;
    for (Eigen::Index j = 0; j < p.cols(); ++j) out.push_back(col(p, j));
    return out;
}

inline bool dominates(const Pt& a, const Pt& b) {
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strict = true;
    }
    return strict;
}

// Distinct objective vectors not dominated by any other input vector.
inline std::set<Pt> nondominated(const std::vector<Pt>& pts) {
    std::set<Pt> out;
    for (const auto& p : pts) {
        bool dominated = false;
        for (const auto& q : pts)
            if (dominates(q, p)) {
                dominated = true;
                break;
            }
        if (!dominated) out.insert(p);
    }
    return out;
}

inline double distance(const Pt& a, const Pt& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

inline double igd(const std::vector<Pt>& result, const std::vector<Pt>& ref) {
    double total = 0.0;
    for (const auto& r : ref) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& a : result) best = std::min(best, distance(r, a));
        total += best;
    }
    return total / static_cast<double>(ref.size());
}

// Mann-Whitney U of a by direct pair counting: #(a > b) + 0.5 #(a == b).
inline double u_by_pairs(const std::vector<double>& a, const std::vector<double>& b) {
    double u = 0.0;
    for (double x : a)
        for (double y : b) u += x > y ? 1.0 : (x == y ? 0.5 : 0.0);
    return u;
}

inline moead::Points random_points(std::mt19937_64& rng, int m, int n, double lo = 0.0, double hi = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    moead::Points p(m, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) p(i, j) = u(rng);
    return p;
}

// Points on the unit simplex-like surface with coarse values, so that
// duplicates and exact ties occur.
inline moead::Points random_grid_points(std::mt19937_64& rng, int m, int n, int levels) {
    std::uniform_int_distribution<int> u(0, levels);
    moead::Points p(m, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) p(i, j) = static_cast<double>(u(rng)) / levels;
    return p;
}

}  // namespace oracle

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "moead/subset.hpp"
#include "oracles.hpp"

using namespace moead;

namespace {

// Textbook DSS on plain vectors: normalise, seed with per-objective minima,
// then repeatedly take the point farthest from the selected set.
std::vector<Eigen::Index> naive_dss(const Points& p, std::size_t k) {
    const auto n = static_cast<std::size_t>(p.cols());
    const auto m = static_cast<std::size_t>(p.rows());
    std::vector<oracle::Pt> z = oracle::cols(p);
    for (std::size_t i = 0; i < m; ++i) {
        double lo = z[0][i], hi = z[0][i];
        for (const auto& q : z) lo = std::min(lo, q[i]), hi = std::max(hi, q[i]);
        const double range = hi > lo ? hi - lo : 1.0;
        for (auto& q : z) q[i] = (q[i] - lo) / range;
    }
    k = std::min(k, n);
    std::vector<Eigen::Index> sel;
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < m && sel.size() < k; ++i) {
        std::size_t best = n;
        for (std::size_t j = 0; j < n; ++j)
            if (!used[j] && (best == n || z[j][i] < z[best][i])) best = j;
        used[best] = true;
        sel.push_back(static_cast<Eigen::Index>(best));
    }
    while (sel.size() < k) {
        std::size_t best = n;
        double best_d = -1;
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            double d = std::numeric_limits<double>::infinity();
            for (auto s : sel) d = std::min(d, oracle::distance(z[j], z[static_cast<std::size_t>(s)]));
            if (d > best_d) best = j, best_d = d;
        }
        used[best] = true;
        sel.push_back(static_cast<Eigen::Index>(best));
    }
    return sel;
}

}  // namespace

TEST_CASE("DSS hand example", "[subset][oracle]") {
    // Points on a line in 2-D: (0,4), (1,3), (2,2), (3,1), (4,0).
    Points p(2, 5);
    p << 0, 1, 2, 3, 4,
         4, 3, 2, 1, 0;
    // Seeds: min f1 -> 0, min f2 -> 4, then the midpoint 2.
    CHECK(dss_select_indices(p, 3) == std::vector<Eigen::Index>{0, 4, 2});
    // Next: 1 and 3 tie at distance sqrt(2)/4; lower index wins.
    CHECK(dss_select_indices(p, 4) == std::vector<Eigen::Index>{0, 4, 2, 1});
    const auto trace = dss_select_trace(p, 5);
    CHECK(std::isinf(trace[0].min_distance));
    CHECK(std::isinf(trace[1].min_distance));
    CHECK_THAT(trace[2].min_distance, Catch::Matchers::WithinAbs(std::sqrt(0.5), 1e-12));
    CHECK_THAT(trace[3].min_distance, Catch::Matchers::WithinAbs(std::sqrt(0.125), 1e-12));
}

TEST_CASE("DSS matches a naive implementation", "[subset][oracle]") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const int m = 2 + trial % 3;
        const Points p = trial % 3 == 0 ? oracle::random_grid_points(rng, m, 120, 5) : oracle::random_points(rng, m, 120);
        for (std::size_t k : {1u, 2u, 5u, 40u, 120u, 200u}) CHECK(dss_select_indices(p, k) == naive_dss(p, k));
    }
}

TEST_CASE("DSS properties", "[subset][property]") {
    std::mt19937_64 rng(17);
    const Points p = oracle::random_points(rng, 3, 300, -5, 20);
    const auto trace = dss_select_trace(p, 91);
    REQUIRE(trace.size() == 91);
    std::set<Eigen::Index> distinct;
    for (const auto& s : trace) distinct.insert(s.chosen);
    CHECK(distinct.size() == 91);
    for (std::size_t i = 4; i < trace.size(); ++i) CHECK(trace[i].min_distance <= trace[i - 1].min_distance);

    // Normalisation: each row spans [0, 1]; constant rows map to 0.
    Points q = p;
    q.row(1).setConstant(2.5);
    const Points z = dss_normalize(q);
    CHECK(z.row(0).minCoeff() == 0.0);
    CHECK(z.row(0).maxCoeff() == 1.0);
    CHECK(z.row(1).isZero());

    // Invariant under positive affine rescaling of an objective.
    Points scaled = p;
    scaled.row(2) = scaled.row(2) * 1000.0 + Eigen::RowVectorXd::Constant(p.cols(), 7.0);
    CHECK(dss_select_indices(scaled, 50) == dss_select_indices(p, 50));
}

TEST_CASE("dss_select keeps archive order and whole sets", "[subset]") {
    std::mt19937_64 rng(23);
    ArchiveSnapshot snap;
    const Points p = oracle::random_points(rng, 3, 50);
    for (Eigen::Index j = 0; j < p.cols(); ++j)
        snap.members.push_back({Vector::Constant(1, double(j)), p.col(j), static_cast<std::size_t>(j)});

    const SolutionSet all = dss_select({&snap, 91});
    REQUIRE(all.size() == 50);
    for (std::size_t j = 0; j < 50; ++j) CHECK(all[j].eval_index == j);

    const SolutionSet some = dss_select({&snap, 10});
    REQUIRE(some.size() == 10);
    for (std::size_t j = 1; j < some.size(); ++j) CHECK(some[j - 1].eval_index < some[j].eval_index);

    ArchiveSnapshot empty;
    CHECK_THROWS_AS(dss_select({&empty, 10}), std::invalid_argument);
    CHECK_THROWS_AS(dss_select({&snap, 0}), std::invalid_argument);
}

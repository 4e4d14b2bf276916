#include <catch_amalgamated.hpp>

#include <random>

#include "moead/indicators.hpp"
#include "oracles.hpp"

using namespace moead;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("IGD hand example", "[indicators][oracle]") {
    Points ref(2, 3), a(2, 2);
    ref << 0, 1, 2,
           2, 1, 0;
    a << 0, 2,
         2, 1;
    // Distances: 0, 1, 1.
    CHECK_THAT(igd(a, ref), WithinAbs(2.0 / 3.0, 1e-15));
    CHECK(igd(ref, ref) == 0.0);
}

TEST_CASE("IGD matches the brute-force oracle", "[indicators][oracle]") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Points a = oracle::random_points(rng, 3, 1 + trial * 3, -1, 2);
        const Points r = oracle::random_points(rng, 3, 200);
        CHECK_THAT(igd(a, r), WithinRel(oracle::igd(oracle::cols(a), oracle::cols(r)), 1e-12));
    }
}

TEST_CASE("IGD properties", "[indicators][property]") {
    std::mt19937_64 rng(8);
    const Points r = oracle::random_points(rng, 3, 150);
    const Points a = oracle::random_points(rng, 3, 40);
    CHECK(igd(a, r) >= 0.0);
    // Adding points never increases IGD; a superset of the reference scores 0.
    Points more(3, 80);
    more << a, oracle::random_points(rng, 3, 40);
    CHECK(igd(more, r) <= igd(a, r));
    Points with_ref(3, 190);
    with_ref << a, r;
    CHECK(igd(with_ref, r) == 0.0);
    // Column order does not matter.
    CHECK_THAT(igd(Points(a.rowwise().reverse()), r),
               WithinRel(oracle::igd(oracle::cols(Points(a.rowwise().reverse())), oracle::cols(r)), 1e-12));
}

TEST_CASE("IGD rejects empty and mismatched sets", "[indicators]") {
    CHECK_THROWS_AS(igd(Points(3, 0), Points::Zero(3, 2)), std::invalid_argument);
    CHECK_THROWS_AS(igd(Points::Zero(3, 2), Points(3, 0)), std::invalid_argument);
    CHECK_THROWS_AS(igd(Points::Zero(2, 2), Points::Zero(3, 2)), std::invalid_argument);
}

TEST_CASE("dynamic reference is the non-dominated union", "[indicators][oracle]") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Points> sets;
        std::vector<oracle::Pt> all;
        for (int s = 0; s < 5; ++s) {
            sets.push_back(trial % 2 ? oracle::random_grid_points(rng, 3, 60, 4) : oracle::random_points(rng, 3, 60));
            for (const auto& p : oracle::cols(sets.back())) all.push_back(p);
        }
        sets.emplace_back(3, 0);
        const ReferenceSet ref = build_dynamic_reference(sets);
        CHECK(ref.provenance == ReferenceProvenance::DynamicUnion);
        const auto got = oracle::cols(ref.points);
        CHECK(std::set<oracle::Pt>(got.begin(), got.end()) == oracle::nondominated(all));
        CHECK(got.size() == oracle::nondominated(all).size());
    }
    CHECK_THROWS_AS(build_dynamic_reference({Points(3, 0)}), std::invalid_argument);
    CHECK_THROWS_AS(build_dynamic_reference({Points::Zero(2, 1), Points::Zero(3, 1)}), std::invalid_argument);
}

TEST_CASE("nondominated_indices agrees with brute force in 2, 3 and 4 objectives", "[indicators][oracle]") {
    std::mt19937_64 rng(30);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = 2 + trial % 3;
        const Points p = trial % 2 ? oracle::random_grid_points(rng, m, 400, 5) : oracle::random_points(rng, m, 400);
        const auto kept = oracle::cols(nondominated_filter(p));
        CHECK(std::set<oracle::Pt>(kept.begin(), kept.end()) == oracle::nondominated(oracle::cols(p)));
        CHECK(kept.size() == oracle::nondominated(oracle::cols(p)).size());
    }
}

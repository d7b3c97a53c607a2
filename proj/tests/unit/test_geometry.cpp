// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "hardness/errors.hpp"
#include "hardness/geometry.hpp"
#include "hardness/scaling.hpp"
#include "oracles.hpp"

using namespace hardness;

namespace {

std::vector<int> labels_of(const Dataset& ds)
{
    return ds.labels().index;
}

} // namespace

TEST_CASE("distance matrix matches the oracle bit for bit")
{
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto ds = testing::random_classification(seed, 25, 3);
        const auto dm = pairwise_distances(scale(ds));
        const auto ref = oracle::distances(oracle::scaled_rows(ds));
        for (std::size_t i = 0; i < ds.size(); ++i) {
            CHECK(dm(i, i) == 0.0);
            for (std::size_t j = 0; j < ds.size(); ++j) {
                REQUIRE(dm(i, j) == ref[i][j]);
                REQUIRE(dm(i, j) == dm(j, i));
            }
        }
    }
}

TEST_CASE("fix_c6 distances are scaled by 1/11")
{
    const auto dm = pairwise_distances(scale(testing::fix_c6()));
    CHECK(dm(0, 1) == doctest::Approx(1.0 / 11.0));
    CHECK(dm(0, 3) == doctest::Approx(std::sqrt(200.0) / 11.0));
    CHECK(dm.upper_triangle().size() == 15);
}

TEST_CASE("knn breaks distance ties by lower index")
{
    // Points 1 and 2 are both at distance 1 from point 0.
    const auto ds = Dataset::regression("ties", Matrix::from_rows({{0}, {1}, {-1}, {3}}), {0, 1, 2, 3});
    const auto dm = pairwise_distances(scale(ds));
    CHECK(knn(dm, 0, 2) == std::vector<std::size_t>{1, 2});
    CHECK(knn(dm, 0, 3) == std::vector<std::size_t>{1, 2, 3});
    CHECK_THROWS_AS(knn(dm, 0, 0), ParameterError);
    CHECK_THROWS_AS(knn(dm, 0, 4), ParameterError);
}

TEST_CASE("knn agrees with a full sort")
{
    const auto ds = testing::random_classification(11, 30, 2);
    const auto dm = pairwise_distances(scale(ds));
    const auto ref = oracle::distances(oracle::scaled_rows(ds));
    for (std::size_t i = 0; i < ds.size(); ++i) {
        auto expect = oracle::sorted_neighbors(ref, i);
        expect.resize(7);
        REQUIRE(knn(dm, i, 7) == expect);
    }
}

TEST_CASE("fix_c6 spanning tree")
{
    const auto mst = build_mst(pairwise_distances(scale(testing::fix_c6())));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : mst.edges()) {
        CHECK(e.u < e.v);
        edges.emplace_back(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    const std::vector<std::pair<std::size_t, std::size_t>> expect{{0, 1}, {0, 2}, {1, 3}, {3, 4}, {3, 5}};
    CHECK(edges == expect);
    CHECK(mst.neighbors(0) == std::vector<std::size_t>{1, 2});

    std::ostringstream out;
    mst.write_csv(out);
    CHECK(out.str().rfind("i,j,weight\n", 0) == 0);
}

TEST_CASE("spanning tree weight equals exhaustive minimum for n <= 7")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t n = 3 + seed % 5;
        const auto ds = testing::random_classification(seed, n, 2);
        const auto mst = build_mst(pairwise_distances(scale(ds)));
        const double best = oracle::exhaustive_mst_weight(oracle::distances(oracle::scaled_rows(ds)));
        REQUIRE(mst.edges().size() == n - 1);
        REQUIRE(mst.total_weight() == doctest::Approx(best).epsilon(1e-12));
    }
}

TEST_CASE("spanning tree edges equal Kruskal under the same total order")
{
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto ds = testing::random_regression(seed, 40, 3);
        const auto mst = build_mst(pairwise_distances(scale(ds)));
        auto ref = oracle::kruskal(oracle::distances(oracle::scaled_rows(ds)));
        auto mine = mst.edges();
        auto key = [](std::size_t u, std::size_t v) { return std::make_pair(u, v); };
        std::vector<std::pair<std::size_t, std::size_t>> a, b;
        for (const auto& e : mine) {
            a.push_back(key(e.u, e.v));
        }
        for (const auto& e : ref) {
            b.push_back(key(e.u, e.v));
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        REQUIRE(a == b);
    }
}

TEST_CASE("duplicate points still give a spanning tree")
{
    const auto ds = Dataset::regression("dup", Matrix::from_rows({{1, 1}, {1, 1}, {1, 1}, {2, 2}}), {0, 1, 2, 3});
    const auto mst = build_mst(pairwise_distances(scale(ds)));
    CHECK(mst.edges().size() == 3);
    CHECK(mst.total_weight() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("fix_c6 local sets")
{
    const auto ds = testing::fix_c6();
    const auto dm = pairwise_distances(scale(ds));
    const auto ls = local_sets(dm, ds.labels());
    CHECK(ls.nearest_enemy[0] == 3);
    CHECK(ls.enemy_distance[0] == doctest::Approx(std::sqrt(200.0) / 11.0));
    CHECK(ls.members[0] == std::vector<std::size_t>{1, 2});
    CHECK(ls.members[1] == std::vector<std::size_t>{0, 2});
    CHECK(ls.nearest_enemy[3] == 1);
}

TEST_CASE("local sets use strict inequality")
{
    // Instance 1 (same class) and instance 2 (enemy) are both at distance 1 from 0.
    const auto ds = Dataset::classification("strict", Matrix::from_rows({{0}, {1}, {-1}, {5}}),
                                            std::vector<std::string>{"a", "a", "b", "b"});
    const auto ls = local_sets(pairwise_distances(scale(ds)), ds.labels());
    CHECK(ls.members[0].empty());
}

TEST_CASE("local sets match the oracle")
{
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto ds = testing::random_classification(seed, 30, 2, 3);
        const auto dm = pairwise_distances(scale(ds));
        const auto ls = local_sets(dm, ds.labels());
        const auto ref = oracle::local_set_matrix(oracle::distances(oracle::scaled_rows(ds)), labels_of(ds));
        for (std::size_t i = 0; i < ds.size(); ++i) {
            std::vector<std::size_t> expect;
            for (std::size_t j = 0; j < ds.size(); ++j) {
                if (ref[i][j]) {
                    expect.push_back(j);
                }
            }
            REQUIRE(ls.members[i] == expect);
        }
    }
}

TEST_CASE("epsilon graph threshold is the type-7 quantile")
{
    const auto ds = testing::fix_c6();
    const auto dm = pairwise_distances(scale(ds));
    const auto g = epsilon_graph(dm, 0.15, true, &ds.labels());
    CHECK(g.epsilon() == doctest::Approx(1.0 / 11.0));
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(1) == 1);
    CHECK(g.edge_count() == 4);

    const auto all = epsilon_graph(dm, 1.0, false);
    CHECK(all.degree(0) == 5);
    CHECK_THROWS_AS(epsilon_graph(dm, 0.0, false), ParameterError);
    CHECK_THROWS_AS(epsilon_graph(dm, 1.5, false), ParameterError);
}

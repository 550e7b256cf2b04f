#include <doctest.h>

#include <random>

#include "cospec/graph.hpp"
#include "oracles.hpp"

using namespace cospec;
using namespace cospec::test;

TEST_CASE("graph construction validates its edge list")
{
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(-1, {}), std::invalid_argument);

    // duplicate edges collapse
    const Graph g = Graph::from_edges(2, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.edge_count() == 1);
}

TEST_CASE("order and edge counts")
{
    CHECK(complete_graph(2).order() == 2);
    CHECK(complete_graph(2).edge_count() == 1);
    CHECK(cycle_graph(4).order() == 4);
    CHECK(cycle_graph(4).edge_count() == 4);
    CHECK(complete_graph(4).order() == 4);
    CHECK(complete_graph(4).edge_count() == 6);
}

TEST_CASE("connectivity basics")
{
    CHECK(is_connected(complete_graph(2)));
    CHECK(is_connected(Graph::from_edges(1, {})));
    CHECK_FALSE(is_connected(Graph::from_edges(2, {})));
    CHECK(is_connected(cycle_graph(4)));
    CHECK_THROWS_AS(is_connected(Graph::from_edges(0, {})), std::invalid_argument);
}

TEST_CASE("connectivity agrees with the union-find oracle on random graphs")
{
    std::mt19937 rng(987654);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Graph g = random_graph(rng, n, 0.18);
        CHECK(is_connected(g) == union_find_connected(g));
    }
}

TEST_CASE("permutation relabeling preserves structure")
{
    std::mt19937 rng(5150);
    const Graph g = random_connected_graph(rng, 9, 0.3);
    const auto perm = random_permutation(rng, 9);
    const Graph h = apply_permutation(g, perm);
    CHECK(h.order() == g.order());
    CHECK(h.edge_count() == g.edge_count());
    for (auto [u, v] : g.edges()) CHECK(h.has_edge(perm[u], perm[v]));

    CHECK_THROWS_AS(apply_permutation(g, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(apply_permutation(g, {0, 0, 2, 3, 4, 5, 6, 7, 8}), std::invalid_argument);
}

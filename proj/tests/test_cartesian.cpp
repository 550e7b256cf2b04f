#include <doctest.h>

#include <map>
#include <random>

#include "cospec/cartesian.hpp"
#include "cospec/canonical.hpp"
#include "oracles.hpp"

using namespace cospec;
using namespace cospec::test;

namespace {

std::map<std::string, int> factor_keys(const FactorMultiset& f)
{
    std::map<std::string, int> keys;
    for (const auto& [g, mult] : f.factors) keys[emit_graph6(g)] = mult;
    return keys;
}

} // namespace

TEST_CASE("product order and edge counts follow the product formulas")
{
    const Graph p = cartesian_product(path_graph(3), complete_graph(2));
    CHECK(p.order() == 6);
    CHECK(p.edge_count() == 7); // |E(P3)|*2 + 3*|E(K2)|

    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 6), 0.5);
        const Graph h = random_graph(rng, 1 + static_cast<int>(rng() % 6), 0.5);
        const Graph gh = cartesian_product(g, h);
        CHECK(gh.order() == g.order() * h.order());
        CHECK(gh.edge_count() ==
              g.edge_count() * h.order() + h.edge_count() * g.order());
    }
}

TEST_CASE("K1 is the unit of the product")
{
    std::mt19937 rng(22);
    const Graph k1 = Graph::from_edges(1, {});
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 7), 0.4);
        CHECK(are_isomorphic(cartesian_product(k1, g), g));
        CHECK(are_isomorphic(cartesian_product(g, k1), g));
    }
}

TEST_CASE("the product is commutative up to isomorphism")
{
    std::mt19937 rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 5), 0.5);
        const Graph h = random_graph(rng, 2 + static_cast<int>(rng() % 5), 0.5);
        CHECK(are_isomorphic(cartesian_product(g, h), cartesian_product(h, g)));
    }
}

TEST_CASE("the product is connected iff both factors are")
{
    std::mt19937 rng(44);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 5), 0.35);
        const Graph h = random_graph(rng, 2 + static_cast<int>(rng() % 5), 0.35);
        CHECK(is_connected(cartesian_product(g, h)) == (is_connected(g) && is_connected(h)));
    }
}

TEST_CASE("factorization of fixed graphs")
{
    const auto c4 = prime_factorize(cycle_graph(4));
    CHECK(factor_keys(c4) == std::map<std::string, int>{{"A_", 2}});

    const auto p3 = prime_factorize(path_graph(3));
    REQUIRE(p3.factors.size() == 1);
    CHECK(p3.factors[0].second == 1);
    CHECK(are_isomorphic(p3.factors[0].first, path_graph(3)));

    const auto k2p3 = prime_factorize(cartesian_product(complete_graph(2), path_graph(3)));
    CHECK(k2p3.factors.size() == 2);
    CHECK(k2p3.total_factors() == 2);

    const Graph q3 = cartesian_product(
        cartesian_product(complete_graph(2), complete_graph(2)), complete_graph(2));
    CHECK(factor_keys(prime_factorize(q3)) == std::map<std::string, int>{{"A_", 3}});

    const Graph grid33 = cartesian_product(path_graph(3), path_graph(3));
    const auto grid_factors = prime_factorize(grid33);
    REQUIRE(grid_factors.factors.size() == 1);
    CHECK(grid_factors.factors[0].second == 2);
    CHECK(are_isomorphic(grid_factors.factors[0].first, path_graph(3)));
}

TEST_CASE("primality of fixed graphs")
{
    CHECK(is_prime(complete_graph(2)));
    CHECK_FALSE(is_prime(cycle_graph(4)));
    CHECK(is_prime(path_graph(3)));
    CHECK(is_prime(cycle_graph(5)));
    CHECK(is_prime(cycle_graph(6)));
    CHECK(is_prime(complete_bipartite(2, 3)));
    CHECK(is_prime(star_graph(4)));
    CHECK(is_prime(complete_graph(4)));

    // banner: C4 with a pendant vertex
    const Graph banner = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}});
    CHECK(is_prime(banner));
}

TEST_CASE("graphs of prime order are Cartesian prime")
{
    std::mt19937 rng(55);
    for (int n : {2, 3, 5, 7}) {
        for (int trial = 0; trial < 10; ++trial)
            CHECK(is_prime(random_connected_graph(rng, n, 0.5)));
    }
}

TEST_CASE("factorization rejects bad inputs")
{
    CHECK_THROWS_AS(prime_factorize(Graph::from_edges(2, {})), std::invalid_argument);
    CHECK_THROWS_AS(prime_factorize(Graph::from_edges(1, {})), std::invalid_argument);
    CHECK_THROWS_AS(prime_factorize(Graph::from_edges(0, {})), std::invalid_argument);
}

TEST_CASE("random products of primes factor back to their factors")
{
    std::mt19937 rng(606060);
    int done = 0;
    while (done < 300) {
        const int ng = 2 + static_cast<int>(rng() % 7);
        const int nh = 2 + static_cast<int>(rng() % 7);
        const Graph g = random_connected_graph(rng, ng, 0.45);
        const Graph h = random_connected_graph(rng, nh, 0.45);
        if (!is_prime(g) || !is_prime(h)) continue;
        ++done;

        const auto factors = prime_factorize(cartesian_product(g, h));
        std::map<std::string, int> expected;
        ++expected[canonical_form(g).canon_g6];
        ++expected[canonical_form(h).canon_g6];
        CHECK(factor_keys(factors) == expected);
    }
}

TEST_CASE("cancellation: products with a common factor are isomorphic iff the others are")
{
    std::mt19937 rng(707070);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const Graph g1 = random_connected_graph(rng, n, 0.45);
        const Graph g2 = (trial % 2 == 0)
                             ? apply_permutation(g1, random_permutation(rng, n))
                             : random_connected_graph(rng, n, 0.45);
        const Graph h = random_connected_graph(rng, 2 + static_cast<int>(rng() % 5), 0.45);
        CHECK(are_isomorphic(cartesian_product(g1, h), cartesian_product(g2, h)) ==
              are_isomorphic(g1, g2));
    }
}

TEST_CASE("coprimality of fixed pairs")
{
    CHECK(are_coprime(complete_graph(2), path_graph(3)));
    CHECK_FALSE(are_coprime(cycle_graph(4), complete_graph(2)));
    const Graph k2p3 = cartesian_product(complete_graph(2), path_graph(3));
    const Graph p3p3 = cartesian_product(path_graph(3), path_graph(3));
    CHECK_FALSE(are_coprime(k2p3, p3p3));
}

TEST_CASE("common factor decomposition of fixed pairs")
{
    const auto disjoint = common_factor(complete_graph(2), path_graph(3));
    CHECK(disjoint.common.order() == 1);
    CHECK(are_isomorphic(disjoint.residue_a, complete_graph(2)));
    CHECK(are_isomorphic(disjoint.residue_b, path_graph(3)));

    const auto c4k2 = common_factor(cycle_graph(4), complete_graph(2));
    CHECK(are_isomorphic(c4k2.common, complete_graph(2)));
    CHECK(are_isomorphic(c4k2.residue_a, complete_graph(2)));
    CHECK(c4k2.residue_b.order() == 1);

    const Graph k2p3 = cartesian_product(complete_graph(2), path_graph(3));
    const Graph p3p3 = cartesian_product(path_graph(3), path_graph(3));
    const auto mixed = common_factor(k2p3, p3p3);
    CHECK(are_isomorphic(mixed.common, path_graph(3)));
    CHECK(are_isomorphic(mixed.residue_a, complete_graph(2)));
    CHECK(are_isomorphic(mixed.residue_b, path_graph(3)));
}

TEST_CASE("common factor invariants hold on random products")
{
    std::mt19937 rng(808080);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph a = random_connected_graph(rng, 2 + static_cast<int>(rng() % 4), 0.5);
        const Graph b = random_connected_graph(rng, 2 + static_cast<int>(rng() % 4), 0.5);
        const Graph c = random_connected_graph(rng, 2 + static_cast<int>(rng() % 4), 0.5);
        const Graph g = cartesian_product(a, b);
        const Graph h = cartesian_product(a, c);
        const auto decomp = common_factor(g, h);
        CHECK(are_isomorphic(cartesian_product(decomp.common, decomp.residue_a), g));
        CHECK(are_isomorphic(cartesian_product(decomp.common, decomp.residue_b), h));
        if (decomp.residue_a.order() > 1 && decomp.residue_b.order() > 1)
            CHECK(are_coprime(decomp.residue_a, decomp.residue_b));
    }
}

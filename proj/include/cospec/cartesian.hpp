#pragma once

#include <stdexcept>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

// Vertex (u, v) maps to index u * order(h) + v; (u,v) ~ (u',v') iff one
// coordinate is equal and the other adjacent.
Graph cartesian_product(const Graph& g, const Graph& h);

// Left fold of cartesian_product; K1 for an empty list.
Graph product_of(const std::vector<Graph>& factors);

struct factorization_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Multiset of Cartesian prime factors of a connected graph. Factors are
// stored in canonical form and sorted by canonical graph6 string.
struct FactorMultiset {
    std::vector<std::pair<Graph, int>> factors;

    int total_factors() const;
    // Factor list with multiplicities expanded, canonical order.
    std::vector<Graph> expanded() const;
};

// Unique prime factorization of a connected graph (order >= 2). Every
// result is validated by reassembling the product and checking isomorphism
// with the input; a mismatch raises an internal error instead of returning
// a wrong answer.
FactorMultiset prime_factorize(const Graph& g);

bool is_prime(const Graph& g);

// Connected graphs sharing no Cartesian prime factor.
bool are_coprime(const Graph& g, const Graph& h);

// common = product of the multiset intersection of the two prime
// factorizations (K1 if empty); the residues are what remains and are
// coprime by construction.
struct CommonFactorDecomposition {
    Graph common;
    Graph residue_a;
    Graph residue_b;
};

CommonFactorDecomposition common_factor(const Graph& g, const Graph& h);

} // namespace cospec

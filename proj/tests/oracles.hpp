#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include <random>
#include <string>
#include <vector>

#include "cospec/charpoly.hpp"
#include "cospec/graph.hpp"

namespace cospec::test {

// Fraction-free Bareiss elimination; exact determinant of an integer matrix.
bigint bareiss_det(std::vector<std::vector<bigint>> m);

// det(tI - M) at one integer point, by Bareiss elimination.
bigint char_poly_value_at(const Graph& g, SpectrumKind kind, const bigint& t);

// Full characteristic polynomial through n+1 Bareiss determinants and exact
// Lagrange interpolation over the rationals.
CharPoly interpolated_char_poly(const Graph& g, SpectrumKind kind);

// Number of spanning trees via the matrix-tree determinant.
bigint spanning_tree_count(const Graph& g);

// Straightforward string-based graph6 encoder.
std::string reference_graph6_encode(const Graph& g);

// Union-find connectivity, independent of the BFS in the library.
bool union_find_connected(const Graph& g);

// Connected isomorphism classes on exactly n vertices, deduplicated by the
// minimum adjacency code over all n! permutations (n <= 7).
long long count_connected_classes_brute(int n);

// Named small graphs.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);

// Random generators (deterministic given the engine state).
Graph random_graph(std::mt19937& rng, int n, double p);
Graph random_connected_graph(std::mt19937& rng, int n, double p);
std::vector<int> random_permutation(std::mt19937& rng, int n);

} // namespace cospec::test

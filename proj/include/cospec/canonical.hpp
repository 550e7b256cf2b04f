#pragma once

#include <span>
#include <string>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

// Practical order cap for the backtracking canonical search.
inline constexpr int kCanonicalOrderCap = 512;

// Label-invariant canonical relabeling: isomorphic inputs yield identical
// canon_g6. perm maps input labels to canonical labels, so applying perm
// to the input reproduces exactly the graph encoded by canon_g6.
struct CanonicalForm {
    std::string canon_g6;
    std::vector<int> perm;
};

CanonicalForm canonical_form(const Graph& g);

// Order, degree multiset and canonical forms must all agree.
bool are_isomorphic(const Graph& g, const Graph& h);

// Batch canonical strings: the OpenMP kernel and its serial reference.
std::vector<std::string> canonical_batch(std::span<const Graph> graphs);
std::vector<std::string> canonical_batch_serial(std::span<const Graph> graphs);

} // namespace cospec

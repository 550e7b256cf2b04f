#pragma once

// Shared discovered seed families, cached across test cases.

#include "cospec/corpus.hpp"

namespace cospec::test {

const Corpus& corpus6();

// Families of the given order in the corpus, adjacency or Laplacian.
std::vector<CospectralFamily> families_on(const Corpus& corpus, SpectrumKind kind, int order,
                                          int min_size);

// The unique connected adjacency-cospectral pair on 6 vertices.
const CospectralFamily& adjacency_pair6();

} // namespace cospec::test

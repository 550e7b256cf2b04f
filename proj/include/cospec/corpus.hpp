#pragma once

#include <iosfwd>

#include "cospec/certify.hpp"

namespace cospec {

// A parsed graph list with enough bookkeeping to map every graph back to
// its source line.
struct Corpus {
    std::vector<Graph> graphs;
    std::vector<int> line_numbers; // 1-based line per graph

    struct Stats {
        std::size_t total = 0;
        std::size_t connected = 0;
        std::size_t duplicate_canonical = 0;
    } stats;
};

inline constexpr int kMaxEnumerationOrder = 8;

// All connected graphs on 1..n_max vertices, one canonical representative
// per isomorphism class, by exhaustive edge-subset enumeration and
// canonical deduplication. Output is sorted by (order, canon_g6). The
// first variant enumerates subset ranges in parallel.
Corpus generate_small_corpus(int n_max);
Corpus generate_small_corpus_serial(int n_max);

// graph6 lines; '#' comment lines and blank lines are ignored.
Corpus load_corpus(std::istream& in);
std::vector<Graph> load_family_file(std::istream& in);
void write_graph_lines(std::ostream& out, const std::vector<Graph>& graphs);

struct SeedOptions {
    int min_size = 2;
    bool require_coprime = false;
    bool require_prime = false;
};

// Groups the connected corpus members by spectral key, deduplicates
// isomorphic entries, applies the optional primality/coprimality filters
// and emits every surviving group of size >= min_size as a verified
// family. Families are sorted by (order, spectral key); members by
// canonical graph6 string.
std::vector<CospectralFamily> find_seed_families(const Corpus& corpus, SpectrumKind kind,
                                                 const SeedOptions& opts);

} // namespace cospec

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cospec {

// Fixed-width bit vector. The word layout is exposed because the canonical
// labeling and factorization inner loops work on whole words.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits)
        : nbits_(nbits), words_((static_cast<std::size_t>(nbits) + 63) / 64, 0) {}

    int size() const { return nbits_; }

    bool test(int i) const
    {
        return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }
    void set(int i)
    {
        words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(int i)
    {
        words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    int count() const
    {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    // Calls f(i) for every set bit, ascending.
    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                f(static_cast<int>(w * 64) + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

    bool operator==(const Bitset&) const = default;

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

// Immutable simple undirected graph on vertices 0..n-1. All operations on
// Graph are pure; values are safe to share across threads.
class Graph {
public:
    Graph() = default;

    // Builds a graph from an edge list. Self-loops and out-of-range
    // endpoints are rejected; duplicate edges collapse.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    std::size_t edge_count() const { return m_; }
    int degree(int v) const { return deg_[v]; }
    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    const Bitset& neighbors(int v) const { return adj_[v]; }

    // Edges as (u, v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<int> deg_;
    std::vector<Bitset> adj_;
};

// Relabels g by perm, where perm[old] = new. perm must be a permutation
// of 0..n-1.
Graph apply_permutation(const Graph& g, const std::vector<int>& perm);

// True iff a single traversal from vertex 0 reaches all vertices.
// Throws on the empty graph; K1 counts as connected.
bool is_connected(const Graph& g);

// graph6 wire format, bit-exact: size byte n+63 for n <= 62, else '~'
// followed by three bytes carrying n in big-endian 6-bit groups (+63);
// payload is the upper adjacency triangle column-major, 6 bits per byte
// (+63), zero-padded.
struct graph6_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

} // namespace cospec

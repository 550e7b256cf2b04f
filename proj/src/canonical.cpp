#include "cospec/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "cospec/parallel.hpp"

namespace cospec {

namespace {

using Cells = std::vector<std::vector<int>>;

// Refines an ordered partition to equitability: every vertex in a cell has
// the same number of neighbors in every cell. Split cells keep their slot,
// subcells ordered by neighbor-count signature; vertex order inside cells
// stays ascending, so the result is deterministic.
void refine(const Graph& g, Cells& cells)
{
    const int n = g.order();
    std::vector<int> cell_of(n);
    for (;;) {
        for (int c = 0; c < static_cast<int>(cells.size()); ++c)
            for (int v : cells[c]) cell_of[v] = c;

        bool split = false;
        Cells next;
        next.reserve(cells.size());
        std::vector<int> sig(cells.size());
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> buckets;
            for (int v : cell) {
                std::fill(sig.begin(), sig.end(), 0);
                g.neighbors(v).for_each([&](int u) { ++sig[cell_of[u]]; });
                buckets[sig].push_back(v);
            }
            if (buckets.size() > 1) split = true;
            for (auto& [key, verts] : buckets) next.push_back(std::move(verts));
        }
        cells = std::move(next);
        if (!split) return;
    }
}

struct Searcher {
    const Graph& g;
    int n;
    std::vector<std::pair<int, int>> edge_list;
    // Packed adjacency bitstring in graph6 bit order; bit b lives at word
    // b/64, position 63-(b%64), so word-wise vector compare is the
    // lexicographic bitstring compare.
    std::vector<std::uint64_t> best;
    std::vector<int> best_pos; // vertex -> canonical position
    bool have_best = false;

    explicit Searcher(const Graph& graph)
        : g(graph), n(graph.order()), edge_list(graph.edges()) {}

    static int bit_index(int i, int j) { return j * (j - 1) / 2 + i; } // i < j

    int best_bit(int b) const
    {
        return static_cast<int>((best[b >> 6] >> (63 - (b & 63))) & 1u);
    }

    // Compares the bits forced by the leading singleton run against best.
    int compare_prefix(const std::vector<int>& front) const
    {
        const int d = static_cast<int>(front.size());
        int b = 0;
        for (int j = 1; j < d; ++j)
            for (int i = 0; i < j; ++i, ++b) {
                const int cur = g.has_edge(front[i], front[j]) ? 1 : 0;
                const int bst = best_bit(b);
                if (cur != bst) return cur - bst;
            }
        return 0;
    }

    void record_leaf(const std::vector<int>& pos)
    {
        std::vector<std::uint64_t> bits((static_cast<std::size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
        for (auto [u, v] : edge_list) {
            int i = pos[u], j = pos[v];
            if (i > j) std::swap(i, j);
            const int b = bit_index(i, j);
            bits[b >> 6] |= std::uint64_t{1} << (63 - (b & 63));
        }
        best = std::move(bits);
        best_pos = pos;
        have_best = true;
    }

    void search(Cells cells)
    {
        refine(g, cells);

        std::vector<int> front;
        for (const auto& cell : cells) {
            if (cell.size() != 1) break;
            front.push_back(cell[0]);
        }
        const int cmp = have_best ? compare_prefix(front) : -1;
        if (cmp > 0) return;

        if (front.size() == static_cast<std::size_t>(n)) {
            if (cmp < 0) {
                std::vector<int> pos(n);
                for (int k = 0; k < n; ++k) pos[front[k]] = k;
                record_leaf(pos);
            }
            return;
        }

        // target: first smallest non-singleton cell
        int target = -1;
        std::size_t size = static_cast<std::size_t>(n) + 1;
        for (int k = 0; k < static_cast<int>(cells.size()); ++k)
            if (cells[k].size() > 1 && cells[k].size() < size) {
                size = cells[k].size();
                target = k;
            }

        for (int v : cells[target]) {
            Cells child;
            child.reserve(cells.size() + 1);
            for (int k = 0; k < static_cast<int>(cells.size()); ++k) {
                if (k != target) {
                    child.push_back(cells[k]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                rest.reserve(cells[k].size() - 1);
                for (int u : cells[k])
                    if (u != v) rest.push_back(u);
                child.push_back(std::move(rest));
            }
            search(std::move(child));
        }
    }
};

Cells initial_partition(const Graph& g)
{
    const int n = g.order();
    std::map<std::pair<int, std::vector<int>>, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) {
        std::vector<int> nbr_degs;
        nbr_degs.reserve(g.degree(v));
        g.neighbors(v).for_each([&](int u) { nbr_degs.push_back(g.degree(u)); });
        std::sort(nbr_degs.begin(), nbr_degs.end());
        groups[{g.degree(v), std::move(nbr_degs)}].push_back(v);
    }
    Cells cells;
    cells.reserve(groups.size());
    for (auto& [key, verts] : groups) cells.push_back(std::move(verts));
    return cells;
}

} // namespace

CanonicalForm canonical_form(const Graph& g)
{
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("canonical form requires at least one vertex");
    if (n > kCanonicalOrderCap)
        throw std::invalid_argument("order exceeds the canonical labeling cap");
    if (n == 1) return {emit_graph6(g), {0}};

    Searcher searcher(g);
    searcher.search(initial_partition(g));

    CanonicalForm form;
    form.perm = std::move(searcher.best_pos);
    form.canon_g6 = emit_graph6(apply_permutation(g, form.perm));
    return form;
}

bool are_isomorphic(const Graph& g, const Graph& h)
{
    if (g.order() != h.order()) return false;
    if (g.edge_count() != h.edge_count()) return false;
    std::vector<int> dg(g.order()), dh(h.order());
    for (int v = 0; v < g.order(); ++v) dg[v] = g.degree(v);
    for (int v = 0; v < h.order(); ++v) dh[v] = h.degree(v);
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    return canonical_form(g).canon_g6 == canonical_form(h).canon_g6;
}

std::vector<std::string> canonical_batch(std::span<const Graph> graphs)
{
    std::vector<std::string> out(graphs.size());
    std::string error;
#pragma omp parallel for schedule(dynamic) num_threads(cospec::par::thread_limit())
    for (long long i = 0; i < static_cast<long long>(graphs.size()); ++i) {
        try {
            out[i] = canonical_form(graphs[i]).canon_g6;
        } catch (const std::exception& e) {
#pragma omp critical
            if (error.empty()) error = e.what();
        }
    }
    if (!error.empty()) throw std::invalid_argument(error);
    return out;
}

std::vector<std::string> canonical_batch_serial(std::span<const Graph> graphs)
{
    std::vector<std::string> out;
    out.reserve(graphs.size());
    for (const Graph& g : graphs) out.push_back(canonical_form(g).canon_g6);
    return out;
}

} // namespace cospec

#include "cospec/corpus.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <string>

#include "cospec/canonical.hpp"
#include "cospec/cartesian.hpp"
#include "cospec/parallel.hpp"

namespace cospec {

namespace {

// Edge bit positions for order n, graph6 column-major order.
std::vector<std::pair<int, int>> edge_positions(int n)
{
    std::vector<std::pair<int, int>> pos;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pos.emplace_back(i, j);
    return pos;
}

bool mask_connected(int n, const std::array<std::uint32_t, 8>& nbr)
{
    const std::uint32_t all = (1u << n) - 1;
    std::uint32_t reach = 1u, frontier = 1u;
    while (frontier) {
        std::uint32_t next = 0;
        std::uint32_t bits = frontier;
        while (bits) {
            const int v = std::countr_zero(bits);
            bits &= bits - 1;
            next |= nbr[v];
        }
        frontier = next & ~reach;
        reach |= next;
        if (reach == all) return true;
    }
    return reach == all;
}

// Canonical strings of every connected graph on exactly n vertices whose
// edge mask lies in [lo, hi).
void enumerate_masks(int n, std::uint64_t lo, std::uint64_t hi,
                     const std::vector<std::pair<int, int>>& pos,
                     std::set<std::string>& out)
{
    std::array<std::uint32_t, 8> nbr{};
    std::vector<std::pair<int, int>> edges;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        nbr.fill(0);
        for (std::size_t b = 0; b < pos.size(); ++b)
            if (mask & (std::uint64_t{1} << b)) {
                nbr[pos[b].first] |= 1u << pos[b].second;
                nbr[pos[b].second] |= 1u << pos[b].first;
            }
        if (!mask_connected(n, nbr)) continue;
        edges.clear();
        for (std::size_t b = 0; b < pos.size(); ++b)
            if (mask & (std::uint64_t{1} << b)) edges.push_back(pos[b]);
        out.insert(canonical_form(Graph::from_edges(n, edges)).canon_g6);
    }
}

Corpus assemble_corpus(const std::vector<std::set<std::string>>& classes_per_order)
{
    Corpus corpus;
    int line = 0;
    for (const auto& classes : classes_per_order)
        for (const std::string& canon : classes) {
            corpus.graphs.push_back(parse_graph6(canon));
            corpus.line_numbers.push_back(++line);
        }
    corpus.stats.total = corpus.graphs.size();
    corpus.stats.connected = corpus.graphs.size();
    corpus.stats.duplicate_canonical = 0;
    return corpus;
}

void check_n_max(int n_max)
{
    if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
    if (n_max > kMaxEnumerationOrder)
        throw std::invalid_argument("n_max too large for exhaustive enumeration (cap " +
                                    std::to_string(kMaxEnumerationOrder) + ")");
}

} // namespace

Corpus generate_small_corpus(int n_max)
{
    check_n_max(n_max);
    std::vector<std::set<std::string>> classes_per_order;
    for (int n = 1; n <= n_max; ++n) {
        const auto pos = edge_positions(n);
        const std::uint64_t total = std::uint64_t{1} << pos.size();
        const int chunks = std::min<std::uint64_t>(total, 64);
        std::vector<std::set<std::string>> partial(chunks);

#pragma omp parallel for schedule(dynamic) num_threads(cospec::par::thread_limit())
        for (int c = 0; c < chunks; ++c) {
            const std::uint64_t lo = total / chunks * c + std::min<std::uint64_t>(c, total % chunks);
            const std::uint64_t hi =
                total / chunks * (c + 1) + std::min<std::uint64_t>(c + 1, total % chunks);
            enumerate_masks(n, lo, hi, pos, partial[c]);
        }

        std::set<std::string> merged;
        for (auto& part : partial) merged.merge(part);
        classes_per_order.push_back(std::move(merged));
    }
    return assemble_corpus(classes_per_order);
}

Corpus generate_small_corpus_serial(int n_max)
{
    check_n_max(n_max);
    std::vector<std::set<std::string>> classes_per_order;
    for (int n = 1; n <= n_max; ++n) {
        const auto pos = edge_positions(n);
        std::set<std::string> classes;
        enumerate_masks(n, 0, std::uint64_t{1} << pos.size(), pos, classes);
        classes_per_order.push_back(std::move(classes));
    }
    return assemble_corpus(classes_per_order);
}

Corpus load_corpus(std::istream& in)
{
    Corpus corpus;
    std::set<std::string> seen_canonical;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        Graph g;
        try {
            g = parse_graph6(line);
        } catch (const graph6_error& e) {
            throw graph6_error("line " + std::to_string(line_number) + ": " + e.what());
        }
        ++corpus.stats.total;
        if (is_connected(g)) ++corpus.stats.connected;
        if (g.order() <= kCanonicalOrderCap &&
            !seen_canonical.insert(canonical_form(g).canon_g6).second)
            ++corpus.stats.duplicate_canonical;
        corpus.graphs.push_back(std::move(g));
        corpus.line_numbers.push_back(line_number);
    }
    return corpus;
}

std::vector<Graph> load_family_file(std::istream& in)
{
    return load_corpus(in).graphs;
}

void write_graph_lines(std::ostream& out, const std::vector<Graph>& graphs)
{
    for (const Graph& g : graphs) out << emit_graph6(g) << '\n';
}

std::vector<CospectralFamily> find_seed_families(const Corpus& corpus, SpectrumKind kind,
                                                 const SeedOptions& opts)
{
    // Connected members only; seeds must be usable as construction inputs.
    std::vector<const Graph*> connected;
    for (const Graph& g : corpus.graphs)
        if (g.order() >= 1 && is_connected(g)) connected.push_back(&g);

    const long long count = static_cast<long long>(connected.size());
    std::vector<std::string> keys(connected.size());
    std::vector<std::string> canon(connected.size());
#pragma omp parallel for schedule(dynamic) num_threads(cospec::par::thread_limit())
    for (long long i = 0; i < count; ++i) {
        keys[i] = spectral_key(*connected[i], kind);
        canon[i] = canonical_form(*connected[i]).canon_g6;
    }

    // key -> canonical string -> representative, deduplicating isomorphic
    // corpus entries inside each spectral class
    std::map<std::string, std::map<std::string, Graph>> groups;
    for (long long i = 0; i < count; ++i)
        groups[keys[i]].try_emplace(canon[i], parse_graph6(canon[i]));

    std::vector<std::pair<std::pair<int, std::string>, std::vector<Graph>>> ordered;
    for (auto& [key, reps] : groups) {
        std::vector<Graph> members;
        members.reserve(reps.size());
        for (auto& [cg6, graph] : reps) {
            // primality is only defined from order 2 up; K1 is the unit
            if (opts.require_prime && (graph.order() < 2 || !is_prime(graph))) continue;
            members.push_back(std::move(graph));
        }
        if (opts.require_coprime && members.size() > 1) {
            // deterministic greedy subset: keep a member iff it is coprime
            // with everything already kept (members arrive in canon order)
            std::vector<Graph> kept;
            for (Graph& g : members) {
                bool ok = true;
                for (const Graph& h : kept)
                    if (!are_coprime(g, h)) {
                        ok = false;
                        break;
                    }
                if (ok) kept.push_back(std::move(g));
            }
            members = std::move(kept);
        }
        if (static_cast<int>(members.size()) < opts.min_size) continue;
        ordered.push_back({{members.front().order(), key}, std::move(members)});
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<CospectralFamily> families;
    families.reserve(ordered.size());
    for (auto& [sort_key, members] : ordered)
        families.push_back(make_verified_family(std::move(members), kind));
    return families;
}

} // namespace cospec

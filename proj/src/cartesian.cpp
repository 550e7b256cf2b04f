#include "cospec/cartesian.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cospec/canonical.hpp"

namespace cospec {

Graph cartesian_product(const Graph& g, const Graph& h)
{
    const int ng = g.order(), nh = h.order();
    if (ng == 0 || nh == 0)
        throw std::invalid_argument("cartesian product requires non-empty factors");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count() * static_cast<std::size_t>(nh) +
                  h.edge_count() * static_cast<std::size_t>(ng));
    for (auto [u, up] : g.edges())
        for (int v = 0; v < nh; ++v) edges.emplace_back(u * nh + v, up * nh + v);
    for (auto [v, vp] : h.edges())
        for (int u = 0; u < ng; ++u) edges.emplace_back(u * nh + v, u * nh + vp);
    return Graph::from_edges(ng * nh, edges);
}

Graph product_of(const std::vector<Graph>& factors)
{
    Graph acc = Graph::from_edges(1, {});
    for (const Graph& f : factors) acc = cartesian_product(acc, f);
    return acc;
}

int FactorMultiset::total_factors() const
{
    int total = 0;
    for (const auto& [f, mult] : factors) total += mult;
    return total;
}

std::vector<Graph> FactorMultiset::expanded() const
{
    std::vector<Graph> out;
    for (const auto& [f, mult] : factors)
        for (int i = 0; i < mult; ++i) out.push_back(f);
    return out;
}

namespace {

struct EdgeUnionFind {
    std::vector<int> parent;

    explicit EdgeUnionFind(int m) : parent(m)
    {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x)
    {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// Classifies every pair of incident edges by the unique-chordless-square
// property: edges from different factors span exactly one chordless
// 4-cycle, while same-factor pairs share a triangle, span none, or span
// several. Opposite edges of every chordless square join one class, and
// the transitive closure of all of this gives the factor classes.
std::vector<int> factor_edge_classes(const Graph& g,
                                     const std::vector<std::pair<int, int>>& edge_list)
{
    const int n = g.order();
    const int m = static_cast<int>(edge_list.size());

    std::vector<int> edge_id(static_cast<std::size_t>(n) * n, -1);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = edge_list[e];
        edge_id[static_cast<std::size_t>(u) * n + v] = e;
        edge_id[static_cast<std::size_t>(v) * n + u] = e;
    }
    auto eid = [&](int u, int v) { return edge_id[static_cast<std::size_t>(u) * n + v]; };

    EdgeUnionFind dsu(m);
    const std::size_t words = g.neighbors(0).words().size();
    std::vector<std::uint64_t> meet(words);

    for (int u = 0; u < n; ++u) {
        std::vector<int> nbrs;
        nbrs.reserve(g.degree(u));
        g.neighbors(u).for_each([&](int v) { nbrs.push_back(v); });

        for (std::size_t a = 0; a < nbrs.size(); ++a)
            for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
                const int v = nbrs[a], w = nbrs[b];
                if (g.has_edge(v, w)) {
                    dsu.unite(eid(u, v), eid(u, w));
                    continue;
                }
                // common neighbors x of v and w with x != u, x not ~ u:
                // each such x completes the chordless square u-v-x-w
                const auto& wv = g.neighbors(v).words();
                const auto& ww = g.neighbors(w).words();
                const auto& wu = g.neighbors(u).words();
                int count = 0;
                for (std::size_t k = 0; k < words; ++k) {
                    meet[k] = wv[k] & ww[k] & ~wu[k];
                    count += std::popcount(meet[k]);
                }
                if (meet[static_cast<std::size_t>(u) >> 6] & (std::uint64_t{1} << (u & 63))) {
                    meet[static_cast<std::size_t>(u) >> 6] &= ~(std::uint64_t{1} << (u & 63));
                    --count;
                }
                for (std::size_t k = 0; k < words; ++k) {
                    std::uint64_t bits = meet[k];
                    while (bits) {
                        const int x = static_cast<int>(k * 64) + std::countr_zero(bits);
                        bits &= bits - 1;
                        dsu.unite(eid(u, v), eid(w, x));
                        dsu.unite(eid(u, w), eid(v, x));
                    }
                }
                if (count != 1) dsu.unite(eid(u, v), eid(u, w));
            }
    }

    std::vector<int> klass(m);
    std::map<int, int> roots;
    for (int e = 0; e < m; ++e) {
        const int r = dsu.find(e);
        auto [it, inserted] = roots.try_emplace(r, static_cast<int>(roots.size()));
        klass[e] = it->second;
    }
    return klass;
}

Graph canonical_copy(const Graph& g)
{
    return apply_permutation(g, canonical_form(g).perm);
}

FactorMultiset to_multiset(std::vector<Graph> factors)
{
    std::map<std::string, std::pair<Graph, int>> grouped;
    for (Graph& f : factors) {
        Graph canon = canonical_copy(f);
        std::string key = emit_graph6(canon);
        auto it = grouped.find(key);
        if (it == grouped.end())
            grouped.emplace(std::move(key), std::make_pair(std::move(canon), 1));
        else
            ++it->second.second;
    }
    FactorMultiset out;
    out.factors.reserve(grouped.size());
    for (auto& [key, entry] : grouped) out.factors.push_back(std::move(entry));
    return out;
}

} // namespace

FactorMultiset prime_factorize(const Graph& g)
{
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("cannot factorize the empty graph");
    if (!is_connected(g))
        throw std::invalid_argument("prime factorization requires a connected graph");
    if (n == 1) throw std::invalid_argument("K1 is the trivial graph and has no prime factorization");

    const auto edge_list = g.edges();
    const auto klass = factor_edge_classes(g, edge_list);
    const int nclasses = *std::max_element(klass.begin(), klass.end()) + 1;

    if (nclasses == 1) return to_multiset({g});

    // One factor per class: the component of vertex 0 in the spanning
    // subgraph restricted to edges of that class.
    std::vector<Graph> layer_factors;
    layer_factors.reserve(nclasses);
    std::vector<std::vector<std::pair<int, int>>> class_adj(n);
    long long order_product = 1;
    for (int c = 0; c < nclasses; ++c) {
        for (auto& lst : class_adj) lst.clear();
        for (int e = 0; e < static_cast<int>(edge_list.size()); ++e) {
            if (klass[e] != c) continue;
            auto [u, v] = edge_list[e];
            class_adj[u].emplace_back(v, e);
            class_adj[v].emplace_back(u, e);
        }
        std::vector<int> component{0};
        Bitset visited(n);
        visited.set(0);
        for (std::size_t head = 0; head < component.size(); ++head) {
            for (auto [u, e] : class_adj[component[head]])
                if (!visited.test(u)) {
                    visited.set(u);
                    component.push_back(u);
                }
        }
        std::sort(component.begin(), component.end());
        std::vector<int> local(n, -1);
        for (int i = 0; i < static_cast<int>(component.size()); ++i) local[component[i]] = i;

        std::vector<std::pair<int, int>> layer_edges;
        for (int e = 0; e < static_cast<int>(edge_list.size()); ++e) {
            if (klass[e] != c) continue;
            auto [u, v] = edge_list[e];
            if (local[u] >= 0 && local[v] >= 0) layer_edges.emplace_back(local[u], local[v]);
        }
        layer_factors.push_back(Graph::from_edges(static_cast<int>(component.size()), layer_edges));
        order_product *= static_cast<long long>(component.size());
        if (order_product > n) break;
    }

    if (order_product != n)
        throw factorization_error("internal error: factor layer orders do not multiply to the graph order");
    if (!are_isomorphic(product_of(layer_factors), g))
        throw factorization_error("internal error: reassembled factor product is not isomorphic to the input");

    return to_multiset(std::move(layer_factors));
}

bool is_prime(const Graph& g)
{
    const FactorMultiset f = prime_factorize(g);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

bool are_coprime(const Graph& g, const Graph& h)
{
    const FactorMultiset fg = prime_factorize(g);
    const FactorMultiset fh = prime_factorize(h);
    std::map<std::string, int> seen;
    for (const auto& [f, mult] : fg.factors) seen[emit_graph6(f)] = mult;
    for (const auto& [f, mult] : fh.factors)
        if (seen.count(emit_graph6(f))) return false;
    return true;
}

CommonFactorDecomposition common_factor(const Graph& g, const Graph& h)
{
    const FactorMultiset fg = prime_factorize(g);
    const FactorMultiset fh = prime_factorize(h);

    std::map<std::string, int> counts_h;
    for (const auto& [f, mult] : fh.factors) counts_h[emit_graph6(f)] = mult;

    std::vector<Graph> shared, only_g, only_h;
    for (const auto& [f, mult] : fg.factors) {
        const std::string key = emit_graph6(f);
        const int common_mult = std::min(mult, counts_h.count(key) ? counts_h[key] : 0);
        for (int i = 0; i < common_mult; ++i) shared.push_back(f);
        for (int i = common_mult; i < mult; ++i) only_g.push_back(f);
        if (common_mult > 0) counts_h[key] -= common_mult;
    }
    for (const auto& [f, mult] : fh.factors)
        for (int i = 0; i < counts_h[emit_graph6(f)]; ++i) only_h.push_back(f);

    return {product_of(shared), product_of(only_g), product_of(only_h)};
}

} // namespace cospec

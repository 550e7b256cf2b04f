#include "cospec/graph.hpp"

#include <algorithm>

namespace cospec {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges)
{
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, Bitset(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        g.adj_[u].set(v);
        g.adj_[v].set(u);
    }
    g.deg_.resize(n);
    std::size_t twice_m = 0;
    for (int v = 0; v < n; ++v) {
        g.deg_[v] = g.adj_[v].count();
        twice_m += static_cast<std::size_t>(g.deg_[v]);
    }
    g.m_ = twice_m / 2;
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

Graph apply_permutation(const Graph& g, const std::vector<int>& perm)
{
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permutation size does not match graph order");
    std::vector<bool> seen(n, false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p])
            throw std::invalid_argument("not a permutation of 0..n-1");
        seen[p] = true;
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph::from_edges(n, edges);
}

bool is_connected(const Graph& g)
{
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("connectivity is undefined for the empty graph");
    Bitset visited(n);
    visited.set(0);
    std::vector<int> stack{0};
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        g.neighbors(v).for_each([&](int u) {
            if (!visited.test(u)) {
                visited.set(u);
                ++reached;
                stack.push_back(u);
            }
        });
    }
    return reached == n;
}

namespace {

constexpr int kG6Min = 63;
constexpr int kG6Max = 126;
constexpr int kG6MaxOrder = 258047;

int payload_bytes(int n)
{
    const long long bits = static_cast<long long>(n) * (n - 1) / 2;
    return static_cast<int>((bits + 5) / 6);
}

} // namespace

Graph parse_graph6(std::string_view text)
{
    if (text.empty()) throw graph6_error("graph6: empty input");
    for (unsigned char c : text)
        if (c < kG6Min || c > kG6Max)
            throw graph6_error("graph6: byte outside the printable range 63..126");

    std::size_t pos = 0;
    long long n = 0;
    if (text[0] != '~') {
        n = text[0] - kG6Min;
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~')
            throw graph6_error("graph6: size encoding beyond 258047 vertices is not supported");
        if (text.size() < 4) throw graph6_error("graph6: malformed size bytes");
        n = (static_cast<long long>(text[1] - kG6Min) << 12) |
            (static_cast<long long>(text[2] - kG6Min) << 6) |
            static_cast<long long>(text[3] - kG6Min);
        pos = 4;
    }
    if (n == 0) throw graph6_error("graph6: empty graph (n = 0) is rejected");
    if (n > kG6MaxOrder) throw graph6_error("graph6: vertex count exceeds the supported range");

    const int order = static_cast<int>(n);
    const int expect = payload_bytes(order);
    const int have = static_cast<int>(text.size() - pos);
    if (have < expect) throw graph6_error("graph6: truncated payload");
    if (have > expect) throw graph6_error("graph6: trailing bytes after payload");

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    const long long nbits = static_cast<long long>(order) * (order - 1) / 2;
    int i = 0, j = 1; // column-major upper triangle: x(0,1), x(0,2), x(1,2), ...
    for (int b = 0; b < expect; ++b) {
        int group = text[pos + b] - kG6Min;
        for (int k = 5; k >= 0; --k, ++bit) {
            const int value = (group >> k) & 1;
            if (bit >= nbits) {
                if (value != 0) throw graph6_error("graph6: padding bits are not zero");
                continue;
            }
            if (value) edges.emplace_back(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return Graph::from_edges(order, edges);
}

std::string emit_graph6(const Graph& g)
{
    const int n = g.order();
    if (n == 0) throw graph6_error("graph6: the empty graph cannot be emitted");
    if (n > kG6MaxOrder) throw graph6_error("graph6: vertex count exceeds the supported range");

    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Min));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Min));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Min));
        out.push_back(static_cast<char>((n & 63) + kG6Min));
    }

    int group = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kG6Min));
                group = 0;
                filled = 0;
            }
        }
    if (filled > 0) {
        group <<= (6 - filled);
        out.push_back(static_cast<char>(group + kG6Min));
    }
    return out;
}

} // namespace cospec

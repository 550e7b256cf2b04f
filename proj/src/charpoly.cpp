#include "cospec/charpoly.hpp"

#include <sstream>
#include <utility>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "cospec/parallel.hpp"

namespace cospec {

std::string to_string(SpectrumKind kind)
{
    return kind == SpectrumKind::adjacency ? "adjacency" : "laplacian";
}

SpectrumKind spectrum_kind_from_string(const std::string& s)
{
    if (s == "adjacency") return SpectrumKind::adjacency;
    if (s == "laplacian") return SpectrumKind::laplacian;
    throw std::invalid_argument("unknown spectrum kind: " + s);
}

bigint CharPoly::eval(const bigint& x) const
{
    bigint acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<std::string> CharPoly::decimal_coeffs() const
{
    std::vector<std::string> out;
    out.reserve(coeffs.size());
    for (const bigint& c : coeffs) out.push_back(c.str());
    return out;
}

namespace {

// Sparse rows of the adjacency or Laplacian matrix: (column, value) pairs.
std::vector<std::vector<std::pair<int, int>>> matrix_rows(const Graph& g, SpectrumKind kind)
{
    const int n = g.order();
    std::vector<std::vector<std::pair<int, int>>> rows(n);
    for (int v = 0; v < n; ++v) {
        rows[v].reserve(static_cast<std::size_t>(g.degree(v)) + 1);
        if (kind == SpectrumKind::laplacian && g.degree(v) != 0)
            rows[v].emplace_back(v, g.degree(v));
        g.neighbors(v).for_each([&](int u) {
            rows[v].emplace_back(u, kind == SpectrumKind::adjacency ? 1 : -1);
        });
    }
    return rows;
}

bigint exact_div(bigint value, int k)
{
    bigint q = value / k;
    if (q * k != value)
        throw std::logic_error("characteristic polynomial recurrence division not exact");
    return q;
}

CharPoly assemble(int n, const std::vector<bigint>& a)
{
    CharPoly p;
    p.coeffs.assign(static_cast<std::size_t>(n) + 1, 0);
    p.coeffs[n] = 1;
    for (int k = 1; k <= n; ++k) p.coeffs[n - k] = a[k];
    return p;
}

} // namespace

// M_1 = A; a_k = -tr(M_k)/k; M_{k+1} = A (M_k + a_k I). Then
// det(xI - A) = x^n + a_1 x^{n-1} + ... + a_n. Matrices are stored
// column-major and columns evolve independently, which is what the
// parallel loop exploits.
CharPoly char_poly(const Graph& g, SpectrumKind kind)
{
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("char_poly requires at least one vertex");
    const auto rows = matrix_rows(g, kind);

    const std::size_t nn = static_cast<std::size_t>(n) * n;
    std::vector<bigint> prev(nn), cur(nn);
    std::vector<bigint> diag(n);
    std::vector<bigint> a(static_cast<std::size_t>(n) + 1);

    for (int v = 0; v < n; ++v)
        for (auto [u, w] : rows[v]) cur[static_cast<std::size_t>(u) * n + v] = w;

    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            const bigint& shift = a[k - 1];
#pragma omp parallel for schedule(static) num_threads(cospec::par::thread_limit())
            for (int c = 0; c < n; ++c) {
                const bigint* in = &prev[static_cast<std::size_t>(c) * n];
                bigint* out = &cur[static_cast<std::size_t>(c) * n];
                for (int i = 0; i < n; ++i) {
                    bigint acc = 0;
                    for (auto [j, w] : rows[i]) {
                        if (w == 1)
                            acc += in[j];
                        else if (w == -1)
                            acc -= in[j];
                        else
                            acc += w * in[j];
                        if (j == c) acc += w * shift;
                    }
                    out[i] = std::move(acc);
                }
            }
        }
        for (int c = 0; c < n; ++c) diag[c] = cur[static_cast<std::size_t>(c) * n + c];
        bigint trace = 0;
        for (int c = 0; c < n; ++c) trace += diag[c];
        a[k] = exact_div(-trace, k);
        std::swap(prev, cur);
    }
    return assemble(n, a);
}

// Serial reference: same recurrence, row-major storage, plain loops.
CharPoly char_poly_serial(const Graph& g, SpectrumKind kind)
{
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("char_poly requires at least one vertex");
    const auto rows = matrix_rows(g, kind);

    const std::size_t nn = static_cast<std::size_t>(n) * n;
    std::vector<bigint> prev(nn), cur(nn);
    std::vector<bigint> a(static_cast<std::size_t>(n) + 1);

    for (int i = 0; i < n; ++i)
        for (auto [j, w] : rows[i]) cur[static_cast<std::size_t>(i) * n + j] = w;

    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            for (int i = 0; i < n; ++i)
                for (int c = 0; c < n; ++c) {
                    bigint acc = 0;
                    for (auto [j, w] : rows[i]) {
                        acc += w * prev[static_cast<std::size_t>(j) * n + c];
                        if (j == c) acc += w * a[k - 1];
                    }
                    cur[static_cast<std::size_t>(i) * n + c] = std::move(acc);
                }
        }
        bigint trace = 0;
        for (int i = 0; i < n; ++i) trace += cur[static_cast<std::size_t>(i) * n + i];
        a[k] = exact_div(-trace, k);
        std::swap(prev, cur);
    }
    return assemble(n, a);
}

bool cospectral(const Graph& g, const Graph& h, SpectrumKind kind)
{
    if (g.order() != h.order()) return false;
    return char_poly(g, kind) == char_poly(h, kind);
}

std::string spectral_key(const Graph& g, SpectrumKind kind)
{
    const CharPoly p = char_poly(g, kind);
    std::ostringstream key;
    key << (kind == SpectrumKind::adjacency ? 'A' : 'L') << '|' << g.order() << '|';
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        if (i) key << ',';
        key << p.coeffs[i];
    }
    return key.str();
}

std::vector<double> float_eigenvalues(const Graph& g, SpectrumKind kind)
{
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("float_eigenvalues requires at least one vertex");
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int v = 0; v < n; ++v) {
        if (kind == SpectrumKind::laplacian) m(v, v) = g.degree(v);
        g.neighbors(v).for_each([&](int u) {
            m(v, u) = kind == SpectrumKind::adjacency ? 1.0 : -1.0;
        });
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigenvalue iteration failed to converge");
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + n);
}

} // namespace cospec

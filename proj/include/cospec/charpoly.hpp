#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cospec/graph.hpp"

namespace cospec {

using bigint = boost::multiprecision::cpp_int;

enum class SpectrumKind { adjacency, laplacian };

std::string to_string(SpectrumKind kind);
SpectrumKind spectrum_kind_from_string(const std::string& s);

// det(xI - M) with exact integer coefficients; coeffs[k] multiplies x^k,
// so the list is degree-ascending with a trailing 1 (monic).
struct CharPoly {
    std::vector<bigint> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bigint eval(const bigint& x) const;
    // Decimal coefficient strings, degree ascending (certificate format).
    std::vector<std::string> decimal_coeffs() const;

    bool operator==(const CharPoly&) const = default;
};

// Faddeev-LeVerrier over the sparse adjacency/Laplacian matrix; all
// divisions are exact over the integers. The first variant parallelizes
// over matrix columns, the second is the serial reference kernel.
CharPoly char_poly(const Graph& g, SpectrumKind kind);
CharPoly char_poly_serial(const Graph& g, SpectrumKind kind);

// Equal order and equal characteristic polynomial. Callers that need the
// strict "cospectral" notion must also require non-isomorphism.
bool cospectral(const Graph& g, const Graph& h, SpectrumKind kind);

// Injective key of (kind, order, char poly); equal keys within one kind
// mean cospectral-or-isomorphic.
std::string spectral_key(const Graph& g, SpectrumKind kind);

// Float spectra, ascending. For property tests and reports only; every
// decision in this library uses exact CharPoly comparison.
std::vector<double> float_eigenvalues(const Graph& g, SpectrumKind kind);

} // namespace cospec

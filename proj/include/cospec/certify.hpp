#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cospec/charpoly.hpp"
#include "cospec/graph.hpp"

namespace cospec {

// A list of connected, mutually cospectral, pairwise non-isomorphic graphs
// under one spectrum kind. `verified` is only ever set by verification.
struct CospectralFamily {
    std::vector<Graph> members;
    SpectrumKind kind = SpectrumKind::adjacency;
    CharPoly char_poly;
    bool verified = false;

    int size() const { return static_cast<int>(members.size()); }
    int order() const { return members.empty() ? 0 : members.front().order(); }
};

struct CheckResult {
    bool pass = false;
    std::string witness;

    bool operator==(const CheckResult&) const = default;
};

struct ConditionResult {
    bool holds = false;
    std::string witness;

    bool operator==(const ConditionResult&) const = default;
};

// Member origin inside a construction: a grid position (product families)
// or an exponent vector (power families).
struct Provenance {
    enum class Kind { product, power };

    Kind kind = Kind::product;
    int i = -1;
    int j = -1;
    std::vector<int> exponents;

    static Provenance product(int i, int j) { return {Kind::product, i, j, {}}; }
    static Provenance power(std::vector<int> exponents)
    {
        return {Kind::power, -1, -1, std::move(exponents)};
    }

    bool operator==(const Provenance&) const = default;
};

// Machine-readable verification record. Everything in it is recomputed
// from the raw graphs; nothing is trusted from the construction side.
struct Certificate {
    SpectrumKind kind = SpectrumKind::adjacency;
    std::vector<std::string> members; // canonical graph6 strings
    int order = 0;
    std::vector<std::string> char_poly; // decimal coefficients, degree ascending
    std::map<std::string, CheckResult> checks;
    std::map<std::string, ConditionResult> conditions;
    std::vector<Provenance> provenance;
    std::vector<std::string> warnings;

    bool valid() const;
    std::string first_failure() const;

    bool operator==(const Certificate&) const = default;
};

void to_json(nlohmann::json& j, const Provenance& p);
void from_json(const nlohmann::json& j, Provenance& p);
void to_json(nlohmann::json& j, const Certificate& c);
void from_json(const nlohmann::json& j, Certificate& c);

// Recomputes connectivity, orders, characteristic polynomials and canonical
// forms for every member and records one check per family property. The
// first variant runs the per-member work through the parallel kernels, the
// second through their serial references.
Certificate verify_family(const std::vector<Graph>& graphs, SpectrumKind kind);
Certificate verify_family_serial(const std::vector<Graph>& graphs, SpectrumKind kind);

struct family_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Runs verify_family and wraps the members into a verified CospectralFamily;
// throws family_error with the first failing witness otherwise.
CospectralFamily make_verified_family(std::vector<Graph> members, SpectrumKind kind);

struct CrossSpectraResult {
    bool distinct = false;
    std::string witness;
};

// True iff the shared (order, char poly) of the two verified families differ.
CrossSpectraResult verify_cross_spectra(const CospectralFamily& a, const CospectralFamily& b);

inline constexpr int kTripletEnumerationCap = 40;

// Exact count of 3-subsets that are mutually cospectral and pairwise
// non-isomorphic.
long long enumerate_cospectral_triplets(const std::vector<Graph>& graphs, SpectrumKind kind);

} // namespace cospec

#pragma once

#include <optional>
#include <utility>

#include "cospec/cartesian.hpp"
#include "cospec/certify.hpp"

namespace cospec {

// Raised when a construction's preconditions do not hold; the message
// names the offending members and shared factors.
struct construction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Weak composition of k into p non-negative parts.
struct ExponentVector {
    std::vector<int> e;

    int sum() const;
    bool operator==(const ExponentVector&) const = default;
};

// All weak compositions of k into p parts, colexicographic on (e_1..e_p).
std::vector<ExponentVector> weak_compositions(int k, int p);

enum class ConditionUsed { condition1, condition2, condition3, coprime_pair, none };

std::string to_string(ConditionUsed c);

struct ConstructionResult {
    CospectralFamily family;
    std::vector<Provenance> provenance;
    ConditionUsed condition_used = ConditionUsed::none;
    Certificate certificate;
};

// Construction conditions on a verified family pair:
//  1. every member of both families is Cartesian prime;
//  2. the family orders are coprime;
//  3. the families share no Cartesian prime factor.
ConditionResult condition1(const CospectralFamily& gf, const CospectralFamily& hf);
ConditionResult condition2(const CospectralFamily& gf, const CospectralFamily& hf);
ConditionResult condition3(const CospectralFamily& gf, const CospectralFamily& hf);

bool check_condition1(const CospectralFamily& gf, const CospectralFamily& hf);
bool check_condition2(const CospectralFamily& gf, const CospectralFamily& hf);
bool check_condition3(const CospectralFamily& gf, const CospectralFamily& hf);

// The full p*q product grid, row-major, built under the weakest-numbered
// condition that holds; refuses with a diagnosis when none does or when
// the families share their spectrum.
ConstructionResult build_product_family(const CospectralFamily& gf, const CospectralFamily& hf);

// The cross through (i_star, j_star): column j_star plus row i_star,
// exactly p+q-1 members. Requires the chosen pair to be coprime.
// Indices are 0-based.
ConstructionResult build_relaxed_family(const CospectralFamily& gf, const CospectralFamily& hf,
                                        int i_star, int j_star);

// First coprime pair in row-major scan order, if any.
std::optional<std::pair<int, int>> find_coprime_pair(const CospectralFamily& gf,
                                                     const CospectralFamily& hf);

ConstructionResult build_relaxed_family_auto(const CospectralFamily& gf,
                                             const CospectralFamily& hf);

// The larger of the first column and the first row, size max(p, q);
// needs no primality or coprimality conditions at all.
ConstructionResult fallback_family(const CospectralFamily& gf, const CospectralFamily& hf);

bigint binomial(long long n, long long k);

// (p-1)(q-1) + (p-1) C(q,3) + (q-1) C(p,3) + C(p+q-1,3)
bigint count_new_triplets(long long p, long long q);

// One member per weak composition of k over a pairwise-coprime seed
// family; family size C(k+p-1, k), member order n^k.
ConstructionResult build_power_family(const CospectralFamily& seed, int k);

} // namespace cospec

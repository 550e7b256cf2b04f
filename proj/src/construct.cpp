#include "cospec/construct.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "cospec/canonical.hpp"
#include "cospec/parallel.hpp"

namespace cospec {

int ExponentVector::sum() const
{
    return std::accumulate(e.begin(), e.end(), 0);
}

std::vector<ExponentVector> weak_compositions(int k, int p)
{
    if (p < 1) throw std::invalid_argument("weak compositions need at least one part");
    if (k < 0) throw std::invalid_argument("weak compositions need a non-negative total");
    if (p == 1) return {ExponentVector{{k}}};
    std::vector<ExponentVector> out;
    for (int last = 0; last <= k; ++last)
        for (ExponentVector& head : weak_compositions(k - last, p - 1)) {
            head.e.push_back(last);
            out.push_back(std::move(head));
        }
    return out;
}

std::string to_string(ConditionUsed c)
{
    switch (c) {
    case ConditionUsed::condition1: return "condition1";
    case ConditionUsed::condition2: return "condition2";
    case ConditionUsed::condition3: return "condition3";
    case ConditionUsed::coprime_pair: return "coprime_pair";
    case ConditionUsed::none: return "none";
    }
    return "none";
}

namespace {

void require_inputs(const CospectralFamily& gf, const CospectralFamily& hf)
{
    if (!gf.verified || !hf.verified)
        throw std::invalid_argument("construction requires verified input families");
    if (gf.kind != hf.kind)
        throw std::invalid_argument("construction requires matching spectrum kinds");
}

void require_distinct_spectra(const CospectralFamily& gf, const CospectralFamily& hf)
{
    const CrossSpectraResult cross = verify_cross_spectra(gf, hf);
    if (!cross.distinct)
        throw construction_error("cross-family spectra are not distinct: " + cross.witness);
}

std::set<std::string> member_factor_keys(const Graph& g)
{
    std::set<std::string> keys;
    for (const auto& [factor, mult] : prime_factorize(g).factors)
        keys.insert(emit_graph6(factor));
    return keys;
}

void require_buildable_order(long long order)
{
    if (order > kCanonicalOrderCap) {
        std::ostringstream msg;
        msg << "member order " << order << " exceeds the canonical labeling cap ("
            << kCanonicalOrderCap << "), so the result could not be verified";
        throw construction_error(msg.str());
    }
}

// Builds the product grid members for the given (i, j) positions in order.
std::vector<Graph> build_products(const CospectralFamily& gf, const CospectralFamily& hf,
                                  const std::vector<std::pair<int, int>>& positions)
{
    std::vector<Graph> members(positions.size());
#pragma omp parallel for schedule(dynamic) num_threads(cospec::par::thread_limit())
    for (long long idx = 0; idx < static_cast<long long>(positions.size()); ++idx) {
        const auto [i, j] = positions[idx];
        members[idx] = cartesian_product(gf.members[i], hf.members[j]);
    }
    return members;
}

ConstructionResult finalize(std::vector<Graph> members, SpectrumKind kind,
                            std::vector<Provenance> provenance, ConditionUsed used,
                            std::map<std::string, ConditionResult> conditions)
{
    Certificate cert = verify_family(members, kind);
    cert.conditions = std::move(conditions);
    cert.provenance = provenance;
    if (!cert.valid())
        throw std::logic_error("internal error: constructed family failed verification (" +
                               cert.first_failure() + ")");

    ConstructionResult result;
    result.family.members = std::move(members);
    result.family.kind = kind;
    result.family.char_poly = char_poly(result.family.members.front(), kind);
    result.family.verified = true;
    result.provenance = std::move(provenance);
    result.condition_used = used;
    result.certificate = std::move(cert);
    return result;
}

} // namespace

ConditionResult condition1(const CospectralFamily& gf, const CospectralFamily& hf)
{
    require_inputs(gf, hf);
    for (int side = 0; side < 2; ++side) {
        const CospectralFamily& fam = side == 0 ? gf : hf;
        for (int i = 0; i < fam.size(); ++i)
            if (!is_prime(fam.members[i])) {
                std::ostringstream w;
                w << (side == 0 ? "G" : "H") << "[" << i << "] is not Cartesian prime";
                return {false, w.str()};
            }
    }
    return {true, "every member of both families is Cartesian prime"};
}

ConditionResult condition2(const CospectralFamily& gf, const CospectralFamily& hf)
{
    require_inputs(gf, hf);
    const long long a = gf.order(), b = hf.order();
    const long long d = std::gcd(a, b);
    if (d == 1) {
        std::ostringstream w;
        w << "orders " << a << " and " << b << " are coprime";
        return {true, w.str()};
    }
    std::ostringstream w;
    w << "orders " << a << " and " << b << " share the factor " << d;
    return {false, w.str()};
}

ConditionResult condition3(const CospectralFamily& gf, const CospectralFamily& hf)
{
    require_inputs(gf, hf);
    std::vector<std::set<std::string>> g_keys, h_keys;
    for (const Graph& g : gf.members) g_keys.push_back(member_factor_keys(g));
    for (const Graph& h : hf.members) h_keys.push_back(member_factor_keys(h));
    for (int i = 0; i < gf.size(); ++i)
        for (int j = 0; j < hf.size(); ++j)
            for (const std::string& key : g_keys[i])
                if (h_keys[j].count(key)) {
                    std::ostringstream w;
                    w << "G[" << i << "] and H[" << j << "] share the Cartesian prime factor "
                      << key;
                    return {false, w.str()};
                }
    return {true, "the families share no Cartesian prime factor"};
}

bool check_condition1(const CospectralFamily& gf, const CospectralFamily& hf)
{
    return condition1(gf, hf).holds;
}
bool check_condition2(const CospectralFamily& gf, const CospectralFamily& hf)
{
    return condition2(gf, hf).holds;
}
bool check_condition3(const CospectralFamily& gf, const CospectralFamily& hf)
{
    return condition3(gf, hf).holds;
}

ConstructionResult build_product_family(const CospectralFamily& gf, const CospectralFamily& hf)
{
    require_inputs(gf, hf);
    require_distinct_spectra(gf, hf);
    require_buildable_order(static_cast<long long>(gf.order()) * hf.order());

    // Conditions are evaluated in order 1, 2, 3; the first that holds
    // justifies the construction. Condition 3 is the most general and the
    // most expensive, so it is only reached when needed.
    std::map<std::string, ConditionResult> conditions;
    ConditionUsed used = ConditionUsed::none;

    conditions["condition1"] = condition1(gf, hf);
    if (conditions["condition1"].holds) {
        used = ConditionUsed::condition1;
    } else {
        conditions["condition2"] = condition2(gf, hf);
        if (conditions["condition2"].holds) {
            used = ConditionUsed::condition2;
        } else {
            conditions["condition3"] = condition3(gf, hf);
            if (conditions["condition3"].holds) used = ConditionUsed::condition3;
        }
    }
    if (used == ConditionUsed::none)
        throw construction_error("no construction condition holds: " +
                                 conditions["condition3"].witness);

    std::vector<std::pair<int, int>> positions;
    std::vector<Provenance> provenance;
    for (int i = 0; i < gf.size(); ++i)
        for (int j = 0; j < hf.size(); ++j) {
            positions.emplace_back(i, j);
            provenance.push_back(Provenance::product(i, j));
        }

    return finalize(build_products(gf, hf, positions), gf.kind, std::move(provenance), used,
                    std::move(conditions));
}

std::optional<std::pair<int, int>> find_coprime_pair(const CospectralFamily& gf,
                                                     const CospectralFamily& hf)
{
    require_inputs(gf, hf);
    for (int i = 0; i < gf.size(); ++i)
        for (int j = 0; j < hf.size(); ++j)
            if (are_coprime(gf.members[i], hf.members[j])) return std::make_pair(i, j);
    return std::nullopt;
}

ConstructionResult build_relaxed_family(const CospectralFamily& gf, const CospectralFamily& hf,
                                        int i_star, int j_star)
{
    require_inputs(gf, hf);
    require_distinct_spectra(gf, hf);
    require_buildable_order(static_cast<long long>(gf.order()) * hf.order());
    if (i_star < 0 || i_star >= gf.size() || j_star < 0 || j_star >= hf.size())
        throw std::invalid_argument("relaxed construction indices out of range");

    const CommonFactorDecomposition shared =
        common_factor(gf.members[i_star], hf.members[j_star]);
    if (shared.common.order() > 1) {
        std::ostringstream msg;
        msg << "G[" << i_star << "] and H[" << j_star
            << "] are not coprime; they share the factor "
            << emit_graph6(apply_permutation(shared.common, canonical_form(shared.common).perm));
        throw construction_error(msg.str());
    }

    std::map<std::string, ConditionResult> conditions;
    {
        std::ostringstream w;
        w << "G[" << i_star << "] and H[" << j_star << "] are coprime";
        conditions["coprime_pair"] = {true, w.str()};
    }

    // Column j_star first, then row i_star without the shared corner.
    std::vector<std::pair<int, int>> positions;
    for (int i = 0; i < gf.size(); ++i) positions.emplace_back(i, j_star);
    for (int j = 0; j < hf.size(); ++j)
        if (j != j_star) positions.emplace_back(i_star, j);

    std::vector<Provenance> provenance;
    for (auto [i, j] : positions) provenance.push_back(Provenance::product(i, j));

    return finalize(build_products(gf, hf, positions), gf.kind, std::move(provenance),
                    ConditionUsed::coprime_pair, std::move(conditions));
}

ConstructionResult build_relaxed_family_auto(const CospectralFamily& gf,
                                             const CospectralFamily& hf)
{
    const auto pair = find_coprime_pair(gf, hf);
    if (!pair)
        throw construction_error("no coprime (G, H) pair exists in the given families");
    return build_relaxed_family(gf, hf, pair->first, pair->second);
}

ConstructionResult fallback_family(const CospectralFamily& gf, const CospectralFamily& hf)
{
    require_inputs(gf, hf);
    require_distinct_spectra(gf, hf);
    require_buildable_order(static_cast<long long>(gf.order()) * hf.order());

    std::vector<std::pair<int, int>> positions;
    if (gf.size() >= hf.size())
        for (int i = 0; i < gf.size(); ++i) positions.emplace_back(i, 0);
    else
        for (int j = 0; j < hf.size(); ++j) positions.emplace_back(0, j);

    std::vector<Provenance> provenance;
    for (auto [i, j] : positions) provenance.push_back(Provenance::product(i, j));

    return finalize(build_products(gf, hf, positions), gf.kind, std::move(provenance),
                    ConditionUsed::none, {});
}

bigint binomial(long long n, long long k)
{
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    bigint result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

bigint count_new_triplets(long long p, long long q)
{
    if (p < 1 || q < 1) throw std::invalid_argument("family sizes must be at least 1");
    return bigint(p - 1) * (q - 1) + bigint(p - 1) * binomial(q, 3) +
           bigint(q - 1) * binomial(p, 3) + binomial(p + q - 1, 3);
}

ConstructionResult build_power_family(const CospectralFamily& seed, int k)
{
    if (!seed.verified)
        throw std::invalid_argument("construction requires a verified seed family");
    if (k < 1) throw std::invalid_argument("power construction requires k >= 1");

    const int p = seed.size();
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (!are_coprime(seed.members[i], seed.members[j])) {
                const CommonFactorDecomposition shared =
                    common_factor(seed.members[i], seed.members[j]);
                std::ostringstream msg;
                msg << "seed members " << i << " and " << j
                    << " are not coprime; they share the factor "
                    << emit_graph6(
                           apply_permutation(shared.common, canonical_form(shared.common).perm));
                throw construction_error(msg.str());
            }

    long long member_order = 1;
    for (int i = 0; i < k; ++i) member_order *= seed.order();
    require_buildable_order(member_order);

    const std::vector<ExponentVector> exponents = weak_compositions(k, p);
    if (bigint(static_cast<long long>(exponents.size())) !=
        binomial(static_cast<long long>(k) + p - 1, k))
        throw std::logic_error("internal error: weak composition count mismatch");

    std::vector<Graph> members(exponents.size());
#pragma omp parallel for schedule(dynamic) num_threads(cospec::par::thread_limit())
    for (long long idx = 0; idx < static_cast<long long>(exponents.size()); ++idx) {
        std::vector<Graph> factors;
        for (int i = 0; i < p; ++i)
            for (int rep = 0; rep < exponents[idx].e[i]; ++rep)
                factors.push_back(seed.members[i]);
        members[idx] = product_of(factors);
    }

    std::vector<Provenance> provenance;
    provenance.reserve(exponents.size());
    for (const ExponentVector& ev : exponents) provenance.push_back(Provenance::power(ev.e));

    std::map<std::string, ConditionResult> conditions;
    conditions["pairwise_coprime"] = {true, "all seed members are pairwise coprime"};

    return finalize(std::move(members), seed.kind, std::move(provenance),
                    ConditionUsed::coprime_pair, std::move(conditions));
}

} // namespace cospec

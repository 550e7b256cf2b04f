#include "cospec/certify.hpp"

#include <algorithm>
#include <sstream>

#include "cospec/canonical.hpp"
#include "cospec/parallel.hpp"

namespace cospec {

bool Certificate::valid() const
{
    if (checks.empty()) return false;
    for (const auto& [name, result] : checks)
        if (!result.pass) return false;
    return true;
}

std::string Certificate::first_failure() const
{
    for (const auto& [name, result] : checks)
        if (!result.pass) return name + ": " + result.witness;
    return {};
}

void to_json(nlohmann::json& j, const Provenance& p)
{
    if (p.kind == Provenance::Kind::product)
        j = nlohmann::json{{"type", "product"}, {"i", p.i}, {"j", p.j}};
    else
        j = nlohmann::json{{"type", "power"}, {"exponents", p.exponents}};
}

void from_json(const nlohmann::json& j, Provenance& p)
{
    const std::string type = j.at("type").get<std::string>();
    if (type == "product") {
        p.kind = Provenance::Kind::product;
        p.i = j.at("i").get<int>();
        p.j = j.at("j").get<int>();
        p.exponents.clear();
    } else if (type == "power") {
        p.kind = Provenance::Kind::power;
        p.i = -1;
        p.j = -1;
        p.exponents = j.at("exponents").get<std::vector<int>>();
    } else {
        throw std::invalid_argument("unknown provenance type: " + type);
    }
}

namespace {

void to_json_check(nlohmann::json& j, const CheckResult& r)
{
    j = nlohmann::json{{"pass", r.pass}, {"witness", r.witness}};
}

void to_json_condition(nlohmann::json& j, const ConditionResult& r)
{
    j = nlohmann::json{{"holds", r.holds}, {"witness", r.witness}};
}

} // namespace

void to_json(nlohmann::json& j, const Certificate& c)
{
    nlohmann::json checks = nlohmann::json::object();
    for (const auto& [name, result] : c.checks) to_json_check(checks[name], result);
    nlohmann::json conditions = nlohmann::json::object();
    for (const auto& [name, result] : c.conditions) to_json_condition(conditions[name], result);

    j = nlohmann::json{{"kind", to_string(c.kind)},
                       {"members", c.members},
                       {"order", c.order},
                       {"char_poly", c.char_poly},
                       {"checks", checks},
                       {"conditions", conditions},
                       {"provenance", c.provenance},
                       {"warnings", c.warnings},
                       {"valid", c.valid()}};
}

void from_json(const nlohmann::json& j, Certificate& c)
{
    c.kind = spectrum_kind_from_string(j.at("kind").get<std::string>());
    c.members = j.at("members").get<std::vector<std::string>>();
    c.order = j.at("order").get<int>();
    c.char_poly = j.at("char_poly").get<std::vector<std::string>>();
    c.checks.clear();
    for (const auto& [name, entry] : j.at("checks").items())
        c.checks[name] = CheckResult{entry.at("pass").get<bool>(),
                                     entry.at("witness").get<std::string>()};
    c.conditions.clear();
    for (const auto& [name, entry] : j.at("conditions").items())
        c.conditions[name] = ConditionResult{entry.at("holds").get<bool>(),
                                             entry.at("witness").get<std::string>()};
    c.provenance = j.at("provenance").get<std::vector<Provenance>>();
    c.warnings = j.at("warnings").get<std::vector<std::string>>();
}

namespace {

struct MemberProfiles {
    std::vector<bool> connected;
    std::vector<CharPoly> polys;
    std::vector<std::string> canon; // empty string when over the canonical cap
    bool canon_capped = false;
};

MemberProfiles profile_members(const std::vector<Graph>& graphs, SpectrumKind kind, bool parallel)
{
    const long long count = static_cast<long long>(graphs.size());
    MemberProfiles p;
    p.connected.assign(graphs.size(), false);
    p.polys.assign(graphs.size(), {});
    p.canon.assign(graphs.size(), {});
    for (const Graph& g : graphs) {
        if (g.order() < 1) throw std::invalid_argument("family members must be non-empty graphs");
        if (g.order() > kCanonicalOrderCap) p.canon_capped = true;
    }

    if (parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(cospec::par::thread_limit())
        for (long long i = 0; i < count; ++i) {
            p.connected[i] = is_connected(graphs[i]);
            p.polys[i] = char_poly(graphs[i], kind);
            if (graphs[i].order() <= kCanonicalOrderCap)
                p.canon[i] = canonical_form(graphs[i]).canon_g6;
        }
    } else {
        for (long long i = 0; i < count; ++i) {
            p.connected[i] = is_connected(graphs[i]);
            p.polys[i] = char_poly_serial(graphs[i], kind);
            if (graphs[i].order() <= kCanonicalOrderCap)
                p.canon[i] = canonical_form(graphs[i]).canon_g6;
        }
    }
    return p;
}

Certificate build_certificate(const std::vector<Graph>& graphs, SpectrumKind kind,
                              const MemberProfiles& p)
{
    Certificate cert;
    cert.kind = kind;
    cert.order = graphs.front().order();
    cert.char_poly = p.polys.front().decimal_coeffs();
    for (std::size_t i = 0; i < graphs.size(); ++i)
        cert.members.push_back(!p.canon[i].empty() ? p.canon[i] : emit_graph6(graphs[i]));

    CheckResult connected{true, ""};
    for (std::size_t i = 0; i < graphs.size(); ++i)
        if (!p.connected[i]) {
            connected = {false, "member " + std::to_string(i) + " is not connected"};
            break;
        }
    cert.checks["connected"] = connected;

    CheckResult orders{true, ""};
    for (std::size_t i = 0; i < graphs.size(); ++i)
        if (graphs[i].order() != cert.order) {
            orders = {false, "member " + std::to_string(i) + " has order " +
                                 std::to_string(graphs[i].order()) + ", expected " +
                                 std::to_string(cert.order)};
            break;
        }
    cert.checks["orders_equal"] = orders;

    CheckResult cosp{true, ""};
    for (std::size_t i = 1; i < graphs.size(); ++i)
        if (!(p.polys[i] == p.polys[0])) {
            cosp = {false, "members 0 and " + std::to_string(i) +
                               " have different characteristic polynomials"};
            break;
        }
    cert.checks["cospectral"] = cosp;

    CheckResult noniso{true, ""};
    if (p.canon_capped) {
        noniso = {false, "member order exceeds the canonical labeling cap; "
                         "pairwise non-isomorphism was not certified"};
        cert.warnings.push_back("order " + std::to_string(cert.order) +
                                " exceeds the canonical labeling cap (" +
                                std::to_string(kCanonicalOrderCap) +
                                "); member strings use input labels");
    } else {
        std::map<std::string, std::size_t> seen;
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            auto [it, inserted] = seen.try_emplace(p.canon[i], i);
            if (!inserted) {
                noniso = {false, "members " + std::to_string(it->second) + " and " +
                                     std::to_string(i) + " are isomorphic (canonical form " +
                                     p.canon[i] + ")"};
                break;
            }
        }
    }
    cert.checks["pairwise_nonisomorphic"] = noniso;
    return cert;
}

Certificate verify_family_impl(const std::vector<Graph>& graphs, SpectrumKind kind, bool parallel)
{
    if (graphs.empty()) throw std::invalid_argument("cannot verify an empty family");
    return build_certificate(graphs, kind, profile_members(graphs, kind, parallel));
}

} // namespace

Certificate verify_family(const std::vector<Graph>& graphs, SpectrumKind kind)
{
    return verify_family_impl(graphs, kind, true);
}

Certificate verify_family_serial(const std::vector<Graph>& graphs, SpectrumKind kind)
{
    return verify_family_impl(graphs, kind, false);
}

CospectralFamily make_verified_family(std::vector<Graph> members, SpectrumKind kind)
{
    Certificate cert = verify_family(members, kind);
    if (!cert.valid())
        throw family_error("family verification failed (" + cert.first_failure() + ")");
    CospectralFamily fam;
    fam.members = std::move(members);
    fam.kind = kind;
    fam.char_poly = char_poly(fam.members.front(), kind);
    fam.verified = true;
    return fam;
}

CrossSpectraResult verify_cross_spectra(const CospectralFamily& a, const CospectralFamily& b)
{
    if (!a.verified || !b.verified)
        throw std::invalid_argument("cross-spectra comparison requires verified families");
    if (a.kind != b.kind)
        throw std::invalid_argument("cross-spectra comparison requires matching spectrum kinds");
    if (a.order() != b.order() || !(a.char_poly == b.char_poly)) return {true, ""};
    std::ostringstream witness;
    witness << "families share order " << a.order() << " and characteristic polynomial";
    return {false, witness.str()};
}

long long enumerate_cospectral_triplets(const std::vector<Graph>& graphs, SpectrumKind kind)
{
    const int n = static_cast<int>(graphs.size());
    if (n < 3) throw std::invalid_argument("triplet enumeration needs at least three graphs");
    if (n > kTripletEnumerationCap)
        throw std::invalid_argument("triplet enumeration cap exceeded");
    for (const Graph& g : graphs)
        if (g.order() > kCanonicalOrderCap)
            throw std::invalid_argument("triplet enumeration requires orders within the canonical labeling cap");

    MemberProfiles p = profile_members(graphs, kind, true);

    std::vector<std::vector<bool>> cosp(n, std::vector<bool>(n, false));
    std::vector<std::vector<bool>> iso(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            cosp[i][j] = graphs[i].order() == graphs[j].order() && p.polys[i] == p.polys[j];
            iso[i][j] = !p.canon[i].empty() && p.canon[i] == p.canon[j];
        }

    long long count = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!cosp[i][j] || iso[i][j]) continue;
            for (int k = j + 1; k < n; ++k)
                if (cosp[i][k] && cosp[j][k] && !iso[i][k] && !iso[j][k]) ++count;
        }
    return count;
}

} // namespace cospec

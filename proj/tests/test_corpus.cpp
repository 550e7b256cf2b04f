#include <doctest.h>

#include <map>
#include <sstream>

#include "cospec/canonical.hpp"
#include "cospec/cartesian.hpp"
#include "cospec/corpus.hpp"
#include "oracles.hpp"
#include "seeds.hpp"

using namespace cospec;
using namespace cospec::test;

namespace {

std::map<int, int> classes_per_order(const Corpus& corpus)
{
    std::map<int, int> counts;
    for (const Graph& g : corpus.graphs) ++counts[g.order()];
    return counts;
}

} // namespace

TEST_CASE("connected class counts match the known values up to 6 vertices")
{
    const auto counts = classes_per_order(corpus6());
    CHECK(counts.at(1) == 1);
    CHECK(counts.at(2) == 1);
    CHECK(counts.at(3) == 2);
    CHECK(counts.at(4) == 6);
    CHECK(counts.at(5) == 21);
    CHECK(counts.at(6) == 112);
}

TEST_CASE("enumeration agrees with the permutation-search oracle")
{
    for (int n = 1; n <= 6; ++n)
        CHECK(classes_per_order(corpus6()).at(n) == count_connected_classes_brute(n));
}

TEST_CASE("serial and parallel corpus generation agree")
{
    const Corpus serial = generate_small_corpus_serial(5);
    const Corpus parallel = generate_small_corpus(5);
    REQUIRE(serial.graphs.size() == parallel.graphs.size());
    for (std::size_t i = 0; i < serial.graphs.size(); ++i)
        CHECK(serial.graphs[i] == parallel.graphs[i]);
}

TEST_CASE("every corpus entry is connected and canonical")
{
    for (const Graph& g : corpus6().graphs) {
        CHECK(is_connected(g));
        CHECK(canonical_form(g).canon_g6 == emit_graph6(g));
    }
}

TEST_CASE("corpus generation rejects out-of-range orders")
{
    CHECK_THROWS_AS(generate_small_corpus(0), std::invalid_argument);
    CHECK_THROWS_AS(generate_small_corpus(9), std::invalid_argument);
}

TEST_CASE("corpus files load with comments, blanks and line numbers")
{
    std::istringstream in("# header\nA_\n\nBg\n# trailing comment\nA_\n");
    const Corpus corpus = load_corpus(in);
    REQUIRE(corpus.graphs.size() == 3);
    CHECK(corpus.line_numbers == std::vector<int>{2, 4, 6});
    CHECK(corpus.stats.total == 3);
    CHECK(corpus.stats.connected == 3);
    CHECK(corpus.stats.duplicate_canonical == 1);

    std::istringstream bad("A_\n*oops\n");
    CHECK_THROWS_WITH_AS(load_corpus(bad), doctest::Contains("line 2"), graph6_error);
}

TEST_CASE("no connected adjacency-cospectral families below 6 vertices")
{
    const Corpus corpus = generate_small_corpus(5);
    SeedOptions opts;
    CHECK(find_seed_families(corpus, SpectrumKind::adjacency, opts).empty());
}

TEST_CASE("the 6-vertex corpus has exactly one adjacency family and two Laplacian ones")
{
    SeedOptions opts;
    const auto adjacency = find_seed_families(corpus6(), SpectrumKind::adjacency, opts);
    REQUIRE(adjacency.size() == 1);
    CHECK(adjacency[0].size() == 2);
    CHECK(adjacency[0].order() == 6);
    CHECK(adjacency[0].verified);

    const auto laplacian = find_seed_families(corpus6(), SpectrumKind::laplacian, opts);
    CHECK(laplacian.size() == 2);
    for (const auto& family : laplacian) {
        CHECK(family.size() == 2);
        CHECK(family.order() == 6);
    }
}

TEST_CASE("discovered families always verify")
{
    SeedOptions opts;
    for (SpectrumKind kind : {SpectrumKind::adjacency, SpectrumKind::laplacian})
        for (const CospectralFamily& family : find_seed_families(corpus6(), kind, opts)) {
            const Certificate cert = verify_family(family.members, kind);
            CHECK(cert.valid());
        }
}

TEST_CASE("seed filters keep prime and pairwise-coprime members")
{
    SeedOptions prime_opts;
    prime_opts.require_prime = true;
    const auto prime_fams = find_seed_families(corpus6(), SpectrumKind::adjacency, prime_opts);
    REQUIRE(prime_fams.size() == 1);
    for (const Graph& g : prime_fams[0].members) CHECK(is_prime(g));

    SeedOptions coprime_opts;
    coprime_opts.require_coprime = true;
    const auto coprime_fams =
        find_seed_families(corpus6(), SpectrumKind::adjacency, coprime_opts);
    REQUIRE(coprime_fams.size() == 1);
    REQUIRE(coprime_fams[0].size() == 2);
    CHECK(are_coprime(coprime_fams[0].members[0], coprime_fams[0].members[1]));
}

TEST_CASE("isomorphism is an equivalence relation across the 6-vertex corpus")
{
    // corpus entries are distinct classes, so only reflexivity can hold
    const auto& graphs = corpus6().graphs;
    for (std::size_t i = 0; i < graphs.size(); i += 17) CHECK(are_isomorphic(graphs[i], graphs[i]));

    std::mt19937 rng(246810);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph& a = graphs[rng() % graphs.size()];
        const Graph& b = graphs[rng() % graphs.size()];
        const Graph a2 = apply_permutation(a, random_permutation(rng, a.order()));
        CHECK(are_isomorphic(a, b) == are_isomorphic(b, a));
        CHECK(are_isomorphic(a, a2));
        // transitivity through the relabeled copy
        if (are_isomorphic(b, a)) CHECK(are_isomorphic(b, a2));
    }
}

TEST_CASE("family members are sorted by canonical string")
{
    const CospectralFamily& pair = adjacency_pair6();
    CHECK(emit_graph6(pair.members[0]) < emit_graph6(pair.members[1]));
}

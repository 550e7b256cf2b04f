#include <doctest.h>

#include <random>

#include "cospec/canonical.hpp"
#include "cospec/cartesian.hpp"
#include "cospec/certify.hpp"
#include "cospec/corpus.hpp"
#include "cospec/parallel.hpp"
#include "oracles.hpp"
#include "seeds.hpp"

using namespace cospec;
using namespace cospec::test;

TEST_CASE("thread limit override clamps to a sane range")
{
    const int before = par::thread_limit();
    CHECK(before >= 1);
    par::set_thread_limit(1);
    CHECK(par::thread_limit() == 1);
    par::set_thread_limit(-3);
    CHECK(par::thread_limit() == 1);
    par::set_thread_limit(1 << 20);
    CHECK(par::thread_limit() >= 1);
    par::set_thread_limit(before);
    CHECK(par::thread_limit() == before);
}

TEST_CASE("parallel kernels match their serial references on a product workload")
{
    const CospectralFamily& pair = adjacency_pair6();
    const Graph big = cartesian_product(cartesian_product(pair.members[0], pair.members[1]),
                                        complete_graph(2));
    for (SpectrumKind kind : {SpectrumKind::adjacency, SpectrumKind::laplacian})
        CHECK(char_poly(big, kind) == char_poly_serial(big, kind));
}

TEST_CASE("parallel kernels are insensitive to the thread cap")
{
    const int before = par::thread_limit();
    const Graph g = cartesian_product(adjacency_pair6().members[0], path_graph(4));

    par::set_thread_limit(1);
    const CharPoly one = char_poly(g, SpectrumKind::laplacian);
    par::set_thread_limit(before);
    const CharPoly many = char_poly(g, SpectrumKind::laplacian);
    CHECK(one == many);
}

TEST_CASE("batch canonical labeling matches the serial batch")
{
    const Corpus& corpus = corpus6();
    CHECK(canonical_batch(corpus.graphs) == canonical_batch_serial(corpus.graphs));
}

TEST_CASE("serial and parallel corpus generation match exactly")
{
    const Corpus serial = generate_small_corpus_serial(6);
    const Corpus& parallel = corpus6();
    REQUIRE(serial.graphs.size() == parallel.graphs.size());
    for (std::size_t i = 0; i < serial.graphs.size(); ++i)
        CHECK(emit_graph6(serial.graphs[i]) == emit_graph6(parallel.graphs[i]));
}

TEST_CASE("serial and parallel family verification agree on a product family")
{
    const CospectralFamily& pair = adjacency_pair6();
    std::vector<Graph> members;
    for (const Graph& g : pair.members)
        for (const Graph& h : pair.members) members.push_back(cartesian_product(g, h));
    CHECK(verify_family(members, SpectrumKind::adjacency) ==
          verify_family_serial(members, SpectrumKind::adjacency));
}

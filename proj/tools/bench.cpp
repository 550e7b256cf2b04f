// Compares the OpenMP kernels against their serial reference
// implementations on representative workloads.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "cospec/canonical.hpp"
#include "cospec/cartesian.hpp"
#include "cospec/corpus.hpp"
#include "cospec/parallel.hpp"

using namespace cospec;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename F>
double timed(F&& f)
{
    const auto start = std::chrono::steady_clock::now();
    f();
    return seconds_since(start);
}

void report(const char* name, double serial, double parallel)
{
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx\n", name, serial,
                parallel, parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main(int argc, char** argv)
{
    int corpus_n = 6;
    if (argc > 1) corpus_n = std::max(1, std::min(kMaxEnumerationOrder, std::atoi(argv[1])));

    std::printf("thread limit: %d\n", par::thread_limit());

    // corpus enumeration
    Corpus corpus;
    {
        const double ts = timed([&] { corpus = generate_small_corpus_serial(corpus_n); });
        Corpus parallel_corpus;
        const double tp = timed([&] { parallel_corpus = generate_small_corpus(corpus_n); });
        report(("gen-corpus nmax=" + std::to_string(corpus_n)).c_str(), ts, tp);
        if (parallel_corpus.graphs.size() != corpus.graphs.size())
            std::printf("MISMATCH: corpus sizes differ\n");
    }

    // batch canonical labeling over the corpus
    {
        std::vector<std::string> serial_canon, parallel_canon;
        const double ts = timed([&] { serial_canon = canonical_batch_serial(corpus.graphs); });
        const double tp = timed([&] { parallel_canon = canonical_batch(corpus.graphs); });
        report("canonical batch", ts, tp);
        if (serial_canon != parallel_canon) std::printf("MISMATCH: canonical batches differ\n");
    }

    // characteristic polynomial of a medium product graph
    {
        const Graph* a = nullptr;
        const Graph* b = nullptr;
        for (const Graph& g : corpus.graphs)
            if (g.order() == corpus_n) {
                if (!a)
                    a = &g;
                else if (!b) {
                    b = &g;
                    break;
                }
            }
        const Graph big = cartesian_product(cartesian_product(*a, *b), *a);
        std::printf("charpoly test graph: %d vertices, %zu edges\n", big.order(),
                    big.edge_count());
        for (SpectrumKind kind : {SpectrumKind::adjacency, SpectrumKind::laplacian}) {
            CharPoly ps, pp;
            const double ts = timed([&] { ps = char_poly_serial(big, kind); });
            const double tp = timed([&] { pp = char_poly(big, kind); });
            report(("charpoly " + to_string(kind)).c_str(), ts, tp);
            if (!(ps == pp)) std::printf("MISMATCH: charpoly kernels differ\n");
        }
    }

    // family verification over a manufactured product family
    {
        std::vector<Graph> members;
        for (std::size_t i = 0; i + 1 < corpus.graphs.size() && members.size() < 6; ++i)
            if (corpus.graphs[i].order() == corpus_n)
                members.push_back(
                    cartesian_product(corpus.graphs[i], corpus.graphs[i + 1]));
        Certificate cs, cp;
        const double ts = timed([&] { cs = verify_family_serial(members, SpectrumKind::adjacency); });
        const double tp = timed([&] { cp = verify_family(members, SpectrumKind::adjacency); });
        report("verify family", ts, tp);
        if (!(cs == cp)) std::printf("MISMATCH: verification certificates differ\n");
    }

    return 0;
}

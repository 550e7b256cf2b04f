#include "seeds.hpp"

#include <stdexcept>

namespace cospec::test {

const Corpus& corpus6()
{
    static const Corpus corpus = generate_small_corpus(6);
    return corpus;
}

std::vector<CospectralFamily> families_on(const Corpus& corpus, SpectrumKind kind, int order,
                                          int min_size)
{
    SeedOptions opts;
    opts.min_size = min_size;
    std::vector<CospectralFamily> out;
    for (CospectralFamily& family : find_seed_families(corpus, kind, opts))
        if (family.order() == order) out.push_back(std::move(family));
    return out;
}

const CospectralFamily& adjacency_pair6()
{
    static const CospectralFamily family = [] {
        auto families = families_on(corpus6(), SpectrumKind::adjacency, 6, 2);
        if (families.size() != 1 || families[0].size() != 2)
            throw std::logic_error("expected exactly one adjacency-cospectral pair on 6 vertices");
        return families[0];
    }();
    return family;
}

} // namespace cospec::test

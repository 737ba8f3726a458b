#include "rainbow/random.hpp"

namespace rainbow {

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial)
{
    std::uint64_t z = seed + trial * 0x9E3779B97F4A7C15ULL + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Hypergraph random_hypergraph(std::size_t n, std::size_t k, double density, InstanceRng& rng)
{
    std::vector<Edge> edges;
    for (const auto& e : all_k_subsets(n, k))
        if (rng.keep(density))
            edges.push_back(e);
    return Hypergraph(k, n, std::move(edges));
}

HypergraphFamily random_family(std::size_t n, std::size_t members, double density, InstanceRng& rng)
{
    std::vector<Hypergraph> out;
    out.reserve(members);
    for (std::size_t i = 0; i < members; ++i)
        out.push_back(random_hypergraph(n, 3, density, rng));
    return HypergraphFamily(n, std::move(out));
}

} // namespace rainbow

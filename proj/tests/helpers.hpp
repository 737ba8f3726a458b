#pragma once

#include "rainbow/random.hpp"

#include <vector>

namespace testing {

inline rainbow::Hypergraph random_graph(std::uint64_t seed, std::size_t n, std::size_t k, double density)
{
    rainbow::InstanceRng rng(seed);
    return rainbow::random_hypergraph(n, k, density, rng);
}

inline std::vector<rainbow::Vertex> iota(std::size_t from, std::size_t count)
{
    std::vector<rainbow::Vertex> out(count);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = static_cast<rainbow::Vertex>(from + i);
    return out;
}

} // namespace testing

#pragma once

#include "rainbow/constructions.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace rainbow {

/// Seeded instance generator. Each edge slot is kept iff the top 53 bits of
/// one mt19937_64 draw, read as a fraction of 2^53, fall below the density.
class InstanceRng {
public:
    static constexpr std::string_view algorithm = "mt19937_64/splitmix64-trial/u53-threshold";

    explicit InstanceRng(std::uint64_t seed)
        : engine_(seed)
    {
    }

    std::uint64_t next() { return engine_(); }
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool keep(double density) { return unit() < density; }

private:
    std::mt19937_64 engine_;
};

/// splitmix64 of seed + trial; trials are independent of execution order.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// Independent inclusion of every k-subset of [0, n) in lexicographic order.
Hypergraph random_hypergraph(std::size_t n, std::size_t k, double density, InstanceRng& rng);

/// `members` independent random 3-graphs on n vertices.
HypergraphFamily random_family(std::size_t n, std::size_t members, double density, InstanceRng& rng);

} // namespace rainbow

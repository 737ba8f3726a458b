#pragma once

#include "rainbow/constructions.hpp"
#include "rainbow/hypergraph.hpp"

#include <chrono>
#include <optional>
#include <string_view>
#include <vector>

namespace rainbow {

enum class Outcome { found, none, unknown };

std::string_view outcome_name(Outcome outcome);

struct SearchLimits {
    /// Zero or negative disables the limit.
    std::chrono::milliseconds timeout{60'000};
};

/// Pairwise vertex-disjoint edges.
struct Matching {
    std::vector<Edge> edges;

    std::size_t size() const { return edges.size(); }
    friend bool operator==(const Matching&, const Matching&) = default;
};

struct RainbowPair {
    std::size_t color;
    Edge edge;

    friend bool operator==(const RainbowPair&, const RainbowPair&) = default;
};

/// One edge per colour; pairs are ordered by colour.
struct RainbowMatching {
    std::vector<RainbowPair> pairs;

    friend bool operator==(const RainbowMatching&, const RainbowMatching&) = default;
};

template <typename Witness>
struct SearchResult {
    Outcome outcome = Outcome::none;
    std::optional<Witness> witness;

    bool found() const { return outcome == Outcome::found; }
};

/// A maximum matching. Deterministic branch and bound over vertices in id
/// order; requires n <= 64.
Matching max_matching(const Hypergraph& h);

/// Found (with witness) iff k | n and a perfect matching exists.
SearchResult<Matching> has_perfect_matching(const Hypergraph& h, SearchLimits limits = {});

/// Exhaustive backtracking over colours in index order, candidates in
/// canonical order, with a forward check on every remaining colour.
SearchResult<RainbowMatching> rainbow_matching(const HypergraphFamily& family, SearchLimits limits = {});

/// Perfect matching of a balanced (1,3)-partite graph. Throws InputError on
/// unbalanced input.
SearchResult<Matching> partite_perfect_matching(const PartiteHypergraph& h, SearchLimits limits = {});

/// Edges are members of `h` and pairwise disjoint.
bool is_matching(const Hypergraph& h, const Matching& m);

/// A matching of `h` covering every vertex.
bool is_perfect_matching(const Hypergraph& h, const Matching& m);

/// Every colour of `family` used exactly once, edges disjoint and drawn from
/// the right member.
bool is_rainbow_matching(const HypergraphFamily& family, const RainbowMatching& m);

/// Vertices covered by `m`.
VertexSet covered_vertices(const Matching& m);

} // namespace rainbow

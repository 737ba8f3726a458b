#pragma once

#include "rainbow/constructions.hpp"
#include "rainbow/solvers.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace rainbow {

/// Vertex set of a partite graph with |P-part| = 3 |Q-part|.
class BalancedSet {
public:
    BalancedSet() = default;
    /// Splits `vertices` by class; throws InputError unless balanced.
    BalancedSet(const VertexSet& vertices, const PartiteHypergraph& h);

    const VertexSet& q_part() const { return q_part_; }
    const VertexSet& p_part() const { return p_part_; }
    VertexSet all() const { return q_part_.united(p_part_); }
    std::size_t size() const { return q_part_.size() + p_part_.size(); }

    friend bool operator==(const BalancedSet&, const BalancedSet&) = default;

private:
    VertexSet q_part_;
    VertexSet p_part_;
};

/// An absorbing 24-set `body` for the 4-set `target`, with the perfect
/// matchings of H[body] and H[target + body] that witness it.
struct AbsorberGadget {
    BalancedSet target;
    BalancedSet body;
    Matching pm_t;
    Matching pm_at;
};

/// Raised when no unused gadget of the pool absorbs some 4-set.
class AbsorptionError : public std::runtime_error {
public:
    AbsorptionError(const std::string& message, VertexSet unabsorbed)
        : std::runtime_error(message)
        , unabsorbed_(std::move(unabsorbed))
    {
    }

    const VertexSet& unabsorbed() const { return unabsorbed_; }

private:
    VertexSet unabsorbed_;
};

bool is_balanced(const VertexSet& s, const PartiteHypergraph& h);

/// The partite graph induced on `keep`, relabelled with Q first.
struct InducedPartite {
    PartiteHypergraph graph;
    std::vector<Vertex> original; ///< original[new id] = old id
};
InducedPartite induced_partite(const PartiteHypergraph& h, const VertexSet& keep);

/// Perfect matching of H[s] in original ids, via the exact partite solver.
SearchResult<Matching> induced_perfect_matching(const PartiteHypergraph& h, const VertexSet& s, SearchLimits limits = {});

struct AbsorbingCheck {
    Outcome outcome = Outcome::none;
    std::optional<Matching> pm_t;
    std::optional<Matching> pm_at;

    bool absorbing() const { return outcome == Outcome::found; }
};

/// Whether t is an absorbing 24-set for a. Throws InputError unless
/// |t| = 24, |a| = 4, both balanced and disjoint.
AbsorbingCheck is_absorbing(const VertexSet& t, const VertexSet& a, const PartiteHypergraph& h,
                            SearchLimits limits = {});

struct Anchor {
    Vertex x;
    VertexSet neighbours;
};

/// A minimum-degree vertex x of f (smallest id on ties) and the vertices
/// adjacent to it.
Anchor low_degree_anchor(const Hypergraph& f);

/// Vertices lying in the anchor neighbourhood of at least `threshold`
/// members, in the family's own ids.
VertexSet popular_vertices(const HypergraphFamily& family, std::size_t threshold);

struct GadgetOptions {
    std::size_t node_budget = 1'000'000;
    /// Vertices the gadget must avoid (e.g. an existing pool).
    VertexSet forbidden;
};

/// Backtracking construction of the 24-vertex, 7-edge double matching: three
/// vertices of C, an edge of the link of A's Q-vertex, then six edges f_i
/// hanging off consecutive pairs. Returns nothing when the budget or the
/// search space runs out. `c` holds graph ids.
std::optional<AbsorberGadget> build_gadget(const VertexSet& a, const PartiteHypergraph& h, const VertexSet& c,
                                           const GadgetOptions& options = {});

/// `s` cut into balanced 4-sets: Q-vertices ascending, each with the next
/// three P-vertices in ascending order.
std::vector<VertexSet> split_into_quads(const BalancedSet& s);

/// Absorbs `s` into a pairwise disjoint gadget pool: every 4-set of
/// split_into_quads(s) takes the first unused gadget that absorbs it, every
/// other gadget contributes its pm_t. Returns a perfect matching of
/// H[s + V(pool)]. Throws AbsorptionError naming the first 4-set that no
/// gadget absorbs.
Matching absorb(const std::vector<AbsorberGadget>& pool, const BalancedSet& s, const PartiteHypergraph& h,
                SearchLimits limits = {});

} // namespace rainbow

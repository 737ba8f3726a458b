#pragma once

#include "rainbow/constructions.hpp"
#include "rainbow/fractional.hpp"
#include "rainbow/solvers.hpp"

#include <optional>
#include <vector>

namespace rainbow {

/// A partite graph together with a labelling of Q and P. q_order[r] is the
/// Q-vertex of rank r (rank 0 plays u_1), likewise p_order for P.
class OrderedPartite {
public:
    OrderedPartite() = default;
    /// Orders must be permutations of the Q and P ids respectively.
    OrderedPartite(PartiteHypergraph graph, std::vector<Vertex> q_order, std::vector<Vertex> p_order);
    /// Identity labelling.
    explicit OrderedPartite(PartiteHypergraph graph);

    const PartiteHypergraph& graph() const { return graph_; }
    std::span<const Vertex> q_order() const { return q_order_; }
    std::span<const Vertex> p_order() const { return p_order_; }
    std::size_t q_rank(Vertex u) const { return rank_[u]; }
    std::size_t p_rank(Vertex v) const { return rank_[v]; }

    /// Same labelling, different edge set.
    OrderedPartite with_graph(PartiteHypergraph graph) const;

private:
    PartiteHypergraph graph_;
    std::vector<Vertex> q_order_;
    std::vector<Vertex> p_order_;
    std::vector<std::size_t> rank_;
};

/// One deletion round: every edge containing {u, v_j, v_k} is removed.
struct ShiftStep {
    std::size_t q_rank;
    std::size_t j_rank;
    std::size_t k_rank;
    Vertex u;
    Vertex v_j;
    Vertex v_k;
    std::size_t removed;
};

struct ShiftTrace {
    std::vector<ShiftStep> steps;
    bool stable = false;

    std::size_t removed_total() const;
};

/// e precedes f: rank(u_e) <= rank(u_f) and the rank-sorted P-triples are
/// componentwise <=. Throws InputError on non-partite edges.
bool prec(const Edge& e, const Edge& f, const OrderedPartite& ord);

/// Upward closed under prec.
bool is_stable(const OrderedPartite& h);

/// Q and P each sorted by ascending weight, ties by id.
OrderedPartite order_by_cover(const PartiteHypergraph& h, const FractionalCover& p);

/// All partite 4-sets whose weight sum is at least 1, labelled by `ord`.
/// Throws InputError when p does not cover h.
OrderedPartite build_h_prime(const PartiteHypergraph& h, const FractionalCover& p, const OrderedPartite& ord);

/// Iterative deletion: while some live triple {u_i, v_j, v_k} has
/// deg(u_i v_j) + deg(u_i v_k) <= threshold, take the one minimising
/// i + j + k (ties: lexicographically smallest (i, j, k), j < k) and delete
/// every edge through it. `max_steps` truncates the run. Throws InputError if
/// the input is not stable.
std::pair<OrderedPartite, ShiftTrace> stable_shift(const OrderedPartite& h0, long long threshold,
                                                   std::optional<std::size_t> max_steps = std::nullopt);

/// For every live triple (u, v_j, v_k): deg(u v_j) + deg(u v_k) > threshold.
bool codegree_condition_holds(const PartiteHypergraph& h, long long threshold);

/// Smallest deg(u v_j) + deg(u v_k) over live triples; empty for an empty graph.
std::optional<long long> min_codegree_sum(const PartiteHypergraph& h);

/// P-triples t with t + {u} an edge, in global ids.
Hypergraph p_link(const PartiteHypergraph& h, Vertex u);

/// Assigns the link matching's triples, sorted by descending rank triple, to
/// u_1, u_2, ... in rank order. Throws InputError if link_pm is not a perfect
/// matching of P inside the link of u_1, ContractError if an assigned 4-set
/// is missing from h.
Matching extend_pm_from_link(const OrderedPartite& h, const Matching& link_pm);

struct PipelineOptions {
    /// Defaults to (2n^2 - 8n + 6)/3 with n = |P|.
    std::optional<long long> threshold;
    SearchLimits limits{};
    /// Also solve nu* of H'' (the Claim-1 cross-check).
    bool check_nu_second = true;
};

struct PipelineResult {
    bool pm_found = false;
    Outcome link_outcome = Outcome::none;
    long long threshold = 0;
    OrderedPartite h_prime;
    OrderedPartite h_second;
    ShiftTrace trace;
    /// E(H) is contained in E(H'').
    bool containment = false;
    Rational nu_star_h;
    Rational tau_star_h;
    std::optional<Rational> nu_star_h_second;
    std::optional<Matching> witness;
    /// pm_found and containment: nu*(H) = |Q| follows.
    bool certified = false;
    /// Every cross-check that applies agrees.
    bool consistent = false;
};

/// tau* -> order -> H' -> shift -> link PM of u_1 -> extension. Throws
/// InputError on unbalanced input.
PipelineResult fractional_pm_pipeline(const PartiteHypergraph& h, const PipelineOptions& options = {});

} // namespace rainbow

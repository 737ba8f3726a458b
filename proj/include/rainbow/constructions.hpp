#pragma once

#include "rainbow/hypergraph.hpp"

#include <vector>

namespace rainbow {

/// Ordered 3-graphs F_1..F_t on a shared vertex set [0, n).
class HypergraphFamily {
public:
    HypergraphFamily() = default;
    /// Every member must be 3-uniform on exactly n vertices.
    HypergraphFamily(std::size_t n_vertices, std::vector<Hypergraph> members);

    std::size_t n() const { return n_; }
    std::size_t size() const { return members_.size(); }
    const Hypergraph& operator[](std::size_t i) const { return members_[i]; }
    std::span<const Hypergraph> members() const { return members_; }

private:
    std::size_t n_ = 0;
    std::vector<Hypergraph> members_;
};

/// (1,3)-partite 4-graph. Q occupies ids [0, q), P occupies [q, q + p), and
/// every edge has exactly one Q-vertex.
class PartiteHypergraph {
public:
    PartiteHypergraph() = default;
    PartiteHypergraph(std::size_t q_size, std::size_t p_size, std::vector<Edge> edges, bool normalize = false);
    PartiteHypergraph(std::size_t q_size, std::size_t p_size, Hypergraph graph);

    std::size_t q_size() const { return q_; }
    std::size_t p_size() const { return p_; }
    std::size_t n() const { return q_ + p_; }
    bool balanced() const { return 3 * q_ == p_; }
    bool is_q(Vertex v) const { return v < q_; }
    bool is_p(Vertex v) const { return v >= q_ && v < q_ + p_; }
    Vertex q_vertex(std::size_t i) const { return static_cast<Vertex>(i); }
    Vertex p_vertex(std::size_t j) const { return static_cast<Vertex>(q_ + j); }

    const Hypergraph& graph() const { return graph_; }
    std::span<const Edge> edges() const { return graph_.edges(); }
    std::size_t edge_count() const { return graph_.edge_count(); }
    bool contains(const Edge& e) const { return graph_.contains(e); }

private:
    std::size_t q_ = 0;
    std::size_t p_ = 0;
    Hypergraph graph_;
};

/// H^ell_{n,s}: T = [0, s*ell - 1), S the rest, edges = triples with at least
/// ell vertices in T.
Hypergraph build_extremal(std::size_t n, std::size_t s, int ell);

/// (2n^2 - 8n + 6) / 3, the adjacent-pair degree sum of H^2_{n,n/3}.
long long sigma2_extremal_formula(long long n);

/// H_{1,3}(F): Q-vertex i joined to every edge of F_i.
PartiteHypergraph reduce_family(const HypergraphFamily& family);

/// Inverse of reduce_family; member i is the link of Q-vertex i on P-local ids.
HypergraphFamily family_from_partite(const PartiteHypergraph& h);

/// n/3 copies of H^2_{n,n/3}.
HypergraphFamily extremal_family(std::size_t n);

/// H^2_{1,3}(n, n/3).
PartiteHypergraph build_partite_extremal(std::size_t n);

/// Every (1,3)-partite 4-set on q + p vertices.
PartiteHypergraph complete_partite(std::size_t q, std::size_t p);

} // namespace rainbow

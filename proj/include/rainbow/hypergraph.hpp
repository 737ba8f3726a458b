#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace rainbow {

using Vertex = std::uint32_t;

/// Largest uniformity an Edge can hold inline.
inline constexpr std::size_t kMaxUniformity = 8;

/// Raised when caller-supplied data violates an operation's precondition.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an internal guarantee fails (e.g. a stability bug surfaces).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A strictly increasing tuple of at most kMaxUniformity vertex ids.
class Edge {
public:
    Edge() = default;

    /// Takes an already strictly increasing sequence; throws InputError otherwise.
    static Edge from_sorted(std::span<const Vertex> vertices);
    /// Sorts the input; throws InputError on repeated vertices.
    static Edge from_unsorted(std::span<const Vertex> vertices);
    static Edge of(std::initializer_list<Vertex> vertices)
    {
        return from_unsorted(std::span<const Vertex>(vertices.begin(), vertices.size()));
    }

    std::size_t size() const { return size_; }
    Vertex operator[](std::size_t i) const { return v_[i]; }
    const Vertex* begin() const { return v_.data(); }
    const Vertex* end() const { return v_.data() + size_; }
    Vertex front() const { return v_[0]; }
    Vertex back() const { return v_[size_ - 1]; }

    bool contains(Vertex x) const;
    bool contains_all(std::span<const Vertex> sorted_subset) const;
    bool intersects(const Edge& other) const;
    /// Copy of this edge with `x` removed; `x` must be present.
    Edge without(Vertex x) const;
    /// Copy of this edge with `x` inserted; `x` must be absent.
    Edge with(Vertex x) const;
    /// Bit i set for every vertex i; requires all ids < 64.
    std::uint64_t mask() const;

    friend auto operator<=>(const Edge&, const Edge&) = default;
    friend bool operator==(const Edge&, const Edge&) = default;

private:
    std::uint8_t size_ = 0;
    std::array<Vertex, kMaxUniformity> v_{};
};

std::string to_string(const Edge& e);

/// Strictly increasing set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    /// Sorts; throws InputError on duplicates.
    explicit VertexSet(std::vector<Vertex> members);
    VertexSet(std::initializer_list<Vertex> members)
        : VertexSet(std::vector<Vertex>(members)) {}

    std::span<const Vertex> members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Vertex v) const;
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }
    std::uint64_t mask() const;

    VertexSet united(const VertexSet& other) const;
    VertexSet minus(const VertexSet& other) const;
    bool disjoint(const VertexSet& other) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

/// Minimum degree sums over adjacent pairs, all pairs, and non-adjacent
/// pairs. A component is empty when its pair class is empty.
struct DegreeSumStats {
    std::optional<long long> sigma2;
    std::optional<long long> sigma2_prime;
    std::optional<long long> sigma2_dprime;
};

/// Immutable k-uniform hypergraph with canonical, lexicographically ordered
/// edges. Degrees of 1-, 2- and 3-sets are indexed at construction.
class Hypergraph {
public:
    Hypergraph() = default;
    /// Rejects unsorted, malformed, out-of-range or duplicate edges unless
    /// `normalize` is set, in which case edges are sorted and deduplicated.
    Hypergraph(std::size_t k, std::size_t n_vertices, std::vector<Edge> edges, bool normalize = false);

    std::size_t k() const { return k_; }
    std::size_t n() const { return n_; }
    std::span<const Edge> edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool contains(const Edge& e) const;
    /// Index of `e` in edges(), or edge_count() if absent.
    std::size_t index_of(const Edge& e) const;

    /// One 64-bit vertex mask per edge; empty when n() > 64.
    std::span<const std::uint64_t> masks() const { return masks_; }
    bool has_masks() const { return n_ <= 64; }

    /// Number of edges containing every vertex of the sorted set `s`.
    std::size_t degree(std::span<const Vertex> s) const;
    std::size_t degree(Vertex v) const { return deg1_.at(v); }
    std::size_t codegree(Vertex u, Vertex v) const;

private:
    std::size_t k_ = 0;
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::size_t> deg1_;
    std::unordered_map<std::uint64_t, std::size_t> deg2_;
    std::unordered_map<std::uint64_t, std::size_t> deg3_;
};

/// Number of edges of `h` containing `s`. Throws InputError if |s| > k or
/// an id is out of range.
std::size_t deg(const Hypergraph& h, const VertexSet& s);

/// Minimum degree over all l-subsets, 1 <= l < k.
std::size_t min_degree(const Hypergraph& h, std::size_t l);

/// The (k-1)-graph {e \ {u} : u in e}; ids are preserved and u is isolated.
Hypergraph link(const Hypergraph& h, Vertex u);

bool adjacent(const Hypergraph& h, Vertex u, Vertex v);

DegreeSumStats degree_sum_stats(const Hypergraph& h);

VertexSet isolated_vertices(const Hypergraph& h);

/// Induced subgraph on `keep`, relabelled 0..|keep|-1 in increasing id order.
Hypergraph induced(const Hypergraph& h, const VertexSet& keep);

/// Every k-subset of [0, n) in lexicographic order.
std::vector<Edge> all_k_subsets(std::size_t n, std::size_t k);

Hypergraph complete_hypergraph(std::size_t n, std::size_t k);

} // namespace rainbow

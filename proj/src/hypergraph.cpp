#include "rainbow/hypergraph.hpp"

#include "rainbow/kernels.hpp"

#include <algorithm>
#include <limits>

namespace rainbow {

namespace {

    constexpr std::uint64_t kKeyBits = 21;
    constexpr std::size_t kMaxVertices = std::size_t{1} << kKeyBits;

    std::uint64_t pair_key(Vertex a, Vertex b) { return (std::uint64_t{a} << kKeyBits) | b; }

    std::uint64_t triple_key(Vertex a, Vertex b, Vertex c)
    {
        return (std::uint64_t{a} << (2 * kKeyBits)) | (std::uint64_t{b} << kKeyBits) | c;
    }

    template <typename Map>
    std::size_t lookup(const Map& m, std::uint64_t key)
    {
        auto it = m.find(key);
        return it == m.end() ? 0 : it->second;
    }

} // namespace

Edge Edge::from_sorted(std::span<const Vertex> vertices)
{
    if (vertices.size() > kMaxUniformity)
        throw InputError("edge has more than " + std::to_string(kMaxUniformity) + " vertices");
    Edge e;
    e.size_ = static_cast<std::uint8_t>(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i > 0 && vertices[i - 1] >= vertices[i])
            throw InputError("edge vertices are not strictly increasing");
        e.v_[i] = vertices[i];
    }
    return e;
}

Edge Edge::from_unsorted(std::span<const Vertex> vertices)
{
    std::vector<Vertex> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("edge repeats a vertex");
    return from_sorted(sorted);
}

bool Edge::contains(Vertex x) const { return std::binary_search(begin(), end(), x); }

bool Edge::contains_all(std::span<const Vertex> sorted_subset) const
{
    return std::includes(begin(), end(), sorted_subset.begin(), sorted_subset.end());
}

bool Edge::intersects(const Edge& other) const
{
    std::size_t i = 0, j = 0;
    while (i < size_ && j < other.size_) {
        if (v_[i] == other.v_[j])
            return true;
        if (v_[i] < other.v_[j])
            ++i;
        else
            ++j;
    }
    return false;
}

Edge Edge::without(Vertex x) const
{
    Edge e;
    for (std::size_t i = 0; i < size_; ++i)
        if (v_[i] != x)
            e.v_[e.size_++] = v_[i];
    if (e.size_ + 1 != size_)
        throw InputError("vertex " + std::to_string(x) + " not in edge " + to_string(*this));
    return e;
}

Edge Edge::with(Vertex x) const
{
    if (size_ >= kMaxUniformity)
        throw InputError("edge is full");
    if (contains(x))
        throw InputError("vertex " + std::to_string(x) + " already in edge " + to_string(*this));
    Edge e = *this;
    auto pos = std::upper_bound(e.v_.begin(), e.v_.begin() + size_, x);
    std::copy_backward(pos, e.v_.begin() + size_, e.v_.begin() + size_ + 1);
    *pos = x;
    ++e.size_;
    return e;
}

std::uint64_t Edge::mask() const
{
    std::uint64_t m = 0;
    for (auto v : *this) {
        if (v >= 64)
            throw InputError("mask requested for vertex id >= 64");
        m |= std::uint64_t{1} << v;
    }
    return m;
}

std::string to_string(const Edge& e)
{
    std::string s = "{";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(e[i]);
    }
    return s + "}";
}

VertexSet::VertexSet(std::vector<Vertex> members)
    : members_(std::move(members))
{
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw InputError("vertex set has duplicate members");
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

std::uint64_t VertexSet::mask() const
{
    std::uint64_t m = 0;
    for (auto v : members_) {
        if (v >= 64)
            throw InputError("mask requested for vertex id >= 64");
        m |= std::uint64_t{1} << v;
    }
    return m;
}

VertexSet VertexSet::united(const VertexSet& other) const
{
    std::vector<Vertex> out;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                   std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet VertexSet::minus(const VertexSet& other) const
{
    std::vector<Vertex> out;
    std::set_difference(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                        std::back_inserter(out));
    return VertexSet(std::move(out));
}

bool VertexSet::disjoint(const VertexSet& other) const
{
    std::vector<Vertex> common;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                          std::back_inserter(common));
    return common.empty();
}

Hypergraph::Hypergraph(std::size_t k, std::size_t n_vertices, std::vector<Edge> edges, bool normalize)
    : k_(k)
    , n_(n_vertices)
    , edges_(std::move(edges))
{
    if (k_ < 2 || k_ > kMaxUniformity)
        throw InputError("uniformity must be in [2, " + std::to_string(kMaxUniformity) + "]");
    if (n_ >= kMaxVertices)
        throw InputError("too many vertices");

    for (const auto& e : edges_) {
        if (e.size() != k_)
            throw InputError("edge " + to_string(e) + " does not have " + std::to_string(k_) + " vertices");
        if (e.back() >= n_)
            throw InputError("edge " + to_string(e) + " has a vertex id >= " + std::to_string(n_));
    }

    if (normalize) {
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }
    else {
        for (std::size_t i = 1; i < edges_.size(); ++i) {
            if (edges_[i - 1] == edges_[i])
                throw InputError("duplicate edge " + to_string(edges_[i]));
            if (edges_[i] < edges_[i - 1])
                throw InputError("edges are not in canonical order at " + to_string(edges_[i]));
        }
    }

    deg1_.assign(n_, 0);
    if (n_ <= 64)
        masks_.reserve(edges_.size());
    for (const auto& e : edges_) {
        if (n_ <= 64)
            masks_.push_back(e.mask());
        for (std::size_t a = 0; a < k_; ++a) {
            ++deg1_[e[a]];
            for (std::size_t b = a + 1; b < k_; ++b) {
                ++deg2_[pair_key(e[a], e[b])];
                for (std::size_t c = b + 1; c < k_; ++c)
                    ++deg3_[triple_key(e[a], e[b], e[c])];
            }
        }
    }
}

bool Hypergraph::contains(const Edge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

std::size_t Hypergraph::index_of(const Edge& e) const
{
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e)
        return edges_.size();
    return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t Hypergraph::codegree(Vertex u, Vertex v) const
{
    if (u > v)
        std::swap(u, v);
    return lookup(deg2_, pair_key(u, v));
}

std::size_t Hypergraph::degree(std::span<const Vertex> s) const
{
    switch (s.size()) {
    case 0: return edges_.size();
    case 1: return deg1_.at(s[0]);
    case 2: return lookup(deg2_, pair_key(s[0], s[1]));
    case 3: return lookup(deg3_, triple_key(s[0], s[1], s[2]));
    default: break;
    }
    if (s.size() > k_)
        return 0;
    if (has_masks()) {
        std::uint64_t m = 0;
        for (auto v : s)
            m |= std::uint64_t{1} << v;
        return kernels::count_superset(masks_, m);
    }
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.contains_all(s); }));
}

std::size_t deg(const Hypergraph& h, const VertexSet& s)
{
    if (s.size() > h.k())
        throw InputError("degree query set is larger than the uniformity");
    if (!s.empty() && s.members().back() >= h.n())
        throw InputError("degree query has a vertex id out of range");
    return h.degree(s.members());
}

std::size_t min_degree(const Hypergraph& h, std::size_t l)
{
    if (l < 1 || l >= h.k())
        throw InputError("min_degree needs 1 <= l < k");
    if (l > h.n())
        throw InputError("min_degree: fewer than l vertices");
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto& s : all_k_subsets(h.n(), l))
        best = std::min(best, h.degree(std::span<const Vertex>(s.begin(), s.size())));
    return best;
}

Hypergraph link(const Hypergraph& h, Vertex u)
{
    if (u >= h.n())
        throw InputError("link vertex out of range");
    std::vector<Edge> out;
    for (const auto& e : h.edges())
        if (e.contains(u))
            out.push_back(e.without(u));
    // Removing a common vertex keeps lexicographic order.
    return Hypergraph(h.k() - 1, h.n(), std::move(out));
}

bool adjacent(const Hypergraph& h, Vertex u, Vertex v)
{
    if (u == v)
        throw InputError("adjacency is defined for distinct vertices");
    if (u >= h.n() || v >= h.n())
        throw InputError("adjacency query vertex out of range");
    return h.codegree(u, v) > 0;
}

DegreeSumStats degree_sum_stats(const Hypergraph& h)
{
    if (h.n() < 2)
        throw InputError("degree sums need at least two vertices");
    DegreeSumStats stats;
    auto relax = [](std::optional<long long>& slot, long long value) {
        if (!slot || value < *slot)
            slot = value;
    };
    for (Vertex u = 0; u < h.n(); ++u) {
        for (Vertex v = u + 1; v < h.n(); ++v) {
            long long sum = static_cast<long long>(h.degree(u) + h.degree(v));
            relax(stats.sigma2_prime, sum);
            relax(h.codegree(u, v) > 0 ? stats.sigma2 : stats.sigma2_dprime, sum);
        }
    }
    return stats;
}

VertexSet isolated_vertices(const Hypergraph& h)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < h.n(); ++v)
        if (h.degree(v) == 0)
            out.push_back(v);
    return VertexSet(std::move(out));
}

Hypergraph induced(const Hypergraph& h, const VertexSet& keep)
{
    constexpr Vertex absent = std::numeric_limits<Vertex>::max();
    std::vector<Vertex> relabel(h.n(), absent);
    Vertex next = 0;
    for (auto v : keep) {
        if (v >= h.n())
            throw InputError("induced subgraph vertex out of range");
        relabel[v] = next++;
    }
    std::vector<Edge> out;
    std::array<Vertex, kMaxUniformity> buf{};
    for (const auto& e : h.edges()) {
        bool inside = true;
        for (std::size_t i = 0; i < e.size() && inside; ++i) {
            buf[i] = relabel[e[i]];
            inside = buf[i] != absent;
        }
        if (inside)
            out.push_back(Edge::from_sorted(std::span<const Vertex>(buf.data(), e.size())));
    }
    return Hypergraph(h.k(), keep.size(), std::move(out));
}

std::vector<Edge> all_k_subsets(std::size_t n, std::size_t k)
{
    std::vector<Edge> out;
    if (k > n || k > kMaxUniformity)
        return out;
    std::vector<Vertex> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = static_cast<Vertex>(i);
    while (true) {
        out.push_back(Edge::from_sorted(idx));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return out;
}

Hypergraph complete_hypergraph(std::size_t n, std::size_t k) { return Hypergraph(k, n, all_k_subsets(n, k)); }

} // namespace rainbow

#include "rainbow/constructions.hpp"

#include <algorithm>

namespace rainbow {

HypergraphFamily::HypergraphFamily(std::size_t n_vertices, std::vector<Hypergraph> members)
    : n_(n_vertices)
    , members_(std::move(members))
{
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i].k() != 3)
            throw InputError("family member " + std::to_string(i) + " is not 3-uniform");
        if (members_[i].n() != n_)
            throw InputError("family member " + std::to_string(i) + " is not on " + std::to_string(n_) + " vertices");
    }
}

namespace {

    void check_partite(std::size_t q, const Hypergraph& g)
    {
        if (g.k() != 4)
            throw InputError("partite hypergraph must be 4-uniform");
        for (const auto& e : g.edges()) {
            // Q ids are the smallest, so the Q-vertex of a canonical edge is e[0].
            if (!(e[0] < q && e[1] >= q))
                throw InputError("edge " + to_string(e) + " does not have exactly one Q-vertex");
        }
    }

} // namespace

PartiteHypergraph::PartiteHypergraph(std::size_t q_size, std::size_t p_size, std::vector<Edge> edges, bool normalize)
    : PartiteHypergraph(q_size, p_size, Hypergraph(4, q_size + p_size, std::move(edges), normalize))
{
}

PartiteHypergraph::PartiteHypergraph(std::size_t q_size, std::size_t p_size, Hypergraph graph)
    : q_(q_size)
    , p_(p_size)
    , graph_(std::move(graph))
{
    if (graph_.n() != q_ + p_)
        throw InputError("partite hypergraph vertex count is not q + p");
    check_partite(q_, graph_);
}

Hypergraph build_extremal(std::size_t n, std::size_t s, int ell)
{
    if (ell < 1 || ell > 3)
        throw InputError("ell must be 1, 2 or 3");
    if (s < 1)
        throw InputError("s must be at least 1");
    const std::size_t t_size = s * static_cast<std::size_t>(ell) - 1;
    if (t_size > n)
        throw InputError("s*ell - 1 exceeds n");

    std::vector<Edge> edges;
    for (const auto& e : all_k_subsets(n, 3)) {
        auto in_t = std::count_if(e.begin(), e.end(), [&](Vertex v) { return v < t_size; });
        if (in_t >= ell)
            edges.push_back(e);
    }
    return Hypergraph(3, n, std::move(edges));
}

long long sigma2_extremal_formula(long long n)
{
    if (n < 0 || n % 3 != 0)
        throw InputError("n must be a non-negative multiple of 3");
    return (2 * n * n - 8 * n + 6) / 3;
}

PartiteHypergraph reduce_family(const HypergraphFamily& family)
{
    const std::size_t q = family.size();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < q; ++i) {
        for (const auto& e : family[i].edges()) {
            std::array<Vertex, 4> v{static_cast<Vertex>(i), static_cast<Vertex>(e[0] + q),
                                    static_cast<Vertex>(e[1] + q), static_cast<Vertex>(e[2] + q)};
            edges.push_back(Edge::from_sorted(v));
        }
    }
    // Grouped by Q-vertex, each group lexicographic: already canonical.
    return PartiteHypergraph(q, family.n(), std::move(edges));
}

HypergraphFamily family_from_partite(const PartiteHypergraph& h)
{
    const std::size_t q = h.q_size();
    std::vector<std::vector<Edge>> per_q(q);
    for (const auto& e : h.edges()) {
        std::array<Vertex, 3> v{static_cast<Vertex>(e[1] - q), static_cast<Vertex>(e[2] - q),
                                static_cast<Vertex>(e[3] - q)};
        per_q[e[0]].push_back(Edge::from_sorted(v));
    }
    std::vector<Hypergraph> members;
    members.reserve(q);
    for (auto& edges : per_q)
        members.emplace_back(3, h.p_size(), std::move(edges));
    return HypergraphFamily(h.p_size(), std::move(members));
}

HypergraphFamily extremal_family(std::size_t n)
{
    if (n % 3 != 0 || n == 0)
        throw InputError("n must be a positive multiple of 3");
    Hypergraph member = build_extremal(n, n / 3, 2);
    return HypergraphFamily(n, std::vector<Hypergraph>(n / 3, member));
}

PartiteHypergraph build_partite_extremal(std::size_t n) { return reduce_family(extremal_family(n)); }

PartiteHypergraph complete_partite(std::size_t q, std::size_t p)
{
    Hypergraph member = complete_hypergraph(p, 3);
    return reduce_family(HypergraphFamily(p, std::vector<Hypergraph>(q, member)));
}

} // namespace rainbow

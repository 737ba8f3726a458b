#include "rainbow/shift.hpp"

#include <algorithm>
#include <array>
#include <tuple>

namespace rainbow {

OrderedPartite::OrderedPartite(PartiteHypergraph graph, std::vector<Vertex> q_order, std::vector<Vertex> p_order)
    : graph_(std::move(graph))
    , q_order_(std::move(q_order))
    , p_order_(std::move(p_order))
    , rank_(graph_.n(), graph_.n())
{
    if (q_order_.size() != graph_.q_size() || p_order_.size() != graph_.p_size())
        throw InputError("ordering sizes do not match Q and P");
    for (std::size_t r = 0; r < q_order_.size(); ++r) {
        Vertex u = q_order_[r];
        if (!graph_.is_q(u) || rank_[u] != graph_.n())
            throw InputError("Q ordering is not a permutation of Q");
        rank_[u] = r;
    }
    for (std::size_t r = 0; r < p_order_.size(); ++r) {
        Vertex v = p_order_[r];
        if (!graph_.is_p(v) || rank_[v] != graph_.n())
            throw InputError("P ordering is not a permutation of P");
        rank_[v] = r;
    }
}

namespace {

    std::vector<Vertex> id_range(std::size_t from, std::size_t count)
    {
        std::vector<Vertex> out(count);
        for (std::size_t i = 0; i < count; ++i)
            out[i] = static_cast<Vertex>(from + i);
        return out;
    }

} // namespace

OrderedPartite::OrderedPartite(PartiteHypergraph graph)
    : OrderedPartite(graph, id_range(0, graph.q_size()), id_range(graph.q_size(), graph.p_size()))
{
}

OrderedPartite OrderedPartite::with_graph(PartiteHypergraph graph) const
{
    if (graph.q_size() != graph_.q_size() || graph.p_size() != graph_.p_size())
        throw InputError("replacement graph has different classes");
    return OrderedPartite(std::move(graph), q_order_, p_order_);
}

std::size_t ShiftTrace::removed_total() const
{
    std::size_t total = 0;
    for (const auto& s : steps)
        total += s.removed;
    return total;
}

namespace {

    struct RankTuple {
        std::size_t q;
        std::array<std::size_t, 3> p;
    };

    RankTuple ranks_of(const Edge& e, const OrderedPartite& ord)
    {
        const auto& g = ord.graph();
        if (e.size() != 4 || !g.is_q(e[0]) || !g.is_p(e[1]) || !g.is_p(e[3]))
            throw InputError("edge " + to_string(e) + " is not a (1,3)-partite edge of this graph");
        RankTuple t{ord.q_rank(e[0]), {ord.p_rank(e[1]), ord.p_rank(e[2]), ord.p_rank(e[3])}};
        std::sort(t.p.begin(), t.p.end());
        return t;
    }

    Edge edge_of(const RankTuple& t, const OrderedPartite& ord)
    {
        return Edge::of({ord.q_order()[t.q], ord.p_order()[t.p[0]], ord.p_order()[t.p[1]], ord.p_order()[t.p[2]]});
    }

    // Edge set and codegree counters indexed by rank, for the deletion loop.
    class RankedEdges {
    public:
        explicit RankedEdges(const OrderedPartite& ord)
            : q_(ord.graph().q_size())
            , p_(ord.graph().p_size())
            , present_(q_ * p_ * p_ * p_, 0)
            , cod2_(q_ * p_, 0)
            , cod3_(q_ * p_ * p_, 0)
        {
            for (const auto& e : ord.graph().edges()) {
                auto t = ranks_of(e, ord);
                present_[index(t.q, t.p[0], t.p[1], t.p[2])] = 1;
                adjust(t.q, t.p, +1);
            }
        }

        bool has(std::size_t i, std::size_t a, std::size_t b, std::size_t c) const
        {
            return present_[index(i, a, b, c)] != 0;
        }
        long long cod2(std::size_t i, std::size_t a) const { return cod2_[i * p_ + a]; }
        long long cod3(std::size_t i, std::size_t a, std::size_t b) const { return cod3_[(i * p_ + a) * p_ + b]; }

        // Deletes every edge containing {u_i, v_j, v_k}; returns the count.
        std::size_t remove_through(std::size_t i, std::size_t j, std::size_t k)
        {
            std::size_t removed = 0;
            for (std::size_t l = 0; l < p_; ++l) {
                if (l == j || l == k)
                    continue;
                std::array<std::size_t, 3> t{j, k, l};
                std::sort(t.begin(), t.end());
                auto& slot = present_[index(i, t[0], t[1], t[2])];
                if (slot) {
                    slot = 0;
                    adjust(i, t, -1);
                    ++removed;
                }
            }
            return removed;
        }

        std::vector<Edge> edges(const OrderedPartite& ord) const
        {
            std::vector<Edge> out;
            for (std::size_t i = 0; i < q_; ++i)
                for (std::size_t a = 0; a < p_; ++a)
                    for (std::size_t b = a + 1; b < p_; ++b)
                        for (std::size_t c = b + 1; c < p_; ++c)
                            if (has(i, a, b, c))
                                out.push_back(edge_of({i, {a, b, c}}, ord));
            std::sort(out.begin(), out.end());
            return out;
        }

    private:
        std::size_t index(std::size_t i, std::size_t a, std::size_t b, std::size_t c) const
        {
            return ((i * p_ + a) * p_ + b) * p_ + c;
        }

        void adjust(std::size_t i, const std::array<std::size_t, 3>& t, int delta)
        {
            for (auto a : t)
                cod2_[i * p_ + a] += delta;
            cod3_[(i * p_ + t[0]) * p_ + t[1]] += delta;
            cod3_[(i * p_ + t[0]) * p_ + t[2]] += delta;
            cod3_[(i * p_ + t[1]) * p_ + t[2]] += delta;
        }

        std::size_t q_;
        std::size_t p_;
        std::vector<std::uint8_t> present_;
        std::vector<long long> cod2_;
        std::vector<long long> cod3_;
    };

} // namespace

bool prec(const Edge& e, const Edge& f, const OrderedPartite& ord)
{
    auto a = ranks_of(e, ord);
    auto b = ranks_of(f, ord);
    return a.q <= b.q && a.p[0] <= b.p[0] && a.p[1] <= b.p[1] && a.p[2] <= b.p[2];
}

bool is_stable(const OrderedPartite& h)
{
    // prec is generated by raising one rank coordinate by one while keeping
    // the P-triple strictly increasing, so checking those covers suffices.
    const auto& g = h.graph();
    const std::size_t q = g.q_size();
    const std::size_t p = g.p_size();
    for (const auto& e : g.edges()) {
        auto t = ranks_of(e, h);
        if (t.q + 1 < q && !g.contains(edge_of({t.q + 1, t.p}, h)))
            return false;
        for (std::size_t c = 0; c < 3; ++c) {
            const std::size_t limit = c == 2 ? p : t.p[c + 1];
            if (t.p[c] + 1 >= limit)
                continue;
            auto up = t;
            ++up.p[c];
            if (!g.contains(edge_of(up, h)))
                return false;
        }
    }
    return true;
}

OrderedPartite order_by_cover(const PartiteHypergraph& h, const FractionalCover& p)
{
    if (p.weights.size() != h.n())
        throw InputError("cover must assign a weight to every vertex");
    auto sorted = [&](std::vector<Vertex> ids) {
        std::stable_sort(ids.begin(), ids.end(), [&](Vertex a, Vertex b) { return p.weights[a] < p.weights[b]; });
        return ids;
    };
    return OrderedPartite(h, sorted(id_range(0, h.q_size())), sorted(id_range(h.q_size(), h.p_size())));
}

OrderedPartite build_h_prime(const PartiteHypergraph& h, const FractionalCover& p, const OrderedPartite& ord)
{
    if (!is_fractional_cover(h.graph(), p))
        throw InputError("build_h_prime needs a fractional cover of the input graph");
    std::vector<Edge> edges;
    const auto q_size = h.q_size();
    for (const auto& triple : all_k_subsets(h.p_size(), 3)) {
        Rational base = p.weights[triple[0] + q_size] + p.weights[triple[1] + q_size] + p.weights[triple[2] + q_size];
        for (std::size_t u = 0; u < q_size; ++u)
            if (base + p.weights[u] >= 1)
                edges.push_back(Edge::of({static_cast<Vertex>(u), static_cast<Vertex>(triple[0] + q_size),
                                          static_cast<Vertex>(triple[1] + q_size),
                                          static_cast<Vertex>(triple[2] + q_size)}));
    }
    std::sort(edges.begin(), edges.end());
    return ord.with_graph(PartiteHypergraph(h.q_size(), h.p_size(), std::move(edges)));
}

std::pair<OrderedPartite, ShiftTrace> stable_shift(const OrderedPartite& h0, long long threshold,
                                                   std::optional<std::size_t> max_steps)
{
    if (!is_stable(h0))
        throw InputError("stable_shift needs a stable input");

    const std::size_t q = h0.graph().q_size();
    const std::size_t p = h0.graph().p_size();
    RankedEdges live(h0);
    ShiftTrace trace;

    while (!max_steps || trace.steps.size() < *max_steps) {
        std::optional<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> best; // (sum, i, j, k)
        for (std::size_t i = 0; i < q; ++i) {
            for (std::size_t j = 0; j < p; ++j) {
                for (std::size_t k = j + 1; k < p; ++k) {
                    if (live.cod3(i, j, k) == 0 || live.cod2(i, j) + live.cod2(i, k) > threshold)
                        continue;
                    std::tuple candidate{i + j + k, i, j, k};
                    if (!best || candidate < *best)
                        best = candidate;
                }
            }
        }
        if (!best)
            break;

        auto [sum, i, j, k] = *best;
        std::size_t removed = live.remove_through(i, j, k);
        trace.steps.push_back({i, j, k, h0.q_order()[i], h0.p_order()[j], h0.p_order()[k], removed});
    }

    auto result = h0.with_graph(PartiteHypergraph(q, p, live.edges(h0)));
    trace.stable = is_stable(result);
    return {std::move(result), std::move(trace)};
}

namespace {

    template <typename Visit>
    void for_each_live_triple(const PartiteHypergraph& h, Visit visit)
    {
        const auto& g = h.graph();
        for (const auto& e : g.edges()) {
            const Vertex u = e[0];
            for (std::size_t a = 1; a < 4; ++a)
                for (std::size_t b = a + 1; b < 4; ++b)
                    visit(static_cast<long long>(g.codegree(u, e[a]) + g.codegree(u, e[b])));
        }
    }

} // namespace

bool codegree_condition_holds(const PartiteHypergraph& h, long long threshold)
{
    bool ok = true;
    for_each_live_triple(h, [&](long long sum) { ok = ok && sum > threshold; });
    return ok;
}

std::optional<long long> min_codegree_sum(const PartiteHypergraph& h)
{
    std::optional<long long> best;
    for_each_live_triple(h, [&](long long sum) {
        if (!best || sum < *best)
            best = sum;
    });
    return best;
}

Hypergraph p_link(const PartiteHypergraph& h, Vertex u)
{
    if (!h.is_q(u))
        throw InputError("p_link needs a Q-vertex");
    std::vector<Edge> out;
    for (const auto& e : h.edges())
        if (e[0] == u)
            out.push_back(e.without(u));
    return Hypergraph(3, h.n(), std::move(out));
}

Matching extend_pm_from_link(const OrderedPartite& h, const Matching& link_pm)
{
    const auto& g = h.graph();
    if (g.q_size() == 0) {
        if (!link_pm.edges.empty())
            throw InputError("link matching given for a graph without Q");
        return {};
    }
    const Vertex u1 = h.q_order()[0];

    if (link_pm.edges.size() != g.q_size())
        throw InputError("link matching must have |Q| triples");
    std::vector<bool> covered(g.n(), false);
    for (const auto& t : link_pm.edges) {
        if (t.size() != 3)
            throw InputError("link matching edges must be triples");
        for (auto v : t) {
            if (!g.is_p(v) || covered[v])
                throw InputError("link matching is not a perfect matching of P");
            covered[v] = true;
        }
        if (!g.contains(t.with(u1)))
            throw InputError("triple " + to_string(t) + " is not in the link of u_1");
    }
    if (3 * link_pm.edges.size() != g.p_size())
        throw InputError("link matching does not cover P");

    struct Keyed {
        std::array<std::size_t, 3> ranks;
        Edge triple;
    };
    std::vector<Keyed> keyed;
    for (const auto& t : link_pm.edges) {
        std::array<std::size_t, 3> r{h.p_rank(t[0]), h.p_rank(t[1]), h.p_rank(t[2])};
        std::sort(r.begin(), r.end());
        keyed.push_back({r, t});
    }
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) { return a.ranks > b.ranks; });

    Matching out;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        Edge e = keyed[i].triple.with(h.q_order()[i]);
        if (!g.contains(e))
            throw ContractError("extension edge " + to_string(e) + " is missing; the graph is not stable");
        out.edges.push_back(e);
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

PipelineResult fractional_pm_pipeline(const PartiteHypergraph& h, const PipelineOptions& options)
{
    if (!h.balanced())
        throw InputError("pipeline needs a balanced partite graph");

    PipelineResult out;
    auto tau = tau_star(h.graph());
    out.tau_star_h = tau.value;
    auto ord = order_by_cover(h, tau.cover);
    out.h_prime = build_h_prime(h, tau.cover, ord);
    out.threshold = options.threshold ? *options.threshold
                                      : sigma2_extremal_formula(static_cast<long long>(h.p_size()));
    std::tie(out.h_second, out.trace) = stable_shift(out.h_prime, out.threshold);

    const auto& second = out.h_second.graph();
    out.containment = std::all_of(h.edges().begin(), h.edges().end(),
                                  [&](const Edge& e) { return second.contains(e); });

    if (h.q_size() == 0) {
        out.link_outcome = Outcome::found;
        out.witness = Matching{};
    }
    else {
        const Vertex u1 = out.h_second.q_order()[0];
        auto link_p = induced(p_link(second, u1), VertexSet(id_range(h.q_size(), h.p_size())));
        auto link_pm = has_perfect_matching(link_p, options.limits);
        out.link_outcome = link_pm.outcome;
        if (link_pm.found()) {
            Matching global;
            for (const auto& t : link_pm.witness->edges)
                global.edges.push_back(Edge::of({static_cast<Vertex>(t[0] + h.q_size()),
                                                 static_cast<Vertex>(t[1] + h.q_size()),
                                                 static_cast<Vertex>(t[2] + h.q_size())}));
            out.witness = extend_pm_from_link(out.h_second, global);
        }
    }
    out.pm_found = out.witness.has_value() && is_perfect_matching(second.graph(), *out.witness);

    out.nu_star_h = nu_star(h.graph()).value;
    if (options.check_nu_second)
        out.nu_star_h_second = nu_star(second.graph()).value;

    const Rational q_count(static_cast<long>(h.q_size()));
    out.certified = out.pm_found && out.containment;
    out.consistent = out.nu_star_h == out.tau_star_h && (!out.certified || out.nu_star_h == q_count)
                     && (!out.nu_star_h_second || !out.containment || *out.nu_star_h_second == out.nu_star_h)
                     && (!out.witness || out.pm_found);
    return out;
}

} // namespace rainbow

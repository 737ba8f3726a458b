#include "rainbow/absorbing.hpp"

#include <algorithm>
#include <array>

namespace rainbow {

namespace {

    std::pair<std::vector<Vertex>, std::vector<Vertex>> split_classes(const VertexSet& s, const PartiteHypergraph& h)
    {
        std::vector<Vertex> q, p;
        for (auto v : s) {
            if (h.is_q(v))
                q.push_back(v);
            else if (h.is_p(v))
                p.push_back(v);
            else
                throw InputError("vertex " + std::to_string(v) + " is not in the graph");
        }
        return {std::move(q), std::move(p)};
    }

} // namespace

BalancedSet::BalancedSet(const VertexSet& vertices, const PartiteHypergraph& h)
{
    auto [q, p] = split_classes(vertices, h);
    if (3 * q.size() != p.size())
        throw InputError("vertex set is not balanced");
    q_part_ = VertexSet(std::move(q));
    p_part_ = VertexSet(std::move(p));
}

bool is_balanced(const VertexSet& s, const PartiteHypergraph& h)
{
    auto [q, p] = split_classes(s, h);
    return 3 * q.size() == p.size();
}

InducedPartite induced_partite(const PartiteHypergraph& h, const VertexSet& keep)
{
    // Q ids precede P ids, so increasing-id relabelling keeps Q first.
    auto [q, p] = split_classes(keep, h);
    InducedPartite out{PartiteHypergraph(q.size(), p.size(), induced(h.graph(), keep)),
                       std::vector<Vertex>(keep.begin(), keep.end())};
    return out;
}

SearchResult<Matching> induced_perfect_matching(const PartiteHypergraph& h, const VertexSet& s, SearchLimits limits)
{
    auto sub = induced_partite(h, s);
    auto local = partite_perfect_matching(sub.graph, limits);
    SearchResult<Matching> out;
    out.outcome = local.outcome;
    if (local.witness) {
        Matching m;
        for (const auto& e : local.witness->edges)
            m.edges.push_back(Edge::of({sub.original[e[0]], sub.original[e[1]], sub.original[e[2]], sub.original[e[3]]}));
        std::sort(m.edges.begin(), m.edges.end());
        out.witness = std::move(m);
    }
    return out;
}

AbsorbingCheck is_absorbing(const VertexSet& t, const VertexSet& a, const PartiteHypergraph& h, SearchLimits limits)
{
    if (t.size() != 24 || a.size() != 4)
        throw InputError("absorbing check needs |T| = 24 and |A| = 4");
    if (!is_balanced(t, h) || !is_balanced(a, h))
        throw InputError("absorbing check needs balanced T and A");
    if (!t.disjoint(a))
        throw InputError("absorbing check needs T and A disjoint");

    AbsorbingCheck out;
    auto pm_t = induced_perfect_matching(h, t, limits);
    if (!pm_t.found()) {
        out.outcome = pm_t.outcome;
        return out;
    }
    auto pm_at = induced_perfect_matching(h, t.united(a), limits);
    out.outcome = pm_at.outcome;
    if (pm_at.found()) {
        out.pm_t = std::move(pm_t.witness);
        out.pm_at = std::move(pm_at.witness);
    }
    return out;
}

Anchor low_degree_anchor(const Hypergraph& f)
{
    if (f.n() == 0)
        throw InputError("anchor needs at least one vertex");
    Vertex x = 0;
    for (Vertex v = 1; v < f.n(); ++v)
        if (f.degree(v) < f.degree(x))
            x = v;
    std::vector<Vertex> b;
    for (Vertex v = 0; v < f.n(); ++v)
        if (v != x && f.codegree(v, x) > 0)
            b.push_back(v);
    return {x, VertexSet(std::move(b))};
}

VertexSet popular_vertices(const HypergraphFamily& family, std::size_t threshold)
{
    if (threshold < 1)
        throw InputError("popularity threshold must be at least 1");
    std::vector<std::size_t> hits(family.n(), 0);
    for (const auto& member : family.members()) {
        if (member.n() == 0)
            continue;
        for (auto v : low_degree_anchor(member).neighbours)
            ++hits[v];
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < family.n(); ++v)
        if (hits[v] >= threshold)
            out.push_back(v);
    return VertexSet(std::move(out));
}

namespace {

    struct BudgetExhausted {};

    // Slots follow the recipe's 1-based names: v[1..21] in P, u[1..7] in Q.
    class GadgetSearch {
    public:
        GadgetSearch(const PartiteHypergraph& h, const GadgetOptions& options)
            : h_(h)
            , budget_(options.node_budget)
            , used_(h.n(), false)
            , through_(h.n())
        {
            for (auto v : options.forbidden)
                if (v < h.n())
                    used_[v] = true;
            // Candidates go low-degree first: on lopsided graphs the
            // high-degree vertices are the scarce partners, and spending
            // them early strands the rest.
            const auto edges = h.edges();
            std::vector<std::size_t> weight(edges.size(), 0);
            for (std::size_t id = 0; id < edges.size(); ++id)
                for (std::size_t i = 1; i < 4; ++i)
                    weight[id] += h.graph().degree(edges[id][i]);
            std::vector<std::size_t> order(edges.size());
            for (std::size_t id = 0; id < order.size(); ++id)
                order[id] = id;
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return weight[a] < weight[b]; });
            for (auto id : order)
                for (std::size_t i = 1; i < 4; ++i)
                    through_[edges[id][i]].push_back(id);
            order_ = std::move(order);
        }

        std::optional<AbsorberGadget> run(const VertexSet& a, const VertexSet& c)
        {
            BalancedSet target(a, h_);
            u_[1] = target.q_part().members()[0];
            for (std::size_t i = 0; i < 3; ++i)
                v_[i + 1] = target.p_part().members()[i];
            for (auto x : a)
                used_[x] = true;
            for (auto x : c)
                if (h_.is_p(x) && !used_[x])
                    anchors_.push_back(x);

            try {
                if (pick_anchor(4))
                    return assemble(target);
            }
            catch (const BudgetExhausted&) {
            }
            return std::nullopt;
        }

    private:
        void spend()
        {
            if (budget_ == 0)
                throw BudgetExhausted{};
            --budget_;
        }

        void take(Vertex x) { used_[x] = true; }
        void release(Vertex x) { used_[x] = false; }

        // v4, v5, v6 from C.
        bool pick_anchor(std::size_t slot)
        {
            if (slot == 7)
                return pick_link_edge();
            for (auto x : anchors_) {
                if (used_[x])
                    continue;
                spend();
                v_[slot] = x;
                take(x);
                if (pick_anchor(slot + 1))
                    return true;
                release(x);
            }
            return false;
        }

        // {v7, v8, v9}: an edge through u1, in every orientation.
        bool pick_link_edge()
        {
            for (auto id : order_) {
                const Edge& e = h_.edges()[id];
                if (e[0] != u_[1] || used_[e[1]] || used_[e[2]] || used_[e[3]])
                    continue;
                std::array<Vertex, 3> t{e[1], e[2], e[3]};
                for (auto x : t)
                    take(x);
                do {
                    spend();
                    v_[7] = t[0];
                    v_[8] = t[1];
                    v_[9] = t[2];
                    if (pick_hanging(2))
                        return true;
                } while (std::next_permutation(t.begin(), t.end()));
                for (auto x : t)
                    release(x);
            }
            return false;
        }

        // f_i = {u_i, v_{2i+6}, v_{2i+7}} with f_i + v_{i-1} and f_i + v_{i+2} edges.
        bool pick_hanging(std::size_t i)
        {
            if (i == 8)
                return true;
            const Vertex left = v_[i - 1];
            const Vertex right = v_[i + 2];
            for (auto id : through_[left]) {
                const Edge& e = h_.edges()[id];
                const Vertex u = e[0];
                std::array<Vertex, 2> pair{};
                std::size_t n = 0;
                for (std::size_t k = 1; k < 4; ++k)
                    if (e[k] != left)
                        pair[n++] = e[k];
                if (used_[u] || used_[pair[0]] || used_[pair[1]] || pair[0] == right || pair[1] == right)
                    continue;
                spend();
                if (!h_.contains(Edge::of({u, pair[0], pair[1], right})))
                    continue;
                u_[i] = u;
                v_[2 * i + 6] = pair[0];
                v_[2 * i + 7] = pair[1];
                take(u);
                take(pair[0]);
                take(pair[1]);
                if (pick_hanging(i + 1))
                    return true;
                release(u);
                release(pair[0]);
                release(pair[1]);
            }
            return false;
        }

        AbsorberGadget assemble(const BalancedSet& target) const
        {
            std::vector<Vertex> body;
            for (std::size_t j = 4; j <= 21; ++j)
                body.push_back(v_[j]);
            for (std::size_t i = 2; i <= 7; ++i)
                body.push_back(u_[i]);

            AbsorberGadget g{target, BalancedSet(VertexSet(body), h_), {}, {}};
            for (std::size_t i = 2; i <= 7; ++i) {
                g.pm_t.edges.push_back(Edge::of({u_[i], v_[2 * i + 6], v_[2 * i + 7], v_[i + 2]}));
                g.pm_at.edges.push_back(Edge::of({u_[i], v_[2 * i + 6], v_[2 * i + 7], v_[i - 1]}));
            }
            g.pm_at.edges.push_back(Edge::of({u_[1], v_[7], v_[8], v_[9]}));
            std::sort(g.pm_t.edges.begin(), g.pm_t.edges.end());
            std::sort(g.pm_at.edges.begin(), g.pm_at.edges.end());
            return g;
        }

        const PartiteHypergraph& h_;
        std::size_t budget_;
        std::vector<bool> used_;
        std::vector<std::vector<std::size_t>> through_;
        std::vector<std::size_t> order_;
        std::vector<Vertex> anchors_;
        std::array<Vertex, 22> v_{};
        std::array<Vertex, 8> u_{};
    };

} // namespace

std::optional<AbsorberGadget> build_gadget(const VertexSet& a, const PartiteHypergraph& h, const VertexSet& c,
                                           const GadgetOptions& options)
{
    if (a.size() != 4 || !is_balanced(a, h))
        throw InputError("gadget target must be a balanced 4-set");
    if (h.q_size() < 7 || h.p_size() < 21)
        throw InputError("gadget construction needs at least 7 Q-vertices and 21 P-vertices");
    for (auto v : a)
        if (options.forbidden.contains(v))
            throw InputError("gadget target meets the forbidden set");

    auto gadget = GadgetSearch(h, options).run(a, c);
    if (gadget) {
        if (covered_vertices(gadget->pm_t) != gadget->body.all()
            || covered_vertices(gadget->pm_at) != gadget->body.all().united(a)
            || !is_matching(h.graph(), gadget->pm_t) || !is_matching(h.graph(), gadget->pm_at))
            throw ContractError("gadget matchings do not span their sets");
    }
    return gadget;
}

std::vector<VertexSet> split_into_quads(const BalancedSet& s)
{
    std::vector<VertexSet> out;
    const auto q = s.q_part().members();
    const auto p = s.p_part().members();
    for (std::size_t i = 0; i < q.size(); ++i)
        out.push_back(VertexSet({q[i], p[3 * i], p[3 * i + 1], p[3 * i + 2]}));
    return out;
}

Matching absorb(const std::vector<AbsorberGadget>& pool, const BalancedSet& s, const PartiteHypergraph& h,
                SearchLimits limits)
{
    VertexSet span = s.all();
    for (const auto& g : pool) {
        VertexSet body = g.body.all();
        if (!body.disjoint(span))
            throw InputError("gadget pool is not pairwise disjoint or meets the leftover set");
        span = span.united(body);
    }

    std::vector<bool> used(pool.size(), false);
    Matching out;
    for (const auto& quad : split_into_quads(s)) {
        bool placed = false;
        for (std::size_t g = 0; g < pool.size() && !placed; ++g) {
            if (used[g])
                continue;
            if (pool[g].target.all() == quad) {
                out.edges.insert(out.edges.end(), pool[g].pm_at.edges.begin(), pool[g].pm_at.edges.end());
                used[g] = placed = true;
                break;
            }
            auto check = is_absorbing(pool[g].body.all(), quad, h, limits);
            if (check.absorbing()) {
                out.edges.insert(out.edges.end(), check.pm_at->edges.begin(), check.pm_at->edges.end());
                used[g] = placed = true;
            }
        }
        if (!placed)
            throw AbsorptionError("no unused gadget absorbs " + to_string(Edge::from_sorted(quad.members())), quad);
    }
    for (std::size_t g = 0; g < pool.size(); ++g)
        if (!used[g])
            out.edges.insert(out.edges.end(), pool[g].pm_t.edges.begin(), pool[g].pm_t.edges.end());
    std::sort(out.edges.begin(), out.edges.end());

    if (!is_matching(h.graph(), out) || covered_vertices(out) != span)
        throw ContractError("absorbed matching is not a perfect matching of the absorbed span");
    return out;
}

} // namespace rainbow

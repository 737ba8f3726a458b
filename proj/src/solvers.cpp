#include "rainbow/solvers.hpp"

#include "rainbow/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

namespace rainbow {

std::string_view outcome_name(Outcome outcome)
{
    switch (outcome) {
    case Outcome::found: return "found";
    case Outcome::none: return "none";
    case Outcome::unknown: return "unknown";
    }
    return "unknown";
}

namespace {

    struct TimedOut {};

    class Deadline {
    public:
        explicit Deadline(SearchLimits limits)
            : enabled_(limits.timeout.count() > 0)
            , end_(std::chrono::steady_clock::now() + limits.timeout)
        {
        }

        void tick()
        {
            if (enabled_ && (++nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > end_)
                throw TimedOut{};
        }

    private:
        bool enabled_;
        std::chrono::steady_clock::time_point end_;
        std::uint64_t nodes_ = 0;
    };

    struct CandidateList {
        std::vector<std::uint64_t> masks;
        std::vector<std::size_t> ids;

        void add(std::uint64_t mask, std::size_t id)
        {
            masks.push_back(mask);
            ids.push_back(id);
        }
        bool any_disjoint(std::uint64_t occupied) const
        {
            return kernels::find_disjoint(masks, 0, occupied) < masks.size();
        }
    };

    // Backtracking core shared by every perfect/rainbow search. Two branching
    // policies: one candidate per colour in colour order, or exact cover of a
    // bit set branching on its most constrained uncovered bit.
    class MatchingEngine {
    public:
        explicit MatchingEngine(SearchLimits limits)
            : deadline_(limits)
        {
        }

        Outcome one_per_colour(const std::vector<CandidateList>& colours, std::vector<std::size_t>& chosen)
        {
            colours_ = &colours;
            chosen.assign(colours.size(), 0);
            try {
                if (!forward_ok(0, 0))
                    return Outcome::none;
                return colour_step(0, 0, chosen) ? Outcome::found : Outcome::none;
            }
            catch (const TimedOut&) {
                return Outcome::unknown;
            }
        }

        Outcome exact_cover(const std::vector<CandidateList>& by_bit, std::uint64_t target,
                            std::vector<std::size_t>& chosen)
        {
            by_bit_ = &by_bit;
            target_ = target;
            chosen.clear();
            try {
                return cover_step(0, chosen) ? Outcome::found : Outcome::none;
            }
            catch (const TimedOut&) {
                return Outcome::unknown;
            }
        }

    private:
        bool forward_ok(std::size_t from, std::uint64_t occupied) const
        {
            const auto& colours = *colours_;
            for (std::size_t c = from; c < colours.size(); ++c)
                if (!colours[c].any_disjoint(occupied))
                    return false;
            return true;
        }

        bool colour_step(std::size_t depth, std::uint64_t occupied, std::vector<std::size_t>& chosen)
        {
            deadline_.tick();
            const auto& colours = *colours_;
            if (depth == colours.size())
                return true;
            const auto& list = colours[depth];
            for (auto i = kernels::find_disjoint(list.masks, 0, occupied); i < list.masks.size();
                 i = kernels::find_disjoint(list.masks, i + 1, occupied)) {
                const std::uint64_t next = occupied | list.masks[i];
                if (!forward_ok(depth + 1, next))
                    continue;
                chosen[depth] = list.ids[i];
                if (colour_step(depth + 1, next, chosen))
                    return true;
            }
            return false;
        }

        // Free bit with the fewest disjoint candidates (lowest bit on ties),
        // or -1 when some free bit has none left.
        int cover_pick(std::uint64_t occupied) const
        {
            int best = 64;
            std::size_t best_count = SIZE_MAX;
            for (std::uint64_t free = target_ & ~occupied; free != 0; free &= free - 1) {
                const int bit = std::countr_zero(free);
                const auto count = kernels::count_disjoint((*by_bit_)[bit].masks, occupied);
                if (count == 0)
                    return -1;
                if (count < best_count) {
                    best = bit;
                    best_count = count;
                }
            }
            return best;
        }

        bool cover_step(std::uint64_t occupied, std::vector<std::size_t>& chosen)
        {
            deadline_.tick();
            if ((target_ & ~occupied) == 0)
                return true;
            const int bit = cover_pick(occupied);
            if (bit < 0)
                return false;
            const auto& list = (*by_bit_)[bit];
            for (auto i = kernels::find_disjoint(list.masks, 0, occupied); i < list.masks.size();
                 i = kernels::find_disjoint(list.masks, i + 1, occupied)) {
                chosen.push_back(list.ids[i]);
                if (cover_step(occupied | list.masks[i], chosen))
                    return true;
                chosen.pop_back();
            }
            return false;
        }

        Deadline deadline_;
        const std::vector<CandidateList>* colours_ = nullptr;
        const std::vector<CandidateList>* by_bit_ = nullptr;
        std::uint64_t target_ = 0;
    };

    void require_mask_range(std::size_t n, const char* what)
    {
        if (n > 64)
            throw InputError(std::string(what) + ": exact search supports at most 64 vertices");
    }

    std::uint64_t full_mask(std::size_t n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

    // Maps vertex ids to search bits; the map breaks branching ties.
    SearchResult<Matching> cover_search(const Hypergraph& h, const std::vector<unsigned>& bit_of, SearchLimits limits)
    {
        std::vector<CandidateList> by_bit(h.n());
        const auto edges = h.edges();
        for (std::size_t id = 0; id < edges.size(); ++id) {
            std::uint64_t m = 0;
            for (auto v : edges[id])
                m |= std::uint64_t{1} << bit_of[v];
            for (auto v : edges[id])
                by_bit[bit_of[v]].add(m, id);
        }

        MatchingEngine engine(limits);
        std::vector<std::size_t> chosen;
        SearchResult<Matching> result;
        result.outcome = engine.exact_cover(by_bit, full_mask(h.n()), chosen);
        if (result.found()) {
            Matching m;
            for (auto id : chosen)
                m.edges.push_back(edges[id]);
            std::sort(m.edges.begin(), m.edges.end());
            result.witness = std::move(m);
        }
        return result;
    }

    class MaxMatchingSearch {
    public:
        explicit MaxMatchingSearch(const Hypergraph& h)
            : h_(h)
            , by_min_(h.n())
        {
            const auto edges = h.edges();
            for (std::size_t id = 0; id < edges.size(); ++id)
                by_min_[edges[id].front()].add(h.masks()[id], id);
        }

        Matching run()
        {
            greedy();
            std::vector<std::size_t> current;
            step(0, 0, current);
            Matching m;
            for (auto id : best_)
                m.edges.push_back(h_.edges()[id]);
            return m;
        }

    private:
        void greedy()
        {
            std::uint64_t occupied = 0;
            for (std::size_t id = 0; id < h_.edge_count(); ++id) {
                if ((h_.masks()[id] & occupied) == 0) {
                    occupied |= h_.masks()[id];
                    best_.push_back(id);
                }
            }
        }

        // `decided` holds every vertex that is matched or deliberately left
        // unmatched; all vertices below the branching vertex are decided.
        void step(std::uint64_t decided, std::size_t undecided_from, std::vector<std::size_t>& current)
        {
            const std::size_t n = h_.n();
            std::size_t v = undecided_from;
            while (v < n && (decided >> v & 1))
                ++v;
            const std::size_t remaining = static_cast<std::size_t>(std::popcount(~decided & full_mask(n)));
            if (current.size() + remaining / h_.k() <= best_.size())
                return;
            if (v >= n)
                return;

            const auto& list = by_min_[v];
            for (auto i = kernels::find_disjoint(list.masks, 0, decided); i < list.masks.size();
                 i = kernels::find_disjoint(list.masks, i + 1, decided)) {
                current.push_back(list.ids[i]);
                if (current.size() > best_.size())
                    best_ = current;
                step(decided | list.masks[i], v + 1, current);
                current.pop_back();
            }
            step(decided | (std::uint64_t{1} << v), v + 1, current);
        }

        const Hypergraph& h_;
        std::vector<CandidateList> by_min_;
        std::vector<std::size_t> best_;
    };

} // namespace

Matching max_matching(const Hypergraph& h)
{
    require_mask_range(h.n(), "max_matching");
    if (h.edge_count() == 0)
        return {};
    return MaxMatchingSearch(h).run();
}

SearchResult<Matching> has_perfect_matching(const Hypergraph& h, SearchLimits limits)
{
    require_mask_range(h.n(), "has_perfect_matching");
    if (h.n() % h.k() != 0)
        return {};
    std::vector<unsigned> identity(h.n());
    for (std::size_t v = 0; v < h.n(); ++v)
        identity[v] = static_cast<unsigned>(v);
    return cover_search(h, identity, limits);
}

SearchResult<RainbowMatching> rainbow_matching(const HypergraphFamily& family, SearchLimits limits)
{
    require_mask_range(family.n(), "rainbow_matching");
    std::vector<CandidateList> colours(family.size());
    for (std::size_t c = 0; c < family.size(); ++c) {
        const auto& member = family[c];
        for (std::size_t id = 0; id < member.edge_count(); ++id)
            colours[c].add(member.masks()[id], id);
    }

    MatchingEngine engine(limits);
    std::vector<std::size_t> chosen;
    SearchResult<RainbowMatching> result;
    result.outcome = engine.one_per_colour(colours, chosen);
    if (result.found()) {
        RainbowMatching m;
        for (std::size_t c = 0; c < family.size(); ++c)
            m.pairs.push_back({c, family[c].edges()[chosen[c]]});
        result.witness = std::move(m);
    }
    return result;
}

SearchResult<Matching> partite_perfect_matching(const PartiteHypergraph& h, SearchLimits limits)
{
    if (!h.balanced())
        throw InputError("partite perfect matching needs a balanced graph (3|Q| = |P|)");
    require_mask_range(h.n(), "partite_perfect_matching");
    // Ties go to P-vertices: P outnumbers Q three to one.
    std::vector<unsigned> bit_of(h.n());
    for (std::size_t v = 0; v < h.n(); ++v)
        bit_of[v] = static_cast<unsigned>(h.is_q(static_cast<Vertex>(v)) ? h.p_size() + v : v - h.q_size());
    return cover_search(h.graph(), bit_of, limits);
}

bool is_matching(const Hypergraph& h, const Matching& m)
{
    std::vector<bool> used(h.n(), false);
    for (const auto& e : m.edges) {
        if (!h.contains(e))
            return false;
        for (auto v : e) {
            if (used[v])
                return false;
            used[v] = true;
        }
    }
    return true;
}

bool is_perfect_matching(const Hypergraph& h, const Matching& m)
{
    return is_matching(h, m) && m.edges.size() * h.k() == h.n();
}

bool is_rainbow_matching(const HypergraphFamily& family, const RainbowMatching& m)
{
    if (m.pairs.size() != family.size())
        return false;
    std::vector<bool> colour_used(family.size(), false);
    std::vector<bool> vertex_used(family.n(), false);
    for (const auto& [colour, edge] : m.pairs) {
        if (colour >= family.size() || colour_used[colour] || !family[colour].contains(edge))
            return false;
        colour_used[colour] = true;
        for (auto v : edge) {
            if (vertex_used[v])
                return false;
            vertex_used[v] = true;
        }
    }
    return true;
}

VertexSet covered_vertices(const Matching& m)
{
    std::vector<Vertex> out;
    for (const auto& e : m.edges)
        out.insert(out.end(), e.begin(), e.end());
    return VertexSet(std::move(out));
}

} // namespace rainbow

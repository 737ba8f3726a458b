#include "doctest.h"

#include "helpers.hpp"

#include "rainbow/absorbing.hpp"
#include "rainbow/experiments.hpp"

using namespace rainbow;

namespace {

VertexSet all_p(const PartiteHypergraph& h) { return VertexSet(testing::iota(h.q_size(), h.p_size())); }

} // namespace

TEST_CASE("balanced sets")
{
    const auto h = complete_partite(2, 6);
    const BalancedSet s(VertexSet{0, 2, 3, 4}, h);
    CHECK(s.q_part() == VertexSet{0});
    CHECK(s.p_part() == VertexSet{2, 3, 4});
    CHECK_THROWS_AS(BalancedSet(VertexSet{0, 2, 3}, h), InputError);
    CHECK_THROWS_AS(BalancedSet(VertexSet{0, 2, 3, 40}, h), InputError);
    CHECK(is_balanced(VertexSet{}, h));
    CHECK_FALSE(is_balanced(VertexSet{0, 1, 2, 3, 4, 5}, h));
}

TEST_CASE("induced partite graphs keep original ids")
{
    const auto h = complete_partite(2, 6);
    const auto r = induced_perfect_matching(h, VertexSet{1, 4, 6, 7});
    REQUIRE(r.found());
    CHECK(r.witness->edges == std::vector<Edge>{Edge::of({1, 4, 6, 7})});
}

TEST_CASE("low degree anchor")
{
    const Hypergraph with_isolated(3, 5, {Edge::of({0, 1, 2}), Edge::of({0, 1, 3})});
    const auto a = low_degree_anchor(with_isolated);
    CHECK(a.x == 4);
    CHECK(a.neighbours.empty());

    const auto b = low_degree_anchor(build_extremal(6, 2, 2));
    CHECK(b.x == 3);
    CHECK(b.neighbours == VertexSet{0, 1, 2});
}

TEST_CASE("popular vertices")
{
    const auto h = build_extremal(6, 2, 2);
    const HypergraphFamily twice(6, {h, h});
    CHECK(popular_vertices(twice, 2) == VertexSet{0, 1, 2});
    CHECK(popular_vertices(twice, 3).empty());
    CHECK_THROWS_AS(popular_vertices(twice, 0), InputError);

    const HypergraphFamily complete(6, {complete_hypergraph(6, 3), complete_hypergraph(6, 3)});
    CHECK(popular_vertices(complete, 2) == VertexSet{1, 2, 3, 4, 5});
}

TEST_CASE("gadget on the complete partite graph")
{
    const auto h = complete_partite(8, 24);
    const VertexSet a{0, 8, 9, 10};
    const auto g = build_gadget(a, h, all_p(h));
    REQUIRE(g.has_value());
    CHECK(g->body.size() == 24);
    CHECK(g->pm_t.size() == 6);
    CHECK(g->pm_at.size() == 7);
    CHECK(g->body.all().disjoint(a));

    std::vector<Edge> extra;
    for (const auto& e : g->pm_at.edges)
        if (std::find(g->pm_t.edges.begin(), g->pm_t.edges.end(), e) == g->pm_t.edges.end())
            extra.push_back(e);
    CHECK(std::any_of(extra.begin(), extra.end(), [](const Edge& e) { return e[0] == 0; }));

    const auto check = is_absorbing(g->body.all(), a, h);
    CHECK(check.absorbing());

    const auto again = build_gadget(a, h, all_p(h));
    REQUIRE(again.has_value());
    CHECK(again->body == g->body);
    CHECK(again->pm_at == g->pm_at);
}

TEST_CASE("gadget on the reduced extremal family")
{
    std::vector<Hypergraph> members(8, build_extremal(24, 8, 2));
    const auto h = reduce_family(HypergraphFamily(24, std::move(members)));
    std::vector<Vertex> c;
    for (auto v : popular_vertices(family_from_partite(h), 1))
        c.push_back(static_cast<Vertex>(v + 8));
    const VertexSet a{0, 8, 9, 10};
    const auto g = build_gadget(a, h, VertexSet(c));
    REQUIRE(g.has_value());
    CHECK(is_absorbing(g->body.all(), a, h).absorbing());
}

TEST_CASE("gadget search failures and preconditions")
{
    const auto h = complete_partite(8, 24);
    CHECK_FALSE(build_gadget(VertexSet{0, 8, 9, 10}, h, VertexSet{}).has_value());
    CHECK_THROWS_AS(build_gadget(VertexSet{0, 8, 9}, h, all_p(h)), InputError);
    CHECK_THROWS_AS(build_gadget(VertexSet{0, 1, 8, 9}, h, all_p(h)), InputError);
    CHECK_THROWS_AS(build_gadget(VertexSet{0, 4, 5, 6}, complete_partite(4, 12), VertexSet{}), InputError);

    GadgetOptions tiny;
    tiny.node_budget = 3;
    CHECK_FALSE(build_gadget(VertexSet{0, 8, 9, 10}, h, all_p(h), tiny).has_value());
}

TEST_CASE("is_absorbing preconditions")
{
    const auto h = complete_partite(8, 24);
    CHECK_THROWS_AS(is_absorbing(VertexSet{1, 2}, VertexSet{0, 8, 9, 10}, h), InputError);
    std::vector<Vertex> t = testing::iota(1, 6);
    for (Vertex v = 11; v < 29; ++v)
        t.push_back(v);
    CHECK_THROWS_AS(is_absorbing(VertexSet(t), VertexSet{0, 8, 9, 11}, h), InputError);
    CHECK(is_absorbing(VertexSet(t), VertexSet{0, 8, 9, 10}, h).absorbing());
}

TEST_CASE("absorption")
{
    const auto h = complete_partite(16, 48);
    GadgetOptions first;
    first.forbidden = VertexSet{1, 19, 20, 21};
    auto g1 = build_gadget(VertexSet{0, 16, 17, 18}, h, all_p(h), first);
    REQUIRE(g1.has_value());
    GadgetOptions second;
    second.forbidden = g1->body.all().united(VertexSet{0, 16, 17, 18});
    auto g2 = build_gadget(VertexSet{1, 19, 20, 21}, h, all_p(h), second);
    REQUIRE(g2.has_value());
    const std::vector<AbsorberGadget> pool{*g1, *g2};

    SUBCASE("empty leftover gives the internal matchings")
    {
        const auto m = absorb(pool, BalancedSet(), h);
        CHECK(m.size() == 12);
        CHECK(covered_vertices(m) == g1->body.all().united(g2->body.all()));
    }
    SUBCASE("one exact target uses pm_at")
    {
        const auto m = absorb(pool, BalancedSet(VertexSet{0, 16, 17, 18}, h), h);
        for (const auto& e : g1->pm_at.edges)
            CHECK(std::find(m.edges.begin(), m.edges.end(), e) != m.edges.end());
        for (const auto& e : g2->pm_t.edges)
            CHECK(std::find(m.edges.begin(), m.edges.end(), e) != m.edges.end());
    }
    SUBCASE("eight leftover vertices")
    {
        VertexSet used = g1->body.all().united(g2->body.all());
        std::vector<Vertex> q, p;
        for (Vertex v = 0; v < 16 && q.size() < 2; ++v)
            if (!used.contains(v))
                q.push_back(v);
        for (Vertex v = 16; v < 64 && p.size() < 6; ++v)
            if (!used.contains(v))
                p.push_back(v);
        q.insert(q.end(), p.begin(), p.end());
        const VertexSet s(q);
        const auto m = absorb(pool, BalancedSet(s, h), h);
        CHECK(is_matching(h.graph(), m));
        CHECK(covered_vertices(m) == used.united(s));
    }
    SUBCASE("pool exhaustion names the first unabsorbed set")
    {
        VertexSet used = g1->body.all().united(g2->body.all());
        std::vector<Vertex> s;
        for (Vertex v = 0; v < 16 && s.size() < 3; ++v)
            if (!used.contains(v))
                s.push_back(v);
        std::size_t p = 0;
        for (Vertex v = 16; v < 64 && p < 9; ++v)
            if (!used.contains(v)) {
                s.push_back(v);
                ++p;
            }
        try {
            absorb(pool, BalancedSet(VertexSet(s), h), h);
            FAIL("expected an absorption failure");
        }
        catch (const AbsorptionError& e) {
            CHECK(e.unabsorbed().size() == 4);
        }
    }
    SUBCASE("overlapping input is rejected")
    {
        CHECK_THROWS_AS(absorb({*g1, *g1}, BalancedSet(), h), InputError);
    }
}

TEST_CASE("absorb scenarios")
{
    AbsorbScenario complete;
    complete.graph = complete_partite(8, 24);
    const auto r = run_absorb_scenario(complete);
    CHECK(r.ok);
    CHECK(r.leftover.empty());
    REQUIRE(r.perfect_matching.has_value());
    CHECK(is_perfect_matching(complete.graph.graph(), *r.perfect_matching));

    AbsorbScenario too_small;
    too_small.graph = complete_partite(6, 18);
    CHECK_THROWS_AS(run_absorb_scenario(too_small), InputError);
}

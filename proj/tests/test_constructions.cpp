#include "doctest.h"

#include "helpers.hpp"
#include "oracles.hpp"

#include "rainbow/constructions.hpp"

using namespace rainbow;

TEST_CASE("extremal graph matches its definition")
{
    for (auto [n, s, ell] : std::vector<std::tuple<std::size_t, std::size_t, int>>{
             {6, 2, 1}, {6, 2, 2}, {9, 3, 1}, {9, 3, 2}, {9, 3, 3}, {12, 4, 2}}) {
        const auto h = build_extremal(n, s, ell);
        const std::size_t t = s * static_cast<std::size_t>(ell) - 1;
        std::size_t expected = 0;
        for (const auto& e : all_k_subsets(n, 3)) {
            const auto in_t = static_cast<int>(std::count_if(e.begin(), e.end(), [&](Vertex v) { return v < t; }));
            const bool want = in_t >= ell;
            expected += want;
            CHECK(h.contains(e) == want);
        }
        CHECK(h.edge_count() == expected);
    }
    CHECK(build_extremal(9, 3, 1).edge_count() == 49);
    CHECK_THROWS_AS(build_extremal(5, 3, 3), InputError);
}

TEST_CASE("sigma2 of H^2_{n,n/3} follows the closed form")
{
    const std::vector<std::pair<long long, long long>> expected{{6, 10}, {9, 32}, {12, 66}, {15, 112}, {18, 170}};
    for (auto [n, value] : expected) {
        CHECK(sigma2_extremal_formula(n) == value);
        const auto stats = degree_sum_stats(build_extremal(static_cast<std::size_t>(n), static_cast<std::size_t>(n / 3), 2));
        CHECK(stats.sigma2 == value);
    }
    CHECK_THROWS_AS(sigma2_extremal_formula(7), InputError);
}

TEST_CASE("partite graph validation")
{
    CHECK_THROWS_AS(PartiteHypergraph(1, 4, {Edge::of({1, 2, 3, 4})}), InputError);
    CHECK_NOTHROW(PartiteHypergraph(1, 3, {Edge::of({0, 1, 2, 3})}));
    CHECK_THROWS_AS(PartiteHypergraph(2, 3, {Edge::of({0, 1, 2, 3})}), InputError);
    CHECK_FALSE(PartiteHypergraph(1, 4, {Edge::of({0, 1, 2, 3}), Edge::of({0, 1, 3, 4})}).balanced());
}

TEST_CASE("reduction round trip")
{
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        InstanceRng rng(seed);
        const auto family = random_family(9, 3, 0.2, rng);
        const auto h = reduce_family(family);
        CHECK(h.q_size() == 3);
        CHECK(h.p_size() == 9);
        CHECK(h.balanced());
        std::size_t total = 0;
        for (const auto& m : family.members())
            total += m.edge_count();
        CHECK(h.edge_count() == total);

        const auto back = family_from_partite(h);
        REQUIRE(back.size() == family.size());
        for (std::size_t i = 0; i < family.size(); ++i)
            CHECK(std::equal(back[i].edges().begin(), back[i].edges().end(), family[i].edges().begin(),
                             family[i].edges().end()));
    }
}

TEST_CASE("extremal family and its partite graph")
{
    const auto f = extremal_family(9);
    CHECK(f.size() == 3);
    const auto h = build_partite_extremal(9);
    CHECK(h.q_size() == 3);
    CHECK(h.edge_count() == 3 * build_extremal(9, 3, 2).edge_count());
    CHECK(complete_partite(2, 6).edge_count() == 40);
    CHECK_THROWS_AS(HypergraphFamily(5, {complete_hypergraph(6, 3)}), InputError);
}

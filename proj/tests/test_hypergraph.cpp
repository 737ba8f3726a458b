#include "doctest.h"

#include "helpers.hpp"
#include "oracles.hpp"

#include "rainbow/constructions.hpp"

using namespace rainbow;

TEST_CASE("edge construction")
{
    CHECK(Edge::of({3, 1, 2}) == Edge::from_sorted(std::vector<Vertex>{1, 2, 3}));
    CHECK_THROWS_AS(Edge::from_sorted(std::vector<Vertex>{2, 1, 3}), InputError);
    CHECK_THROWS_AS(Edge::of({1, 1, 2}), InputError);
    CHECK(to_string(Edge::of({0, 4, 2})) == "{0,2,4}");

    const auto e = Edge::of({1, 5, 9});
    CHECK(e.contains(5));
    CHECK_FALSE(e.contains(4));
    CHECK(e.without(5) == Edge::of({1, 9}));
    CHECK(e.with(4) == Edge::of({1, 4, 5, 9}));
    CHECK(e.mask() == ((1ull << 1) | (1ull << 5) | (1ull << 9)));
    CHECK(e.intersects(Edge::of({9, 10, 11})));
    CHECK_FALSE(e.intersects(Edge::of({2, 3, 4})));
}

TEST_CASE("vertex sets")
{
    VertexSet s{4, 1, 3};
    CHECK(s.members()[0] == 1);
    CHECK_THROWS_AS(VertexSet({1, 1}), InputError);
    CHECK(s.united(VertexSet{2, 3}) == VertexSet{1, 2, 3, 4});
    CHECK(s.minus(VertexSet{3}) == VertexSet{1, 4});
    CHECK(s.disjoint(VertexSet{0, 2}));
    CHECK_FALSE(s.disjoint(VertexSet{4}));
}

TEST_CASE("hypergraph construction rejects malformed input")
{
    CHECK_THROWS_AS(Hypergraph(3, 4, {Edge::of({0, 1, 2}), Edge::of({0, 1, 2})}), InputError);
    CHECK_THROWS_AS(Hypergraph(3, 4, {Edge::of({1, 2, 3}), Edge::of({0, 1, 2})}), InputError);
    CHECK_THROWS_AS(Hypergraph(3, 3, {Edge::of({1, 2, 3})}), InputError);
    CHECK_THROWS_AS(Hypergraph(3, 4, {Edge::of({1, 2})}), InputError);

    Hypergraph h(3, 4, {Edge::of({1, 2, 3}), Edge::of({0, 1, 2}), Edge::of({1, 2, 3})}, true);
    CHECK(h.edge_count() == 2);
    CHECK(h.edges()[0] == Edge::of({0, 1, 2}));
    CHECK(h.contains(Edge::of({1, 2, 3})));
    CHECK(h.index_of(Edge::of({0, 1, 3})) == h.edge_count());
}

TEST_CASE("degrees of the extremal graph H^2_{6,2}")
{
    const auto h = build_extremal(6, 2, 2);
    CHECK(h.edge_count() == 10);
    for (Vertex t = 0; t < 3; ++t)
        CHECK(deg(h, VertexSet{t}) == 7);
    for (Vertex s = 3; s < 6; ++s)
        CHECK(deg(h, VertexSet{s}) == 3);
    CHECK(deg(h, VertexSet{}) == 10);
    CHECK(deg(h, VertexSet{3, 4}) == 0);
    CHECK_THROWS_AS(deg(h, VertexSet{0, 1, 2, 3}), InputError);
}

TEST_CASE("degree queries agree with enumeration")
{
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const auto h = testing::random_graph(seed, 8, 3, 0.4);
        for (std::size_t size = 1; size <= 3; ++size)
            for (const auto& s : all_k_subsets(8, size)) {
                std::vector<Vertex> v(s.begin(), s.end());
                CHECK(deg(h, VertexSet(v)) == oracle::degree(h, v));
            }
    }
}

TEST_CASE("handshake identity")
{
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const std::size_t k = 2 + seed % 3;
        const auto h = testing::random_graph(seed, 9, k, 0.3);
        std::size_t total = 0;
        for (Vertex v = 0; v < 9; ++v)
            total += h.degree(v);
        CHECK(total == k * h.edge_count());
    }
}

TEST_CASE("minimum degree")
{
    CHECK(min_degree(build_extremal(9, 3, 1), 1) == 13);
    CHECK(min_degree(complete_hypergraph(7, 3), 1) == 15);
    CHECK(min_degree(complete_hypergraph(7, 3), 2) == 5);
    CHECK_THROWS_AS(min_degree(complete_hypergraph(7, 3), 3), InputError);
}

TEST_CASE("link keeps ids and matches degrees")
{
    const auto h = testing::random_graph(3, 8, 3, 0.5);
    for (Vertex u = 0; u < 8; ++u) {
        const auto l = link(h, u);
        CHECK(l.k() == 2);
        CHECK(l.edge_count() == h.degree(u));
        CHECK(l.degree(u) == 0);
        for (Vertex v = 0; v < 8; ++v)
            if (v != u)
                CHECK(l.degree(v) == h.codegree(u, v));
    }
}

TEST_CASE("degree sum statistics")
{
    const auto h = build_extremal(6, 2, 2);
    const auto s = degree_sum_stats(h);
    CHECK(s.sigma2 == 10);
    CHECK(s.sigma2_prime == 6);
    CHECK(s.sigma2_dprime == 6);

    const auto k = degree_sum_stats(complete_hypergraph(5, 3));
    CHECK(k.sigma2 == 12);
    CHECK_FALSE(k.sigma2_dprime.has_value());

    const auto empty = degree_sum_stats(Hypergraph(3, 4, {}));
    CHECK_FALSE(empty.sigma2.has_value());
    CHECK(empty.sigma2_prime == 0);

    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto g = testing::random_graph(seed, 7, 3, 0.3);
        std::optional<long long> adj, any;
        for (Vertex u = 0; u < 7; ++u)
            for (Vertex v = u + 1; v < 7; ++v) {
                const long long sum = static_cast<long long>(oracle::degree(g, {u}) + oracle::degree(g, {v}));
                any = any ? std::min(*any, sum) : sum;
                if (oracle::degree(g, {u, v}) > 0)
                    adj = adj ? std::min(*adj, sum) : sum;
            }
        const auto got = degree_sum_stats(g);
        CHECK(got.sigma2 == adj);
        CHECK(got.sigma2_prime == any);
    }
}

TEST_CASE("isolated vertices and induced subgraphs")
{
    Hypergraph h(3, 6, {Edge::of({0, 1, 2}), Edge::of({1, 2, 4})});
    CHECK(isolated_vertices(h) == VertexSet{3, 5});

    const auto sub = induced(h, VertexSet{1, 2, 4, 5});
    CHECK(sub.n() == 4);
    CHECK(sub.edge_count() == 1);
    CHECK(sub.edges()[0] == Edge::of({0, 1, 2}));
    CHECK(adjacent(h, 0, 4) == false);
    CHECK(adjacent(h, 1, 4));
}

TEST_CASE("k-subsets are lexicographic and complete")
{
    const auto subsets = all_k_subsets(6, 3);
    CHECK(subsets.size() == 20);
    CHECK(std::is_sorted(subsets.begin(), subsets.end()));
    CHECK(std::adjacent_find(subsets.begin(), subsets.end()) == subsets.end());
    CHECK(complete_hypergraph(9, 3).edge_count() == 84);
}

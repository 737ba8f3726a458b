#include "doctest.h"

#include "helpers.hpp"

#include "rainbow/io.hpp"

#include <sstream>

using namespace rainbow;
using io::json;

TEST_CASE("hypergraph round trip")
{
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto h = testing::random_graph(seed, 8, 3, 0.3);
        const auto back = io::hypergraph_from_json(json::parse(io::to_json(h).dump()));
        CHECK(back.n() == h.n());
        CHECK(back.k() == h.k());
        CHECK(std::equal(back.edges().begin(), back.edges().end(), h.edges().begin(), h.edges().end()));
    }
}

TEST_CASE("strict reader and normalization")
{
    const auto unsorted_edge = json::parse(R"({"k": 3, "n": 4, "edges": [[2, 1, 0]]})");
    CHECK_THROWS_AS(io::hypergraph_from_json(unsorted_edge), InputError);
    CHECK(io::hypergraph_from_json(unsorted_edge, true).edges()[0] == Edge::of({0, 1, 2}));

    const auto duplicate = json::parse(R"({"k": 3, "n": 4, "edges": [[0, 1, 2], [0, 1, 2]]})");
    CHECK_THROWS_AS(io::hypergraph_from_json(duplicate), InputError);
    CHECK(io::hypergraph_from_json(duplicate, true).edge_count() == 1);

    const auto out_of_order = json::parse(R"({"k": 3, "n": 4, "edges": [[1, 2, 3], [0, 1, 2]]})");
    CHECK_THROWS_AS(io::hypergraph_from_json(out_of_order), InputError);

    CHECK_THROWS_AS(io::hypergraph_from_json(json::parse(R"({"k": 3, "edges": []})")), InputError);
    CHECK_THROWS_AS(io::hypergraph_from_json(json::parse(R"({"k": 3, "n": 4, "edges": [[0, 1, -2]]})")), InputError);
    CHECK_THROWS_AS(io::hypergraph_from_json(json::parse(R"({"k": "x", "n": 4, "edges": []})")), InputError);

    std::istringstream broken("{\"k\": 3,");
    CHECK_THROWS_AS(io::read_json(broken), InputError);
}

TEST_CASE("family and partite round trips")
{
    InstanceRng rng(4);
    const auto family = random_family(6, 2, 0.4, rng);
    const auto f = io::family_from_json(json::parse(io::to_json(family).dump()));
    CHECK(f.size() == 2);
    CHECK(f[1].edge_count() == family[1].edge_count());

    const auto h = reduce_family(family);
    const auto j = io::to_json(h);
    CHECK(j.at("k") == 4);
    CHECK(j.at("q") == 2);
    CHECK(j.at("p") == 6);
    const auto back = io::partite_from_json(j);
    CHECK(back.edge_count() == h.edge_count());
    CHECK_THROWS_AS(io::partite_from_json(io::to_json(complete_hypergraph(4, 3))), InputError);
}

TEST_CASE("vertex sets accept both forms")
{
    CHECK(io::vertex_set_from_json(json::parse("[3, 1, 2]")) == VertexSet{1, 2, 3});
    CHECK(io::vertex_set_from_json(json::parse(R"({"vertices": [0, 5]})")) == VertexSet{0, 5});
    CHECK_THROWS_AS(io::vertex_set_from_json(json::parse("[1, 1]")), InputError);
    CHECK_THROWS_AS(io::vertex_set_from_json(json::parse("7")), InputError);
}

TEST_CASE("results serialize rationals as strings")
{
    FractionalMatching q;
    q.weights[Edge::of({0, 1, 2})] = Rational(1, 2);
    const auto j = io::to_json(q);
    CHECK(j[0].at("weight") == "1/2");
    CHECK(j[0].at("edge") == json::parse("[0, 1, 2]"));

    const auto cover = io::to_json(FractionalCover{{Rational(1, 3), Rational(0)}});
    CHECK(cover == json::parse(R"(["1/3", "0/1"])"));

    DegreeSumStats stats;
    stats.sigma2 = 10;
    const auto sj = io::to_json(stats);
    CHECK(sj.at("sigma2") == 10);
    CHECK(sj.at("sigma2_prime").is_null());

    RainbowMatching m{{{0, Edge::of({0, 1, 2})}, {1, Edge::of({3, 4, 5})}}};
    CHECK(io::to_json(m) == json::parse("[[0, 1, 2], [3, 4, 5]]"));
}

#include "doctest.h"

#include "helpers.hpp"
#include "oracles.hpp"

#include "rainbow/fractional.hpp"
#include "rainbow/solvers.hpp"

using namespace rainbow;

namespace {

LinearProgram matching_lp(const Hypergraph& h)
{
    LinearProgram lp;
    lp.a.assign(h.n(), std::vector<Rational>(h.edge_count()));
    for (std::size_t j = 0; j < h.edge_count(); ++j)
        for (auto v : h.edges()[j])
            lp.a[v][j] = 1;
    lp.b.assign(h.n(), Rational(1));
    lp.c.assign(h.edge_count(), Rational(1));
    return lp;
}

} // namespace

TEST_CASE("rational text form")
{
    CHECK(to_string(Rational(5, 2)) == "5/2");
    CHECK(to_string(Rational(3)) == "3/1");
    CHECK(to_string(Rational(-4, 6)) == "-2/3");
    CHECK(parse_rational("10/4") == Rational(5, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("x"), InputError);
    CHECK_THROWS_AS(parse_rational("0.5"), InputError);
}

TEST_CASE("known fractional values")
{
    const auto h = build_extremal(9, 3, 2);
    CHECK(nu_star(h).value == Rational(5, 2));
    CHECK(tau_star(h).value == Rational(5, 2));
    CHECK(nu_star(build_extremal(9, 3, 1)).value == 2);
    CHECK(tau_star(complete_hypergraph(6, 3)).value == 2);
    CHECK(nu_star(complete_hypergraph(9, 3)).value == 3);

    const Hypergraph triangle(2, 3, {Edge::of({0, 1}), Edge::of({0, 2}), Edge::of({1, 2})});
    CHECK(tau_star(triangle).value == Rational(3, 2));
    CHECK(nu_star(triangle).value == Rational(3, 2));

    const Hypergraph empty(3, 5, {});
    CHECK(nu_star(empty).value == 0);
    CHECK(tau_star(empty).value == 0);
    CHECK(verify_duality(empty));
}

TEST_CASE("nu* agrees with vertex enumeration on small graphs")
{
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        auto h = testing::random_graph(seed, 5, 3, 0.5);
        if (h.edge_count() > 6) {
            std::vector<Edge> few(h.edges().begin(), h.edges().begin() + 6);
            h = Hypergraph(3, 5, few);
        }
        const auto expected = oracle::lp_by_vertices(matching_lp(h));
        REQUIRE(expected.has_value());
        CHECK(nu_star(h).value == *expected);
        CHECK(tau_star(h).value == *expected);
    }
}

TEST_CASE("certificates are feasible and tight")
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto h = testing::random_graph(seed, 6 + seed % 5, 3, 0.15);
        const auto nu = nu_star(h);
        const auto tau = tau_star(h);
        CHECK(is_fractional_matching(h, nu.matching));
        CHECK(is_fractional_cover(h, tau.cover));
        CHECK(nu.matching.total() == nu.value);
        CHECK(tau.cover.total() == tau.value);
        CHECK(nu.value == tau.value);
        CHECK(Rational(static_cast<long>(max_matching(h).size())) <= nu.value);
        CHECK(verify_duality(h));
    }
}

TEST_CASE("validators")
{
    const auto h = complete_hypergraph(4, 3);
    FractionalMatching q;
    q.weights[Edge::of({0, 1, 2})] = Rational(2, 3);
    q.weights[Edge::of({0, 1, 3})] = Rational(1, 3);
    CHECK(is_fractional_matching(h, q));
    q.weights[Edge::of({0, 2, 3})] = Rational(1, 3);
    CHECK_FALSE(is_fractional_matching(h, q));

    FractionalMatching outside;
    outside.weights[Edge::of({0, 1, 2})] = 1;
    CHECK_FALSE(is_fractional_matching(Hypergraph(3, 4, {Edge::of({1, 2, 3})}), outside));

    FractionalCover p{{Rational(1, 3), Rational(1, 3), Rational(1, 3), 0}};
    CHECK(is_fractional_cover(Hypergraph(3, 4, {Edge::of({0, 1, 2})}), p));
    CHECK_FALSE(is_fractional_cover(h, p));
    CHECK_FALSE(is_fractional_cover(h, FractionalCover{{1, 1}}));
}

TEST_CASE("fractional perfect matchings")
{
    const auto full = has_fractional_pm(complete_partite(2, 6).graph());
    CHECK(full.found);
    REQUIRE(full.matching.has_value());
    CHECK(saturates_all_vertices(complete_partite(2, 6).graph(), *full.matching));

    const auto extremal = has_fractional_pm(build_partite_extremal(6).graph());
    CHECK_FALSE(extremal.found);
    CHECK(extremal.value == Rational(3, 2));

    CHECK_FALSE(has_fractional_pm(complete_hypergraph(7, 3)).found);
}

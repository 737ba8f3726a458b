#include "rainbow/fractional.hpp"

#include "rainbow/lp.hpp"

namespace rainbow {

Rational FractionalMatching::total() const
{
    Rational sum = 0;
    for (const auto& [edge, w] : weights)
        sum += w;
    return sum;
}

Rational FractionalCover::total() const
{
    Rational sum = 0;
    for (const auto& w : weights)
        sum += w;
    return sum;
}

namespace {

    void require_solved(const LpSolution& sol, const char* what)
    {
        if (sol.status != LpStatus::optimal)
            throw ContractError(std::string(what) + ": linear program did not reach an optimum");
    }

} // namespace

NuStar nu_star(const Hypergraph& h)
{
    // One row per vertex, one column per edge.
    LinearProgram lp;
    const auto edges = h.edges();
    lp.a.assign(h.n(), std::vector<Rational>(edges.size()));
    lp.b.assign(h.n(), Rational(1));
    lp.c.assign(edges.size(), Rational(1));
    for (std::size_t j = 0; j < edges.size(); ++j)
        for (auto v : edges[j])
            lp.a[v][j] = 1;

    auto sol = solve_lp(lp);
    require_solved(sol, "nu_star");
    NuStar out;
    out.value = sol.value;
    for (std::size_t j = 0; j < edges.size(); ++j)
        if (sgn(sol.primal[j]) != 0)
            out.matching.weights.emplace(edges[j], sol.primal[j]);
    return out;
}

TauStar tau_star(const Hypergraph& h)
{
    // minimize sum p  s.t.  sum_{x in e} p(x) >= 1, posed as
    // maximize -sum p  s.t.  -sum_{x in e} p(x) <= -1.
    LinearProgram lp;
    const auto edges = h.edges();
    lp.a.assign(edges.size(), std::vector<Rational>(h.n()));
    lp.b.assign(edges.size(), Rational(-1));
    lp.c.assign(h.n(), Rational(-1));
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (auto v : edges[i])
            lp.a[i][v] = -1;

    auto sol = solve_lp(lp);
    require_solved(sol, "tau_star");
    TauStar out;
    out.value = -sol.value;
    out.cover.weights = std::move(sol.primal);
    return out;
}

bool verify_duality(const Hypergraph& h) { return nu_star(h).value == tau_star(h).value; }

FractionalPmResult has_fractional_pm(const Hypergraph& h)
{
    auto nu = nu_star(h);
    FractionalPmResult out;
    out.value = nu.value;
    out.found = h.n() % h.k() == 0 && nu.value == Rational(static_cast<long>(h.n() / h.k()));
    if (out.found)
        out.matching = std::move(nu.matching);
    return out;
}

namespace {

    std::vector<Rational> vertex_loads(const Hypergraph& h, const FractionalMatching& q)
    {
        std::vector<Rational> load(h.n(), Rational(0));
        for (const auto& [edge, w] : q.weights)
            for (auto v : edge)
                load[v] += w;
        return load;
    }

    bool weights_in_unit_interval(const FractionalMatching& q)
    {
        for (const auto& [edge, w] : q.weights)
            if (sgn(w) < 0 || w > 1)
                return false;
        return true;
    }

} // namespace

bool is_fractional_matching(const Hypergraph& h, const FractionalMatching& q)
{
    for (const auto& [edge, w] : q.weights)
        if (!h.contains(edge))
            return false;
    if (!weights_in_unit_interval(q))
        return false;
    for (const auto& load : vertex_loads(h, q))
        if (load > 1)
            return false;
    return true;
}

bool is_fractional_cover(const Hypergraph& h, const FractionalCover& p)
{
    if (p.weights.size() != h.n())
        return false;
    for (const auto& w : p.weights)
        if (sgn(w) < 0 || w > 1)
            return false;
    for (const auto& e : h.edges()) {
        Rational sum = 0;
        for (auto v : e)
            sum += p.weights[v];
        if (sum < 1)
            return false;
    }
    return true;
}

bool saturates_all_vertices(const Hypergraph& h, const FractionalMatching& q)
{
    if (!is_fractional_matching(h, q))
        return false;
    for (const auto& load : vertex_loads(h, q))
        if (load != 1)
            return false;
    return true;
}

} // namespace rainbow

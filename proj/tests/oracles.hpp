#pragma once

// Brute-force reference implementations. They share nothing with the library
// beyond the plain data types, and favour obviousness over speed.

#include "rainbow/constructions.hpp"
#include "rainbow/lp.hpp"
#include "rainbow/shift.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

namespace oracle {

using rainbow::Edge;
using rainbow::Hypergraph;
using rainbow::Rational;
using rainbow::Vertex;

inline bool subset_of(const std::vector<Vertex>& s, const Edge& e)
{
    return std::all_of(s.begin(), s.end(), [&](Vertex v) { return std::find(e.begin(), e.end(), v) != e.end(); });
}

inline std::size_t degree(const Hypergraph& h, const std::vector<Vertex>& s)
{
    std::size_t d = 0;
    for (const auto& e : h.edges())
        d += subset_of(s, e);
    return d;
}

inline bool disjoint(const Edge& a, const Edge& b)
{
    for (auto x : a)
        for (auto y : b)
            if (x == y)
                return false;
    return true;
}

/// Largest matching by trying every include/exclude choice over the edges.
inline std::size_t max_matching_size(const Hypergraph& h)
{
    const auto edges = h.edges();
    std::vector<Edge> chosen;
    std::size_t best = 0;
    std::function<void(std::size_t)> go = [&](std::size_t from) {
        best = std::max(best, chosen.size());
        for (std::size_t i = from; i < edges.size(); ++i) {
            if (std::all_of(chosen.begin(), chosen.end(), [&](const Edge& c) { return disjoint(c, edges[i]); })) {
                chosen.push_back(edges[i]);
                go(i + 1);
                chosen.pop_back();
            }
        }
    };
    go(0);
    return best;
}

inline bool has_perfect_matching(const Hypergraph& h)
{
    return h.n() % h.k() == 0 && max_matching_size(h) * h.k() == h.n();
}

/// Some choice of one edge per member, pairwise disjoint.
inline bool has_rainbow(const rainbow::HypergraphFamily& f)
{
    std::vector<Edge> chosen;
    std::function<bool(std::size_t)> go = [&](std::size_t c) {
        if (c == f.size())
            return true;
        for (const auto& e : f[c].edges()) {
            if (std::all_of(chosen.begin(), chosen.end(), [&](const Edge& x) { return disjoint(x, e); })) {
                chosen.push_back(e);
                if (go(c + 1))
                    return true;
                chosen.pop_back();
            }
        }
        return false;
    };
    return go(0);
}

/// Solves B x = rhs exactly; empty when singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs)
{
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0)
            ++piv;
        if (piv == n)
            return std::nullopt;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0)
                continue;
            const Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c)
                m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    for (std::size_t r = 0; r < n; ++r)
        rhs[r] /= m[r][r];
    return rhs;
}

/// Optimum of max c.x, Ax <= b, x >= 0 by enumerating every basis of the
/// slack form. Assumes the feasible region is bounded and non-empty.
inline std::optional<Rational> lp_by_vertices(const rainbow::LinearProgram& lp)
{
    const std::size_t m = lp.b.size();
    const std::size_t n = lp.c.size();
    const std::size_t total = n + m;
    auto column = [&](std::size_t j, std::size_t row) -> Rational {
        if (j < n)
            return lp.a[row][j];
        return j - n == row ? Rational(1) : Rational(0);
    };
    std::optional<Rational> best;
    std::vector<bool> pick(total, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(m), true);
    std::sort(pick.begin(), pick.end());
    do {
        std::vector<std::size_t> basis;
        for (std::size_t j = 0; j < total; ++j)
            if (pick[j])
                basis.push_back(j);
        std::vector<std::vector<Rational>> bm(m, std::vector<Rational>(m));
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c)
                bm[r][c] = column(basis[c], r);
        auto x = solve_square(bm, lp.b);
        if (!x || std::any_of(x->begin(), x->end(), [](const Rational& v) { return v < 0; }))
            continue;
        Rational value = 0;
        for (std::size_t c = 0; c < m; ++c)
            if (basis[c] < n)
                value += lp.c[basis[c]] * (*x)[c];
        if (!best || value > *best)
            best = value;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return best;
}

/// Rank tuple of a partite edge: (Q rank, sorted P ranks).
inline std::array<std::size_t, 4> ranks(const Edge& e, const rainbow::OrderedPartite& ord)
{
    std::array<std::size_t, 3> p{ord.p_rank(e[1]), ord.p_rank(e[2]), ord.p_rank(e[3])};
    std::sort(p.begin(), p.end());
    return {ord.q_rank(e[0]), p[0], p[1], p[2]};
}

inline bool dominated(const std::array<std::size_t, 4>& a, const std::array<std::size_t, 4>& b)
{
    for (std::size_t i = 0; i < 4; ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

/// Upward closure checked against every partite 4-set of the vertex set.
inline bool is_stable(const rainbow::OrderedPartite& ord)
{
    const auto& g = ord.graph();
    const auto all = rainbow::complete_partite(g.q_size(), g.p_size());
    for (const auto& e : g.edges()) {
        const auto re = ranks(e, ord);
        for (const auto& f : all.edges())
            if (dominated(re, ranks(f, ord)) && !g.contains(f))
                return false;
    }
    return true;
}

} // namespace oracle

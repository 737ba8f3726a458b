#pragma once

#include "rainbow/hypergraph.hpp"
#include "rainbow/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace rainbow {

/// Edge weights in [0,1] with every vertex load at most 1.
struct FractionalMatching {
    std::map<Edge, Rational> weights;

    Rational total() const;
};

/// Vertex weights in [0,1] with every edge weight sum at least 1.
struct FractionalCover {
    std::vector<Rational> weights;

    Rational total() const;
};

struct NuStar {
    Rational value;
    FractionalMatching matching;
};

struct TauStar {
    Rational value;
    FractionalCover cover;
};

/// Fractional matching number and an optimal fractional matching.
NuStar nu_star(const Hypergraph& h);

/// Fractional vertex cover number and an optimal cover. Solved as its own
/// linear program, independently of nu_star.
TauStar tau_star(const Hypergraph& h);

/// Both programs solved separately; true iff the optimal values coincide.
bool verify_duality(const Hypergraph& h);

struct FractionalPmResult {
    bool found = false;
    Rational value;
    std::optional<FractionalMatching> matching;
};

/// found iff nu*(h) = |V|/k; the witness then saturates every vertex.
FractionalPmResult has_fractional_pm(const Hypergraph& h);

bool is_fractional_matching(const Hypergraph& h, const FractionalMatching& q);
bool is_fractional_cover(const Hypergraph& h, const FractionalCover& p);
/// Every vertex load is exactly 1.
bool saturates_all_vertices(const Hypergraph& h, const FractionalMatching& q);

} // namespace rainbow

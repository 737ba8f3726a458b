#pragma once

#include "rainbow/rational.hpp"

#include <cstddef>
#include <vector>

namespace rainbow {

/// maximize c.x subject to A x <= b, x >= 0. Dense, row-major A.
struct LinearProgram {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    std::vector<Rational> c;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    Rational value;
    /// One entry per column of A.
    std::vector<Rational> primal;
    /// One entry per row of A: the optimal multipliers of the constraints.
    std::vector<Rational> dual;
    std::size_t pivots = 0;
};

/// Exact primal simplex on a dictionary (Chvatal form) with Bland's rule for
/// both entering and leaving variables. When b has negative entries a single
/// auxiliary variable drives a phase-one solve first.
LpSolution solve_lp(const LinearProgram& lp);

} // namespace rainbow

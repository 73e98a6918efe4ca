#pragma once

#include <vector>

#include "exactgm/polytope.hpp"
#include "exactgm/rational.hpp"

namespace exactgm {

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus status);

/**
 * Result of an exact standard-form solve: max c.x subject to A x = b, x >= 0.
 * At Optimal, `basis` holds one column index per row and no non-basic column
 * has positive reduced cost.
 */
struct StandardLpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value = 0;
    RatVector x;
    std::vector<int> basis;
};

/**
 * Two-phase primal simplex in exact rational arithmetic with Bland's
 * anticycling rule throughout. A must have full row rank; redundant rows are
 * rejected as an internal error. Deterministic for fixed input.
 *
 * `ready_slacks` may name, per row, a dedicated slack column (+1 in that row
 * only, nonnegative rhs); such rows start basic and need no artificial.
 */
StandardLpResult solve_standard_lp(const RatMatrix& a, const RatVector& b,
                                   const RatVector& c,
                                   const std::vector<int>* ready_slacks = nullptr);

/// LP over a constraint system, reusing its basis/solution vocabulary.
struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational optimal_value = 0;
    BasicSolution solution;
    Basis basis;
};

/// max c.x over {x : sys.matrix x = sys.rhs, x >= 0}.
LpResult solve_lp(const ConstraintSystem& sys, const RatVector& c);

}  // namespace exactgm

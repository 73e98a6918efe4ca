#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "exactgm/objective.hpp"
#include "exactgm/polytope.hpp"
#include "exactgm/rational.hpp"
#include "exactgm/simplex.hpp"

namespace exactgm {

enum class SubdivisionRule { LongestEdge, Omega };

enum class SolverStatus { Optimal, IterationLimit };

const char* to_string(SolverStatus status);

/**
 * Monotone bound trace of a branch-and-bound run: upper bounds are
 * nonincreasing, incumbents nondecreasing, and at Optimal the final upper
 * bound equals the final incumbent exactly.
 */
struct SolverTrace {
    struct Item {
        long long iteration = 0;
        Rational upper_bound;
        Rational incumbent_value;
    };

    std::vector<Item> items;
    Basis final_basis;
    BasicSolution final_vertex;
    SolverStatus status = SolverStatus::IterationLimit;

    const Item& last() const { return items.back(); }
};

struct SolverOptions {
    std::optional<long long> max_iterations;  // nullopt = unlimited; else >= 1
    SubdivisionRule subdivision = SubdivisionRule::Omega;
    std::function<void(const SolverTrace::Item&)> on_iteration;
};

/**
 * Maximizes a convex objective over a non-degenerate perturbed system by
 * simplicial branch-and-bound: each simplex is bounded by the affine
 * function interpolating the objective at its vertices (an overestimator by
 * convexity), maximized over the feasible part of the simplex with the exact
 * LP engine; the best simplex is subdivided at its LP maximizer (or by
 * longest-edge bisection). Terminates when the global bound equals the
 * incumbent exactly or the iteration limit is reached.
 *
 * Degenerate input (t = 0) is refused: perturb first.
 */
SolverTrace maximize_convex(const ConvexObjective& obj, const ConstraintSystem& sys,
                            const SolverOptions& opts = {});

/// Exhaustive objective evaluation over all vertices; ties broken
/// lexicographically on value vectors. Intended for n <= 6.
std::pair<BasicSolution, Rational> brute_force_vertex_max(
    const ConvexObjective& obj, const ConstraintSystem& sys);

/// Integer certificate from a bound trace: (ceil of the final upper bound,
/// that ceiling minus the incumbent's integer value).
struct GapCertificate {
    Integer upper_bound;
    Integer gap;
};

GapCertificate certify_gap(const SolverTrace& trace, const Rational& incumbent_value);

}  // namespace exactgm

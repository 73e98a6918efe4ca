#pragma once

#include <vector>

#include "exactgm/polytope.hpp"
#include "exactgm/rational.hpp"

namespace exactgm {

/**
 * Certified pipeline parameters: the convexification shift mu, the spectral
 * bound it dominates, the objective's continuity radius delta_hat, and the
 * perturbation t chosen strictly inside delta_hat / (n(2n-1)).
 */
struct PerturbationParams {
    int n = 0;
    long long mu = 0;
    long long lambda_bound = 0;
    Rational delta_hat;
    Rational t;

    /// Throws unless all invariants hold (mu > lambda >= 0, delta in (0,1),
    /// 0 < t < delta/(n(2n-1))).
    void validate() const;
};

/// Half the Optimal Basis Theorem's supremum: delta_hat / (2 n (2n-1)).
/// Requires 0 < delta_hat < 1.
Rational t_bound(const Rational& delta_hat, int n);

/**
 * Explicit feasible point of the perturbed polytope within nt of a
 * permutation-matrix vertex: rows other than the one carrying the unit in
 * column n copy the vertex with the unit scaled to 1-t; that row takes 1-nt
 * in column n and t elsewhere.
 */
RatVector lift_vertex(const BasicSolution& xhat, const Rational& t);

/// Re-solves the basis against the unperturbed right-hand side. Feasibility
/// is reported via the flag, not an error: oversized perturbations are a
/// legitimate probe.
BasicSolution restrict_basis(const Basis& basis, const ConstraintSystem& surrogate);

/// One right-hand-side perturbation experiment: b' = b - gamma with
/// |gamma_i| < Gamma / m required componentwise.
struct SensitivityTrial {
    ConstraintSystem sys;  // t = 0, integer rhs
    Basis basis;
    RatVector gamma;
    Rational big_gamma;
};

struct SensitivityOutcome {
    BasicSolution xhat;    // basis against b
    BasicSolution xprime;  // basis against b - gamma
    RatVector deviation;   // |xhat - xprime| componentwise, length n^2
};

/// Exact solves of both systems. Throws HypothesisViolationError when some
/// |gamma_i| >= Gamma/m.
SensitivityOutcome perturb_and_resolve(const SensitivityTrial& trial);

struct InfeasibilityClassification {
    bool feasible = false;
    int witness = -1;  // column with value <= -1 when infeasible
};

/**
 * Integer-rhs classifier: asserts every component is an integer (exactness
 * guarantee of total unimodularity + Cramer) and locates a witness component
 * <= -1 for infeasible solutions.
 */
InfeasibilityClassification classify_infeasibility(const BasicSolution& sol);

/// Ceiling. An exact integer maps to itself.
Integer round_upper_bound(const Rational& ub);

}  // namespace exactgm

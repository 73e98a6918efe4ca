#pragma once

#include <optional>
#include <string>

#include "exactgm/objective.hpp"
#include "exactgm/oracle.hpp"
#include "exactgm/sensitivity.hpp"
#include "exactgm/solver.hpp"

namespace exactgm {

/// End-to-end matching result with its integer optimality-gap certificate.
struct MatchReport {
    Permutation sigma;
    long long symdiff = 0;
    long long qform = 0;
    long long f_value = 0;
    long long mu = 0;
    long long lambda_bound = 0;
    Rational delta_hat;
    Rational t;
    long long upper_bound_int = 0;
    long long gap = 0;
    long long iterations = 0;
    std::string solver_status;

    bool operator==(const MatchReport& other) const = default;
};

struct MatchOptions {
    std::optional<long long> max_iterations;
    std::optional<Rational> t_override;
    SubdivisionRule subdivision = SubdivisionRule::Omega;
    std::function<void(const SolverTrace::Item&)> on_iteration;
};

/// Certified parameters for the pair: mu, lambda bound, delta_hat, t.
PerturbationParams certify_params(const QuadraticObjective& obj);

/**
 * The full pipeline: objective construction, certified perturbation, convex
 * maximization over the surrogate, basis restriction to the original
 * polytope, and integer gap certification.
 */
MatchReport match_graphs(const AdjacencyMatrix& e1, const AdjacencyMatrix& e2,
                         const MatchOptions& opts = {});

/// Surrogate-vs-original equivalence probe at a caller-chosen perturbation.
struct VerifyReport {
    int n = 0;
    Rational t;
    bool restricted_feasible = false;
    bool equivalent = false;
    Basis basis;                   // surrogate-optimal basis
    Rational surrogate_value;      // objective at the surrogate optimum
    Rational restricted_value;     // objective at the restricted solution
    Rational reference_value;      // true optimum of the unperturbed problem
    std::string solver_status;

    bool operator==(const VerifyReport& other) const = default;
};

/**
 * Solves the surrogate at the given t, restricts the optimal basis to t = 0,
 * and reports whether the restriction is feasible and matches the
 * brute-force optimum of the original problem. The reference optimum is
 * computed by vertex exhaustion, so n <= 6.
 */
VerifyReport verify_equivalence(const ConvexObjective& obj, int n, const Rational& t,
                                const std::optional<long long>& max_iterations = {});

}  // namespace exactgm

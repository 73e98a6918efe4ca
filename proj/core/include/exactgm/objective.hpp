#pragma once

#include <memory>
#include <optional>
#include <string>
#include <tuple>

#include "exactgm/polytope.hpp"
#include "exactgm/rational.hpp"

namespace exactgm {

/// Adjacency matrix of a simple undirected graph: symmetric 0/1, zero
/// diagonal. Construction validates.
class AdjacencyMatrix {
  public:
    AdjacencyMatrix(int n, IntMatrix entries);

    /// Builds from 0-based edge pairs; symmetrizes.
    static AdjacencyMatrix from_edges(int n,
                                      const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    const IntMatrix& entries() const { return entries_; }
    int operator()(int i, int j) const { return entries_(i, j); }

    long long edge_count() const;

  private:
    int n_;
    IntMatrix entries_;
};

/**
 * Explicit quadratic shape of an objective: linear part plus nonnegatively
 * weighted products coeff * x_k * x_l (k <= l; k == l means a square). The
 * solver uses it to build per-region affine overestimators that are exact at
 * 0/1 points.
 */
struct QuadraticStructure {
    RatVector linear;                                     // length n^2
    std::vector<std::tuple<int, int, Rational>> products; // (k, l, coeff > 0)
};

/**
 * Contract consumed by the solver: a convex continuous function of an n x n
 * matrix point, evaluated exactly, with a declaration of whether it is
 * integer-valued on permutation matrices.
 */
class ConvexObjective {
  public:
    virtual ~ConvexObjective() = default;
    virtual int n() const = 0;
    virtual Rational evaluate(const RatMatrix& x) const = 0;
    virtual bool integer_on_vertices() const = 0;

    /// Quadratic shape when the objective has one; enables the solver's
    /// second bound. Purely an acceleration: correctness never depends on it.
    virtual std::optional<QuadraticStructure> quadratic_structure() const {
        return std::nullopt;
    }

    /// Evaluation at a row-major n^2 vector.
    Rational evaluate_vec(const RatVector& v) const;
};

/// Reshapes a row-major n^2 vector into the n x n matrix point.
RatMatrix unvec(const RatVector& v, int n);

/**
 * The Graph Matching quadratic x -> vec(x)^T (Q + mu I) vec(x) with
 * Q = the Kronecker quadratic-form matrix of the pair (E1, E2). Q is never
 * materialized for evaluation; q_matrix() builds it on demand for small n.
 */
struct QuadraticObjective {
    AdjacencyMatrix e1;
    AdjacencyMatrix e2;
    long long mu = 0;
    long long lambda_bound = 0;

    int n() const { return e1.n(); }
};

/// Maximum row sum of the adjacency matrix: an upper bound on its spectral
/// radius.
long long spectral_bound(const AdjacencyMatrix& e);

/// lambda_bound = spectral_bound(e1) * spectral_bound(e2), mu = lambda + 1.
QuadraticObjective build_objective(const AdjacencyMatrix& e1,
                                   const AdjacencyMatrix& e2);

/// E1 x . x E2, evaluated exactly via matrix products. At a permutation
/// matrix this is twice the relabeled common-edge count.
Rational eval_qform(const QuadraticObjective& obj, const RatMatrix& x);

/// eval_qform + mu * sum of squared entries.
Rational eval_f(const QuadraticObjective& obj, const RatMatrix& x);

/// |E1_sigma symmetric-difference E2| after relabeling G1 by sigma.
long long symmetric_difference(const AdjacencyMatrix& e1, const AdjacencyMatrix& e2,
                               const Permutation& sigma);

/**
 * Certified continuity radius for the shifted quadratic:
 * min(1 - guard, 1 / (4 mu (2 ceil(sqrt(n)) + 1))), an exact rational that is
 * conservative against the true sqrt(n).
 */
Rational delta_for_quadratic(const QuadraticObjective& obj);

/// The n^2 x n^2 quadratic-form matrix in this library's row-major variable
/// order; for small-n diagnostics and tests only.
IntMatrix q_matrix(const QuadraticObjective& obj);

/// ConvexObjective adapter over the GM quadratic.
class GmObjective : public ConvexObjective {
  public:
    explicit GmObjective(QuadraticObjective obj) : obj_(std::move(obj)) {}

    int n() const override { return obj_.n(); }
    Rational evaluate(const RatMatrix& x) const override { return eval_f(obj_, x); }
    bool integer_on_vertices() const override { return true; }
    std::optional<QuadraticStructure> quadratic_structure() const override;

    const QuadraticObjective& quadratic() const { return obj_; }

  private:
    QuadraticObjective obj_;
};

/**
 * Separable convex quadratic sum q_{ij} x_{ij}^2 + l_{ij} x_{ij} with
 * nonnegative quadratic coefficients. Covers hand-built diagnostic
 * objectives without the GM structure.
 */
class SeparableQuadraticObjective : public ConvexObjective {
  public:
    SeparableQuadraticObjective(RatMatrix quad, RatMatrix linear,
                                bool integer_on_vertices = false);

    int n() const override { return n_; }
    Rational evaluate(const RatMatrix& x) const override;
    bool integer_on_vertices() const override { return integer_on_vertices_; }
    std::optional<QuadraticStructure> quadratic_structure() const override;

  private:
    int n_;
    RatMatrix quad_;
    RatMatrix linear_;
    bool integer_on_vertices_;
};

}  // namespace exactgm

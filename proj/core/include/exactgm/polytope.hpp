#pragma once

#include <optional>
#include <set>
#include <vector>

#include "exactgm/rational.hpp"

namespace exactgm {

/**
 * The (2n-1) x n^2 equality system A x = b over the assignment variables
 * x_{ij}, in row-major column order k = i*n + j (0-based). Rows are the n
 * row-sum constraints followed by the first n-1 column-sum constraints; the
 * last column-sum constraint is omitted as linearly dependent.
 *
 * t = 0 is the Birkhoff polytope (b = 1); t in (0, 1/n) is the perturbed
 * polytope with row sums 1-t and retained column sums 1, which makes the
 * implied last column sum equal to 1-nt.
 */
struct ConstraintSystem {
    int n = 0;
    IntMatrix matrix;   // (2n-1) x n^2, entries in {0,1}
    RatVector rhs;      // length 2n-1
    Rational t = 0;

    int rows() const { return 2 * n - 1; }
    int cols() const { return n * n; }

    /// Column index of variable x_{ij} (0-based i, j).
    int col_index(int i, int j) const { return i * n + j; }

    /// Inverse of col_index.
    std::pair<int, int> col_pair(int k) const { return {k / n, k % n}; }
};

/// An ordered set of 2n-1 column indices whose submatrix of A is nonsingular.
struct Basis {
    std::vector<int> columns;

    bool operator==(const Basis& other) const = default;
};

/**
 * The basic solution induced by a basis: values on basic columns solve
 * B x_B = b exactly, non-basic components are exactly zero.
 */
struct BasicSolution {
    RatVector values;   // length n^2
    Basis basis;
    bool feasible = false;    // all components >= 0
    bool degenerate = false;  // feasible and some basic component == 0
    int n = 0;
    Rational t = 0;           // perturbation of the system it was solved on
};

/// A permutation of {0,...,n-1} stored as an image array.
struct Permutation {
    std::vector<int> image;

    int n() const { return static_cast<int>(image.size()); }
    bool operator==(const Permutation& other) const = default;
};

/// Unperturbed Birkhoff system (t = 0, all-ones rhs). Requires n >= 2.
ConstraintSystem build_birkhoff(int n);

/// Perturbed system: row sums 1-t, retained column sums 1. Requires
/// 0 < t < 1/n (the non-degeneracy interval).
ConstraintSystem build_perturbed(int n, const Rational& t);

/**
 * Exact solve of the square system B x_B = rhs where B consists of the given
 * columns of `matrix`. Returns the basic values in column order, or nullopt
 * when B is singular.
 */
std::optional<RatVector> solve_columns(const IntMatrix& matrix,
                                       const RatVector& rhs,
                                       const std::vector<int>& columns);

/// Basic solution for `basis` against the system's own right-hand side.
/// Throws NotABasisError when the column submatrix is singular.
BasicSolution basic_solution(const ConstraintSystem& sys, const Basis& basis);

/// Determinant of a square integer matrix (fraction-free Bareiss).
Integer int_determinant(const IntMatrix& m);

/**
 * Streams the vertices (feasible basic solutions, deduplicated by value
 * vector) of a constraint system by walking all column bases. Intended for
 * n <= 6; the caller bounds n.
 */
class VertexEnumerator {
  public:
    explicit VertexEnumerator(ConstraintSystem sys);

    /// Next previously-unseen vertex, or nullopt when exhausted.
    std::optional<BasicSolution> next();

  private:
    bool advance();
    bool row_cover_ok() const;

    ConstraintSystem sys_;
    std::vector<int> comb_;
    std::vector<unsigned> col_row_mask_;
    bool done_ = false;
    bool first_ = true;
    std::set<std::vector<Rational>> seen_;
};

/// All vertices of the system, in enumeration order.
std::vector<BasicSolution> enumerate_vertices(const ConstraintSystem& sys);

/**
 * Converts a permutation-matrix vertex of the unperturbed polytope into the
 * permutation it represents (sigma(i) = j iff x_{ij} = 1). Throws
 * NotAVertexError unless sol is feasible, has t = 0, and its values form a
 * 0/1 permutation matrix.
 */
Permutation bfs_to_permutation(const BasicSolution& sol);

/// n x n 0/1 matrix of sigma: entry (i, sigma(i)) = 1.
IntMatrix permutation_matrix(const Permutation& sigma);

/**
 * Randomized total-unimodularity probe: samples `trials` square minors of
 * the given order and reports whether every determinant lies in {-1,0,1}.
 * trials = 0 enumerates all minors of that order exhaustively. A regression
 * guard, not a proof.
 */
bool check_tu_minors(const IntMatrix& matrix, int order, long trials,
                     unsigned long seed);
bool check_tu_minors(const ConstraintSystem& sys, int order, long trials,
                     unsigned long seed);

}  // namespace exactgm

#include "exactgm/polytope.hpp"

#include <algorithm>
#include <random>

#include "exactgm/error.hpp"

namespace exactgm {

namespace {

IntMatrix assignment_matrix(int n) {
    const int rows = 2 * n - 1;
    IntMatrix a = IntMatrix::Zero(rows, n * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a(i, i * n + j) = 1;               // row-sum constraint i
            if (j < n - 1) a(n + j, i * n + j) = 1;  // column-sum constraint j
        }
    }
    return a;
}

}  // namespace

ConstraintSystem build_birkhoff(int n) {
    if (n < 2) {
        throw InvalidDimensionError("assignment dimension must be >= 2, got " +
                                    std::to_string(n));
    }
    ConstraintSystem sys;
    sys.n = n;
    sys.matrix = assignment_matrix(n);
    sys.rhs = RatVector::Constant(2 * n - 1, Rational(1));
    sys.t = 0;
    return sys;
}

ConstraintSystem build_perturbed(int n, const Rational& t) {
    if (n < 2) {
        throw InvalidDimensionError("assignment dimension must be >= 2, got " +
                                    std::to_string(n));
    }
    if (t <= 0 || t >= Rational(1, n)) {
        throw PerturbationRangeError("perturbation t = " + format_rational(t) +
                                     " outside (0, 1/" + std::to_string(n) + ")");
    }
    ConstraintSystem sys;
    sys.n = n;
    sys.matrix = assignment_matrix(n);
    sys.rhs = RatVector::Constant(2 * n - 1, Rational(1));
    for (int i = 0; i < n; ++i) sys.rhs(i) = Rational(1) - t;
    sys.t = t;
    return sys;
}

std::optional<RatVector> solve_columns(const IntMatrix& matrix,
                                       const RatVector& rhs,
                                       const std::vector<int>& columns) {
    const int m = static_cast<int>(matrix.rows());
    if (static_cast<int>(columns.size()) != m) return std::nullopt;

    // Gauss-Jordan on [B | rhs] with first-nonzero pivoting; exact rationals.
    RatMatrix work(m, m + 1);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) work(r, c) = matrix(r, columns[c]);
        work(r, m) = rhs(r);
    }
    for (int col = 0; col < m; ++col) {
        int pivot = -1;
        for (int r = col; r < m; ++r) {
            if (work(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return std::nullopt;
        if (pivot != col) work.row(pivot).swap(work.row(col));
        const Rational inv = Rational(1) / work(col, col);
        for (int c = col; c <= m; ++c) work(col, c) *= inv;
        for (int r = 0; r < m; ++r) {
            if (r == col || work(r, col) == 0) continue;
            const Rational factor = work(r, col);
            for (int c = col; c <= m; ++c) {
                work(r, c) -= factor * work(col, c);
            }
        }
    }
    RatVector x(m);
    for (int r = 0; r < m; ++r) x(r) = work(r, m);
    return x;
}

BasicSolution basic_solution(const ConstraintSystem& sys, const Basis& basis) {
    auto basic_values = solve_columns(sys.matrix, sys.rhs, basis.columns);
    if (!basic_values) {
        throw NotABasisError("selected columns form a singular submatrix");
    }
    BasicSolution sol;
    sol.values = RatVector::Zero(sys.cols());
    for (std::size_t i = 0; i < basis.columns.size(); ++i) {
        sol.values(basis.columns[i]) = (*basic_values)(static_cast<int>(i));
    }
    sol.basis = basis;
    sol.n = sys.n;
    sol.t = sys.t;
    sol.feasible = true;
    for (int k = 0; k < sys.cols(); ++k) {
        if (sol.values(k) < 0) {
            sol.feasible = false;
            break;
        }
    }
    sol.degenerate = false;
    if (sol.feasible) {
        for (int col : basis.columns) {
            if (sol.values(col) == 0) {
                sol.degenerate = true;
                break;
            }
        }
    }
    return sol;
}

Integer int_determinant(const IntMatrix& m) {
    const int n = static_cast<int>(m.rows());
    if (n != m.cols()) throw DimensionMismatchError("determinant of non-square matrix");
    if (n == 0) return 1;

    // Bareiss fraction-free elimination.
    Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic> w(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) w(r, c) = m(r, c);

    Integer sign = 1;
    Integer prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w(k, k) == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r) {
                if (w(r, k) != 0) {
                    swap_row = r;
                    break;
                }
            }
            if (swap_row < 0) return 0;
            w.row(k).swap(w.row(swap_row));
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) {
                w(r, c) = (w(r, c) * w(k, k) - w(r, k) * w(k, c)) / prev;
            }
            w(r, k) = 0;
        }
        prev = w(k, k);
    }
    return sign * w(n - 1, n - 1);
}

VertexEnumerator::VertexEnumerator(ConstraintSystem sys) : sys_(std::move(sys)) {
    const int m = sys_.rows();
    if (static_cast<int>(sys_.cols()) < m) {
        done_ = true;
        return;
    }
    comb_.resize(m);
    for (int i = 0; i < m; ++i) comb_[i] = i;
    col_row_mask_.assign(sys_.cols(), 0u);
    for (int c = 0; c < sys_.cols(); ++c) {
        unsigned mask = 0;
        for (int r = 0; r < m; ++r) {
            if (sys_.matrix(r, c) != 0) mask |= (1u << r);
        }
        col_row_mask_[c] = mask;
    }
}

bool VertexEnumerator::advance() {
    const int m = sys_.rows();
    const int ncols = sys_.cols();
    int i = m - 1;
    while (i >= 0 && comb_[i] == ncols - m + i) --i;
    if (i < 0) return false;
    ++comb_[i];
    for (int j = i + 1; j < m; ++j) comb_[j] = comb_[j - 1] + 1;
    return true;
}

bool VertexEnumerator::row_cover_ok() const {
    // A nonsingular basis must touch every constraint row.
    unsigned covered = 0;
    for (int c : comb_) covered |= col_row_mask_[c];
    const unsigned all = (1u << sys_.rows()) - 1u;
    return covered == all;
}

std::optional<BasicSolution> VertexEnumerator::next() {
    while (!done_) {
        if (!first_) {
            if (!advance()) {
                done_ = true;
                break;
            }
        }
        first_ = false;
        if (!row_cover_ok()) continue;
        auto basic_values = solve_columns(sys_.matrix, sys_.rhs, comb_);
        if (!basic_values) continue;

        bool feasible = true;
        for (int i = 0; i < basic_values->size(); ++i) {
            if ((*basic_values)(i) < 0) {
                feasible = false;
                break;
            }
        }
        if (!feasible) continue;

        Basis basis{comb_};
        BasicSolution sol = basic_solution(sys_, basis);
        std::vector<Rational> key(sol.values.data(),
                                  sol.values.data() + sol.values.size());
        if (!seen_.insert(std::move(key)).second) continue;
        return sol;
    }
    return std::nullopt;
}

std::vector<BasicSolution> enumerate_vertices(const ConstraintSystem& sys) {
    VertexEnumerator it(sys);
    std::vector<BasicSolution> vertices;
    while (auto v = it.next()) vertices.push_back(std::move(*v));
    return vertices;
}

Permutation bfs_to_permutation(const BasicSolution& sol) {
    if (sol.t != 0) {
        throw NotAVertexError("permutation extraction requires an unperturbed solution");
    }
    if (!sol.feasible) {
        throw NotAVertexError("solution is not feasible");
    }
    const int n = sol.n;
    Permutation sigma;
    sigma.image.assign(n, -1);
    std::vector<bool> column_used(n, false);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Rational& v = sol.values(i * n + j);
            if (v == 0) continue;
            if (v != 1) {
                throw NotAVertexError("fractional component x(" + std::to_string(i + 1) +
                                      "," + std::to_string(j + 1) + ") = " +
                                      format_rational(v));
            }
            if (sigma.image[i] >= 0 || column_used[j]) {
                throw NotAVertexError("values do not form a permutation matrix");
            }
            sigma.image[i] = j;
            column_used[j] = true;
        }
        if (sigma.image[i] < 0) {
            throw NotAVertexError("row " + std::to_string(i + 1) + " has no unit entry");
        }
    }
    return sigma;
}

IntMatrix permutation_matrix(const Permutation& sigma) {
    const int n = sigma.n();
    IntMatrix x = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) x(i, sigma.image[i]) = 1;
    return x;
}

namespace {

bool minor_is_unimodular(const IntMatrix& matrix, const std::vector<int>& rows,
                         const std::vector<int>& cols) {
    const int k = static_cast<int>(rows.size());
    IntMatrix minor(k, k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) minor(r, c) = matrix(rows[r], cols[c]);
    const Integer det = int_determinant(minor);
    return det >= -1 && det <= 1;
}

bool all_minors_unimodular(const IntMatrix& matrix, int order) {
    const int m = static_cast<int>(matrix.rows());
    const int n = static_cast<int>(matrix.cols());
    std::vector<int> rows(order), cols(order);
    for (int i = 0; i < order; ++i) rows[i] = i;
    auto next_comb = [](std::vector<int>& comb, int limit) {
        int i = static_cast<int>(comb.size()) - 1;
        while (i >= 0 && comb[i] == limit - static_cast<int>(comb.size()) + i) --i;
        if (i < 0) return false;
        ++comb[i];
        for (std::size_t j = i + 1; j < comb.size(); ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };
    do {
        for (int i = 0; i < order; ++i) cols[i] = i;
        do {
            if (!minor_is_unimodular(matrix, rows, cols)) return false;
        } while (next_comb(cols, n));
    } while (next_comb(rows, m));
    return true;
}

}  // namespace

bool check_tu_minors(const IntMatrix& matrix, int order, long trials,
                     unsigned long seed) {
    const int m = static_cast<int>(matrix.rows());
    const int n = static_cast<int>(matrix.cols());
    if (order > m || order > n || order < 1) {
        throw InvalidDimensionError("minor order out of range");
    }
    if (trials == 0) return all_minors_unimodular(matrix, order);

    std::mt19937_64 rng(seed);
    std::vector<int> row_pool(m), col_pool(n);
    for (int i = 0; i < m; ++i) row_pool[i] = i;
    for (int i = 0; i < n; ++i) col_pool[i] = i;
    std::vector<int> rows(order), cols(order);
    for (long trial = 0; trial < trials; ++trial) {
        for (int i = 0; i < order; ++i) {
            std::uniform_int_distribution<int> dist(i, m - 1);
            std::swap(row_pool[i], row_pool[dist(rng)]);
            rows[i] = row_pool[i];
        }
        for (int i = 0; i < order; ++i) {
            std::uniform_int_distribution<int> dist(i, n - 1);
            std::swap(col_pool[i], col_pool[dist(rng)]);
            cols[i] = col_pool[i];
        }
        if (!minor_is_unimodular(matrix, rows, cols)) return false;
    }
    return true;
}

bool check_tu_minors(const ConstraintSystem& sys, int order, long trials,
                     unsigned long seed) {
    return check_tu_minors(sys.matrix, order, trials, seed);
}

}  // namespace exactgm

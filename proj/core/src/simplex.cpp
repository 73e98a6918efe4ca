#include "exactgm/simplex.hpp"

#include "exactgm/error.hpp"

namespace exactgm {

const char* to_string(LpStatus status) {
    switch (status) {
        case LpStatus::Optimal: return "optimal";
        case LpStatus::Infeasible: return "infeasible";
        case LpStatus::Unbounded: return "unbounded";
    }
    return "unknown";
}

namespace {

/**
 * Dense simplex tableau over the columns [A | artificials], kept exact.
 * `basis[r]` is the column basic in row r. The objective row carries reduced
 * costs for the current phase.
 */
class Tableau {
  public:
    /// `ready` may name, per row, a column that is +1 in that row, zero in
    /// every other row, with a nonnegative right-hand side (a slack): such
    /// rows start basic without an artificial variable.
    Tableau(const RatMatrix& a, const RatVector& b, const std::vector<int>* ready)
        : m_(static_cast<int>(a.rows())), n_(static_cast<int>(a.cols())) {
        body_ = RatMatrix::Zero(m_, n_ + m_);
        rhs_ = RatVector::Zero(m_);
        basis_.resize(m_);
        artificial_.assign(m_, true);
        for (int r = 0; r < m_; ++r) {
            const bool flip = b(r) < 0;
            for (int c = 0; c < n_; ++c) body_(r, c) = flip ? -a(r, c) : a(r, c);
            rhs_(r) = flip ? -b(r) : b(r);
            const int slack = (ready && !flip) ? (*ready)[r] : -1;
            if (slack >= 0 && body_(r, slack) == 1) {
                basis_[r] = slack;
                artificial_[r] = false;
            } else {
                body_(r, n_ + r) = 1;  // artificial
                basis_[r] = n_ + r;
            }
        }
    }

    /// Minimize the sum of artificials. Returns false when that minimum is
    /// positive (the original system is infeasible).
    bool phase_one() {
        // Phase-I objective: maximize -(sum of artificials present).
        cost_ = RatVector::Zero(n_ + m_);
        bool any = false;
        for (int r = 0; r < m_; ++r) {
            if (artificial_[r]) {
                cost_(n_ + r) = -1;
                any = true;
            }
        }
        if (!any) return true;
        objective_ = 0;
        for (int r = 0; r < m_; ++r) price_out(r);

        run_bland(n_ + m_);
        if (objective_ != 0) return false;

        // Drive any artificial still basic at zero out of the basis.
        for (int r = 0; r < m_; ++r) {
            if (basis_[r] < n_) continue;
            int entering = -1;
            for (int c = 0; c < n_; ++c) {
                if (body_(r, c) != 0) {
                    entering = c;
                    break;
                }
            }
            if (entering < 0) {
                throw InternalConsistencyError(
                    "redundant constraint row encountered in LP");
            }
            pivot(r, entering);
        }
        return true;
    }

    LpStatus phase_two(const RatVector& c) {
        cost_ = RatVector::Zero(n_ + m_);
        for (int j = 0; j < n_; ++j) cost_(j) = c(j);
        objective_ = 0;
        for (int r = 0; r < m_; ++r) price_out(r);
        return run_bland(n_);  // artificial columns are no longer eligible
    }

    RatVector solution() const {
        RatVector x = RatVector::Zero(n_);
        for (int r = 0; r < m_; ++r) {
            if (basis_[r] < n_) x(basis_[r]) = rhs_(r);
        }
        return x;
    }

    const std::vector<int>& basis() const { return basis_; }
    const Rational& objective() const { return objective_; }

  private:
    void price_out(int row) {
        const Rational coef = cost_(basis_[row]);
        if (coef == 0) return;
        for (int c = 0; c < n_ + m_; ++c) cost_(c) -= coef * body_(row, c);
        objective_ += coef * rhs_(row);
    }

    void pivot(int row, int col) {
        // Tableaus here are sparse; skipping zero entries avoids most of the
        // rational-arithmetic churn.
        const Rational inv = Rational(1) / body_(row, col);
        if (inv != 1) {
            for (int c = 0; c < n_ + m_; ++c) {
                if (body_(row, c) != 0) body_(row, c) *= inv;
            }
            rhs_(row) *= inv;
        }
        for (int r = 0; r < m_; ++r) {
            if (r == row || body_(r, col) == 0) continue;
            const Rational factor = body_(r, col);
            for (int c = 0; c < n_ + m_; ++c) {
                if (body_(row, c) != 0) body_(r, c) -= factor * body_(row, c);
            }
            rhs_(r) -= factor * rhs_(row);
        }
        const Rational cost_factor = cost_(col);
        if (cost_factor != 0) {
            for (int c = 0; c < n_ + m_; ++c) {
                if (body_(row, c) != 0) cost_(c) -= cost_factor * body_(row, c);
            }
            objective_ += cost_factor * rhs_(row);
        }
        basis_[row] = col;
    }

    /// Bland's rule: lowest-index entering column with positive reduced cost,
    /// lowest-index basic column leaving on ratio ties. Terminates without
    /// further anticycling machinery.
    LpStatus run_bland(int eligible_cols) {
        for (;;) {
            int entering = -1;
            for (int c = 0; c < eligible_cols; ++c) {
                if (cost_(c) > 0) {
                    entering = c;
                    break;
                }
            }
            if (entering < 0) return LpStatus::Optimal;

            int leaving = -1;
            for (int r = 0; r < m_; ++r) {
                if (body_(r, entering) <= 0) continue;
                if (leaving < 0) {
                    leaving = r;
                    continue;
                }
                // rhs_r/body_r vs rhs_l/body_l by cross-multiplication; both
                // denominators are positive.
                const Rational lhs = rhs_(r) * body_(leaving, entering);
                const Rational rhs = rhs_(leaving) * body_(r, entering);
                if (lhs < rhs || (lhs == rhs && basis_[r] < basis_[leaving])) {
                    leaving = r;
                }
            }
            if (leaving < 0) return LpStatus::Unbounded;
            pivot(leaving, entering);
        }
    }

    int m_;
    int n_;
    RatMatrix body_;
    RatVector rhs_;
    RatVector cost_;
    Rational objective_;
    std::vector<int> basis_;
    std::vector<bool> artificial_;
};

}  // namespace

StandardLpResult solve_standard_lp(const RatMatrix& a, const RatVector& b,
                                   const RatVector& c,
                                   const std::vector<int>* ready_slacks) {
    if (a.rows() != b.size() || a.cols() != c.size()) {
        throw DimensionMismatchError("LP dimensions do not agree");
    }
    Tableau tableau(a, b, ready_slacks);
    StandardLpResult result;
    if (!tableau.phase_one()) {
        result.status = LpStatus::Infeasible;
        return result;
    }
    result.status = tableau.phase_two(c);
    if (result.status == LpStatus::Optimal) {
        result.x = tableau.solution();
        result.basis = tableau.basis();
        result.value = tableau.objective();
    }
    return result;
}

LpResult solve_lp(const ConstraintSystem& sys, const RatVector& c) {
    if (c.size() != sys.cols()) {
        throw DimensionMismatchError("objective length does not match system");
    }
    RatMatrix a(sys.rows(), sys.cols());
    for (int r = 0; r < sys.rows(); ++r)
        for (int col = 0; col < sys.cols(); ++col) a(r, col) = sys.matrix(r, col);

    StandardLpResult raw = solve_standard_lp(a, sys.rhs, c);
    LpResult result;
    result.status = raw.status;
    if (raw.status != LpStatus::Optimal) return result;

    result.optimal_value = raw.value;
    result.basis = Basis{raw.basis};
    result.solution = basic_solution(sys, result.basis);
    return result;
}

}  // namespace exactgm

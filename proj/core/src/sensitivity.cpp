#include "exactgm/sensitivity.hpp"

#include "exactgm/error.hpp"

namespace exactgm {

void PerturbationParams::validate() const {
    if (n < 2) throw InvalidDimensionError("params require n >= 2");
    if (lambda_bound < 0 || mu <= lambda_bound) {
        throw HypothesisViolationError("mu must exceed the spectral bound");
    }
    if (delta_hat <= 0 || delta_hat >= 1) {
        throw InvalidDeltaError("delta_hat must lie in (0,1)");
    }
    const Rational sup = delta_hat / (Rational(n) * (2 * n - 1));
    if (t <= 0 || t >= sup) {
        throw HypothesisViolationError("t must lie in (0, delta/(n(2n-1)))");
    }
}

Rational t_bound(const Rational& delta_hat, int n) {
    if (delta_hat <= 0 || delta_hat >= 1) {
        throw InvalidDeltaError("delta_hat = " + format_rational(delta_hat) +
                                " outside (0, 1)");
    }
    if (n < 2) throw InvalidDimensionError("t_bound requires n >= 2");
    return delta_hat / (Rational(2) * n * (2 * n - 1));
}

RatVector lift_vertex(const BasicSolution& xhat, const Rational& t) {
    const int n = xhat.n;
    Permutation sigma = bfs_to_permutation(xhat);  // validates the vertex
    if (t <= 0 || t >= Rational(1, n)) {
        throw PerturbationRangeError("lift requires 0 < t < 1/n");
    }

    int star_row = -1;
    for (int i = 0; i < n; ++i) {
        if (sigma.image[i] == n - 1) {
            star_row = i;
            break;
        }
    }

    RatVector lifted = RatVector::Zero(n * n);
    for (int i = 0; i < n; ++i) {
        if (i == star_row) {
            for (int j = 0; j < n - 1; ++j) lifted(i * n + j) = t;
            lifted(i * n + n - 1) = Rational(1) - Rational(n) * t;
        } else {
            lifted(i * n + sigma.image[i]) = Rational(1) - t;
        }
    }
    return lifted;
}

BasicSolution restrict_basis(const Basis& basis, const ConstraintSystem& surrogate) {
    if (surrogate.t <= 0) {
        throw PerturbationRangeError("restriction expects a perturbed system");
    }
    return basic_solution(build_birkhoff(surrogate.n), basis);
}

SensitivityOutcome perturb_and_resolve(const SensitivityTrial& trial) {
    const int m = trial.sys.rows();
    if (trial.gamma.size() != m) {
        throw DimensionMismatchError("gamma length does not match row count");
    }
    const Rational limit = trial.big_gamma / m;
    for (int i = 0; i < m; ++i) {
        if (abs(trial.gamma(i)) >= limit) {
            throw HypothesisViolationError(
                "|gamma_" + std::to_string(i + 1) + "| >= Gamma/m");
        }
    }
    for (int i = 0; i < m; ++i) {
        if (!is_integer(trial.sys.rhs(i))) {
            throw HypothesisViolationError("right-hand side must be integer");
        }
    }

    SensitivityOutcome out;
    out.xhat = basic_solution(trial.sys, trial.basis);

    ConstraintSystem shifted = trial.sys;
    shifted.rhs -= trial.gamma;
    out.xprime = basic_solution(shifted, trial.basis);

    out.deviation = RatVector::Zero(trial.sys.cols());
    for (int k = 0; k < trial.sys.cols(); ++k) {
        out.deviation(k) = abs(out.xhat.values(k) - out.xprime.values(k));
    }
    return out;
}

InfeasibilityClassification classify_infeasibility(const BasicSolution& sol) {
    if (sol.t != 0) {
        throw HypothesisViolationError("classifier requires an unperturbed solution");
    }
    for (int k = 0; k < sol.values.size(); ++k) {
        if (!is_integer(sol.values(k))) {
            throw InternalConsistencyError(
                "non-integer component in an integer-rhs basic solution");
        }
    }
    InfeasibilityClassification result;
    result.feasible = sol.feasible;
    if (!sol.feasible) {
        for (int k = 0; k < sol.values.size(); ++k) {
            if (sol.values(k) <= -1) {
                result.witness = k;
                break;
            }
        }
        if (result.witness < 0) {
            throw InternalConsistencyError(
                "infeasible integer solution with every component > -1");
        }
    }
    return result;
}

Integer round_upper_bound(const Rational& ub) {
    return rational_ceil(ub);
}

}  // namespace exactgm

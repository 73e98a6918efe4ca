#include "exactgm/match.hpp"

#include "exactgm/error.hpp"

namespace exactgm {

PerturbationParams certify_params(const QuadraticObjective& obj) {
    PerturbationParams params;
    params.n = obj.n();
    params.mu = obj.mu;
    params.lambda_bound = obj.lambda_bound;
    params.delta_hat = delta_for_quadratic(obj);
    params.t = t_bound(params.delta_hat, params.n);
    params.validate();
    return params;
}

MatchReport match_graphs(const AdjacencyMatrix& e1, const AdjacencyMatrix& e2,
                         const MatchOptions& opts) {
    const QuadraticObjective quadratic = build_objective(e1, e2);
    const int n = quadratic.n();

    PerturbationParams params = certify_params(quadratic);
    if (opts.t_override) {
        params.t = *opts.t_override;  // may exceed the certified bound
    }

    const ConstraintSystem surrogate = build_perturbed(n, params.t);
    const GmObjective objective(quadratic);

    SolverOptions solver_opts;
    solver_opts.max_iterations = opts.max_iterations;
    solver_opts.subdivision = opts.subdivision;
    solver_opts.on_iteration = opts.on_iteration;
    const SolverTrace trace = maximize_convex(objective, surrogate, solver_opts);

    const BasicSolution restricted = restrict_basis(trace.final_basis, surrogate);
    if (!restricted.feasible) {
        throw Error(
            "surrogate basis restricts to an infeasible solution; t exceeds the "
            "certified bound (use the verify command to probe such values)");
    }
    const Permutation sigma = bfs_to_permutation(restricted);

    const RatMatrix point = unvec(restricted.values, n);
    const Rational f_value = eval_f(quadratic, point);
    const Rational qform = eval_qform(quadratic, point);
    const GapCertificate cert = certify_gap(trace, f_value);

    MatchReport report;
    report.sigma = sigma;
    report.symdiff = symmetric_difference(e1, e2, sigma);
    report.qform = qform.convert_to<long long>();
    report.f_value = f_value.convert_to<long long>();
    report.mu = params.mu;
    report.lambda_bound = params.lambda_bound;
    report.delta_hat = params.delta_hat;
    report.t = params.t;
    report.upper_bound_int = cert.upper_bound.convert_to<long long>();
    report.gap = cert.gap.convert_to<long long>();
    report.iterations = static_cast<long long>(trace.items.size());
    report.solver_status = to_string(trace.status);
    return report;
}

VerifyReport verify_equivalence(const ConvexObjective& obj, int n, const Rational& t,
                                const std::optional<long long>& max_iterations) {
    const ConstraintSystem surrogate = build_perturbed(n, t);

    SolverOptions solver_opts;
    solver_opts.max_iterations = max_iterations;
    const SolverTrace trace = maximize_convex(obj, surrogate, solver_opts);

    const BasicSolution restricted = restrict_basis(trace.final_basis, surrogate);
    const auto [reference_vertex, reference_value] =
        brute_force_vertex_max(obj, build_birkhoff(n));

    VerifyReport report;
    report.n = n;
    report.t = t;
    report.basis = trace.final_basis;
    report.surrogate_value = trace.last().incumbent_value;
    report.restricted_feasible = restricted.feasible;
    report.restricted_value = obj.evaluate_vec(restricted.values);
    report.reference_value = reference_value;
    report.equivalent =
        restricted.feasible && report.restricted_value == reference_value;
    report.solver_status = to_string(trace.status);
    return report;
}

}  // namespace exactgm

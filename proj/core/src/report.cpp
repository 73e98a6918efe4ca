#include "exactgm/report.hpp"

#include <nlohmann/json.hpp>

#include "exactgm/error.hpp"

namespace exactgm {

namespace {

using nlohmann::json;

json sigma_to_json(const Permutation& sigma) {
    json arr = json::array();
    for (int v : sigma.image) arr.push_back(v + 1);
    return arr;
}

Permutation sigma_from_json(const json& j) {
    Permutation sigma;
    for (const auto& v : j) sigma.image.push_back(v.get<int>() - 1);
    return sigma;
}

json basis_to_json(const Basis& basis, int n) {
    json arr = json::array();
    for (int col : basis.columns) {
        arr.push_back(json::array({col / n + 1, col % n + 1}));
    }
    return arr;
}

Basis basis_from_json(const json& j, int n) {
    Basis basis;
    for (const auto& pair : j) {
        const int i = pair.at(0).get<int>() - 1;
        const int jj = pair.at(1).get<int>() - 1;
        basis.columns.push_back(i * n + jj);
    }
    return basis;
}

}  // namespace

json to_json(const MatchReport& report) {
    return json{{"sigma", sigma_to_json(report.sigma)},
                {"symdiff", report.symdiff},
                {"qform", report.qform},
                {"f_value", report.f_value},
                {"mu", report.mu},
                {"lambda_bound", report.lambda_bound},
                {"delta_hat", format_rational(report.delta_hat)},
                {"t", format_rational(report.t)},
                {"upper_bound_int", report.upper_bound_int},
                {"gap", report.gap},
                {"iterations", report.iterations},
                {"solver_status", report.solver_status}};
}

MatchReport match_report_from_json(const json& j) {
    MatchReport report;
    report.sigma = sigma_from_json(j.at("sigma"));
    report.symdiff = j.at("symdiff").get<long long>();
    report.qform = j.at("qform").get<long long>();
    report.f_value = j.at("f_value").get<long long>();
    report.mu = j.at("mu").get<long long>();
    report.lambda_bound = j.at("lambda_bound").get<long long>();
    report.delta_hat = parse_rational(j.at("delta_hat").get<std::string>());
    report.t = parse_rational(j.at("t").get<std::string>());
    report.upper_bound_int = j.at("upper_bound_int").get<long long>();
    report.gap = j.at("gap").get<long long>();
    report.iterations = j.at("iterations").get<long long>();
    report.solver_status = j.at("solver_status").get<std::string>();
    return report;
}

json to_json(const OracleResult& result) {
    return json{{"best_sigma", sigma_to_json(result.best_sigma)},
                {"min_symdiff", result.min_symdiff},
                {"max_qform", result.max_qform},
                {"optimal_count", result.optimal_count}};
}

OracleResult oracle_result_from_json(const json& j) {
    OracleResult result;
    result.best_sigma = sigma_from_json(j.at("best_sigma"));
    result.min_symdiff = j.at("min_symdiff").get<long long>();
    result.max_qform = j.at("max_qform").get<long long>();
    result.optimal_count = j.at("optimal_count").get<long long>();
    return result;
}

json to_json(const VerifyReport& report) {
    return json{{"n", report.n},
                {"t", format_rational(report.t)},
                {"restricted_feasible", report.restricted_feasible},
                {"equivalent", report.equivalent},
                {"basis", basis_to_json(report.basis, report.n)},
                {"surrogate_value", format_rational(report.surrogate_value)},
                {"restricted_value", format_rational(report.restricted_value)},
                {"reference_value", format_rational(report.reference_value)},
                {"solver_status", report.solver_status}};
}

VerifyReport verify_report_from_json(const json& j) {
    VerifyReport report;
    report.n = j.at("n").get<int>();
    report.t = parse_rational(j.at("t").get<std::string>());
    report.restricted_feasible = j.at("restricted_feasible").get<bool>();
    report.equivalent = j.at("equivalent").get<bool>();
    report.basis = basis_from_json(j.at("basis"), report.n);
    report.surrogate_value = parse_rational(j.at("surrogate_value").get<std::string>());
    report.restricted_value =
        parse_rational(j.at("restricted_value").get<std::string>());
    report.reference_value =
        parse_rational(j.at("reference_value").get<std::string>());
    report.solver_status = j.at("solver_status").get<std::string>();
    return report;
}

json to_json(const PerturbationParams& params) {
    return json{{"n", params.n},
                {"mu", params.mu},
                {"lambda_bound", params.lambda_bound},
                {"delta_hat", format_rational(params.delta_hat)},
                {"t", format_rational(params.t)}};
}

PerturbationParams params_from_json(const json& j) {
    PerturbationParams params;
    params.n = j.at("n").get<int>();
    params.mu = j.at("mu").get<long long>();
    params.lambda_bound = j.at("lambda_bound").get<long long>();
    params.delta_hat = parse_rational(j.at("delta_hat").get<std::string>());
    params.t = parse_rational(j.at("t").get<std::string>());
    return params;
}

}  // namespace exactgm

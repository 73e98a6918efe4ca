#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "exactgm/error.hpp"
#include "exactgm/graph_io.hpp"
#include "exactgm/match.hpp"
#include "exactgm/report.hpp"

namespace {

using namespace exactgm;
using nlohmann::json;

enum class LogLevel { Quiet = 0, Info = 1, Debug = 2 };

LogLevel log_level() {
    const char* env = std::getenv("EXACTGM_LOG");
    if (!env) return LogLevel::Quiet;
    const std::string value(env);
    if (value == "debug") return LogLevel::Debug;
    if (value == "info") return LogLevel::Info;
    return LogLevel::Quiet;
}

void log_info(const std::string& message) {
    if (log_level() >= LogLevel::Info) std::cerr << "exactgm: " << message << "\n";
}

std::function<void(const SolverTrace::Item&)> debug_trace_hook() {
    if (log_level() < LogLevel::Debug) return {};
    return [](const SolverTrace::Item& item) {
        std::cerr << "exactgm: iter " << item.iteration << " ub "
                  << format_rational(item.upper_bound) << " incumbent "
                  << format_rational(item.incumbent_value) << "\n";
    };
}

std::string sigma_text(const Permutation& sigma) {
    std::string out = "(";
    for (int i = 0; i < sigma.n(); ++i) {
        if (i) out += " ";
        out += std::to_string(sigma.image[i] + 1);
    }
    return out + ")";
}

void print_match_report(const MatchReport& report) {
    std::cout << "sigma:           " << sigma_text(report.sigma) << "\n"
              << "symdiff:         " << report.symdiff << "\n"
              << "qform:           " << report.qform << "\n"
              << "f_value:         " << report.f_value << "\n"
              << "mu:              " << report.mu << "\n"
              << "lambda_bound:    " << report.lambda_bound << "\n"
              << "delta_hat:       " << format_rational(report.delta_hat) << "\n"
              << "t:               " << format_rational(report.t) << "\n"
              << "upper_bound_int: " << report.upper_bound_int << "\n"
              << "gap:             " << report.gap << "\n"
              << "iterations:      " << report.iterations << "\n"
              << "solver_status:   " << report.solver_status << "\n";
}

void print_verify_report(const VerifyReport& report) {
    std::cout << "t:                   " << format_rational(report.t) << "\n"
              << "solver_status:       " << report.solver_status << "\n"
              << "restricted_feasible: " << (report.restricted_feasible ? "true" : "false")
              << "\n"
              << "surrogate_value:     " << format_rational(report.surrogate_value) << "\n"
              << "restricted_value:    " << format_rational(report.restricted_value) << "\n"
              << "reference_value:     " << format_rational(report.reference_value) << "\n"
              << "equivalent:          " << (report.equivalent ? "true" : "false") << "\n";
}

int run_match(const std::string& g1_path, const std::string& g2_path, bool as_json,
              std::optional<long long> max_iterations, const std::string& t_text,
              const std::string& subdivision) {
    const AdjacencyMatrix g1 = parse_graph_file(g1_path);
    const AdjacencyMatrix g2 = parse_graph_file(g2_path);

    MatchOptions opts;
    opts.max_iterations = max_iterations;
    if (!t_text.empty()) opts.t_override = parse_rational(t_text);
    if (subdivision == "longest-edge") {
        opts.subdivision = SubdivisionRule::LongestEdge;
    } else if (!subdivision.empty() && subdivision != "omega") {
        throw ParseError("unknown subdivision rule '" + subdivision + "'");
    }
    opts.on_iteration = debug_trace_hook();

    log_info("matching " + g1_path + " against " + g2_path);
    const MatchReport report = match_graphs(g1, g2, opts);
    if (as_json) {
        std::cout << to_json(report).dump(2) << "\n";
    } else {
        print_match_report(report);
    }
    return report.solver_status == "optimal" ? 0 : 3;
}

int run_bound(const std::string& g1_path, const std::string& g2_path, bool as_json) {
    const AdjacencyMatrix g1 = parse_graph_file(g1_path);
    const AdjacencyMatrix g2 = parse_graph_file(g2_path);
    const PerturbationParams params = certify_params(build_objective(g1, g2));
    if (as_json) {
        std::cout << to_json(params).dump(2) << "\n";
    } else {
        std::cout << "n:            " << params.n << "\n"
                  << "mu:           " << params.mu << "\n"
                  << "lambda_bound: " << params.lambda_bound << "\n"
                  << "delta_hat:    " << format_rational(params.delta_hat) << "\n"
                  << "t:            " << format_rational(params.t) << "\n";
    }
    return 0;
}

int run_oracle(const std::string& g1_path, const std::string& g2_path) {
    const AdjacencyMatrix g1 = parse_graph_file(g1_path);
    const AdjacencyMatrix g2 = parse_graph_file(g2_path);
    std::cout << to_json(oracle_gm(g1, g2)).dump(2) << "\n";
    return 0;
}

int run_verify(const std::string& g1_path, const std::string& g2_path,
               const std::string& objective_path, int objective_n, bool as_json,
               std::optional<long long> max_iterations, const std::string& t_text) {
    VerifyReport report;
    if (!objective_path.empty()) {
        if (objective_n < 2) {
            throw ParseError("--objective requires --n <dimension >= 2>");
        }
        const SeparableQuadraticObjective obj = parse_objective_file(objective_path);
        if (obj.n() != objective_n) {
            throw ParseError("objective file dimension does not match --n");
        }
        const Rational t = t_text.empty()
                               ? Rational(1, 4 * objective_n)
                               : parse_rational(t_text);
        report = verify_equivalence(obj, objective_n, t, max_iterations);
    } else {
        const AdjacencyMatrix g1 = parse_graph_file(g1_path);
        const AdjacencyMatrix g2 = parse_graph_file(g2_path);
        const QuadraticObjective quadratic = build_objective(g1, g2);
        const Rational t = t_text.empty() ? certify_params(quadratic).t
                                          : parse_rational(t_text);
        report = verify_equivalence(GmObjective(quadratic), quadratic.n(), t,
                                    max_iterations);
    }
    if (as_json) {
        std::cout << to_json(report).dump(2) << "\n";
    } else {
        print_verify_report(report);
    }
    return report.solver_status == "optimal" ? 0 : 3;
}

int run_polytope(int n, const std::string& t_text, bool enumerate, bool as_json) {
    const ConstraintSystem sys =
        t_text.empty() ? build_birkhoff(n) : build_perturbed(n, parse_rational(t_text));
    if (enumerate && n > 6) {
        throw SizeLimitError("vertex enumeration supports n <= 6");
    }

    json out{{"n", sys.n}, {"t", format_rational(sys.t)}, {"rows", sys.rows()}};
    json rhs = json::array();
    for (int r = 0; r < sys.rows(); ++r) rhs.push_back(format_rational(sys.rhs(r)));
    out["rhs"] = rhs;

    std::vector<BasicSolution> vertices;
    if (enumerate) {
        vertices = enumerate_vertices(sys);
        json list = json::array();
        for (const auto& vertex : vertices) {
            json values = json::array();
            for (int k = 0; k < vertex.values.size(); ++k) {
                values.push_back(format_rational(vertex.values(k)));
            }
            json basis = json::array();
            for (int col : vertex.basis.columns) {
                basis.push_back(json::array({col / n + 1, col % n + 1}));
            }
            list.push_back(json{{"values", values},
                                {"basis", basis},
                                {"feasible", vertex.feasible},
                                {"degenerate", vertex.degenerate}});
        }
        out["vertices"] = list;
    }

    if (as_json) {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "n:    " << sys.n << "\n"
              << "t:    " << format_rational(sys.t) << "\n"
              << "rows: " << sys.rows() << "\n"
              << "rhs:  ";
    for (int r = 0; r < sys.rows(); ++r) {
        std::cout << (r ? " " : "") << format_rational(sys.rhs(r));
    }
    std::cout << "\n";
    if (enumerate) {
        std::cout << "vertices: " << vertices.size() << "\n";
        for (const auto& vertex : vertices) {
            std::cout << "  ";
            for (int k = 0; k < vertex.values.size(); ++k) {
                std::cout << (k ? " " : "") << format_rational(vertex.values(k));
            }
            std::cout << (vertex.degenerate ? "  [degenerate]" : "") << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic graph matching over a perturbed Birkhoff polytope"};
    app.require_subcommand(1);

    std::string g1_path, g2_path, t_text, objective_path;
    bool as_json = false, enumerate = false;
    long long max_iterations = 0;
    int dimension = 0;

    auto add_graphs = [&](CLI::App* cmd, bool required = true) {
        auto* a = cmd->add_option("g1", g1_path, "first graph file");
        auto* b = cmd->add_option("g2", g2_path, "second graph file");
        if (required) {
            a->required();
            b->required();
        }
    };

    auto* match = app.add_subcommand("match", "solve a GM instance with a certificate");
    add_graphs(match);
    match->add_flag("--json", as_json, "emit the report as JSON");
    match->add_option("--max-iterations", max_iterations, "solver iteration cap");
    match->add_option("--t", t_text, "perturbation override as p/q");
    std::string subdivision;
    match->add_option("--subdivision", subdivision,
                      "subdivision rule: omega (default) or longest-edge");

    auto* bound = app.add_subcommand("bound", "print certified parameters only");
    add_graphs(bound);
    bound->add_flag("--json", as_json, "emit as JSON");

    auto* oracle = app.add_subcommand("oracle", "exhaustive ground truth (n <= 10)");
    add_graphs(oracle);

    auto* verify = app.add_subcommand(
        "verify", "probe surrogate/original equivalence at a chosen t");
    add_graphs(verify, /*required=*/false);
    verify->add_option("--t", t_text, "perturbation as p/q");
    verify->add_option("--objective", objective_path,
                       "separable quadratic objective file instead of graphs");
    verify->add_option("--n", dimension, "dimension for --objective");
    verify->add_flag("--json", as_json, "emit as JSON");
    verify->add_option("--max-iterations", max_iterations, "solver iteration cap");

    auto* polytope = app.add_subcommand("polytope", "inspect a constraint system");
    polytope->add_option("n", dimension, "assignment dimension")->required();
    polytope->add_option("--t", t_text, "perturbation as p/q (default: unperturbed)");
    polytope->add_flag("--enumerate", enumerate, "list all vertices (n <= 6)");
    polytope->add_flag("--json", as_json, "emit as JSON");

    CLI11_PARSE(app, argc, argv);

    std::optional<long long> iteration_cap;
    if (max_iterations > 0) iteration_cap = max_iterations;

    try {
        if (match->parsed()) {
            return run_match(g1_path, g2_path, as_json, iteration_cap, t_text,
                             subdivision);
        }
        if (bound->parsed()) return run_bound(g1_path, g2_path, as_json);
        if (oracle->parsed()) return run_oracle(g1_path, g2_path);
        if (verify->parsed()) {
            if (objective_path.empty() && (g1_path.empty() || g2_path.empty())) {
                throw ParseError("verify needs two graphs or --objective");
            }
            return run_verify(g1_path, g2_path, objective_path, dimension, as_json,
                              iteration_cap, t_text);
        }
        if (polytope->parsed()) {
            return run_polytope(dimension, t_text, enumerate, as_json);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

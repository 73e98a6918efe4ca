#include "exactgm/solver.hpp"

#include <algorithm>
#include <memory>
#include <queue>

#include "exactgm/error.hpp"

namespace exactgm {

const char* to_string(SolverStatus status) {
    switch (status) {
        case SolverStatus::Optimal: return "optimal";
        case SolverStatus::IterationLimit: return "iteration-limit";
    }
    return "unknown";
}

namespace {

constexpr long long kLeafEnumerationCap = 5000;

enum class CoordState : char { Undecided, Big, Small };

/**
 * A branch-and-bound region: the vertices of the perturbed polytope whose
 * coordinates respect per-coordinate bands. Total unimodularity makes every
 * vertex coordinate a - q*t with integer a in {0,1} and |q| <= n, so each
 * coordinate of a vertex is either "small" (<= nt) or "big" (>= 1-nt); a
 * region fixes that choice for some coordinates and branching refines it.
 */
struct Node {
    std::vector<CoordState> state;
    RatVector cap;     // upper bound per coordinate, valid for region vertices
    RatVector lower;   // lower bound per coordinate
    int big_count = 0;
    Rational ub = 0;
    RatVector omega;   // feasible maximizer of the winning bound (x-space)
    long long id = 0;
};

using NodePtr = std::shared_ptr<Node>;

struct NodeOrder {
    bool operator()(const NodePtr& a, const NodePtr& b) const {
        if (a->ub != b->ub) return a->ub < b->ub;
        return a->id > b->id;  // FIFO among equal bounds
    }
};

/// Binomial coefficient, saturating at `cap`.
long long binomial_capped(int n, int k, long long cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > cap) return cap + 1;
    }
    return result;
}

class BranchAndBound {
  public:
    BranchAndBound(const ConvexObjective& obj, const ConstraintSystem& sys,
                   const SolverOptions& opts)
        : obj_(obj),
          sys_(sys),
          opts_(opts),
          structure_(obj.quadratic_structure()),
          small_band_(Rational(sys.n) * sys.t),
          big_band_(Rational(1) - Rational(sys.n) * sys.t) {
        if (!structure_) build_enclosing_interpolant();
    }

    SolverTrace run() {
        seed_incumbent();

        auto root = make_root();
        long long iteration = 1;
        if (process(*root) && root->ub > incumbent_value_) pool_.push(root);
        record(iteration);

        for (;;) {
            if (pool_.empty()) {
                status_ = SolverStatus::Optimal;
                break;
            }
            if (opts_.max_iterations && iteration >= *opts_.max_iterations) {
                status_ = SolverStatus::IterationLimit;
                break;
            }
            ++iteration;
            NodePtr node = pool_.top();
            pool_.pop();
            if (node->ub > incumbent_value_) branch(*node);
            record(iteration);
        }

        SolverTrace trace;
        trace.items = std::move(items_);
        trace.status = status_;
        trace.final_vertex = incumbent_;
        trace.final_basis = incumbent_.basis;
        return trace;
    }

  private:
    /// Star-basis lift of the identity permutation: one unit per row scaled
    /// to 1-t, with the last row spread as (t,...,t,1-nt). Always a basic
    /// feasible solution of the perturbed system.
    void seed_incumbent() {
        const int n = sys_.n;
        std::vector<int> support;
        for (int i = 0; i + 1 < n; ++i) support.push_back(i * n + i);
        for (int j = 0; j < n; ++j) support.push_back((n - 1) * n + j);
        std::sort(support.begin(), support.end());
        incumbent_ = basic_solution(sys_, Basis{support});
        if (!incumbent_.feasible) {
            throw InternalConsistencyError("seed vertex must be feasible");
        }
        incumbent_value_ = obj_.evaluate_vec(incumbent_.values);
    }

    NodePtr make_root() {
        const int n = sys_.n;
        auto node = std::make_shared<Node>();
        node->id = next_id_++;
        node->state.assign(sys_.cols(), CoordState::Undecided);
        node->cap = RatVector::Constant(sys_.cols(), Rational(1) - sys_.t);
        node->lower = RatVector::Zero(sys_.cols());
        for (int i = 0; i < n; ++i) {
            // The omitted column constraint still caps the last column.
            node->cap(i * n + n - 1) = Rational(1) - Rational(n) * sys_.t;
        }
        return node;
    }

    /// Bounds the node (by LP or, when few support candidates remain, by
    /// exact enumeration of its vertices). Returns false when the region
    /// cannot hold a vertex worth keeping.
    bool process(Node& node) {
        const int m = sys_.rows();
        int eligible = 0;
        for (int k = 0; k < sys_.cols(); ++k) {
            if (node.cap(k) > 0) ++eligible;
        }
        if (eligible < m) return false;

        const long long combinations =
            binomial_capped(eligible - node.big_count, m - node.big_count,
                            kLeafEnumerationCap);
        const bool no_undecided =
            std::none_of(node.state.begin(), node.state.end(),
                         [](CoordState s) { return s == CoordState::Undecided; });
        if (combinations <= kLeafEnumerationCap || no_undecided) {
            return enumerate_leaf(node);
        }
        return bound_by_lp(node);
    }

    /**
     * Exact resolution of a leaf region: every candidate basis containing the
     * big coordinates is solved; feasible solutions inside the bands update
     * the incumbent. Bases of the system are exactly the spanning trees of
     * the bipartite row/column graph, so column sets with a cycle are skipped
     * by a disjoint-set check before any elimination. Fully fathoms the node.
     */
    bool enumerate_leaf(const Node& node) {
        const int n = sys_.n;
        const int m = sys_.rows();
        std::vector<int> fixed, optional;
        for (int k = 0; k < sys_.cols(); ++k) {
            if (node.state[k] == CoordState::Big) {
                fixed.push_back(k);
            } else if (node.cap(k) > 0) {
                optional.push_back(k);
            }
        }
        const int choose = m - static_cast<int>(fixed.size());
        if (choose < 0 || choose > static_cast<int>(optional.size())) return false;

        std::vector<int> roots(2 * n);
        for (int v = 0; v < 2 * n; ++v) roots[v] = v;
        auto find = [](std::vector<int>& p, int v) {
            while (p[v] != v) v = p[v] = p[p[v]];
            return v;
        };
        auto join = [&find](std::vector<int>& p, int cell, int n_) {
            const int a = find(p, cell / n_);
            const int b = find(p, n_ + cell % n_);
            if (a == b) return false;  // cycle: dependent columns
            p[a] = b;
            return true;
        };
        for (int cell : fixed) {
            if (!join(roots, cell, n)) return false;
        }

        std::vector<int> columns(fixed);
        columns.resize(m);
        // Depth-first over acyclic extensions, lexicographic by cell index.
        auto recurse = [&](auto&& self, int start, int need,
                           const std::vector<int>& parent) -> void {
            if (need == 0) {
                std::vector<int> sorted(columns);
                std::sort(sorted.begin(), sorted.end());
                if (auto values = solve_tree_basis(sorted)) {
                    offer_candidate(node, sorted, *values);
                }
                return;
            }
            const int limit = static_cast<int>(optional.size()) - need;
            for (int idx = start; idx <= limit; ++idx) {
                std::vector<int> next(parent);
                if (!join(next, optional[idx], n)) continue;
                columns[m - need] = optional[idx];
                self(self, idx + 1, need - 1, next);
            }
        };
        recurse(recurse, 0, choose, roots);
        return false;  // leaf regions never re-enter the pool
    }

    /**
     * Solves a spanning-tree basis by leaf peeling: a degree-one node other
     * than the equation-free last column determines its edge value from its
     * residual. Linear in the basis size. Returns nullopt as soon as a
     * value goes negative (feasible candidates are the only interest here).
     */
    std::optional<RatVector> solve_tree_basis(const std::vector<int>& columns) {
        const int n = sys_.n;
        const int m = sys_.rows();
        const int nodes = 2 * n;  // rows 0..n-1, columns n..2n-1; 2n-1 is free
        std::vector<int> degree(nodes, 0);
        std::vector<std::vector<std::pair<int, int>>> incident(nodes);
        for (int e = 0; e < m; ++e) {
            const int a = columns[e] / n;
            const int b = n + columns[e] % n;
            incident[a].push_back({e, b});
            incident[b].push_back({e, a});
            ++degree[a];
            ++degree[b];
        }
        // Constraint rows map onto nodes 0..2n-2; the last column node has
        // no equation.
        std::vector<Rational> residual(nodes, Rational(0));
        for (int r = 0; r < m; ++r) residual[r] = sys_.rhs(r);

        RatVector values(m);
        std::vector<bool> used(m, false);
        std::vector<int> stack;
        for (int v = 0; v < nodes - 1; ++v) {
            if (degree[v] == 1) stack.push_back(v);
        }
        int solved = 0;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            if (degree[v] != 1) continue;
            int edge = -1, other = -1;
            for (const auto& [e, w] : incident[v]) {
                if (!used[e]) {
                    edge = e;
                    other = w;
                    break;
                }
            }
            if (edge < 0) continue;
            if (residual[v] < 0) return std::nullopt;
            values(edge) = residual[v];
            used[edge] = true;
            ++solved;
            --degree[v];
            --degree[other];
            residual[other] -= values(edge);
            if (other != nodes - 1 && degree[other] == 1) stack.push_back(other);
        }
        if (solved != m) {
            throw InternalConsistencyError("tree basis failed to peel completely");
        }
        return values;
    }

    void offer_candidate(const Node& node, const std::vector<int>& columns,
                         const RatVector& basic_values) {
        RatVector x = RatVector::Zero(sys_.cols());
        for (std::size_t i = 0; i < columns.size(); ++i) {
            const Rational& v = basic_values(static_cast<int>(i));
            if (v < 0) return;  // infeasible basic solution
            x(columns[i]) = v;
        }
        for (int k = 0; k < sys_.cols(); ++k) {
            if (x(k) > node.cap(k) || x(k) < node.lower(k)) return;
        }
        const Rational value = obj_.evaluate_vec(x);
        if (value < incumbent_value_) return;
        if (value == incumbent_value_ && !lex_smaller(x, incumbent_.values)) return;

        BasicSolution sol;
        sol.values = x;
        sol.basis = Basis{columns};
        sol.n = sys_.n;
        sol.t = sys_.t;
        sol.feasible = true;
        sol.degenerate = false;
        for (int col : columns) {
            if (x(col) == 0) sol.degenerate = true;
        }
        incumbent_ = std::move(sol);
        incumbent_value_ = value;
    }

    static bool lex_smaller(const RatVector& a, const RatVector& b) {
        for (int k = 0; k < a.size(); ++k) {
            if (a(k) != b(k)) return a(k) < b(k);
        }
        return false;
    }

    /**
     * LP bound: an affine overestimator of the objective over the region,
     * maximized by the exact simplex engine. Structured objectives get the
     * capped linearization (coeff * x_k * x_l <= coeff * cap * x, exact at
     * 0/1 points); others fall back to the interpolant over the enclosing
     * corner simplex.
     */
    bool bound_by_lp(Node& node) {
        const int m = sys_.rows();
        const int vars = sys_.cols();
        std::vector<int> capped, lowered;
        for (int k = 0; k < vars; ++k) {
            if (node.cap(k) < 1) capped.push_back(k);
            if (node.lower(k) > 0) lowered.push_back(k);
        }
        const int rows = m + static_cast<int>(capped.size() + lowered.size());
        const int cols = vars + static_cast<int>(capped.size() + lowered.size());
        RatMatrix a = RatMatrix::Zero(rows, cols);
        RatVector b = RatVector::Zero(rows);
        for (int r = 0; r < m; ++r) {
            for (int k = 0; k < vars; ++k) a(r, k) = sys_.matrix(r, k);
            b(r) = sys_.rhs(r);
        }
        std::vector<int> ready(rows, -1);
        int row = m;
        int slack = vars;
        for (int k : capped) {
            a(row, k) = 1;
            a(row, slack) = 1;
            b(row) = node.cap(k);
            ready[row] = slack;
            ++row;
            ++slack;
        }
        for (int k : lowered) {
            a(row, k) = 1;
            a(row, slack) = -1;
            b(row) = node.lower(k);
            ++row;
            ++slack;
        }

        RatVector c = RatVector::Zero(cols);
        Rational constant = 0;
        if (structure_) {
            RatVector coeff = structure_->linear;
            for (const auto& [k, l, weight] : structure_->products) {
                if (k == l) {
                    coeff(k) += weight * node.cap(k);
                } else if (node.cap(k) <= node.cap(l)) {
                    coeff(l) += weight * node.cap(k);
                } else {
                    coeff(k) += weight * node.cap(l);
                }
            }
            for (int k = 0; k < vars; ++k) c(k) = coeff(k);
        } else {
            for (int k = 0; k < vars; ++k) c(k) = interpolant_coeff_(k);
            constant = interpolant_offset_;
        }

        StandardLpResult lp = solve_standard_lp(a, b, c, &ready);
        if (lp.status == LpStatus::Infeasible) return false;
        if (lp.status != LpStatus::Optimal) {
            throw InternalConsistencyError("region LP cannot be unbounded");
        }
        node.ub = lp.value + constant;
        node.omega = lp.x.head(vars);
        consider_point(node.omega);
        return true;
    }

    /// Evaluates the objective at a feasible point and offers it as an
    /// incumbent when it is a vertex (unique support basis).
    void consider_point(const RatVector& x) {
        const Rational value = obj_.evaluate_vec(x);
        if (value <= incumbent_value_) return;

        std::vector<int> support;
        for (int k = 0; k < x.size(); ++k) {
            if (x(k) != 0) support.push_back(k);
        }
        if (static_cast<int>(support.size()) != sys_.rows()) return;
        if (!solve_columns(sys_.matrix, sys_.rhs, support)) return;

        BasicSolution sol = basic_solution(sys_, Basis{support});
        for (int k = 0; k < x.size(); ++k) {
            if (sol.values(k) != x(k)) {
                throw InternalConsistencyError("support basis does not reproduce vertex");
            }
        }
        incumbent_ = std::move(sol);
        incumbent_value_ = value;
    }

    /**
     * Branches on one undecided coordinate into its two vertex bands:
     * small (<= nt) or big (>= 1-nt). "omega" picks the coordinate with the
     * largest value at the bound's maximizer, "longest-edge" the one with
     * the widest remaining band; ties break lexicographically.
     */
    void branch(const Node& node) {
        int chosen = -1;
        if (opts_.subdivision == SubdivisionRule::Omega) {
            for (int k = 0; k < sys_.cols(); ++k) {
                if (node.state[k] != CoordState::Undecided) continue;
                if (chosen < 0 || node.omega(k) > node.omega(chosen)) chosen = k;
            }
        } else {
            for (int k = 0; k < sys_.cols(); ++k) {
                if (node.state[k] != CoordState::Undecided) continue;
                if (chosen < 0 || node.cap(k) > node.cap(chosen)) chosen = k;
            }
        }
        if (chosen < 0) {
            throw InternalConsistencyError("no coordinate left to branch on");
        }
        spawn_small(node, chosen);
        spawn_big(node, chosen);
    }

    void spawn_small(const Node& node, int coord) {
        auto child = std::make_shared<Node>(node);
        child->id = next_id_++;
        child->state[coord] = CoordState::Small;
        if (small_band_ < child->cap(coord)) child->cap(coord) = small_band_;
        finish_child(node, std::move(child));
    }

    void spawn_big(const Node& node, int coord) {
        auto child = std::make_shared<Node>(node);
        child->id = next_id_++;
        if (!mark_big(*child, coord)) return;
        finish_child(node, std::move(child));
    }

    /// Fixes a big coordinate and propagates: row and column mates drop into
    /// the small band (the last column's mates to exactly zero), and a row or
    /// column left with a single eligible cell forces that cell big.
    bool mark_big(Node& node, int coord) {
        const int n = sys_.n;
        std::vector<int> queue{coord};
        while (!queue.empty()) {
            const int c = queue.back();
            queue.pop_back();
            if (node.state[c] == CoordState::Big) continue;
            if (node.state[c] == CoordState::Small) return false;
            node.state[c] = CoordState::Big;
            ++node.big_count;
            if (big_band_ > node.lower(c)) node.lower(c) = big_band_;
            if (node.cap(c) < node.lower(c)) return false;

            const int i = c / n, j = c % n;
            for (int jj = 0; jj < n; ++jj) {
                if (jj != j && !restrict_mate(node, i * n + jj, row_residual_)) {
                    return false;
                }
            }
            const Rational& col_residual =
                (j == n - 1) ? col_last_residual_ : col_residual_;
            for (int ii = 0; ii < n; ++ii) {
                if (ii != i && !restrict_mate(node, ii * n + j, col_residual)) {
                    return false;
                }
            }
            // A row or column with every other cell capped to the small band
            // must place its big cell in the one that remains.
            for (int axis = 0; axis < 2 * n; ++axis) {
                int candidate = -1, open = 0;
                for (int step = 0; step < n; ++step) {
                    const int cell = axis < n ? axis * n + step
                                              : step * n + (axis - n);
                    if (node.state[cell] == CoordState::Big) {
                        open = -1;
                        break;
                    }
                    if (node.state[cell] == CoordState::Undecided) {
                        ++open;
                        candidate = cell;
                    }
                }
                if (open == 0) return false;  // no big cell possible
                if (open == 1) queue.push_back(candidate);
            }
        }
        return true;
    }

    bool restrict_mate(Node& node, int cell, const Rational& residual) {
        if (node.state[cell] == CoordState::Big) return false;
        node.state[cell] = CoordState::Small;
        if (residual < node.cap(cell)) node.cap(cell) = residual;
        if (small_band_ < node.cap(cell)) node.cap(cell) = small_band_;
        return node.cap(cell) >= node.lower(cell);
    }

    void finish_child(const Node& parent, NodePtr child) {
        if (!process(*child)) return;
        if (child->ub > parent.ub) child->ub = parent.ub;  // keep bounds monotone
        if (child->ub > incumbent_value_) pool_.push(std::move(child));
    }

    /// Affine interpolant of the objective at the corner simplex enclosing
    /// the whole polytope, as a function of x. Fallback bound for objectives
    /// without quadratic structure.
    void build_enclosing_interpolant() {
        const int n = sys_.n;
        const int d = (n - 1) * (n - 1);
        const Rational scale(n - 1);
        auto chart_point = [&](int corner) {
            RatVector y = RatVector::Zero(d);
            if (corner > 0) y(corner - 1) = scale;
            RatVector x = RatVector::Zero(n * n);
            const Rational row_total = Rational(1) - sys_.t;
            for (int i = 0; i < n - 1; ++i)
                for (int j = 0; j < n - 1; ++j) x(i * n + j) = y(i * (n - 1) + j);
            for (int i = 0; i < n - 1; ++i) {
                Rational partial = 0;
                for (int j = 0; j < n - 1; ++j) partial += x(i * n + j);
                x(i * n + n - 1) = row_total - partial;
            }
            for (int j = 0; j < n - 1; ++j) {
                Rational partial = 0;
                for (int i = 0; i < n - 1; ++i) partial += x(i * n + j);
                x((n - 1) * n + j) = Rational(1) - partial;
            }
            Rational last = 0;
            for (int j = 0; j < n - 1; ++j) last += x((n - 1) * n + j);
            x((n - 1) * n + n - 1) = row_total - last;
            return x;
        };

        const Rational f_apex = obj_.evaluate_vec(chart_point(0));
        interpolant_coeff_ = RatVector::Zero(sys_.cols());
        interpolant_offset_ = f_apex;
        for (int k = 0; k < d; ++k) {
            const Rational f_corner = obj_.evaluate_vec(chart_point(k + 1));
            const int i = k / (n - 1), j = k % (n - 1);
            interpolant_coeff_(i * n + j) = (f_corner - f_apex) / scale;
        }
    }

    void record(long long iteration) {
        Rational ub = incumbent_value_;
        if (!pool_.empty() && pool_.top()->ub > ub) ub = pool_.top()->ub;
        SolverTrace::Item item{iteration, ub, incumbent_value_};
        if (opts_.on_iteration) opts_.on_iteration(item);
        items_.push_back(std::move(item));
    }

    const ConvexObjective& obj_;
    const ConstraintSystem& sys_;
    const SolverOptions& opts_;
    std::optional<QuadraticStructure> structure_;
    Rational small_band_;  // nt
    Rational big_band_;    // 1 - nt
    const Rational row_residual_{sys_.t * Rational(sys_.n - 1)};
    const Rational col_residual_{sys_.t * Rational(sys_.n)};
    const Rational col_last_residual_{0};
    RatVector interpolant_coeff_;
    Rational interpolant_offset_ = 0;
    std::priority_queue<NodePtr, std::vector<NodePtr>, NodeOrder> pool_;
    BasicSolution incumbent_;
    Rational incumbent_value_ = 0;
    std::vector<SolverTrace::Item> items_;
    SolverStatus status_ = SolverStatus::IterationLimit;
    long long next_id_ = 0;
};

}  // namespace

SolverTrace maximize_convex(const ConvexObjective& obj, const ConstraintSystem& sys,
                            const SolverOptions& opts) {
    if (sys.t == 0) {
        throw DegeneracyHazardError(
            "the unperturbed polytope is degenerate; build a perturbed system first");
    }
    if (obj.n() != sys.n) {
        throw DimensionMismatchError("objective and system dimensions disagree");
    }
    if (opts.max_iterations && *opts.max_iterations < 1) {
        throw Error("max_iterations must be >= 1");
    }
    BranchAndBound engine(obj, sys, opts);
    return engine.run();
}

std::pair<BasicSolution, Rational> brute_force_vertex_max(
    const ConvexObjective& obj, const ConstraintSystem& sys) {
    VertexEnumerator stream(sys);
    std::optional<BasicSolution> best;
    Rational best_value = 0;
    while (auto vertex = stream.next()) {
        const Rational value = obj.evaluate_vec(vertex->values);
        bool take = false;
        if (!best || value > best_value) {
            take = true;
        } else if (value == best_value) {
            for (int k = 0; k < vertex->values.size(); ++k) {
                if (vertex->values(k) != best->values(k)) {
                    take = vertex->values(k) < best->values(k);
                    break;
                }
            }
        }
        if (take) {
            best = std::move(*vertex);
            best_value = value;
        }
    }
    if (!best) throw InternalConsistencyError("system has no vertices");
    return {std::move(*best), best_value};
}

GapCertificate certify_gap(const SolverTrace& trace, const Rational& incumbent_value) {
    if (trace.items.empty()) {
        throw Error("empty trace has no bound to certify");
    }
    if (!is_integer(incumbent_value)) {
        throw HypothesisViolationError(
            "integer rounding requires an integer incumbent value");
    }
    GapCertificate cert;
    cert.upper_bound = rational_ceil(trace.last().upper_bound);
    cert.gap = cert.upper_bound - numerator(incumbent_value);
    return cert;
}

}  // namespace exactgm

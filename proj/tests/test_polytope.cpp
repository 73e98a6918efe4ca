#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "exactgm/error.hpp"
#include "exactgm/polytope.hpp"

using namespace exactgm;

namespace {

RatVector vec4(const Rational& a, const Rational& b, const Rational& c,
               const Rational& d) {
    RatVector v(4);
    v << a, b, c, d;
    return v;
}

bool is_permutation_matrix(const BasicSolution& sol) {
    const int n = sol.n;
    for (int i = 0; i < n; ++i) {
        Rational row = 0, col = 0;
        for (int j = 0; j < n; ++j) {
            const Rational& rv = sol.values(i * n + j);
            if (rv != 0 && rv != 1) return false;
            row += rv;
            col += sol.values(j * n + i);
        }
        if (row != 1 || col != 1) return false;
    }
    return true;
}

/// Random nonsingular basis via rejection sampling.
Basis random_basis(const ConstraintSystem& sys, std::mt19937_64& rng) {
    const int m = sys.rows();
    std::vector<int> pool(sys.cols());
    for (int k = 0; k < sys.cols(); ++k) pool[k] = k;
    for (;;) {
        for (int i = 0; i < m; ++i) {
            std::uniform_int_distribution<int> dist(i, sys.cols() - 1);
            std::swap(pool[i], pool[dist(rng)]);
        }
        std::vector<int> columns(pool.begin(), pool.begin() + m);
        std::sort(columns.begin(), columns.end());
        if (solve_columns(sys.matrix, sys.rhs, columns)) return Basis{columns};
    }
}

}  // namespace

TEST_CASE("birkhoff system shape and entries") {
    const ConstraintSystem sys = build_birkhoff(2);
    CHECK(sys.rows() == 3);
    CHECK(sys.cols() == 4);
    CHECK(sys.t == 0);
    for (int r = 0; r < 3; ++r) CHECK(sys.rhs(r) == 1);
    // row sums for i=1,2 then the first column sum
    const int expected[3][4] = {{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c) CHECK(sys.matrix(r, c) == expected[r][c]);

    const ConstraintSystem sys3 = build_birkhoff(3);
    CHECK(sys3.rows() == 5);
    CHECK(sys3.cols() == 9);
    for (int r = 0; r < 5; ++r) CHECK(sys3.rhs(r) == 1);
}

TEST_CASE("birkhoff rejects n < 2") {
    CHECK_THROWS_AS(build_birkhoff(1), InvalidDimensionError);
    CHECK_THROWS_AS(build_birkhoff(0), InvalidDimensionError);
}

TEST_CASE("perturbed right-hand sides") {
    const Rational t1(999, 2000);  // 1/2 - 1/2000
    const ConstraintSystem s2 = build_perturbed(2, t1);
    CHECK(s2.rhs(0) == Rational(1001, 2000));
    CHECK(s2.rhs(1) == Rational(1001, 2000));
    CHECK(s2.rhs(2) == 1);

    const ConstraintSystem s3 = build_perturbed(3, Rational(1, 1000));
    for (int i = 0; i < 3; ++i) CHECK(s3.rhs(i) == Rational(999, 1000));
    CHECK(s3.rhs(3) == 1);
    CHECK(s3.rhs(4) == 1);
}

TEST_CASE("perturbation range is the open interval (0, 1/n)") {
    CHECK_THROWS_AS(build_perturbed(3, Rational(1, 3)), PerturbationRangeError);
    CHECK_THROWS_AS(build_perturbed(3, Rational(0)), PerturbationRangeError);
    CHECK_THROWS_AS(build_perturbed(3, Rational(-1, 10)), PerturbationRangeError);
    CHECK_THROWS_AS(build_perturbed(2, Rational(1, 2)), PerturbationRangeError);
    CHECK_NOTHROW(build_perturbed(3, Rational(1, 4)));
}

TEST_CASE("basic solutions of the worked n=3 bases") {
    // x11, x22, x23, x31, x33
    const Basis first{{0, 4, 5, 6, 8}};
    // x11, x22, x31, x32, x33
    const Basis second{{0, 4, 6, 7, 8}};

    SUBCASE("first basis, unperturbed: feasible and degenerate") {
        const BasicSolution sol = basic_solution(build_birkhoff(3), first);
        CHECK(sol.feasible);
        CHECK(sol.degenerate);
        CHECK(sol.values(0) == 1);
        CHECK(sol.values(4) == 1);
        CHECK(sol.values(5) == 0);
        CHECK(sol.values(6) == 0);
        CHECK(sol.values(8) == 1);
    }

    SUBCASE("first basis turns infeasible under t = 1/1000") {
        const BasicSolution sol =
            basic_solution(build_perturbed(3, Rational(1, 1000)), first);
        CHECK_FALSE(sol.feasible);
        CHECK(sol.values(5) == Rational(-1, 1000));
    }

    SUBCASE("second basis stays feasible and non-degenerate") {
        const BasicSolution sol =
            basic_solution(build_perturbed(3, Rational(1, 1000)), second);
        CHECK(sol.feasible);
        CHECK_FALSE(sol.degenerate);
        CHECK(sol.values(0) == Rational(999, 1000));
        CHECK(sol.values(4) == Rational(999, 1000));
        CHECK(sol.values(6) == Rational(1, 1000));
        CHECK(sol.values(7) == Rational(1, 1000));
        CHECK(sol.values(8) == Rational(997, 1000));
    }
}

TEST_CASE("cyclic column sets are rejected as bases") {
    // cells (1,1),(1,2),(2,1),(2,2) close a cycle in the bipartite graph
    const Basis cyclic{{0, 1, 3, 4, 8}};
    CHECK_THROWS_AS(basic_solution(build_birkhoff(3), cyclic), NotABasisError);
}

TEST_CASE("vertex enumeration recovers the permutation matrices") {
    for (int n : {2, 3, 4}) {
        CAPTURE(n);
        const auto vertices = enumerate_vertices(build_birkhoff(n));
        long long factorial = 1;
        for (int i = 2; i <= n; ++i) factorial *= i;
        CHECK(static_cast<long long>(vertices.size()) == factorial);
        std::set<std::vector<int>> sigmas;
        for (const auto& vertex : vertices) {
            CHECK(is_permutation_matrix(vertex));
            sigmas.insert(bfs_to_permutation(vertex).image);
        }
        CHECK(static_cast<long long>(sigmas.size()) == factorial);
    }
}

TEST_CASE("perturbed n=2 polytope has the two expected vertices") {
    const auto vertices = enumerate_vertices(build_perturbed(2, Rational(1, 4)));
    REQUIRE(vertices.size() == 2);
    std::set<std::vector<Rational>> got;
    for (const auto& vertex : vertices) {
        got.insert({vertex.values(0), vertex.values(1), vertex.values(2),
                    vertex.values(3)});
    }
    const std::set<std::vector<Rational>> expected{
        {Rational(3, 4), Rational(0), Rational(1, 4), Rational(1, 2)},
        {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(0)}};
    CHECK(got == expected);
}

TEST_CASE("the perturbation removes degeneracy") {
    std::mt19937_64 rng(7101);
    for (int n : {3, 4}) {
        for (int trial = 0; trial < 3; ++trial) {
            std::uniform_int_distribution<int> numerator(1, 999);
            const Rational t(numerator(rng), 1000LL * n);
            CAPTURE(n);
            CAPTURE(format_rational(t));
            const auto vertices = enumerate_vertices(build_perturbed(n, t));
            CHECK(!vertices.empty());
            for (const auto& vertex : vertices) {
                CHECK_FALSE(vertex.degenerate);
                for (int col : vertex.basis.columns) CHECK(vertex.values(col) > 0);
            }
        }
    }
}

TEST_CASE("unperturbed basic solutions are integral") {
    std::mt19937_64 rng(24601);
    const ConstraintSystem sys = build_birkhoff(3);
    for (int trial = 0; trial < 200; ++trial) {
        const BasicSolution sol = basic_solution(sys, random_basis(sys, rng));
        Rational least = 0;
        for (int k = 0; k < sol.values.size(); ++k) {
            CHECK(is_integer(sol.values(k)));
            if (sol.values(k) < least) least = sol.values(k);
        }
        if (!sol.feasible) CHECK(least <= -1);
    }
}

TEST_CASE("every basis submatrix has determinant +-1") {
    std::mt19937_64 rng(5150);
    const ConstraintSystem sys = build_birkhoff(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Basis basis = random_basis(sys, rng);
        IntMatrix sub(sys.rows(), sys.rows());
        for (int r = 0; r < sys.rows(); ++r)
            for (int c = 0; c < sys.rows(); ++c)
                sub(r, c) = sys.matrix(r, basis.columns[c]);
        const Integer det = int_determinant(sub);
        CHECK((det == 1 || det == -1));
    }
}

TEST_CASE("permutation extraction") {
    SUBCASE("identity vertex") {
        const Basis identity_basis{{0, 1, 4, 5, 8}};
        const BasicSolution sol = basic_solution(build_birkhoff(3), identity_basis);
        const Permutation sigma = bfs_to_permutation(sol);
        CHECK(sigma.image == std::vector<int>{0, 1, 2});
    }

    SUBCASE("the degenerate optimal vertex of the worked example is the identity") {
        const BasicSolution sol =
            basic_solution(build_birkhoff(3), Basis{{0, 4, 5, 6, 8}});
        CHECK(bfs_to_permutation(sol).image == std::vector<int>{0, 1, 2});
    }

    SUBCASE("fractional solutions are rejected") {
        const auto vertices = enumerate_vertices(build_perturbed(2, Rational(1, 4)));
        REQUIRE(!vertices.empty());
        CHECK_THROWS_AS(bfs_to_permutation(vertices.front()), NotAVertexError);
    }

    SUBCASE("round trip through the permutation matrix") {
        for (const auto& vertex : enumerate_vertices(build_birkhoff(3))) {
            const IntMatrix x = permutation_matrix(bfs_to_permutation(vertex));
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    CHECK(Rational(x(i, j)) == vertex.values(i * 3 + j));
        }
    }
}

TEST_CASE("randomized total-unimodularity probe") {
    CHECK(check_tu_minors(build_birkhoff(3), 3, 500, 99));
    CHECK(check_tu_minors(build_birkhoff(4), 5, 300, 100));

    SUBCASE("exhaustive order-2 scan of the n=2 system") {
        CHECK(check_tu_minors(build_birkhoff(2), 2, 0, 0));
    }

    SUBCASE("a corrupted entry is caught") {
        IntMatrix corrupted = build_birkhoff(3).matrix;
        corrupted(0, 0) = 2;
        CHECK_FALSE(check_tu_minors(corrupted, 1, 0, 0));
        CHECK_FALSE(check_tu_minors(corrupted, 2, 0, 0));
    }

    SUBCASE("order must fit the matrix") {
        CHECK_THROWS_AS(check_tu_minors(build_birkhoff(2), 4, 10, 1),
                        InvalidDimensionError);
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "torus/simplex.hpp"

using namespace torus;

namespace {

// Exhaustive vertex-enumeration LP oracle for <= 3 nonnegative variables:
// tries every basis (subset of tight constraints among rows and x_j = 0).
// Returns the best objective over feasible vertices, or NaN when infeasible.
// Problems must be bounded (callers add box rows).
double oracle_best(const LpProblem<double>& p) {
    const int n = p.num_vars;
    // collect all constraints as a x <= / = / >= b plus x_j >= 0
    struct Row {
        std::vector<double> a;
        double b;
        Rel rel;
    };
    std::vector<Row> rows;
    for (size_t i = 0; i < p.rows.size(); ++i)
        rows.push_back({p.rows[i], p.rhs[i], p.rel[i]});
    for (int j = 0; j < n; ++j) {
        std::vector<double> a(n, 0.0);
        a[j] = 1.0;
        rows.push_back({a, 0.0, Rel::kGe});
    }
    auto feasible = [&](const std::vector<double>& x) {
        for (const auto& r : rows) {
            double v = 0;
            for (int j = 0; j < n; ++j) v += r.a[j] * x[j];
            if (r.rel == Rel::kLe && v > r.b + 1e-7) return false;
            if (r.rel == Rel::kGe && v < r.b - 1e-7) return false;
            if (r.rel == Rel::kEq && std::abs(v - r.b) > 1e-7) return false;
        }
        return true;
    };
    double best = std::nan("");
    const int m = static_cast<int>(rows.size());
    std::vector<int> idx(n);
    // choose n constraints to be tight, solve the linear system
    std::vector<int> pick;
    auto solve_tight = [&](const std::vector<int>& sel) {
        // gaussian elimination on n x n
        std::vector<std::vector<double>> a(n, std::vector<double>(n + 1));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) a[i][j] = rows[sel[i]].a[j];
            a[i][n] = rows[sel[i]].b;
        }
        for (int c = 0; c < n; ++c) {
            int piv = -1;
            for (int r2 = c; r2 < n; ++r2)
                if (std::abs(a[r2][c]) > 1e-10) { piv = r2; break; }
            if (piv < 0) return;
            std::swap(a[c], a[piv]);
            for (int r2 = 0; r2 < n; ++r2) {
                if (r2 == c) continue;
                double f = a[r2][c] / a[c][c];
                for (int j = c; j <= n; ++j) a[r2][j] -= f * a[c][j];
            }
        }
        std::vector<double> x(n);
        for (int j = 0; j < n; ++j) x[j] = a[j][n] / a[j][j];
        if (!feasible(x)) return;
        double obj = 0;
        for (int j = 0; j < n; ++j) obj += p.objective[j] * x[j];
        if (std::isnan(best) || obj > best) best = obj;
    };
    std::vector<int> sel(n);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == n) {
            solve_tight(sel);
            return;
        }
        for (int i = start; i < m; ++i) {
            sel[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return best;
}

}  // namespace

TEST_CASE("max alpha subject to alpha <= 3") {
    LpProblem<double> p;
    p.num_vars = 1;
    p.objective = {1.0};
    p.rows = {{1.0}};
    p.rhs = {3.0};
    p.rel = {Rel::kLe};
    auto s = simplex_solve(p);
    REQUIRE(s.status == LpStatus::kOptimal);
    CHECK(s.objective == doctest::Approx(3.0));
    CHECK(s.x[0] == doctest::Approx(3.0));
}

TEST_CASE("symmetric pair: alpha <= 1 + x, alpha <= 1 - x, |x| <= 1/4") {
    LpProblem<double> p;
    p.num_vars = 2;  // alpha, x (free)
    p.free_vars = true;
    p.objective = {1.0, 0.0};
    p.rows = {{1.0, -1.0}, {1.0, 1.0}, {0.0, 1.0}, {0.0, -1.0}};
    p.rhs = {1.0, 1.0, 0.25, 0.25};
    p.rel = {Rel::kLe, Rel::kLe, Rel::kLe, Rel::kLe};
    auto s = simplex_solve(p);
    REQUIRE(s.status == LpStatus::kOptimal);
    CHECK(s.objective == doctest::Approx(1.0));
    CHECK(s.x[0] == doctest::Approx(1.0));
    CHECK(s.x[1] == doctest::Approx(0.0));
}

TEST_CASE("free variable extraction returns the merged solution") {
    // max a s.t. a <= 5 + 2e, a <= 7 - 3e, |e| <= 0.1  -> a = 5.2 at e = 0.1
    LpProblem<double> p;
    p.num_vars = 2;
    p.free_vars = true;
    p.objective = {1.0, 0.0};
    p.rows = {{1.0, -2.0}, {1.0, 3.0}, {0.0, 1.0}, {0.0, -1.0}};
    p.rhs = {5.0, 7.0, 0.1, 0.1};
    p.rel = {Rel::kLe, Rel::kLe, Rel::kLe, Rel::kLe};
    auto s = simplex_solve(p);
    REQUIRE(s.status == LpStatus::kOptimal);
    REQUIRE(s.x.size() == 2);
    CHECK(s.objective == doctest::Approx(5.2));
    CHECK(s.x[0] == doctest::Approx(5.2));
    CHECK(s.x[1] == doctest::Approx(0.1));
}

TEST_CASE("infeasible and unbounded detection") {
    LpProblem<double> inf;
    inf.num_vars = 1;
    inf.objective = {1.0};
    inf.rows = {{1.0}, {1.0}};
    inf.rhs = {1.0, 3.0};
    inf.rel = {Rel::kLe, Rel::kGe};
    CHECK(simplex_solve(inf).status == LpStatus::kInfeasible);

    LpProblem<double> unb;
    unb.num_vars = 1;
    unb.objective = {1.0};
    unb.rows = {{1.0}};
    unb.rhs = {1.0};
    unb.rel = {Rel::kGe};
    CHECK(simplex_solve(unb).status == LpStatus::kUnbounded);
}

TEST_CASE("negative rhs rows are handled") {
    // max -x s.t. -x <= -2  (i.e. x >= 2) -> x = 2
    LpProblem<double> p;
    p.num_vars = 1;
    p.objective = {-1.0};
    p.rows = {{-1.0}};
    p.rhs = {-2.0};
    p.rel = {Rel::kLe};
    auto s = simplex_solve(p);
    REQUIRE(s.status == LpStatus::kOptimal);
    CHECK(s.x[0] == doctest::Approx(2.0));
}

TEST_CASE("equality constraints") {
    // max x + y s.t. x + y = 4, x <= 3, y <= 3
    LpProblem<double> p;
    p.num_vars = 2;
    p.objective = {1.0, 1.0};
    p.rows = {{1.0, 1.0}, {1.0, 0.0}, {0.0, 1.0}};
    p.rhs = {4.0, 3.0, 3.0};
    p.rel = {Rel::kEq, Rel::kLe, Rel::kLe};
    auto s = simplex_solve(p);
    REQUIRE(s.status == LpStatus::kOptimal);
    CHECK(s.objective == doctest::Approx(4.0));
}

TEST_CASE("random LPs agree with the vertex enumeration oracle") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> rhs(1, 8);
    int solved = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 3);
        int m = 1 + static_cast<int>(rng() % 4);
        LpProblem<double> p;
        p.num_vars = n;
        p.objective.assign(n, 0.0);
        for (auto& c : p.objective) c = coef(rng);
        for (int i = 0; i < m; ++i) {
            std::vector<double> row(n);
            for (auto& x : row) x = coef(rng);
            p.rows.push_back(row);
            p.rhs.push_back(rhs(rng));
            p.rel.push_back(rng() % 3 == 0 ? Rel::kGe : Rel::kLe);
        }
        // box rows keep everything bounded
        for (int j = 0; j < n; ++j) {
            std::vector<double> row(n, 0.0);
            row[j] = 1.0;
            p.rows.push_back(row);
            p.rhs.push_back(10.0);
            p.rel.push_back(Rel::kLe);
        }
        double expect = oracle_best(p);
        auto s = simplex_solve(p);
        if (std::isnan(expect)) {
            CHECK(s.status == LpStatus::kInfeasible);
        } else {
            REQUIRE(s.status == LpStatus::kOptimal);
            CHECK(s.objective == doctest::Approx(expect).epsilon(1e-9));
            ++solved;
        }
    }
    CHECK(solved > 50);  // the sweep must actually exercise optimal cases
}

TEST_CASE("exact rational instantiation") {
    LpProblem<Rat> p;
    p.num_vars = 2;
    p.objective = {Rat(1), Rat(1)};
    p.rows = {{Rat(1), Rat(2)}, {Rat(3), Rat(1)}};
    p.rhs = {Rat(4), Rat(6)};
    p.rel = {Rel::kLe, Rel::kLe};
    auto s = simplex_solve(p);
    REQUIRE(s.status == LpStatus::kOptimal);
    // optimum at intersection: x = 8/5, y = 6/5
    CHECK(s.x[0] == Rat(8, 5));
    CHECK(s.x[1] == Rat(6, 5));
    CHECK(s.objective == Rat(14, 5));
}

TEST_CASE("solution satisfies its own constraints") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 2);
        LpProblem<double> p;
        p.num_vars = n;
        p.free_vars = trial % 2 == 0;
        p.objective.assign(n, 0.0);
        for (auto& c : p.objective) c = coef(rng);
        for (int i = 0; i < 3; ++i) {
            std::vector<double> row(n);
            for (auto& x : row) x = coef(rng);
            p.rows.push_back(row);
            p.rhs.push_back(5.0);
            p.rel.push_back(Rel::kLe);
        }
        for (int j = 0; j < n; ++j) {
            std::vector<double> row(n, 0.0);
            row[j] = 1.0;
            p.rows.push_back(row);
            p.rhs.push_back(2.0);
            p.rel.push_back(Rel::kLe);
            if (p.free_vars) {
                row[j] = -1.0;
                p.rows.push_back(row);
                p.rhs.push_back(2.0);
                p.rel.push_back(Rel::kLe);
            }
        }
        auto s = simplex_solve(p);
        REQUIRE(s.status == LpStatus::kOptimal);
        double obj = 0.0;
        for (int j = 0; j < n; ++j) obj += p.objective[j] * s.x[j];
        CHECK(obj == doctest::Approx(s.objective).epsilon(1e-8));
        for (size_t i = 0; i < p.rows.size(); ++i) {
            double v = 0.0;
            for (int j = 0; j < n; ++j) v += p.rows[i][j] * s.x[j];
            CHECK(v <= p.rhs[i] + 1e-7);
        }
    }
}

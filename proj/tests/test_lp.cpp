#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "test_support.hpp"

using namespace htrans;
using namespace htrans::testing;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

LPProblem single_edge_star_lp() {
  Graph g(2);
  g.add_edge(0, 1);
  return build_sa_lp(g, 2, {}).lp;
}

}  // namespace

TEST(Simplex, LowerBoundedScalar) {
  LPProblem p = LPProblem::with_variables(1);
  p.objective = {1};
  p.upper = {10};
  p.add({1}, Relation::greater_equal, 3);
  auto s = solve(p);
  ASSERT_EQ(s.status, LPStatus::optimal);
  EXPECT_NEAR(s.values[0], 3.0, 1e-9);
  EXPECT_NEAR(s.objective, 3.0, 1e-9);
}

TEST(Simplex, SingleEdgeStarLP) {
  auto p = single_edge_star_lp();
  auto s = solve(p);
  ASSERT_EQ(s.status, LPStatus::optimal);
  EXPECT_NEAR(s.objective, 1.0, 1e-7);
  EXPECT_LE(check(p, s.values).max(), 1e-7);
}

TEST(Simplex, Infeasible) {
  LPProblem p = LPProblem::with_variables(1);
  p.lower = {-kInf};
  p.add({1}, Relation::greater_equal, 1);
  p.add({1}, Relation::less_equal, 0);
  EXPECT_EQ(solve(p).status, LPStatus::infeasible);
}

TEST(Simplex, Unbounded) {
  LPProblem p = LPProblem::with_variables(2);
  p.objective = {-1, 0};
  p.add({1, -1}, Relation::less_equal, 1);
  EXPECT_EQ(solve(p).status, LPStatus::unbounded);
}

TEST(Simplex, FreeAndUpperOnlyVariables) {
  // min x - y with x free, y <= 4 (no lower bound), x + y = 2, x >= -3.
  LPProblem p = LPProblem::with_variables(2);
  p.objective = {1, -1};
  p.lower = {-kInf, -kInf};
  p.upper = {kInf, 4};
  p.add({1, 1}, Relation::equal, 2);
  p.add({1, 0}, Relation::greater_equal, -3);
  auto s = solve(p);
  ASSERT_EQ(s.status, LPStatus::optimal);
  EXPECT_NEAR(s.values[0], -2, 1e-9);
  EXPECT_NEAR(s.values[1], 4, 1e-9);
  EXPECT_NEAR(s.objective, -6, 1e-9);
}

TEST(Simplex, RedundantEqualities) {
  LPProblem p = LPProblem::with_variables(2);
  p.objective = {1, 2};
  p.add({1, 1}, Relation::equal, 1);
  p.add({2, 2}, Relation::equal, 2);
  auto s = solve(p);
  ASSERT_EQ(s.status, LPStatus::optimal);
  EXPECT_NEAR(s.objective, 1, 1e-9);
}

TEST(Simplex, DegenerateCyclingExample) {
  // Beale's example cycles under the textbook largest-coefficient rule.
  LPProblem p = LPProblem::with_variables(4);
  p.objective = {-0.75, 150, -0.02, 6};
  p.add({0.25, -60, -0.04, 9}, Relation::less_equal, 0);
  p.add({0.5, -90, -0.02, 3}, Relation::less_equal, 0);
  p.add({0, 0, 1, 0}, Relation::less_equal, 1);
  auto s = solve(p);
  ASSERT_EQ(s.status, LPStatus::optimal);
  EXPECT_NEAR(s.objective, -0.05, 1e-9);
}

TEST(Simplex, DeterministicResolve) {
  Graph g = random_graph(14, 0.3, 5);
  auto p = build_sa_lp(g, 3, {}).lp;
  auto a = solve(p), b = solve(p);
  EXPECT_EQ(a.iterations, b.iterations);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.objective, b.objective);
}

TEST(Check, ReportsViolationsPerClass) {
  auto p = single_edge_star_lp();
  std::vector<double> ones(p.var_count, 1.0);
  EXPECT_LE(check(p, ones).max(), 0.0);
  std::vector<double> zeros(p.var_count, 0.0);
  auto r = check(p, zeros);
  EXPECT_NEAR(r.greater_equal, 1.0, 1e-12);
  EXPECT_EQ(r.less_equal, 0.0);
  EXPECT_NE(r.worst_constraint, kInfinity);
  EXPECT_EQ(p.constraints[r.worst_constraint].relation, Relation::greater_equal);
  std::vector<double> high(p.var_count, 2.0);
  EXPECT_NEAR(check(p, high).bounds, 1.0, 1e-12);
}

TEST(Check, TextDumpListsEveryRow) {
  auto p = single_edge_star_lp();
  auto text = to_text(p);
  std::size_t lines = std::count(text.begin(), text.end(), '\n');
  EXPECT_EQ(lines, 2 + p.constraints.size() + p.var_count);
  EXPECT_EQ(text.rfind("lp 3 5\n", 0), 0u);
}

TEST(Simplex, WeakDualityOnRandomCoveringLPs) {
  // min c x, A x >= b, x >= 0 with A, b, c >= 0. Any y >= 0 with A^T y <= c
  // gives b y <= optimum; the harness builds y by scaling.
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Stream rng(seed, {3});
    const std::size_t n = 4 + rng.below(8), m = 3 + rng.below(8);
    LPProblem p = LPProblem::with_variables(n);
    std::vector<std::vector<double>> a(m, std::vector<double>(n));
    std::vector<double> b(m);
    for (std::size_t j = 0; j < n; ++j) p.objective[j] = 1 + static_cast<double>(rng.below(5));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<double>(rng.below(4));
      a[i][rng.below(n)] += 1;
      b[i] = 1 + static_cast<double>(rng.below(6));
      p.add(a[i], Relation::greater_equal, b[i]);
    }
    auto s = solve(p);
    ASSERT_EQ(s.status, LPStatus::optimal);
    EXPECT_LE(check(p, s.values).max(), 1e-7);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> y(m);
      for (auto& v : y) v = rng.unit();
      double scale = 1;
      for (std::size_t j = 0; j < n; ++j) {
        double col = 0;
        for (std::size_t i = 0; i < m; ++i) col += a[i][j] * y[i];
        if (col > 0) scale = std::min(scale, p.objective[j] / col);
      }
      double dual = 0;
      for (std::size_t i = 0; i < m; ++i) dual += b[i] * y[i] * scale;
      EXPECT_LE(dual, s.objective + 1e-7);
    }
  }
}

TEST(Simplex, TenCaseStatusSuite) {
  struct Case {
    LPProblem p;
    LPStatus expected;
  };
  std::vector<Case> cases;
  auto make = [](std::size_t n) { return LPProblem::with_variables(n); };
  {
    auto p = make(1);
    p.objective = {1};
    p.upper = {10};
    p.add({1}, Relation::greater_equal, 3);
    cases.push_back({p, LPStatus::optimal});
  }
  cases.push_back({single_edge_star_lp(), LPStatus::optimal});
  {
    auto p = make(1);
    p.add({1}, Relation::greater_equal, 1);
    p.add({1}, Relation::less_equal, 0);
    cases.push_back({p, LPStatus::infeasible});
  }
  {
    auto p = make(2);
    p.objective = {-1, -1};
    cases.push_back({p, LPStatus::unbounded});
  }
  {
    auto p = make(2);
    p.upper = {1, 1};
    p.add({1, 1}, Relation::greater_equal, 3);
    cases.push_back({p, LPStatus::infeasible});
  }
  {
    auto p = make(2);
    p.objective = {-1, -1};
    p.upper = {1, kInf};
    p.add({1, -1}, Relation::greater_equal, 0);
    cases.push_back({p, LPStatus::optimal});
  }
  {
    auto p = make(2);
    p.objective = {0, -1};
    p.add({1, -1}, Relation::greater_equal, -2);
    cases.push_back({p, LPStatus::unbounded});
  }
  {
    auto p = make(3);
    p.objective = {1, 1, 1};
    p.add({1, 1, 0}, Relation::equal, 2);
    p.add({0, 1, 1}, Relation::equal, 2);
    p.add({1, 0, 1}, Relation::equal, 2);
    cases.push_back({p, LPStatus::optimal});
  }
  {
    auto p = make(2);
    p.add({1, 1}, Relation::equal, 1);
    p.add({1, 1}, Relation::equal, 2);
    cases.push_back({p, LPStatus::infeasible});
  }
  {
    auto p = make(1);
    p.lower = {-kInf};
    p.objective = {1};
    cases.push_back({p, LPStatus::unbounded});
  }
  ASSERT_EQ(cases.size(), 10u);
  for (std::size_t i = 0; i < cases.size(); ++i) EXPECT_EQ(solve(cases[i].p).status, cases[i].expected) << "case " << i;
}

TEST(Simplex, RejectsMalformedProblems) {
  LPProblem p = LPProblem::with_variables(2);
  EXPECT_THROW(p.add({1}, Relation::equal, 0), std::invalid_argument);
  p.lower[0] = 2;
  p.upper[0] = 1;
  EXPECT_THROW(solve(p), std::invalid_argument);
}

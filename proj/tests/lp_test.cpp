#include "hypersched/lp.hpp"

#include <random>

#include <gtest/gtest.h>

namespace hypersched {
namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

TEST(SolveLpTest, StarWorstCaseProgram) {
  // maximize 21a + 2b subject to 9a + b <= 1
  LinearProgram lp(2);
  lp.objective = {q(21), q(2)};
  lp.add_constraint({q(9), q(1)}, Relation::kLessEqual, q(1));
  const LpSolution s = solve_lp(lp, Sense::kMaximize);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, q(7, 3));
  EXPECT_EQ(s.assignment, (std::vector<Rational>{q(1, 9), q(0)}));
}

TEST(SolveLpTest, StarWorstCaseProgramWithDurationConstraint) {
  // The schedule-duration reading 9a + 2b <= 1 has the same optimum.
  LinearProgram lp(2);
  lp.objective = {q(21), q(2)};
  lp.add_constraint({q(9), q(2)}, Relation::kLessEqual, q(1));
  EXPECT_EQ(solve_lp(lp, Sense::kMaximize).value, q(7, 3));
}

TEST(SolveLpTest, ZeroUpperBound) {
  LinearProgram lp(1);
  lp.objective = {q(1)};
  lp.add_constraint({q(1)}, Relation::kLessEqual, q(0));
  const LpSolution s = solve_lp(lp, Sense::kMaximize);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, q(0));
}

TEST(SolveLpTest, ContradictoryConstraintsAreInfeasible) {
  LinearProgram lp(2);
  lp.objective = {q(1), q(1)};
  lp.add_constraint({q(1), q(1)}, Relation::kGreaterEqual, q(2));
  lp.add_constraint({q(1), q(1)}, Relation::kLessEqual, q(1));
  EXPECT_EQ(solve_lp(lp, Sense::kMaximize).status, LpStatus::kInfeasible);
}

TEST(SolveLpTest, DetectsUnbounded) {
  LinearProgram lp(2);
  lp.objective = {q(1), q(0)};
  lp.add_constraint({q(-1), q(1)}, Relation::kLessEqual, q(1));
  EXPECT_EQ(solve_lp(lp, Sense::kMaximize).status, LpStatus::kUnbounded);
}

TEST(SolveLpTest, MinimizeWithEqualityAndNegativeRhs) {
  // minimize x + 2y s.t. x + y = 3, -x <= -1  => x = 3, y = 0
  LinearProgram lp(2);
  lp.objective = {q(1), q(2)};
  lp.add_constraint({q(1), q(1)}, Relation::kEqual, q(3));
  lp.add_constraint({q(-1), q(0)}, Relation::kLessEqual, q(-1));
  const LpSolution s = solve_lp(lp, Sense::kMinimize);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, q(3));
  EXPECT_TRUE(satisfies_constraints(lp, s.assignment));
}

TEST(SolveLpTest, RedundantEqualityRows) {
  LinearProgram lp(2);
  lp.objective = {q(1), q(1)};
  lp.add_constraint({q(1), q(1)}, Relation::kEqual, q(1));
  lp.add_constraint({q(2), q(2)}, Relation::kEqual, q(2));
  const LpSolution s = solve_lp(lp, Sense::kMaximize);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, q(1));
}

TEST(SolveLpTest, RejectsRaggedRows) {
  LinearProgram lp(2);
  lp.add_constraint({q(1)}, Relation::kLessEqual, q(1));
  EXPECT_THROW(solve_lp(lp, Sense::kMaximize), std::invalid_argument);
}

// max c.x s.t. Ax <= b, x >= 0  versus  min b.y s.t. A^T y >= c, y >= 0.
TEST(SolveLpTest, StrongDualityOnRandomPrograms) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> size(1, 5);
  std::uniform_int_distribution<int> coef(-3, 6);
  std::uniform_int_distribution<int> den(1, 4);
  int optimal = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int m = size(rng);
    const int n = size(rng);
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(n)));
    std::vector<Rational> b(static_cast<std::size_t>(m));
    std::vector<Rational> c(static_cast<std::size_t>(n));
    for (auto& row : a) {
      for (auto& v : row) v = q(coef(rng), den(rng));
    }
    for (auto& v : b) v = q(coef(rng) + 3, den(rng));
    for (auto& v : c) v = q(coef(rng), den(rng));

    LinearProgram primal(static_cast<std::size_t>(n));
    primal.objective = c;
    for (int i = 0; i < m; ++i) primal.add_constraint(a[static_cast<std::size_t>(i)], Relation::kLessEqual, b[static_cast<std::size_t>(i)]);

    LinearProgram dual(static_cast<std::size_t>(m));
    dual.objective = b;
    for (int j = 0; j < n; ++j) {
      std::vector<Rational> col;
      for (int i = 0; i < m; ++i) col.push_back(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      dual.add_constraint(col, Relation::kGreaterEqual, c[static_cast<std::size_t>(j)]);
    }

    const LpSolution p = solve_lp(primal, Sense::kMaximize);
    const LpSolution d = solve_lp(dual, Sense::kMinimize);
    if (p.status == LpStatus::kOptimal) {
      ++optimal;
      ASSERT_EQ(d.status, LpStatus::kOptimal);
      EXPECT_EQ(p.value, d.value);
      EXPECT_TRUE(satisfies_constraints(primal, p.assignment));
      EXPECT_TRUE(satisfies_constraints(dual, d.assignment));
      EXPECT_EQ(evaluate_objective(primal, p.assignment), p.value);
      // Determinism.
      EXPECT_EQ(solve_lp(primal, Sense::kMaximize).assignment, p.assignment);
    } else {
      // b >= 0 keeps x = 0 feasible, so the primal can only be unbounded.
      EXPECT_EQ(p.status, LpStatus::kUnbounded);
      EXPECT_EQ(d.status, LpStatus::kInfeasible);
    }
  }
  EXPECT_GT(optimal, 50);
}

}  // namespace
}  // namespace hypersched

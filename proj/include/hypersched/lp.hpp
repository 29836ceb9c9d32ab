#pragma once

#include <cstddef>
#include <vector>

#include "hypersched/rational.hpp"

namespace hypersched {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };
enum class Sense { kMinimize, kMaximize };
enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpConstraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

/// Linear program over nonnegative variables. Every constraint row must
/// have exactly `num_variables` coefficients.
struct LinearProgram {
  std::size_t num_variables = 0;
  std::vector<Rational> objective;
  std::vector<LpConstraint> constraints;

  explicit LinearProgram(std::size_t n = 0) : num_variables(n), objective(n) {}

  void add_constraint(std::vector<Rational> coefficients, Relation relation, Rational rhs);
};

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> assignment;
};

/// Two-phase revised simplex over exact rationals using Bland's rule for both
/// the entering and leaving variable. Throws std::invalid_argument when the
/// program is malformed.
LpSolution solve_lp(const LinearProgram& lp, Sense sense);

/// True iff `x` is nonnegative and satisfies every constraint exactly.
bool satisfies_constraints(const LinearProgram& lp, const std::vector<Rational>& x);

Rational evaluate_objective(const LinearProgram& lp, const std::vector<Rational>& x);

}  // namespace hypersched

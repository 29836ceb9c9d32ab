#include "hypersched/lp.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace hypersched {

void LinearProgram::add_constraint(std::vector<Rational> coefficients, Relation relation, Rational rhs) {
  constraints.push_back(LpConstraint{std::move(coefficients), relation, std::move(rhs)});
}

namespace {

enum class ColumnKind { kOriginal, kSlack, kArtificial };

struct Entry {
  std::size_t row;
  Rational value;
};

// Revised simplex on  A x = b, x >= 0, b >= 0  with an explicit basis
// inverse. Columns are stored sparsely: the programs built here are wide and
// mostly 0/1, so pricing a column costs a handful of additions.
class Simplex {
 public:
  explicit Simplex(const LinearProgram& lp) : num_original_(lp.num_variables), m_(lp.constraints.size()) {
    columns_.resize(num_original_);
    kinds_.assign(num_original_, ColumnKind::kOriginal);
    rhs_.resize(m_);
    basis_.resize(m_);

    std::vector<std::size_t> artificial_rows;
    for (std::size_t r = 0; r < m_; ++r) {
      const auto& c = lp.constraints[r];
      const bool flip = c.rhs.sign() < 0;
      for (std::size_t j = 0; j < num_original_; ++j) {
        if (!c.coefficients[j].is_zero()) columns_[j].push_back({r, flip ? -c.coefficients[j] : c.coefficients[j]});
      }
      rhs_[r] = flip ? -c.rhs : c.rhs;

      Relation rel = c.relation;
      if (flip && rel == Relation::kLessEqual) {
        rel = Relation::kGreaterEqual;
      } else if (flip && rel == Relation::kGreaterEqual) {
        rel = Relation::kLessEqual;
      }
      if (rel == Relation::kLessEqual) {
        basis_[r] = add_column(ColumnKind::kSlack, r, Rational(1));
      } else {
        if (rel == Relation::kGreaterEqual) add_column(ColumnKind::kSlack, r, Rational(-1));
        artificial_rows.push_back(r);
      }
    }
    // Artificials go last so that Bland's rule prefers every other column.
    for (std::size_t r : artificial_rows) basis_[r] = add_column(ColumnKind::kArtificial, r, Rational(1));

    inverse_.assign(m_, std::vector<Rational>(m_));
    for (std::size_t r = 0; r < m_; ++r) inverse_[r][r] = 1;
    values_ = rhs_;
    is_basic_.assign(columns_.size(), false);
    for (std::size_t col : basis_) is_basic_[col] = true;
  }

  std::size_t width() const { return columns_.size(); }
  ColumnKind kind(std::size_t j) const { return kinds_[j]; }

  bool has_artificials() const {
    for (auto k : kinds_) {
      if (k == ColumnKind::kArtificial) return true;
    }
    return false;
  }

  // Maximizes sum_j cost[j] x_j from the current basis. Returns false when
  // unbounded on the allowed columns.
  bool optimize(const std::vector<Rational>& cost, bool allow_artificial) {
    for (;;) {
      const std::vector<Rational> y = duals(cost);
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (is_basic_[j] || (!allow_artificial && kinds_[j] == ColumnKind::kArtificial)) continue;
        Rational reduced = cost[j];
        for (const auto& e : columns_[j]) {
          if (!y[e.row].is_zero()) reduced -= y[e.row] * e.value;
        }
        if (reduced.sign() > 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;

      const std::vector<Rational> alpha = transformed(*entering);
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t r = 0; r < m_; ++r) {
        if (alpha[r].sign() <= 0) continue;
        Rational ratio = values_[r] / alpha[r];
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering, alpha);
    }
  }

  // After phase one every artificial is at zero. Pivot each basic artificial
  // out on the first non-artificial column with a nonzero entry in its row;
  // if there is none the row is redundant and the artificial stays basic at
  // zero, which is harmless once artificials may no longer enter.
  void expel_artificials() {
    for (std::size_t r = 0; r < m_; ++r) {
      if (kinds_[basis_[r]] != ColumnKind::kArtificial) continue;
      for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (is_basic_[j] || kinds_[j] == ColumnKind::kArtificial) continue;
        Rational entry;
        for (const auto& e : columns_[j]) {
          if (!inverse_[r][e.row].is_zero()) entry += inverse_[r][e.row] * e.value;
        }
        if (!entry.is_zero()) {
          pivot(r, j, transformed(j));
          break;
        }
      }
    }
  }

  Rational objective_value(const std::vector<Rational>& cost) const {
    Rational value;
    for (std::size_t r = 0; r < m_; ++r) {
      if (!cost[basis_[r]].is_zero() && !values_[r].is_zero()) value += cost[basis_[r]] * values_[r];
    }
    return value;
  }

  std::vector<Rational> original_assignment() const {
    std::vector<Rational> x(num_original_);
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < num_original_) x[basis_[r]] = values_[r];
    }
    return x;
  }

 private:
  std::size_t add_column(ColumnKind kind, std::size_t row, Rational value) {
    columns_.push_back({{row, std::move(value)}});
    kinds_.push_back(kind);
    return columns_.size() - 1;
  }

  // y = c_B^T B^-1
  std::vector<Rational> duals(const std::vector<Rational>& cost) const {
    std::vector<Rational> y(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      const Rational& cb = cost[basis_[r]];
      if (cb.is_zero()) continue;
      for (std::size_t i = 0; i < m_; ++i) {
        if (!inverse_[r][i].is_zero()) y[i] += cb * inverse_[r][i];
      }
    }
    return y;
  }

  // B^-1 A_j
  std::vector<Rational> transformed(std::size_t j) const {
    std::vector<Rational> alpha(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      for (const auto& e : columns_[j]) {
        if (!inverse_[r][e.row].is_zero()) alpha[r] += inverse_[r][e.row] * e.value;
      }
    }
    return alpha;
  }

  void pivot(std::size_t pr, std::size_t pc, const std::vector<Rational>& alpha) {
    const Rational inv = Rational(1) / alpha[pr];
    auto& prow = inverse_[pr];
    for (auto& v : prow) {
      if (!v.is_zero()) v *= inv;
    }
    values_[pr] *= inv;
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == pr || alpha[r].is_zero()) continue;
      for (std::size_t i = 0; i < m_; ++i) {
        if (!prow[i].is_zero()) inverse_[r][i] -= alpha[r] * prow[i];
      }
      if (!values_[pr].is_zero()) values_[r] -= alpha[r] * values_[pr];
    }
    is_basic_[basis_[pr]] = false;
    is_basic_[pc] = true;
    basis_[pr] = pc;
  }

  std::size_t num_original_;
  std::size_t m_;
  std::vector<std::vector<Entry>> columns_;
  std::vector<ColumnKind> kinds_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<bool> is_basic_;
  std::vector<std::vector<Rational>> inverse_;
  std::vector<Rational> values_;
};

void check_well_formed(const LinearProgram& lp) {
  if (lp.objective.size() != lp.num_variables) {
    throw std::invalid_argument("objective has " + std::to_string(lp.objective.size()) +
                                " coefficients, expected " + std::to_string(lp.num_variables));
  }
  for (std::size_t r = 0; r < lp.constraints.size(); ++r) {
    if (lp.constraints[r].coefficients.size() != lp.num_variables) {
      throw std::invalid_argument("constraint " + std::to_string(r) + " has " +
                                  std::to_string(lp.constraints[r].coefficients.size()) +
                                  " coefficients, expected " + std::to_string(lp.num_variables));
    }
  }
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, Sense sense) {
  check_well_formed(lp);
  Simplex simplex(lp);

  if (simplex.has_artificials()) {
    std::vector<Rational> phase_one(simplex.width());
    for (std::size_t j = 0; j < simplex.width(); ++j) {
      if (simplex.kind(j) == ColumnKind::kArtificial) phase_one[j] = -1;
    }
    simplex.optimize(phase_one, /*allow_artificial=*/true);
    if (simplex.objective_value(phase_one).sign() < 0) return LpSolution{LpStatus::kInfeasible, {}, {}};
    simplex.expel_artificials();
  }

  std::vector<Rational> cost(simplex.width());
  for (std::size_t j = 0; j < lp.num_variables; ++j) {
    cost[j] = sense == Sense::kMaximize ? lp.objective[j] : -lp.objective[j];
  }
  if (!simplex.optimize(cost, /*allow_artificial=*/false)) return LpSolution{LpStatus::kUnbounded, {}, {}};

  LpSolution solution;
  solution.status = LpStatus::kOptimal;
  solution.assignment = simplex.original_assignment();
  solution.value = evaluate_objective(lp, solution.assignment);
  return solution;
}

bool satisfies_constraints(const LinearProgram& lp, const std::vector<Rational>& x) {
  if (x.size() != lp.num_variables) return false;
  for (const auto& v : x) {
    if (v.sign() < 0) return false;
  }
  for (const auto& c : lp.constraints) {
    Rational lhs;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (!c.coefficients[j].is_zero() && !x[j].is_zero()) lhs += c.coefficients[j] * x[j];
    }
    switch (c.relation) {
      case Relation::kLessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < c.rhs) return false;
        break;
      case Relation::kEqual:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  return true;
}

Rational evaluate_objective(const LinearProgram& lp, const std::vector<Rational>& x) {
  Rational value;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!lp.objective[j].is_zero() && !x[j].is_zero()) value += lp.objective[j] * x[j];
  }
  return value;
}

}  // namespace hypersched

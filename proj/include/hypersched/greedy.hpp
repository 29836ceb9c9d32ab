#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypersched/feasibility.hpp"
#include "hypersched/hypergraph.hpp"
#include "hypersched/interval_set.hpp"
#include "hypersched/rational.hpp"

namespace hypersched {

/// Dense N x N matrix of pairwise interference weights.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  explicit WeightMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}
  /// Throws std::invalid_argument unless `rows` is square.
  explicit WeightMatrix(const std::vector<std::vector<Rational>>& rows);

  int size() const { return n_; }
  const Rational& operator()(LinkId i, LinkId j) const { return entries_[index(i, j)]; }
  Rational& operator()(LinkId i, LinkId j) { return entries_[index(i, j)]; }

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  std::size_t index(LinkId i, LinkId j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<Rational> entries_;
};

struct WeightMatrixError {
  enum class Kind {
    kDimensionMismatch,
    kNotSymmetric,
    kOutOfRange,
    kNonzeroDiagonal,
    kNonNeighborNonzero,
    kEdgeRowSumTooSmall
  };

  Kind kind;
  LinkId i = -1;
  LinkId j = -1;
  LinkSet edge;  // kEdgeRowSumTooSmall
  Rational sum;  // kEdgeRowSumTooSmall

  std::string message() const;
};

class InvalidWeightMatrix : public std::invalid_argument {
 public:
  explicit InvalidWeightMatrix(WeightMatrixError error);
  const WeightMatrixError& error() const { return error_; }

 private:
  WeightMatrixError error_;
};

/// Membership test for the admissible weight class: symmetric, entries in
/// [0, 1], zero diagonal, zero off the neighbor relation, and within every
/// edge E each row restricted to E sums to at least 1.
std::optional<WeightMatrixError> validate_w(const Hypergraph& h, const WeightMatrix& w);

/// Delta_ij = max over edges E holding both i and j of 1/(|E|-1); 0 for
/// non-neighbors.
WeightMatrix delta_matrix(const Hypergraph& h);

struct ConditionCheck {
  bool holds = true;
  std::vector<Rational> per_link;
};

/// tau_i + sum over edges E containing i of min_{j in E - i} tau_j, per link.
ConditionCheck check_lemma1(const Hypergraph& h, const DemandVector& demand);

/// tau_i + sum_{j != i} W_ij tau_j, per link. Throws InvalidWeightMatrix.
ConditionCheck check_theorem3(const Hypergraph& h, const WeightMatrix& w, const DemandVector& demand);

/// check_theorem3 with the Delta matrix.
ConditionCheck check_corollary4(const Hypergraph& h, const DemandVector& demand);

struct ScheduleStuck {
  LinkId link;
  Rational demanded;
  Rational available;
};

/// State handed to a greedy-run observer right before `order[step]` is placed.
struct GreedyStep {
  int step;
  LinkId link;
  const std::vector<IntervalSet>& assigned;
};

struct GreedyResult {
  /// Per-link active time, indexed by link. Links not yet placed when the
  /// run got stuck hold the empty set.
  std::vector<IntervalSet> assigned;
  std::optional<ScheduleStuck> stuck;

  bool ok() const { return !stuck.has_value(); }
};

/// Sequential interval assignment: links are placed in `order`, each one in
/// the leftmost free time outside the common active time of every edge whose
/// other links are already placed. Throws InvalidWeightMatrix if `w` fails
/// validate_w and std::invalid_argument on size mismatches.
GreedyResult greedy_schedule(const Hypergraph& h, const WeightMatrix& w, const DemandVector& demand,
                             const Permutation& order,
                             const std::function<void(const GreedyStep&)>& observer = {});

struct Lemma2Sides {
  Rational lhs;
  Rational rhs;
};

/// Both sides of the union bound at `step` of a run in `order`: the measure
/// of the union of common active times over the completing edges, and
/// sum_{j != link} W_{link,j} tau_j.
Lemma2Sides lemma2_check(const std::vector<IntervalSet>& assigned, const Hypergraph& h, const WeightMatrix& w,
                         const DemandVector& demand, const Permutation& order, int step);

/// Sweeps interval endpoints into a schedule over the sets of simultaneously
/// active links. Entries are merged by set, in order of first appearance.
Schedule intervals_to_schedule(const std::vector<IntervalSet>& assigned);

}  // namespace hypersched

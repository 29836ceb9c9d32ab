#include "hypersched/greedy.hpp"

#include <algorithm>
#include <map>

namespace hypersched {
namespace {

void require_size(const Hypergraph& h, const DemandVector& demand) {
  if (demand.size() != h.num_links()) {
    throw std::invalid_argument("demand has " + std::to_string(demand.size()) + " entries for " +
                                std::to_string(h.num_links()) + " links");
  }
}

ConditionCheck weighted_check(const WeightMatrix& w, const DemandVector& demand) {
  ConditionCheck out;
  const int n = demand.size();
  out.per_link.resize(static_cast<std::size_t>(n));
  for (LinkId i = 0; i < n; ++i) {
    Rational lhs = demand[i];
    for (LinkId j = 0; j < n; ++j) {
      if (j != i && !w(i, j).is_zero() && !demand[j].is_zero()) lhs += w(i, j) * demand[j];
    }
    if (lhs > Rational(1)) out.holds = false;
    out.per_link[static_cast<std::size_t>(i)] = std::move(lhs);
  }
  return out;
}

// Union over edges E containing `link` whose other links are all in `placed`
// of the common active time of E - link.
IntervalSet blocked_time(const Hypergraph& h, const std::vector<IntervalSet>& assigned, LinkId link, LinkSet placed) {
  IntervalSet blocked;
  for (LinkSet edge : h.edges_containing(link)) {
    const LinkSet others = edge.without(link);
    if (!others.is_subset_of(placed)) continue;
    IntervalSet common = IntervalSet::unit();
    for (LinkId j : others) common = interval_intersect(common, assigned[static_cast<std::size_t>(j)]);
    blocked = interval_union(blocked, common);
  }
  return blocked;
}

}  // namespace

WeightMatrix::WeightMatrix(const std::vector<std::vector<Rational>>& rows) : WeightMatrix(static_cast<int>(rows.size())) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw std::invalid_argument("weight matrix row " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) (*this)(static_cast<LinkId>(i), static_cast<LinkId>(j)) = rows[i][j];
  }
}

std::string WeightMatrixError::message() const {
  const auto pair = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  switch (kind) {
    case Kind::kDimensionMismatch:
      return "weight matrix dimension does not match the number of links";
    case Kind::kNotSymmetric:
      return "weight matrix is not symmetric at " + pair;
    case Kind::kOutOfRange:
      return "weight " + pair + " outside [0, 1]";
    case Kind::kNonzeroDiagonal:
      return "diagonal weight at link " + std::to_string(i + 1) + " is nonzero";
    case Kind::kNonNeighborNonzero:
      return "weight " + pair + " is nonzero but the links share no edge";
    case Kind::kEdgeRowSumTooSmall:
      return "row " + std::to_string(i + 1) + " sums to " + sum.to_string() + " < 1 over edge {" +
             format_one_based(edge) + "}";
  }
  return "invalid weight matrix";
}

InvalidWeightMatrix::InvalidWeightMatrix(WeightMatrixError error)
    : std::invalid_argument(error.message()), error_(std::move(error)) {}

std::optional<WeightMatrixError> validate_w(const Hypergraph& h, const WeightMatrix& w) {
  using Kind = WeightMatrixError::Kind;
  const int n = h.num_links();
  if (w.size() != n) return WeightMatrixError{Kind::kDimensionMismatch, -1, -1, {}, {}};
  for (LinkId i = 0; i < n; ++i) {
    for (LinkId j = i + 1; j < n; ++j) {
      if (w(i, j) != w(j, i)) return WeightMatrixError{Kind::kNotSymmetric, i, j, {}, {}};
    }
  }
  for (LinkId i = 0; i < n; ++i) {
    for (LinkId j = 0; j < n; ++j) {
      if (w(i, j).sign() < 0 || w(i, j) > Rational(1)) return WeightMatrixError{Kind::kOutOfRange, i, j, {}, {}};
    }
  }
  for (LinkId i = 0; i < n; ++i) {
    if (!w(i, i).is_zero()) return WeightMatrixError{Kind::kNonzeroDiagonal, i, i, {}, {}};
  }
  for (LinkId i = 0; i < n; ++i) {
    for (LinkId j = 0; j < n; ++j) {
      if (j != i && !h.neighbors(i).contains(j) && !w(i, j).is_zero()) {
        return WeightMatrixError{Kind::kNonNeighborNonzero, i, j, {}, {}};
      }
    }
  }
  for (LinkSet edge : h.edges()) {
    for (LinkId i : edge) {
      Rational sum;
      for (LinkId j : edge) sum += w(i, j);
      if (sum < Rational(1)) return WeightMatrixError{Kind::kEdgeRowSumTooSmall, i, -1, edge, std::move(sum)};
    }
  }
  return std::nullopt;
}

WeightMatrix delta_matrix(const Hypergraph& h) {
  WeightMatrix d(h.num_links());
  for (LinkSet edge : h.edges()) {
    const Rational weight(1, edge.size() - 1);
    for (LinkId i : edge) {
      for (LinkId j : edge) {
        if (i != j && d(i, j) < weight) d(i, j) = weight;
      }
    }
  }
  return d;
}

ConditionCheck check_lemma1(const Hypergraph& h, const DemandVector& demand) {
  require_size(h, demand);
  ConditionCheck out;
  out.per_link.resize(static_cast<std::size_t>(h.num_links()));
  for (LinkId i = 0; i < h.num_links(); ++i) {
    Rational lhs = demand[i];
    for (LinkSet edge : h.edges_containing(i)) {
      const LinkSet others = edge.without(i);
      Rational smallest = demand[others.min()];
      for (LinkId j : others) smallest = min(smallest, demand[j]);
      lhs += smallest;
    }
    if (lhs > Rational(1)) out.holds = false;
    out.per_link[static_cast<std::size_t>(i)] = std::move(lhs);
  }
  return out;
}

ConditionCheck check_theorem3(const Hypergraph& h, const WeightMatrix& w, const DemandVector& demand) {
  require_size(h, demand);
  if (auto error = validate_w(h, w)) throw InvalidWeightMatrix(*error);
  return weighted_check(w, demand);
}

ConditionCheck check_corollary4(const Hypergraph& h, const DemandVector& demand) {
  require_size(h, demand);
  return weighted_check(delta_matrix(h), demand);
}

GreedyResult greedy_schedule(const Hypergraph& h, const WeightMatrix& w, const DemandVector& demand,
                             const Permutation& order, const std::function<void(const GreedyStep&)>& observer) {
  require_size(h, demand);
  if (order.size() != h.num_links()) throw std::invalid_argument("processing order has the wrong length");
  if (auto error = validate_w(h, w)) throw InvalidWeightMatrix(*error);

  GreedyResult result;
  result.assigned.assign(static_cast<std::size_t>(h.num_links()), IntervalSet());
  LinkSet placed;
  for (int step = 0; step < h.num_links(); ++step) {
    const LinkId link = order(step);
    if (observer) observer(GreedyStep{step, link, result.assigned});

    const IntervalSet blocked = blocked_time(h, result.assigned, link, placed);
    Rational available = Rational(1) - blocked.measure();
    if (available < demand[link]) {
      result.stuck = ScheduleStuck{link, demand[link], std::move(available)};
      return result;
    }
    result.assigned[static_cast<std::size_t>(link)] = earliest_fit(demand[link], blocked);
    placed.insert(link);
  }
  return result;
}

Lemma2Sides lemma2_check(const std::vector<IntervalSet>& assigned, const Hypergraph& h, const WeightMatrix& w,
                         const DemandVector& demand, const Permutation& order, int step) {
  require_size(h, demand);
  LinkSet placed;
  for (int k = 0; k < step; ++k) placed.insert(order(k));
  const LinkId link = order(step);

  Lemma2Sides sides;
  sides.lhs = blocked_time(h, assigned, link, placed).measure();
  for (LinkId j = 0; j < h.num_links(); ++j) {
    if (j != link && !w(link, j).is_zero()) sides.rhs += w(link, j) * demand[j];
  }
  return sides;
}

Schedule intervals_to_schedule(const std::vector<IntervalSet>& assigned) {
  std::vector<Rational> cuts{Rational(0), Rational(1)};
  for (const auto& set : assigned) {
    for (const auto& p : set.intervals()) {
      cuts.push_back(p.lo);
      cuts.push_back(p.hi);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  Schedule schedule;
  std::map<std::uint64_t, std::size_t> slot;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    LinkSet active;
    for (std::size_t i = 0; i < assigned.size(); ++i) {
      if (assigned[i].contains(cuts[k])) active.insert(static_cast<LinkId>(i));
    }
    if (active.empty()) continue;
    const Rational length = cuts[k + 1] - cuts[k];
    auto [it, inserted] = slot.try_emplace(active.bits(), schedule.entries.size());
    if (inserted) {
      schedule.entries.push_back({active, length});
    } else {
      schedule.entries[it->second].duration += length;
    }
  }
  return schedule;
}

}  // namespace hypersched

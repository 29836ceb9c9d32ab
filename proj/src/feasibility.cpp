#include "hypersched/feasibility.hpp"

#include <algorithm>

#include "hypersched/lp.hpp"

namespace hypersched {

DemandVector::DemandVector(std::vector<Rational> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].sign() < 0 || values_[i] > Rational(1)) {
      throw std::invalid_argument("demand of link " + std::to_string(i + 1) + " is " + values_[i].to_string() +
                                  ", outside [0, 1]");
    }
  }
}

DemandVector DemandVector::characteristic(int n, LinkSet links) {
  std::vector<Rational> values(static_cast<std::size_t>(n));
  for (LinkId i : links) values[static_cast<std::size_t>(i)] = 1;
  return DemandVector(std::move(values));
}

bool DemandVector::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v.is_zero(); });
}

Rational Schedule::total_duration() const {
  Rational total;
  for (const auto& e : entries) total += e.duration;
  return total;
}

Rational Schedule::coverage(LinkId link) const {
  Rational covered;
  for (const auto& e : entries) {
    if (e.links.contains(link)) covered += e.duration;
  }
  return covered;
}

IncidenceMatrix incidence_matrix(const Hypergraph& h, const SizeLimits& limits) {
  return IncidenceMatrix{enumerate_maximal_independent_sets(h, limits), h.num_links()};
}

FractionalChromatic fractional_chromatic_number_over(const std::vector<LinkSet>& columns,
                                                     const DemandVector& demand) {
  LinearProgram lp(columns.size());
  std::fill(lp.objective.begin(), lp.objective.end(), Rational(1));
  for (LinkId i = 0; i < demand.size(); ++i) {
    std::vector<Rational> row(columns.size());
    for (std::size_t k = 0; k < columns.size(); ++k) {
      if (columns[k].contains(i)) row[k] = 1;
    }
    lp.add_constraint(std::move(row), Relation::kGreaterEqual, demand[i]);
  }
  const LpSolution solution = solve_lp(lp, Sense::kMinimize);
  if (solution.status != LpStatus::kOptimal) {
    // Only reachable when some demanded link is in no column.
    throw std::invalid_argument("demand cannot be covered by the given independent sets");
  }
  FractionalChromatic out;
  out.value = solution.value;
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (solution.assignment[k].sign() > 0) out.witness.entries.push_back({columns[k], solution.assignment[k]});
  }
  return out;
}

FractionalChromatic fractional_chromatic_number(const Hypergraph& h, const DemandVector& demand,
                                                const SizeLimits& limits) {
  if (demand.size() != h.num_links()) {
    throw std::invalid_argument("demand has " + std::to_string(demand.size()) + " entries for " +
                                std::to_string(h.num_links()) + " links");
  }
  return fractional_chromatic_number_over(incidence_matrix(h, limits).columns, demand);
}

bool is_feasible(const Hypergraph& h, const DemandVector& demand, const SizeLimits& limits) {
  return fractional_chromatic_number(h, demand, limits).value <= Rational(1);
}

std::string ScheduleError::message() const {
  switch (kind) {
    case Kind::kNotIndependent:
      return "set {" + format_one_based(links) + "} is not independent";
    case Kind::kDurationExceedsOne:
      return "total duration " + covered.to_string() + " exceeds the allowed duration";
    case Kind::kDemandUnmet:
      return "link " + std::to_string(link + 1) + " covered for " + covered.to_string() + ", requires " +
             required.to_string();
    case Kind::kNegativeDuration:
      return "set {" + format_one_based(links) + "} has a negative duration";
    case Kind::kSizeMismatch:
      return "demand length does not match the number of links";
  }
  return "invalid schedule";
}

std::optional<ScheduleError> validate_schedule(const Hypergraph& h, const Schedule& schedule,
                                               const DemandVector& demand, const Rational& max_duration) {
  using Kind = ScheduleError::Kind;
  if (demand.size() != h.num_links()) return ScheduleError{Kind::kSizeMismatch, {}, -1, {}, {}};
  for (const auto& e : schedule.entries) {
    if (!e.links.is_subset_of(h.all_links()) || !h.is_independent(e.links)) {
      return ScheduleError{Kind::kNotIndependent, e.links, -1, {}, {}};
    }
    if (e.duration.sign() < 0) return ScheduleError{Kind::kNegativeDuration, e.links, -1, {}, {}};
  }
  const Rational total = schedule.total_duration();
  if (total > max_duration) return ScheduleError{Kind::kDurationExceedsOne, {}, -1, total, max_duration};
  for (LinkId i = 0; i < h.num_links(); ++i) {
    Rational covered = schedule.coverage(i);
    if (covered < demand[i]) return ScheduleError{Kind::kDemandUnmet, {}, i, std::move(covered), demand[i]};
  }
  return std::nullopt;
}

}  // namespace hypersched

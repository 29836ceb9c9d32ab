#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypersched/hypergraph.hpp"
#include "hypersched/rational.hpp"

namespace hypersched {

/// Per-link demanded fraction of unit time, each in [0, 1].
class DemandVector {
 public:
  DemandVector() = default;
  /// Throws std::invalid_argument if a value lies outside [0, 1].
  explicit DemandVector(std::vector<Rational> values);
  static DemandVector zeros(int n) { return DemandVector(std::vector<Rational>(static_cast<std::size_t>(n))); }
  /// 0/1 vector of `links` over n links.
  static DemandVector characteristic(int n, LinkSet links);

  int size() const { return static_cast<int>(values_.size()); }
  const Rational& operator[](LinkId i) const { return values_[static_cast<std::size_t>(i)]; }
  const std::vector<Rational>& values() const { return values_; }
  bool is_zero() const;

  friend bool operator==(const DemandVector&, const DemandVector&) = default;

 private:
  std::vector<Rational> values_;
};

struct ScheduleEntry {
  LinkSet links;
  Rational duration;

  friend bool operator==(const ScheduleEntry&, const ScheduleEntry&) = default;
};

/// Durations assigned to independent sets.
struct Schedule {
  std::vector<ScheduleEntry> entries;

  Rational total_duration() const;
  /// Sum of durations of the entries containing `link`.
  Rational coverage(LinkId link) const;
};

/// 0/1 link-by-set matrix over the maximal independent sets.
struct IncidenceMatrix {
  std::vector<LinkSet> columns;
  int num_links = 0;

  int num_columns() const { return static_cast<int>(columns.size()); }
  int operator()(LinkId link, int column) const {
    return columns[static_cast<std::size_t>(column)].contains(link) ? 1 : 0;
  }
};

IncidenceMatrix incidence_matrix(const Hypergraph& h, const SizeLimits& limits = {});

struct FractionalChromatic {
  Rational value;
  Schedule witness;
};

/// Minimum total duration of a schedule meeting the demand, as an exact LP
/// over maximal-independent-set columns. The witness lists only sets with a
/// positive duration, in column order.
FractionalChromatic fractional_chromatic_number(const Hypergraph& h, const DemandVector& demand,
                                                const SizeLimits& limits = {});

/// Same LP, but with an explicit column list (any independent sets).
FractionalChromatic fractional_chromatic_number_over(const std::vector<LinkSet>& columns,
                                                     const DemandVector& demand);

bool is_feasible(const Hypergraph& h, const DemandVector& demand, const SizeLimits& limits = {});

struct ScheduleError {
  enum class Kind { kNotIndependent, kDurationExceedsOne, kDemandUnmet, kNegativeDuration, kSizeMismatch };

  Kind kind;
  LinkSet links;      // kNotIndependent, kNegativeDuration
  LinkId link = -1;   // kDemandUnmet
  Rational covered;   // kDemandUnmet: covered; kDurationExceedsOne: total
  Rational required;  // kDemandUnmet

  std::string message() const;
};

/// Checks that every set is independent, durations are nonnegative, the
/// total duration is at most `max_duration`, and each link is covered.
std::optional<ScheduleError> validate_schedule(const Hypergraph& h, const Schedule& schedule,
                                               const DemandVector& demand,
                                               const Rational& max_duration = Rational(1));

}  // namespace hypersched

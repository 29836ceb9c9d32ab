#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypersched/rational.hpp"

namespace hypersched {

/// Half-open interval [lo, hi) with lo < hi.
struct Interval {
  Rational lo;
  Rational hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of disjoint half-open subintervals of [0, 1). Intervals are
/// kept sorted, and touching intervals are merged, so equal sets compare equal.
class IntervalSet {
 public:
  IntervalSet() = default;
  /// Normalizes arbitrary (possibly overlapping, possibly empty) pieces.
  /// Throws std::invalid_argument for endpoints outside [0, 1].
  explicit IntervalSet(std::vector<Interval> pieces);
  static IntervalSet of(Rational lo, Rational hi);
  static IntervalSet unit() { return of(0, 1); }

  /// Inverse of to_string: `∅` or `[a,b) ∪ [c,d)`.
  static IntervalSet parse(std::string_view text);

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  Rational measure() const;
  bool contains(const Rational& x) const;

  std::string to_string() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> intervals_;
};

IntervalSet interval_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet interval_intersect(const IntervalSet& a, const IntervalSet& b);
Rational interval_measure(const IntervalSet& a);
/// [0, 1) minus `a`.
IntervalSet interval_complement_in_unit(const IntervalSet& a);

class InsufficientRoom : public std::runtime_error {
 public:
  InsufficientRoom(Rational length, Rational available);
  const Rational& length() const { return length_; }
  const Rational& available() const { return available_; }

 private:
  Rational length_;
  Rational available_;
};

/// Leftmost subset of [0, 1) outside `forbidden` with measure `length`.
/// Throws InsufficientRoom when the free measure is smaller than `length`.
IntervalSet earliest_fit(const Rational& length, const IntervalSet& forbidden);

}  // namespace hypersched

#include "hypersched/interval_set.hpp"

#include <algorithm>

namespace hypersched {

IntervalSet::IntervalSet(std::vector<Interval> pieces) {
  const Rational zero;
  const Rational one(1);
  std::erase_if(pieces, [](const Interval& p) { return !(p.lo < p.hi); });
  for (const auto& p : pieces) {
    if (p.lo < zero || p.hi > one) {
      throw std::invalid_argument("interval [" + p.lo.to_string() + "," + p.hi.to_string() + ") leaves [0,1]");
    }
  }
  std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (auto& p : pieces) {
    if (!intervals_.empty() && p.lo <= intervals_.back().hi) {
      if (p.hi > intervals_.back().hi) intervals_.back().hi = std::move(p.hi);
    } else {
      intervals_.push_back(std::move(p));
    }
  }
}

IntervalSet IntervalSet::of(Rational lo, Rational hi) { return IntervalSet({Interval{std::move(lo), std::move(hi)}}); }

IntervalSet IntervalSet::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "∅") return IntervalSet();
  std::vector<Interval> pieces;
  constexpr std::string_view kCup = "∪";
  for (;;) {
    const auto cup = text.find(kCup);
    const std::string_view piece = trim(text.substr(0, cup));
    const auto comma = piece.find(',');
    if (piece.size() < 5 || piece.front() != '[' || piece.back() != ')' || comma == std::string_view::npos) {
      throw std::invalid_argument("malformed interval '" + std::string(piece) + "'");
    }
    Rational lo = Rational::parse(piece.substr(1, comma - 1));
    Rational hi = Rational::parse(piece.substr(comma + 1, piece.size() - comma - 2));
    if (!(lo < hi)) throw std::invalid_argument("empty interval '" + std::string(piece) + "'");
    pieces.push_back({std::move(lo), std::move(hi)});
    if (cup == std::string_view::npos) break;
    text = text.substr(cup + kCup.size());
  }
  return IntervalSet(std::move(pieces));
}

Rational IntervalSet::measure() const {
  Rational total;
  for (const auto& p : intervals_) total += p.hi - p.lo;
  return total;
}

bool IntervalSet::contains(const Rational& x) const {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [&](const Interval& p) { return p.lo <= x && x < p.hi; });
}

std::string IntervalSet::to_string() const {
  if (intervals_.empty()) return "∅";
  std::string out;
  for (const auto& p : intervals_) {
    if (!out.empty()) out += " ∪ ";
    out += "[" + p.lo.to_string() + "," + p.hi.to_string() + ")";
  }
  return out;
}

IntervalSet interval_union(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> pieces = a.intervals();
  pieces.insert(pieces.end(), b.intervals().begin(), b.intervals().end());
  return IntervalSet(std::move(pieces));
}

IntervalSet interval_intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> pieces;
  const auto& x = a.intervals();
  const auto& y = b.intervals();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() && j < y.size()) {
    const Rational& lo = max(x[i].lo, y[j].lo);
    const Rational& hi = min(x[i].hi, y[j].hi);
    if (lo < hi) pieces.push_back({lo, hi});
    if (x[i].hi < y[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return IntervalSet(std::move(pieces));
}

Rational interval_measure(const IntervalSet& a) { return a.measure(); }

IntervalSet interval_complement_in_unit(const IntervalSet& a) {
  std::vector<Interval> pieces;
  Rational cursor;
  for (const auto& p : a.intervals()) {
    if (cursor < p.lo) pieces.push_back({cursor, p.lo});
    cursor = p.hi;
  }
  if (cursor < Rational(1)) pieces.push_back({cursor, Rational(1)});
  return IntervalSet(std::move(pieces));
}

InsufficientRoom::InsufficientRoom(Rational length, Rational available)
    : std::runtime_error("need " + length.to_string() + " of free time, only " + available.to_string() +
                         " available"),
      length_(std::move(length)),
      available_(std::move(available)) {}

IntervalSet earliest_fit(const Rational& length, const IntervalSet& forbidden) {
  const IntervalSet free = interval_complement_in_unit(forbidden);
  Rational available = free.measure();
  if (available < length) throw InsufficientRoom(length, std::move(available));

  std::vector<Interval> pieces;
  Rational remaining = length;
  for (const auto& p : free.intervals()) {
    if (remaining.sign() <= 0) break;
    Rational width = p.hi - p.lo;
    if (width <= remaining) {
      pieces.push_back(p);
      remaining -= width;
    } else {
      pieces.push_back({p.lo, p.lo + remaining});
      remaining = 0;
    }
  }
  return IntervalSet(std::move(pieces));
}

}  // namespace hypersched

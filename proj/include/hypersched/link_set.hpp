#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace hypersched {

using LinkId = int;

/// Hard representational cap on the number of links: sets are 64-bit masks.
inline constexpr int kMaxLinks = 64;

/// Set of links stored as a bitmask. Iteration yields members in ascending
/// order. Ordering is lexicographic on the ascending member lists, so the
/// empty set sorts first and {0,1,2} sorts before {0,2}.
class LinkSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = LinkId;
    using difference_type = std::ptrdiff_t;
    using pointer = const LinkId*;
    using reference = LinkId;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    LinkId operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(iterator a, iterator b) { return a.rest_ == b.rest_; }

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr LinkSet() = default;
  constexpr LinkSet(std::initializer_list<LinkId> ids) {
    for (LinkId id : ids) bits_ |= bit(id);
  }
  static constexpr LinkSet from_bits(std::uint64_t bits) {
    LinkSet s;
    s.bits_ = bits;
    return s;
  }
  /// The set {0, ..., n-1}.
  static constexpr LinkSet first_n(int n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static LinkSet from_ids(const std::vector<LinkId>& ids) {
    LinkSet s;
    for (LinkId id : ids) s.insert(id);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(LinkId id) const { return (bits_ & bit(id)) != 0; }
  constexpr bool is_subset_of(LinkSet other) const { return (bits_ & ~other.bits_) == 0; }
  /// Smallest member; only meaningful when non-empty.
  constexpr LinkId min() const { return std::countr_zero(bits_); }
  /// Largest member, or -1 when empty.
  constexpr LinkId max() const { return 63 - std::countl_zero(bits_); }

  constexpr void insert(LinkId id) { bits_ |= bit(id); }
  constexpr void erase(LinkId id) { bits_ &= ~bit(id); }
  constexpr LinkSet with(LinkId id) const { return from_bits(bits_ | bit(id)); }
  constexpr LinkSet without(LinkId id) const { return from_bits(bits_ & ~bit(id)); }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }
  std::vector<LinkId> to_vector() const { return {begin(), end()}; }

  friend constexpr LinkSet operator|(LinkSet a, LinkSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr LinkSet operator&(LinkSet a, LinkSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr LinkSet operator-(LinkSet a, LinkSet b) { return from_bits(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(LinkSet a, LinkSet b) = default;

  friend constexpr std::strong_ordering operator<=>(LinkSet a, LinkSet b) {
    // Lexicographic on ascending member lists. Below the lowest differing
    // link both lists agree; the set holding that link is smaller unless the
    // other list has no further members (and is therefore a prefix).
    if (a.bits_ == b.bits_) return std::strong_ordering::equal;
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    const std::uint64_t low = diff & (~diff + 1);
    const std::uint64_t tail = ~(low - 1);
    if (a.bits_ & low) {
      return (b.bits_ & tail) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return (a.bits_ & tail) != 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }

 private:
  static constexpr std::uint64_t bit(LinkId id) { return std::uint64_t{1} << id; }
  std::uint64_t bits_ = 0;
};

}  // namespace hypersched

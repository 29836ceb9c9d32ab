#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypersched/link_set.hpp"

namespace hypersched {

/// Configurable caps on exponential and factorial work.
struct SizeLimits {
  int enumeration = 20;
  int automorphisms = 10;

  /// Defaults, with both caps replaced by HS_SIZE_LIMIT when it is set to a
  /// positive integer.
  static SizeLimits from_environment();
};

class SizeLimitExceeded : public std::runtime_error {
 public:
  SizeLimitExceeded(int num_links, int limit);
  int num_links() const { return num_links_; }
  int limit() const { return limit_; }

 private:
  int num_links_;
  int limit_;
};

struct HypergraphError {
  enum class Kind { kBadLinkCount, kEdgeTooSmall, kNotAntichain, kLinkOutOfRange };

  Kind kind;
  std::vector<LinkId> edge;
  std::vector<LinkId> other_edge;  // kNotAntichain: the superset
  LinkId link = -1;                // kLinkOutOfRange: offending id

  std::string message() const;
};

class InvalidHypergraph : public std::invalid_argument {
 public:
  explicit InvalidHypergraph(HypergraphError error);
  const HypergraphError& error() const { return error_; }

 private:
  HypergraphError error_;
};

/// Checks the conflict-hypergraph invariants on raw input: 1 <= N <= 64,
/// every edge has at least two distinct links, all ids lie in [0, N), and
/// no edge is contained in (or equal to) another.
std::optional<HypergraphError> validate(int num_links, const std::vector<std::vector<LinkId>>& edges);

/// Conflict hypergraph on links 0..N-1 whose edges are the minimal sets of
/// links that cannot be active together. Immutable once built.
class Hypergraph {
 public:
  /// Throws InvalidHypergraph if `validate` rejects the input.
  static Hypergraph create(int num_links, const std::vector<std::vector<LinkId>>& edges);

  /// Keeps only the inclusion-minimal edges (deduplicated, first occurrence
  /// order). Throws InvalidHypergraph for singleton or out-of-range edges.
  static Hypergraph minimalize(int num_links, const std::vector<std::vector<LinkId>>& raw_edges);

  int num_links() const { return num_links_; }
  LinkSet all_links() const { return LinkSet::first_n(num_links_); }
  const std::vector<LinkSet>& edges() const { return edges_; }

  /// Links sharing at least one edge with `link`.
  LinkSet neighbors(LinkId link) const { return neighbors_[static_cast<std::size_t>(link)]; }

  /// Edges containing `link`, in edge-list order.
  std::vector<LinkSet> edges_containing(LinkId link) const;
  const std::vector<int>& edge_indices_containing(LinkId link) const {
    return incident_[static_cast<std::size_t>(link)];
  }

  /// True iff no edge is a subset of `links`.
  bool is_independent(LinkSet links) const;

  /// True iff `links` is independent given `base` is, i.e. no edge containing
  /// `added` lies inside base + added.
  bool can_add(LinkSet base, LinkId added) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.num_links_ == b.num_links_ && a.edges_ == b.edges_;
  }

 private:
  Hypergraph(int num_links, std::vector<LinkSet> edges);

  int num_links_;
  std::vector<LinkSet> edges_;
  std::vector<LinkSet> neighbors_;
  std::vector<std::vector<int>> incident_;
};

/// Visits, in lexicographic order, every J within `candidates` such that
/// J + `base` is independent. `base` must be independent and disjoint from
/// `candidates`. The visitor receives J alone.
template <typename Visitor>
void for_each_independent_subset(const Hypergraph& h, LinkSet candidates, LinkSet base, Visitor&& visit) {
  const std::vector<LinkId> order = candidates.to_vector();
  auto recurse = [&](auto& self, LinkSet chosen, std::size_t next) -> void {
    visit(chosen);
    for (std::size_t k = next; k < order.size(); ++k) {
      if (h.can_add(chosen | base, order[k])) self(self, chosen.with(order[k]), k + 1);
    }
  };
  recurse(recurse, LinkSet{}, 0);
}

/// All independent sets including the empty set, lexicographic order.
/// Throws SizeLimitExceeded when N exceeds `limits.enumeration`.
std::vector<LinkSet> enumerate_independent_sets(const Hypergraph& h, const SizeLimits& limits = {});

/// Inclusion-maximal independent sets, lexicographic order.
std::vector<LinkSet> enumerate_maximal_independent_sets(const Hypergraph& h, const SizeLimits& limits = {});

/// Bijection on [0, N): `image()[i]` is where link i goes.
class Permutation {
 public:
  static Permutation identity(int n);
  /// Throws std::invalid_argument unless `image` is a bijection on [0, size).
  explicit Permutation(std::vector<LinkId> image);

  int size() const { return static_cast<int>(image_.size()); }
  LinkId operator()(LinkId link) const { return image_[static_cast<std::size_t>(link)]; }
  LinkSet apply(LinkSet links) const;
  const std::vector<LinkId>& image() const { return image_; }

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<LinkId> image_;
};

/// Every permutation mapping the edge family onto itself, found by
/// backtracking over candidate images with matching edge-size profiles.
/// Sorted by image vector. Throws SizeLimitExceeded above `limits.automorphisms`.
std::vector<Permutation> automorphisms(const Hypergraph& h, const SizeLimits& limits = {});

/// Renders a set with 1-based labels separated by spaces.
std::string format_one_based(LinkSet links);

}  // namespace hypersched

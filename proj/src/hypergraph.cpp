#include "hypersched/hypergraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <unordered_set>

namespace hypersched {
namespace {

std::string braces(const std::vector<LinkId>& ids) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < ids.size(); ++k) os << (k ? "," : "") << ids[k];
  os << '}';
  return os.str();
}

std::vector<LinkId> sorted_unique(std::vector<LinkId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

// Shared by validate and minimalize: link count, ranges and edge sizes.
std::optional<HypergraphError> check_edges_shape(int num_links, const std::vector<std::vector<LinkId>>& edges) {
  if (num_links < 1 || num_links > kMaxLinks) {
    return HypergraphError{HypergraphError::Kind::kBadLinkCount, {}, {}, num_links};
  }
  for (const auto& edge : edges) {
    for (LinkId id : edge) {
      if (id < 0 || id >= num_links) return HypergraphError{HypergraphError::Kind::kLinkOutOfRange, edge, {}, id};
    }
    if (sorted_unique(edge).size() < 2) return HypergraphError{HypergraphError::Kind::kEdgeTooSmall, edge, {}, -1};
  }
  return std::nullopt;
}

}  // namespace

SizeLimits SizeLimits::from_environment() {
  SizeLimits limits;
  if (const char* raw = std::getenv("HS_SIZE_LIMIT")) {
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end != raw && *end == '\0' && value > 0) {
      const int capped = static_cast<int>(std::min<long>(value, kMaxLinks));
      limits.enumeration = capped;
      limits.automorphisms = capped;
    }
  }
  return limits;
}

SizeLimitExceeded::SizeLimitExceeded(int num_links, int limit)
    : std::runtime_error("hypergraph has " + std::to_string(num_links) + " links, size limit is " +
                         std::to_string(limit)),
      num_links_(num_links),
      limit_(limit) {}

std::string HypergraphError::message() const {
  switch (kind) {
    case Kind::kBadLinkCount:
      return "link count " + std::to_string(link) + " outside [1, " + std::to_string(kMaxLinks) + "]";
    case Kind::kEdgeTooSmall:
      return "edge " + braces(edge) + " has fewer than two links";
    case Kind::kNotAntichain:
      return "edge " + braces(edge) + " is contained in edge " + braces(other_edge);
    case Kind::kLinkOutOfRange:
      return "edge " + braces(edge) + " refers to link " + std::to_string(link) + " outside the link range";
  }
  return "invalid hypergraph";
}

InvalidHypergraph::InvalidHypergraph(HypergraphError error)
    : std::invalid_argument(error.message()), error_(std::move(error)) {}

std::optional<HypergraphError> validate(int num_links, const std::vector<std::vector<LinkId>>& edges) {
  if (auto shape = check_edges_shape(num_links, edges)) return shape;
  std::vector<LinkSet> sets;
  sets.reserve(edges.size());
  for (const auto& edge : edges) sets.push_back(LinkSet::from_ids(edge));
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = 0; b < sets.size(); ++b) {
      if (a == b || !sets[a].is_subset_of(sets[b])) continue;
      // Equal edges are reported once, smaller index as the contained one.
      if (sets[a] == sets[b] && a > b) continue;
      return HypergraphError{HypergraphError::Kind::kNotAntichain, sorted_unique(edges[a]), sorted_unique(edges[b]),
                             -1};
    }
  }
  return std::nullopt;
}

Hypergraph Hypergraph::create(int num_links, const std::vector<std::vector<LinkId>>& edges) {
  if (auto error = validate(num_links, edges)) throw InvalidHypergraph(*error);
  std::vector<LinkSet> sets;
  sets.reserve(edges.size());
  for (const auto& edge : edges) sets.push_back(LinkSet::from_ids(edge));
  return Hypergraph(num_links, std::move(sets));
}

Hypergraph Hypergraph::minimalize(int num_links, const std::vector<std::vector<LinkId>>& raw_edges) {
  if (auto error = check_edges_shape(num_links, raw_edges)) throw InvalidHypergraph(*error);
  std::vector<LinkSet> sets;
  for (const auto& edge : raw_edges) {
    const LinkSet s = LinkSet::from_ids(edge);
    if (std::find(sets.begin(), sets.end(), s) == sets.end()) sets.push_back(s);
  }
  std::vector<LinkSet> kept;
  for (const LinkSet s : sets) {
    const bool has_proper_subset = std::any_of(sets.begin(), sets.end(), [&](LinkSet t) {
      return t != s && t.is_subset_of(s);
    });
    if (!has_proper_subset) kept.push_back(s);
  }
  return Hypergraph(num_links, std::move(kept));
}

Hypergraph::Hypergraph(int num_links, std::vector<LinkSet> edges)
    : num_links_(num_links),
      edges_(std::move(edges)),
      neighbors_(static_cast<std::size_t>(num_links)),
      incident_(static_cast<std::size_t>(num_links)) {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    for (LinkId i : edges_[e]) {
      neighbors_[static_cast<std::size_t>(i)] = neighbors_[static_cast<std::size_t>(i)] | edges_[e].without(i);
      incident_[static_cast<std::size_t>(i)].push_back(static_cast<int>(e));
    }
  }
}

std::vector<LinkSet> Hypergraph::edges_containing(LinkId link) const {
  std::vector<LinkSet> out;
  for (int e : edge_indices_containing(link)) out.push_back(edges_[static_cast<std::size_t>(e)]);
  return out;
}

bool Hypergraph::is_independent(LinkSet links) const {
  return std::none_of(edges_.begin(), edges_.end(), [&](LinkSet e) { return e.is_subset_of(links); });
}

bool Hypergraph::can_add(LinkSet base, LinkId added) const {
  const LinkSet grown = base.with(added);
  for (int e : edge_indices_containing(added)) {
    if (edges_[static_cast<std::size_t>(e)].is_subset_of(grown)) return false;
  }
  return true;
}

std::vector<LinkSet> enumerate_independent_sets(const Hypergraph& h, const SizeLimits& limits) {
  if (h.num_links() > limits.enumeration) throw SizeLimitExceeded(h.num_links(), limits.enumeration);
  std::vector<LinkSet> out;
  for_each_independent_subset(h, h.all_links(), LinkSet{}, [&](LinkSet s) { out.push_back(s); });
  return out;
}

std::vector<LinkSet> enumerate_maximal_independent_sets(const Hypergraph& h, const SizeLimits& limits) {
  if (h.num_links() > limits.enumeration) throw SizeLimitExceeded(h.num_links(), limits.enumeration);
  std::vector<LinkSet> out;
  const LinkSet all = h.all_links();
  for_each_independent_subset(h, all, LinkSet{}, [&](LinkSet s) {
    for (LinkId j : all - s) {
      if (h.can_add(s, j)) return;
    }
    out.push_back(s);
  });
  return out;
}

Permutation Permutation::identity(int n) {
  std::vector<LinkId> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(image));
}

Permutation::Permutation(std::vector<LinkId> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (LinkId v : image_) {
    if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of [0, " + std::to_string(image_.size()) + ")");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

LinkSet Permutation::apply(LinkSet links) const {
  LinkSet out;
  for (LinkId i : links) out.insert((*this)(i));
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::vector<LinkId> image(b.image_.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = a(b.image_[i]);
  return Permutation(std::move(image));
}

std::vector<Permutation> automorphisms(const Hypergraph& h, const SizeLimits& limits) {
  const int n = h.num_links();
  if (n > limits.automorphisms) throw SizeLimitExceeded(n, limits.automorphisms);

  // Edge-membership profile: sorted sizes of the edges containing each link.
  std::vector<std::vector<int>> profile(static_cast<std::size_t>(n));
  for (LinkId i = 0; i < n; ++i) {
    for (LinkSet e : h.edges_containing(i)) profile[static_cast<std::size_t>(i)].push_back(e.size());
    std::sort(profile[static_cast<std::size_t>(i)].begin(), profile[static_cast<std::size_t>(i)].end());
  }
  std::unordered_set<std::uint64_t> edge_bits;
  for (LinkSet e : h.edges()) edge_bits.insert(e.bits());
  // Edges that become fully mapped once link i is placed.
  std::vector<std::vector<LinkSet>> completed_at(static_cast<std::size_t>(n));
  for (LinkSet e : h.edges()) completed_at[static_cast<std::size_t>(e.max())].push_back(e);

  std::vector<Permutation> out;
  std::vector<LinkId> image(static_cast<std::size_t>(n), -1);
  LinkSet used;
  auto mapped = [&](LinkSet s) {
    LinkSet t;
    for (LinkId i : s) t.insert(image[static_cast<std::size_t>(i)]);
    return t;
  };
  auto place = [&](auto& self, LinkId i) -> void {
    if (i == n) {
      out.emplace_back(image);
      return;
    }
    for (LinkId target = 0; target < n; ++target) {
      if (used.contains(target) || profile[static_cast<std::size_t>(target)] != profile[static_cast<std::size_t>(i)]) {
        continue;
      }
      bool consistent = true;
      for (LinkId k = 0; k < i && consistent; ++k) {
        consistent = h.neighbors(i).contains(k) == h.neighbors(target).contains(image[static_cast<std::size_t>(k)]);
      }
      if (!consistent) continue;
      image[static_cast<std::size_t>(i)] = target;
      for (LinkSet e : completed_at[static_cast<std::size_t>(i)]) {
        if (!edge_bits.contains(mapped(e).bits())) {
          consistent = false;
          break;
        }
      }
      if (consistent) {
        used.insert(target);
        self(self, i + 1);
        used.erase(target);
      }
      image[static_cast<std::size_t>(i)] = -1;
    }
  };
  place(place, 0);
  return out;
}

std::string format_one_based(LinkSet links) {
  std::string out;
  for (LinkId i : links) {
    if (!out.empty()) out += ' ';
    out += std::to_string(i + 1);
  }
  return out;
}

}  // namespace hypersched

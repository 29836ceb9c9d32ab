#pragma once

// Golden hypergraphs, random generators and brute-force oracles shared by
// the unit and acceptance suites. The oracles deliberately avoid the
// library's enumeration and search routines.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "hypersched/feasibility.hpp"
#include "hypersched/greedy.hpp"
#include "hypersched/hypergraph.hpp"
#include "hypersched/lp.hpp"
#include "hypersched/rational.hpp"

namespace hypersched::testing {

inline Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

inline DemandVector demand_of(std::initializer_list<Rational> values) {
  return DemandVector(std::vector<Rational>(values));
}

/// One edge {0,1,2}: every pair may be active, not all three.
inline Hypergraph triangle() { return Hypergraph::create(3, {{0, 1, 2}}); }

/// Two 4-edges sharing link 0: {0,1,2,3} and {0,4,5,6}.
inline Hypergraph two_star() { return Hypergraph::create(7, {{0, 1, 2, 3}, {0, 4, 5, 6}}); }

inline Hypergraph path3() { return Hypergraph::create(3, {{0, 1}, {1, 2}}); }

/// (1/2, 1, 1, 1/2, 1, 1, 1/2): feasible on two_star() yet above Delta.
inline DemandVector two_star_counterexample_demand() {
  return demand_of({q(1, 2), q(1), q(1), q(1, 2), q(1), q(1), q(1, 2)});
}

struct RandomHypergraphOptions {
  int min_links = 2;
  int max_links = 10;
  int max_edges = 6;
  int min_edge_size = 2;
  int max_edge_size = 5;
};

inline Hypergraph random_hypergraph(std::mt19937_64& rng, const RandomHypergraphOptions& opt = {}) {
  const int n = std::uniform_int_distribution<int>(opt.min_links, opt.max_links)(rng);
  const int num_edges = n < opt.min_edge_size ? 0 : std::uniform_int_distribution<int>(0, opt.max_edges)(rng);
  std::vector<std::vector<LinkId>> edges;
  std::vector<LinkId> links(static_cast<std::size_t>(n));
  std::iota(links.begin(), links.end(), 0);
  for (int e = 0; e < num_edges; ++e) {
    const int size = std::uniform_int_distribution<int>(opt.min_edge_size, std::min(opt.max_edge_size, n))(rng);
    std::shuffle(links.begin(), links.end(), rng);
    edges.emplace_back(links.begin(), links.begin() + size);
  }
  return Hypergraph::minimalize(n, edges);
}

/// Entries k/d with d in [1, 12] drawn per link.
inline DemandVector random_demand(std::mt19937_64& rng, int n) {
  std::vector<Rational> values;
  for (int i = 0; i < n; ++i) {
    const int d = std::uniform_int_distribution<int>(1, 12)(rng);
    const int k = std::uniform_int_distribution<int>(0, d)(rng);
    values.push_back(q(k, d));
  }
  return DemandVector(std::move(values));
}

inline DemandVector scaled(const DemandVector& demand, const Rational& factor) {
  std::vector<Rational> values;
  for (const auto& v : demand.values()) values.push_back(v * factor);
  return DemandVector(std::move(values));
}

inline Permutation random_order(std::mt19937_64& rng, int n) {
  std::vector<LinkId> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  std::shuffle(image.begin(), image.end(), rng);
  return Permutation(std::move(image));
}

// ---- brute-force oracles ----

inline bool brute_independent(const Hypergraph& h, std::uint64_t mask) {
  for (LinkSet e : h.edges()) {
    if ((e.bits() & mask) == e.bits()) return false;
  }
  return true;
}

/// Every subset of [0, N) that contains no edge, in numeric mask order.
inline std::vector<LinkSet> brute_independent_sets(const Hypergraph& h) {
  std::vector<LinkSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << h.num_links()); ++mask) {
    if (brute_independent(h, mask)) out.push_back(LinkSet::from_bits(mask));
  }
  return out;
}

/// All permutations of [0, N) preserving the edge family, by exhaustive
/// std::next_permutation.
inline std::vector<std::vector<LinkId>> brute_automorphisms(const Hypergraph& h) {
  std::vector<LinkId> image(static_cast<std::size_t>(h.num_links()));
  std::iota(image.begin(), image.end(), 0);
  std::vector<std::uint64_t> edges;
  for (LinkSet e : h.edges()) edges.push_back(e.bits());
  std::sort(edges.begin(), edges.end());
  std::vector<std::vector<LinkId>> out;
  do {
    std::vector<std::uint64_t> mapped;
    for (LinkSet e : h.edges()) {
      std::uint64_t m = 0;
      for (LinkId i : e) m |= std::uint64_t{1} << image[static_cast<std::size_t>(i)];
      mapped.push_back(m);
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped == edges) out.push_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

/// Induced star number of a graph given as 2-uniform hypergraph: the largest
/// number of pairwise non-adjacent neighbors of a single vertex (at least 1).
inline int brute_induced_star_number(const Hypergraph& graph) {
  const int n = graph.num_links();
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (LinkSet e : graph.edges()) {
    const auto ids = e.to_vector();
    adj[static_cast<std::size_t>(ids[0])][static_cast<std::size_t>(ids[1])] = true;
    adj[static_cast<std::size_t>(ids[1])][static_cast<std::size_t>(ids[0])] = true;
  }
  int best = 1;
  for (int v = 0; v < n; ++v) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      bool ok = true;
      int size = 0;
      for (int a = 0; a < n && ok; ++a) {
        if (!(mask >> a & 1)) continue;
        ++size;
        ok = adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(a)];
        for (int b = a + 1; b < n && ok; ++b) {
          if (mask >> b & 1) ok = !adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        }
      }
      if (ok) best = std::max(best, size);
    }
  }
  return best;
}

/// Random graph on [min_links, max_links] vertices with edge probability p.
inline Hypergraph random_graph(std::mt19937_64& rng, int min_links, int max_links, double p) {
  const int n = std::uniform_int_distribution<int>(min_links, max_links)(rng);
  std::bernoulli_distribution coin(p);
  std::vector<std::vector<LinkId>> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.push_back({a, b});
    }
  }
  return Hypergraph::create(n, edges);
}

}  // namespace hypersched::testing

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hypersched/feasibility.hpp"
#include "hypersched/greedy.hpp"
#include "hypersched/hypergraph.hpp"
#include "hypersched/rational.hpp"

namespace hypersched {

struct BoundValue {
  Rational value;
  std::vector<Rational> per_link;
};

/// B(H, tau, i) = tau_i + sum_{j != i} Delta_ij tau_j for every link, and
/// the maximum over links.
BoundValue b_bound(const Hypergraph& h, const DemandVector& demand);

struct WeightedNeighborhood {
  Rational value;
  LinkSet witness;
};

/// Largest Delta-weight of an independent subset of the neighbors of `link`.
/// Zero with an empty witness when the link has no neighbors. Ties go to the
/// lexicographically first subset.
WeightedNeighborhood delta_i_prime(const Hypergraph& h, LinkId link, const SizeLimits& limits = {});

/// 1 + largest Delta-weight of a neighbor subset J with J + link independent.
WeightedNeighborhood delta_i_doubleprime(const Hypergraph& h, LinkId link, const SizeLimits& limits = {});

struct LinkMetrics {
  WeightedNeighborhood prime;
  WeightedNeighborhood doubleprime;
};

struct MetricsReport {
  std::vector<LinkMetrics> per_link;
  Rational delta_prime;
  Rational delta_doubleprime;
  Rational sigma;
  /// max_i max(1, Delta_i'): the interference degree that ignores Delta_i''.
  Rational li_negi_delta;
};

/// Interference degree sigma(H) = max(Delta', Delta'') with per-link detail.
MetricsReport sigma(const Hypergraph& h, const SizeLimits& limits = {});

struct BetaWitness {
  Rational beta;
  LinkId link = 0;
  DemandVector demand;
};

/// Worst-case bound ratio: max over links i and independent sets I of
/// B(H, chi_I, i), by direct enumeration. Keeps the first maximizer in
/// (link, lexicographic set) order.
BetaWitness beta_by_enumeration(const Hypergraph& h, const SizeLimits& limits = {});

struct SymmetrizedDemand {
  DemandVector demand;
  std::size_t group_order = 0;
};

/// Average of the demand over the automorphism group of H.
SymmetrizedDemand symmetrize_demand(const Hypergraph& h, const DemandVector& demand, const SizeLimits& limits = {});

/// Center link plus edge-size multiplicities of a star-shaped edge family.
struct StarProfile {
  LinkId center = 0;
  std::map<int, int> counts;
  /// True when H has a single edge, so any of its links could be the center.
  bool vacuous_center = false;
};

/// Star profile when all pairwise edge intersections equal one common link.
/// nullopt for edgeless hypergraphs and non-stars.
std::optional<StarProfile> is_beta_star(const Hypergraph& h);

/// max{ |E|, 1 + sum_k n_k (k-2)/(k-1) }.
Rational beta_star_formula(const StarProfile& profile);

}  // namespace hypersched

#include "hypersched/metrics.hpp"

namespace hypersched {
namespace {

void require_enumerable(const Hypergraph& h, const SizeLimits& limits) {
  if (h.num_links() > limits.enumeration) throw SizeLimitExceeded(h.num_links(), limits.enumeration);
}

Rational weight_into(const WeightMatrix& delta, LinkId link, LinkSet others) {
  Rational sum;
  for (LinkId j : others) sum += delta(link, j);
  return sum;
}

WeightedNeighborhood best_neighborhood(const Hypergraph& h, const WeightMatrix& delta, LinkId link, LinkSet base) {
  std::optional<WeightedNeighborhood> best;
  for_each_independent_subset(h, h.neighbors(link), base, [&](LinkSet j) {
    Rational value = weight_into(delta, link, j);
    if (!best || value > best->value) best = WeightedNeighborhood{std::move(value), j};
  });
  return *best;
}

LinkMetrics link_metrics(const Hypergraph& h, const WeightMatrix& delta, LinkId link) {
  LinkMetrics m;
  m.prime = best_neighborhood(h, delta, link, LinkSet{});
  m.doubleprime = best_neighborhood(h, delta, link, LinkSet{link});
  m.doubleprime.value += 1;
  return m;
}

}  // namespace

BoundValue b_bound(const Hypergraph& h, const DemandVector& demand) {
  ConditionCheck check = check_corollary4(h, demand);
  BoundValue out;
  out.per_link = std::move(check.per_link);
  for (const auto& v : out.per_link) out.value = max(out.value, v);
  return out;
}

WeightedNeighborhood delta_i_prime(const Hypergraph& h, LinkId link, const SizeLimits& limits) {
  require_enumerable(h, limits);
  return best_neighborhood(h, delta_matrix(h), link, LinkSet{});
}

WeightedNeighborhood delta_i_doubleprime(const Hypergraph& h, LinkId link, const SizeLimits& limits) {
  require_enumerable(h, limits);
  WeightedNeighborhood out = best_neighborhood(h, delta_matrix(h), link, LinkSet{link});
  out.value += 1;
  return out;
}

MetricsReport sigma(const Hypergraph& h, const SizeLimits& limits) {
  require_enumerable(h, limits);
  const WeightMatrix delta = delta_matrix(h);
  MetricsReport report;
  report.li_negi_delta = 1;
  for (LinkId i = 0; i < h.num_links(); ++i) {
    LinkMetrics m = link_metrics(h, delta, i);
    report.delta_prime = max(report.delta_prime, m.prime.value);
    report.delta_doubleprime = max(report.delta_doubleprime, m.doubleprime.value);
    report.li_negi_delta = max(report.li_negi_delta, m.prime.value);
    report.per_link.push_back(std::move(m));
  }
  report.sigma = max(report.delta_prime, report.delta_doubleprime);
  return report;
}

BetaWitness beta_by_enumeration(const Hypergraph& h, const SizeLimits& limits) {
  const std::vector<LinkSet> sets = enumerate_independent_sets(h, limits);
  const WeightMatrix delta = delta_matrix(h);
  std::optional<Rational> best;
  LinkId best_link = 0;
  LinkSet best_set;
  for (LinkId i = 0; i < h.num_links(); ++i) {
    for (LinkSet s : sets) {
      // B(H, chi_S, i) = [i in S] + sum_{j in S, j != i} Delta_ij
      Rational value = weight_into(delta, i, s.without(i));
      if (s.contains(i)) value += 1;
      if (!best || value > *best) {
        best = std::move(value);
        best_link = i;
        best_set = s;
      }
    }
  }
  return BetaWitness{*best, best_link, DemandVector::characteristic(h.num_links(), best_set)};
}

SymmetrizedDemand symmetrize_demand(const Hypergraph& h, const DemandVector& demand, const SizeLimits& limits) {
  if (demand.size() != h.num_links()) throw std::invalid_argument("demand length does not match the number of links");
  const std::vector<Permutation> group = automorphisms(h, limits);
  std::vector<Rational> sum(static_cast<std::size_t>(h.num_links()));
  for (const auto& pi : group) {
    // (pi tau)(pi(j)) = tau(j)
    for (LinkId j = 0; j < h.num_links(); ++j) sum[static_cast<std::size_t>(pi(j))] += demand[j];
  }
  const Rational order(static_cast<std::int64_t>(group.size()));
  for (auto& v : sum) v /= order;
  return SymmetrizedDemand{DemandVector(std::move(sum)), group.size()};
}

std::optional<StarProfile> is_beta_star(const Hypergraph& h) {
  const auto& edges = h.edges();
  if (edges.empty()) return std::nullopt;
  StarProfile profile;
  if (edges.size() == 1) {
    profile.center = edges.front().min();
    profile.vacuous_center = true;
  } else {
    const LinkSet common = edges[0] & edges[1];
    if (common.size() != 1) return std::nullopt;
    for (std::size_t a = 0; a < edges.size(); ++a) {
      for (std::size_t b = a + 1; b < edges.size(); ++b) {
        if ((edges[a] & edges[b]) != common) return std::nullopt;
      }
    }
    profile.center = common.min();
  }
  for (LinkSet e : edges) ++profile.counts[e.size()];
  return profile;
}

Rational beta_star_formula(const StarProfile& profile) {
  std::int64_t num_edges = 0;
  Rational doubleprime(1);
  for (const auto& [k, count] : profile.counts) {
    num_edges += count;
    doubleprime += Rational(count) * Rational(k - 2, k - 1);
  }
  return max(Rational(num_edges), doubleprime);
}

}  // namespace hypersched

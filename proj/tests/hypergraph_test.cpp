#include "hypersched/hypergraph.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "support/fixtures.hpp"

namespace hypersched {
namespace {

using testing::path3;
using testing::triangle;
using testing::two_star;

TEST(LinkSetTest, OrdersLexicographicallyByMembers) {
  const std::vector<LinkSet> expected{LinkSet{}, LinkSet{0}, LinkSet{0, 1}, LinkSet{0, 1, 2}, LinkSet{0, 2},
                                      LinkSet{1}, LinkSet{1, 2}, LinkSet{2}};
  std::vector<LinkSet> shuffled = expected;
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::sort(shuffled.begin(), shuffled.end());
    EXPECT_EQ(shuffled, expected);
  }
}

TEST(LinkSetTest, OrderMatchesVectorComparison) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> bits(0, (1u << 12) - 1);
  for (int k = 0; k < 2000; ++k) {
    const LinkSet a = LinkSet::from_bits(bits(rng));
    const LinkSet b = LinkSet::from_bits(bits(rng));
    EXPECT_EQ(a < b, a.to_vector() < b.to_vector());
  }
}

TEST(ValidateTest, AcceptsTriangle) { EXPECT_FALSE(validate(3, {{0, 1, 2}}).has_value()); }

TEST(ValidateTest, RejectsNonMinimalEdges) {
  const auto error = validate(7, {{0, 1, 2, 3}, {0, 1}});
  ASSERT_TRUE(error.has_value());
  EXPECT_EQ(error->kind, HypergraphError::Kind::kNotAntichain);
  EXPECT_EQ(error->edge, (std::vector<LinkId>{0, 1}));
  EXPECT_EQ(error->other_edge, (std::vector<LinkId>{0, 1, 2, 3}));
}

TEST(ValidateTest, RejectsDuplicateEdges) {
  const auto error = validate(3, {{0, 1}, {1, 0}});
  ASSERT_TRUE(error.has_value());
  EXPECT_EQ(error->kind, HypergraphError::Kind::kNotAntichain);
}

TEST(ValidateTest, RejectsSingletonEdge) {
  const auto error = validate(2, {{0}});
  ASSERT_TRUE(error.has_value());
  EXPECT_EQ(error->kind, HypergraphError::Kind::kEdgeTooSmall);
  EXPECT_EQ(validate(2, {{1, 1}})->kind, HypergraphError::Kind::kEdgeTooSmall);
}

TEST(ValidateTest, RejectsOutOfRangeLinks) {
  const auto error = validate(3, {{0, 3}});
  ASSERT_TRUE(error.has_value());
  EXPECT_EQ(error->kind, HypergraphError::Kind::kLinkOutOfRange);
  EXPECT_EQ(error->link, 3);
  EXPECT_EQ(validate(3, {{-1, 0}})->kind, HypergraphError::Kind::kLinkOutOfRange);
  EXPECT_EQ(validate(0, {})->kind, HypergraphError::Kind::kBadLinkCount);
  EXPECT_EQ(validate(65, {})->kind, HypergraphError::Kind::kBadLinkCount);
  EXPECT_THROW(Hypergraph::create(3, {{0, 3}}), InvalidHypergraph);
}

TEST(MinimalizeTest, SubsetAbsorbsSuperset) {
  const Hypergraph h = Hypergraph::minimalize(4, {{0, 1, 2, 3}, {0, 1, 2}});
  EXPECT_EQ(h.edges(), (std::vector<LinkSet>{LinkSet{0, 1, 2}}));
}

TEST(MinimalizeTest, Deduplicates) {
  const Hypergraph h = Hypergraph::minimalize(2, {{0, 1}, {0, 1}});
  EXPECT_EQ(h.edges(), (std::vector<LinkSet>{LinkSet{0, 1}}));
}

TEST(MinimalizeTest, KeepsAntichainUnchanged) {
  EXPECT_EQ(Hypergraph::minimalize(7, {{0, 1, 2, 3}, {0, 4, 5, 6}}), two_star());
}

TEST(MinimalizeTest, StillRejectsSingletonsAndRange) {
  EXPECT_THROW(Hypergraph::minimalize(3, {{0}, {0, 1}}), InvalidHypergraph);
  EXPECT_THROW(Hypergraph::minimalize(3, {{0, 5}}), InvalidHypergraph);
}

TEST(MinimalizeTest, ResultAlwaysValidates) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const Hypergraph h = testing::random_hypergraph(rng);
    std::vector<std::vector<LinkId>> edges;
    for (LinkSet e : h.edges()) edges.push_back(e.to_vector());
    EXPECT_FALSE(validate(h.num_links(), edges).has_value());
  }
}

TEST(NeighborsTest, GoldenCases) {
  const Hypergraph h = two_star();
  EXPECT_EQ(h.neighbors(0), (LinkSet{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(h.neighbors(1), (LinkSet{0, 2, 3}));
  EXPECT_TRUE(Hypergraph::create(4, {}).neighbors(2).empty());
}

TEST(EdgesContainingTest, GoldenCases) {
  const Hypergraph h = two_star();
  EXPECT_EQ(h.edges_containing(0), (std::vector<LinkSet>{LinkSet{0, 1, 2, 3}, LinkSet{0, 4, 5, 6}}));
  EXPECT_EQ(h.edges_containing(1), (std::vector<LinkSet>{LinkSet{0, 1, 2, 3}}));
  EXPECT_EQ(triangle().edges_containing(2), (std::vector<LinkSet>{LinkSet{0, 1, 2}}));
}

TEST(NeighborsTest, EqualsUnionOfIncidentEdges) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 100; ++k) {
    const Hypergraph h = testing::random_hypergraph(rng);
    for (LinkId i = 0; i < h.num_links(); ++i) {
      LinkSet u;
      for (LinkSet e : h.edges_containing(i)) u = u | e;
      EXPECT_EQ(h.neighbors(i), u.without(i));
    }
  }
}

TEST(IsIndependentTest, GoldenCases) {
  const Hypergraph h = triangle();
  EXPECT_TRUE(h.is_independent(LinkSet{0, 1}));
  EXPECT_FALSE(h.is_independent(LinkSet{0, 1, 2}));
  EXPECT_TRUE(h.is_independent(LinkSet{}));
  EXPECT_TRUE(two_star().is_independent(LinkSet{}));
}

TEST(EnumerateIndependentSetsTest, Triangle) {
  const auto sets = enumerate_independent_sets(triangle());
  EXPECT_EQ(sets, (std::vector<LinkSet>{LinkSet{}, LinkSet{0}, LinkSet{0, 1}, LinkSet{0, 2}, LinkSet{1},
                                        LinkSet{1, 2}, LinkSet{2}}));
}

TEST(EnumerateIndependentSetsTest, TwoStarMatchesBruteForce) {
  // 128 subsets minus the 15 that contain an edge.
  const auto sets = enumerate_independent_sets(two_star());
  EXPECT_EQ(sets.size(), 113u);
  auto brute = testing::brute_independent_sets(two_star());
  std::sort(brute.begin(), brute.end());
  EXPECT_EQ(sets, brute);
}

TEST(EnumerateIndependentSetsTest, EdgelessGivesPowerSet) {
  EXPECT_EQ(enumerate_independent_sets(Hypergraph::create(3, {})).size(), 8u);
}

TEST(EnumerateIndependentSetsTest, EnforcesSizeLimit) {
  const Hypergraph h = Hypergraph::create(21, {{0, 1}});
  EXPECT_THROW(enumerate_independent_sets(h), SizeLimitExceeded);
  EXPECT_THROW(enumerate_maximal_independent_sets(h), SizeLimitExceeded);
  SizeLimits small;
  small.enumeration = 5;
  try {
    enumerate_independent_sets(two_star(), small);
    FAIL() << "expected SizeLimitExceeded";
  } catch (const SizeLimitExceeded& e) {
    EXPECT_EQ(e.num_links(), 7);
    EXPECT_EQ(e.limit(), 5);
  }
}

TEST(EnumerateIndependentSetsTest, MatchesBruteForceOnRandomHypergraphs) {
  std::mt19937_64 rng(99);
  testing::RandomHypergraphOptions opt;
  opt.min_links = 1;
  opt.max_links = 12;
  for (int k = 0; k < 150; ++k) {
    const Hypergraph h = testing::random_hypergraph(rng, opt);
    auto brute = testing::brute_independent_sets(h);
    std::sort(brute.begin(), brute.end());
    const auto sets = enumerate_independent_sets(h);
    ASSERT_EQ(sets, brute);
    // Downward closure.
    for (LinkSet s : sets) {
      for (LinkId i : s) EXPECT_TRUE(h.is_independent(s.without(i)));
    }
  }
}

TEST(EnumerateMaximalIndependentSetsTest, Triangle) {
  EXPECT_EQ(enumerate_maximal_independent_sets(triangle()),
            (std::vector<LinkSet>{LinkSet{0, 1}, LinkSet{0, 2}, LinkSet{1, 2}}));
}

TEST(EnumerateMaximalIndependentSetsTest, TwoStarHasTen) {
  const auto sets = enumerate_maximal_independent_sets(two_star());
  std::set<LinkSet> expected{LinkSet{1, 2, 3, 4, 5, 6}};
  for (LinkId a : {1, 2, 3}) {
    for (LinkId b : {4, 5, 6}) expected.insert(LinkSet{0, 1, 2, 3, 4, 5, 6}.without(a).without(b));
  }
  EXPECT_EQ(sets.size(), 10u);
  EXPECT_EQ(std::set<LinkSet>(sets.begin(), sets.end()), expected);
  EXPECT_TRUE(std::is_sorted(sets.begin(), sets.end()));
}

TEST(EnumerateMaximalIndependentSetsTest, EdgelessIsWholeSet) {
  EXPECT_EQ(enumerate_maximal_independent_sets(Hypergraph::create(4, {})), (std::vector<LinkSet>{LinkSet{0, 1, 2, 3}}));
}

TEST(EnumerateMaximalIndependentSetsTest, AreMaximalOnRandomHypergraphs) {
  std::mt19937_64 rng(123);
  for (int k = 0; k < 100; ++k) {
    const Hypergraph h = testing::random_hypergraph(rng);
    const auto maximal = enumerate_maximal_independent_sets(h);
    std::size_t brute_count = 0;
    for (LinkSet s : testing::brute_independent_sets(h)) {
      bool is_max = true;
      for (LinkId j = 0; j < h.num_links(); ++j) {
        if (!s.contains(j) && testing::brute_independent(h, s.with(j).bits())) is_max = false;
      }
      if (is_max) ++brute_count;
    }
    EXPECT_EQ(maximal.size(), brute_count);
    for (LinkSet s : maximal) {
      EXPECT_TRUE(h.is_independent(s));
      for (LinkId j : h.all_links() - s) EXPECT_FALSE(h.is_independent(s.with(j)));
    }
  }
}

TEST(AutomorphismsTest, TwoStarGroupFixesCenter) {
  const auto group = automorphisms(two_star());
  EXPECT_EQ(group.size(), 72u);
  for (const auto& pi : group) EXPECT_EQ(pi(0), 0);
  EXPECT_EQ(group.size(), testing::brute_automorphisms(two_star()).size());
}

TEST(AutomorphismsTest, TriangleIsFullySymmetric) { EXPECT_EQ(automorphisms(triangle()).size(), 6u); }

TEST(AutomorphismsTest, PathHasOneSwap) {
  const auto group = automorphisms(path3());
  EXPECT_EQ(group, (std::vector<Permutation>{Permutation({0, 1, 2}), Permutation({2, 1, 0})}));
}

TEST(AutomorphismsTest, EnforcesSizeLimit) {
  EXPECT_THROW(automorphisms(Hypergraph::create(11, {{0, 1}})), SizeLimitExceeded);
}

TEST(AutomorphismsTest, MatchesBruteForceAndIsClosed) {
  std::mt19937_64 rng(31);
  testing::RandomHypergraphOptions opt;
  opt.max_links = 7;
  for (int k = 0; k < 60; ++k) {
    const Hypergraph h = testing::random_hypergraph(rng, opt);
    const auto group = automorphisms(h);
    std::vector<std::vector<LinkId>> images;
    for (const auto& pi : group) images.push_back(pi.image());
    EXPECT_EQ(images, testing::brute_automorphisms(h));

    const std::set<Permutation> members(group.begin(), group.end());
    for (const auto& a : group) {
      for (LinkSet e : h.edges()) {
        EXPECT_NE(std::find(h.edges().begin(), h.edges().end(), a.apply(e)), h.edges().end());
      }
      if (group.size() > 150) continue;
      for (const auto& b : group) EXPECT_TRUE(members.contains(a * b));
    }
  }
}

TEST(PermutationTest, RejectsNonBijections) {
  EXPECT_THROW(Permutation({0, 0}), std::invalid_argument);
  EXPECT_THROW(Permutation({1, 2}), std::invalid_argument);
  EXPECT_EQ(Permutation({1, 2, 0}) * Permutation({1, 2, 0}), Permutation({2, 0, 1}));
}

}  // namespace
}  // namespace hypersched

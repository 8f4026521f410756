// Copyright 2026 The icpriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "icpriv/percolation.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include "icpriv/errors.h"
#include "icpriv/graph.h"
#include "oracles.h"

namespace icpriv {
namespace {

Graph Path(NodeId n) {
  std::vector<Edge> edges;
  for (NodeId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::FromEdges(n, edges);
}

Graph Complete(NodeId n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::FromEdges(n, edges);
}

TriggeringSet Retain(const Graph& g, std::vector<Edge> edges) {
  return TriggeringSet{&g, 1.0, std::move(edges)};
}

TEST(PercolateTest, UnitRetentionKeepsEveryEdge) {
  const Graph g = GenerateErdosRenyi(100, 0.1, 1);
  const TriggeringSet h = Percolate(g, 1.0, 9);
  EXPECT_TRUE(std::equal(h.retained_edges.begin(), h.retained_edges.end(),
                         g.edges().begin(), g.edges().end()));
}

TEST(PercolateTest, TinyRetentionKeepsNothing) {
  const Graph g = GenerateErdosRenyi(400, 0.125, 2);
  ASSERT_GE(g.edge_count(), 9000u);
  EXPECT_TRUE(Percolate(g, 1e-12, 5).retained_edges.empty());
}

TEST(PercolateTest, RejectsOutOfRangeProbability) {
  const Graph g = Path(3);
  EXPECT_THROW(Percolate(g, 0.0, 1), ParameterError);
  EXPECT_THROW(Percolate(g, 1.5, 1), ParameterError);
}

TEST(PercolateTest, DeterministicGivenSeed) {
  const Graph g = GenerateErdosRenyi(300, 0.02, 1);
  EXPECT_EQ(Percolate(g, 0.4, 77).retained_edges,
            Percolate(g, 0.4, 77).retained_edges);
}

TEST(PercolateTest, PercolatedErMatchesThinnedEr) {
  // Two-sample Kolmogorov-Smirnov test on |C1| at level 0.01.
  const int runs = 200;
  std::vector<double> thinned, direct;
  for (int s = 0; s < runs; ++s) {
    const Graph g = GenerateErdosRenyi(500, 0.006, 10'000 + s);
    thinned.push_back(ConnectedComponents(Percolate(g, 0.5, 20'000 + s)).largest());
    const Graph h = GenerateErdosRenyi(500, 0.003, 30'000 + s);
    direct.push_back(ConnectedComponents(Percolate(h, 1.0, 0)).largest());
  }
  std::sort(thinned.begin(), thinned.end());
  std::sort(direct.begin(), direct.end());
  double d = 0;
  std::size_t i = 0, j = 0;
  while (i < thinned.size() && j < direct.size()) {
    const double x = std::min(thinned[i], direct[j]);
    while (i < thinned.size() && thinned[i] <= x) ++i;
    while (j < direct.size() && direct[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) - static_cast<double>(j)) / runs);
  }
  // Asymptotic Kolmogorov critical value c(0.01) = 1.628.
  EXPECT_LT(d, 1.628 * std::sqrt(2.0 / runs));
}

TEST(ComponentsTest, Triangle) {
  const Graph g = Complete(3);
  EXPECT_EQ(ConnectedComponents(Percolate(g, 1.0, 0)).sizes,
            (std::vector<std::size_t>{3}));
}

TEST(ComponentsTest, IsolatedNodes) {
  const Graph g = Graph::FromEdges(4, {});
  const ComponentLabeling c = ConnectedComponents(Percolate(g, 0.5, 0));
  EXPECT_EQ(c.sizes, (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_TRUE(c.largest_is_tied());
  EXPECT_EQ(c.labels, (std::vector<std::uint32_t>{0, 1, 2, 3}));
}

TEST(ComponentsTest, PathWithMiddleEdgeDropped) {
  const Graph g = Path(4);
  const ComponentLabeling c = ConnectedComponents(Retain(g, {{0, 1}, {2, 3}}));
  EXPECT_EQ(c.sizes, (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(c.labels[0], 0u);
  EXPECT_EQ(c.labels[3], 1u);
}

TEST(ComponentsTest, LargerComponentRanksFirstRegardlessOfIds) {
  const Graph g = Graph::FromEdges(5, {{0, 1}, {2, 3}, {3, 4}});
  const ComponentLabeling c = ConnectedComponents(Percolate(g, 1.0, 0));
  EXPECT_EQ(c.sizes, (std::vector<std::size_t>{3, 2}));
  EXPECT_EQ(c.labels[2], 0u);
  EXPECT_EQ(c.labels[0], 1u);
}

TEST(ComponentsTest, SizesSortedAndSumToNodeCount) {
  const Graph g = GenerateErdosRenyi(600, 3.0 / 600, 4);
  for (std::uint64_t s = 0; s < 50; ++s) {
    const ComponentLabeling c = ConnectedComponents(Percolate(g, 0.6, s));
    EXPECT_TRUE(std::is_sorted(c.sizes.rbegin(), c.sizes.rend()));
    EXPECT_EQ(std::accumulate(c.sizes.begin(), c.sizes.end(), std::size_t{0}), 600u);
  }
}

TEST(CascadeTest, EmptySeedSetIsFlagged) {
  const Graph g = Path(3);
  const CascadeOutcome out = RunCascade(Percolate(g, 1.0, 0), {});
  EXPECT_EQ(out.count, 0u);
  EXPECT_TRUE(out.empty_seed_set);
}

TEST(CascadeTest, FullRetentionOnConnectedGraphActivatesAll) {
  const Graph g = Path(7);
  const TriggeringSet h = Percolate(g, 1.0, 0);
  for (NodeId s = 0; s < 7; ++s) {
    const NodeId seed[] = {s};
    const CascadeOutcome out = RunCascade(h, seed);
    EXPECT_EQ(out.count, 7u);
    EXPECT_TRUE(out.giant_active);
  }
}

TEST(CascadeTest, HandTracedPath) {
  const Graph g = Path(3);
  const NodeId seed[] = {0};
  const CascadeOutcome out = RunCascade(Retain(g, {{0, 1}}), seed);
  EXPECT_EQ(out.activated, (std::vector<char>{1, 1, 0}));
  EXPECT_EQ(out.count, 2u);
}

TEST(CascadeTest, RejectsForeignSeed) {
  const Graph g = Path(3);
  const NodeId seed[] = {3};
  EXPECT_THROW(RunCascade(Percolate(g, 1.0, 0), seed), ParameterError);
}

TEST(CascadeTest, DuplicateSeedsCountOnce) {
  const Graph g = Path(3);
  const NodeId seeds[] = {2, 2};
  EXPECT_EQ(RunCascade(Retain(g, {}), seeds).count, 1u);
}

// Every graph on up to 4 nodes, every retained pattern, every seed pair.
TEST(CascadeTest, MatchesBreadthFirstSimulationExhaustively) {
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    for (std::uint32_t gmask = 0; gmask < (1u << pairs.size()); ++gmask) {
      std::vector<std::pair<int, int>> edges;
      std::vector<Edge> g_edges;
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if ((gmask >> e) & 1) {
          edges.push_back(pairs[e]);
          g_edges.push_back({static_cast<NodeId>(pairs[e].first),
                             static_cast<NodeId>(pairs[e].second)});
        }
      }
      const Graph g = Graph::FromEdges(n, g_edges);
      for (std::uint32_t hmask = 0; hmask < (1u << edges.size()); ++hmask) {
        std::vector<char> coins(edges.size());
        std::vector<Edge> kept;
        for (std::size_t e = 0; e < edges.size(); ++e) {
          coins[e] = (hmask >> e) & 1;
          if (coins[e]) kept.push_back(g_edges[e]);
        }
        const TriggeringSet h = Retain(g, kept);
        const auto giant = testing::LargestComponent(n, edges, coins);
        for (int a = 0; a < n; ++a) {
          for (int b = a; b < n; ++b) {
            const std::vector<NodeId> seeds{static_cast<NodeId>(a),
                                            static_cast<NodeId>(b)};
            const CascadeOutcome out = RunCascade(h, seeds);
            const auto expected = testing::BfsCascade(n, edges, coins, {a, b});
            ASSERT_EQ(out.activated, expected);
            EXPECT_EQ(out.giant_active, giant[a] || giant[b]);
            // giant_active implies at least |C1| activated.
            if (out.giant_active) {
              EXPECT_GE(out.count, ConnectedComponents(h).largest());
            }
          }
        }
      }
    }
  }
}

TEST(SampleSeedsTest, FullSample) {
  EXPECT_EQ(SampleSeeds(5, 5, 3), (std::vector<NodeId>{0, 1, 2, 3, 4}));
}

TEST(SampleSeedsTest, RejectsInvalidSize) {
  EXPECT_THROW(SampleSeeds(5, 6, 3), ParameterError);
  EXPECT_THROW(SampleSeeds(5, 0, 3), ParameterError);
}

TEST(SampleSeedsTest, SingleSeedIsUniform) {
  const int draws = 10'000;
  std::vector<int> hits(5, 0);
  for (int s = 0; s < draws; ++s) ++hits[SampleSeeds(5, 1, s)[0]];
  const double se = std::sqrt(0.2 * 0.8 / draws);
  for (int h : hits) EXPECT_NEAR(h / static_cast<double>(draws), 0.2, 3 * se);
}

TEST(SampleSeedsTest, DistinctAndSorted) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto seeds = SampleSeeds(30, 7, s);
    ASSERT_EQ(seeds.size(), 7u);
    EXPECT_TRUE(std::adjacent_find(seeds.begin(), seeds.end(),
                                   std::greater_equal<>()) == seeds.end());
  }
}

TEST(SampleSeedsTest, DegreePolicyFavoursHubs) {
  // Star with 9 leaves: the hub carries weight 10 out of 28.
  std::vector<Edge> edges;
  for (NodeId v = 1; v < 10; ++v) edges.push_back({0, v});
  const Graph g = Graph::FromEdges(10, edges);
  int hub = 0;
  const int draws = 20'000;
  for (int s = 0; s < draws; ++s) {
    Rng rng = MakeRng(s);
    hub += SampleSeeds(g, 1, SeedPolicy::kDegreeProportional, rng)[0] == 0;
  }
  const double p = 10.0 / 28.0;
  EXPECT_NEAR(hub / static_cast<double>(draws), p, 3 * std::sqrt(p * (1 - p) / draws));
}

TEST(MembershipTest, CompleteGraphAlwaysInGiant) {
  const MembershipEstimate m = EstimateGiantMembership(Complete(5), 1.0, 20, 1);
  for (NodeId v = 0; v < 5; ++v) EXPECT_DOUBLE_EQ(m.frequency(v), 1.0);
}

TEST(MembershipTest, EdgelessGraphBreaksTiesToLowestId) {
  const MembershipEstimate m =
      EstimateGiantMembership(Graph::FromEdges(6, {}), 0.5, 30, 1);
  EXPECT_DOUBLE_EQ(m.frequency(0), 1.0);
  for (NodeId v = 1; v < 6; ++v) EXPECT_DOUBLE_EQ(m.frequency(v), 0.0);
  EXPECT_EQ(m.ties_broken, 30u);
}

TEST(MembershipTest, RejectsZeroTrials) {
  EXPECT_THROW(EstimateGiantMembership(Path(3), 0.5, 0, 1), ParameterError);
}

TEST(MembershipTest, ErdosRenyiMajorityFraction) {
  const Graph g = GenerateErdosRenyi(2500, 5.0 / 2499, 42);
  const MembershipEstimate m = EstimateGiantMembership(g, 0.3, 1000, 7);
  const auto freq = m.frequencies();
  const double share =
      std::count_if(freq.begin(), freq.end(), [](double f) { return f >= 0.5; }) /
      2500.0;
  EXPECT_NEAR(share, 0.695, 0.05);
}

TEST(MembershipTest, IndependentOfThreadCount) {
  const Graph g = GenerateErdosRenyi(800, 5.0 / 799, 5);
  const MembershipEstimate one = EstimateGiantMembership(g, 0.3, 200, 9, 1);
  const MembershipEstimate eight = EstimateGiantMembership(g, 0.3, 200, 9, 8);
  EXPECT_EQ(one.giant_counts, eight.giant_counts);
  EXPECT_EQ(one.largest_sizes, eight.largest_sizes);
  EXPECT_EQ(one.second_sizes, eight.second_sizes);
  EXPECT_EQ(one.ties_broken, eight.ties_broken);
}

CascadeTrials Trials(double q, std::size_t trials, std::uint64_t seed) {
  CascadeTrials t;
  t.q = q;
  t.trials = trials;
  t.rng_seed = seed;
  return t;
}

TEST(ConditionalCountsTest, DegenerateBranchIsNamed) {
  const Graph g = Path(5);
  try {
    ConditionalCountDistributions(g, 2, Trials(1.0, 50, 1));
    FAIL() << "expected DegenerateConditioningError";
  } catch (const DegenerateConditioningError& e) {
    EXPECT_EQ(e.branch(), "x_v=0");
  }
  const auto batch = ConditionalCountDistributionsBatch(
      g, std::vector<NodeId>{2}, Trials(1.0, 50, 1));
  EXPECT_EQ(batch[0].inactive_samples, 0u);
  EXPECT_EQ(batch[0].mu1, EmpiricalDistribution::PointMass(5));
}

TEST(ConditionalCountsTest, PathMatchesExhaustiveEnumeration) {
  const Graph g = Path(4);
  const std::size_t trials = 40'000;
  const NodeConditionedCounts c =
      ConditionalCountDistributions(g, 0, Trials(0.5, trials, 3));
  const auto law = testing::EnumerateSingleSeed(4, {{0, 1}, {1, 2}, {2, 3}}, 0.5, 0);

  for (int branch = 0; branch < 2; ++branch) {
    double mass = 0;
    for (const auto& [x, p] : law.joint_node[branch]) mass += p;
    const EmpiricalDistribution& mu = branch ? c.mu1 : c.mu0;
    const double samples = branch ? c.active_samples : c.inactive_samples;
    EXPECT_NEAR(samples / trials, mass, 3 * std::sqrt(mass * (1 - mass) / trials));
    for (int x = 0; x <= 4; ++x) {
      const auto it = law.joint_node[branch].find(x);
      const double p = it == law.joint_node[branch].end() ? 0.0 : it->second / mass;
      const double se = std::sqrt(std::max(p * (1 - p), 1e-12) / samples);
      EXPECT_NEAR(mu.probability_at(x), p, 3 * se + 1e-12)
          << "branch " << branch << " atom " << x;
    }
  }
}

TEST(ConditionalCountsTest, DisjointEdgesAlwaysActivateTwo) {
  const Graph g = Graph::FromEdges(4, {{0, 1}, {2, 3}});
  const NodeConditionedCounts c =
      ConditionalCountDistributions(g, 0, Trials(1.0, 200, 5));
  EXPECT_EQ(c.mu1, EmpiricalDistribution::PointMass(2));
  EXPECT_EQ(c.mu0, EmpiricalDistribution::PointMass(2));
  EXPECT_EQ(c.active_samples + c.inactive_samples, 200u);
}

TEST(ConditionalCountsTest, BatchAgreesWithSingleNode) {
  const Graph g = GenerateErdosRenyi(200, 0.02, 8);
  const CascadeTrials t = Trials(0.5, 300, 12);
  const std::vector<NodeId> nodes{3, 17, 150};
  const auto batch = ConditionalCountDistributionsBatch(g, nodes, t);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto single = ConditionalCountDistributions(g, nodes[i], t);
    EXPECT_EQ(batch[i].mu0, single.mu0);
    EXPECT_EQ(batch[i].mu1, single.mu1);
  }
}

TEST(ConditionalGiantTest, FullRetentionHasNoInactiveWorld) {
  try {
    ConditionalGiantDistributions(Path(4), Trials(1.0, 20, 1));
    FAIL() << "expected DegenerateConditioningError";
  } catch (const DegenerateConditioningError& e) {
    EXPECT_EQ(e.branch(), "giant=0");
  }
}

TEST(ConditionalGiantTest, TwoNodePathUnderTieRule) {
  // Dropped edge: {0} is C1 by the lowest-id rule, so seeding node 0 counts
  // as a seeded giant with X = 1.
  const auto law = testing::EnumerateSingleSeed(2, {{0, 1}}, 0.5, 0);
  EXPECT_NEAR(law.joint_giant[1].at(2) / 0.75, 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(law.joint_giant[1].at(1) / 0.75, 1.0 / 3.0, 1e-12);
  EXPECT_EQ(law.joint_giant[0].size(), 1u);

  const std::size_t trials = 20'000;
  const GiantConditionedCounts c =
      ConditionalGiantDistributions(Path(2), Trials(0.5, trials, 2));
  EXPECT_EQ(c.x0, EmpiricalDistribution::PointMass(1));
  const double se = std::sqrt((2.0 / 9.0) / (0.75 * trials));
  EXPECT_NEAR(c.x1.probability_at(2), 2.0 / 3.0, 3 * se);
  EXPECT_DOUBLE_EQ(c.theta0, 1.0);
  EXPECT_DOUBLE_EQ(c.theta1, 1.0);
  EXPECT_DOUBLE_EQ(c.theta_mid, 1.0);
}

TEST(ConditionalGiantTest, ErdosRenyiThresholdGap) {
  const Graph g = GenerateErdosRenyi(2500, 5.0 / 2499, 42);
  const GiantConditionedCounts c =
      ConditionalGiantDistributions(g, Trials(0.3, 1000, 4));
  EXPECT_GE(c.theta1 - c.theta0, 0.3 * 2500);
  EXPECT_DOUBLE_EQ(c.theta_mid, 0.5 * (c.theta0 + c.theta1));
}

TEST(ConditionalGiantTest, IndependentOfThreadCount) {
  const Graph g = GenerateErdosRenyi(500, 5.0 / 499, 42);
  CascadeTrials t = Trials(0.3, 300, 4);
  const GiantConditionedCounts one = ConditionalGiantDistributions(g, t);
  t.threads = 8;
  const GiantConditionedCounts eight = ConditionalGiantDistributions(g, t);
  EXPECT_EQ(one.x0, eight.x0);
  EXPECT_EQ(one.x1, eight.x1);
}

}  // namespace
}  // namespace icpriv

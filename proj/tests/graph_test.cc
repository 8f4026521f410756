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

#include "icpriv/graph.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <vector>

#include "icpriv/errors.h"

namespace icpriv {
namespace {

TEST(GraphTest, FromEdgesRejectsNonSimpleInput) {
  EXPECT_THROW(Graph::FromEdges(3, {{1, 1}}), ParameterError);
  EXPECT_THROW(Graph::FromEdges(3, {{0, 1}, {1, 0}}), ParameterError);
  EXPECT_THROW(Graph::FromEdges(3, {{0, 3}}), ParameterError);
}

TEST(GraphTest, AdjacencyIsSymmetric) {
  const Graph g = Graph::FromEdges(4, {{2, 0}, {0, 1}, {1, 2}});
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.degree(0), 2u);
  EXPECT_EQ(g.degree(3), 0u);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    for (NodeId w : g.neighbors(v)) {
      const auto back = g.neighbors(w);
      EXPECT_NE(std::find(back.begin(), back.end(), v), back.end());
    }
  }
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(g.external_id(2), "2");
}

TEST(ErdosRenyiTest, ZeroProbabilityIsEmpty) {
  EXPECT_EQ(GenerateErdosRenyi(4, 0.0, 7).edge_count(), 0u);
}

TEST(ErdosRenyiTest, UnitProbabilityIsComplete) {
  EXPECT_EQ(GenerateErdosRenyi(4, 1.0, 7).edge_count(), 6u);
}

TEST(ErdosRenyiTest, RejectsInvalidParameters) {
  EXPECT_THROW(GenerateErdosRenyi(0, 0.5, 1), ParameterError);
  EXPECT_THROW(GenerateErdosRenyi(4, 1.5, 1), ParameterError);
  EXPECT_THROW(GenerateErdosRenyi(4, -0.1, 1), ParameterError);
}

TEST(ErdosRenyiTest, DeterministicGivenSeed) {
  EXPECT_EQ(GenerateErdosRenyi(200, 0.05, 11), GenerateErdosRenyi(200, 0.05, 11));
  EXPECT_FALSE(GenerateErdosRenyi(200, 0.05, 11) ==
               GenerateErdosRenyi(200, 0.05, 12));
}

TEST(ErdosRenyiTest, MeanEdgeCountMatchesBinomialMean) {
  const NodeId n = 2500;
  const double p = 5.0 / 2499.0;
  const double pairs = n * (n - 1.0) / 2.0;
  const int seeds = 100;
  double sum = 0;
  for (int s = 0; s < seeds; ++s) {
    sum += static_cast<double>(GenerateErdosRenyi(n, p, 1000 + s).edge_count());
  }
  const double mean = sum / seeds;
  const double se = std::sqrt(pairs * p * (1 - p) / seeds);
  EXPECT_NEAR(mean, pairs * p, 3 * se);
}

TEST(ErdosRenyiTest, EdgeCountPassesChiSquaredGoodnessOfFit) {
  const NodeId n = 50;
  const double p = 0.1;
  const int seeds = 200;
  const boost::math::binomial_distribution<double> law(n * (n - 1) / 2, p);
  // Bins (-inf, 108], [109, 114], [115, 119], [120, 124], [125, 129],
  // [130, 135], [136, inf).
  const std::vector<int> upper{108, 114, 119, 124, 129, 135};
  std::vector<double> expected;
  double prev = 0;
  for (int u : upper) {
    const double c = boost::math::cdf(law, u);
    expected.push_back((c - prev) * seeds);
    prev = c;
  }
  expected.push_back((1 - prev) * seeds);

  std::vector<double> observed(expected.size(), 0);
  for (int s = 0; s < seeds; ++s) {
    const auto m = static_cast<int>(GenerateErdosRenyi(n, p, 5000 + s).edge_count());
    std::size_t bin = 0;
    while (bin < upper.size() && m > upper[bin]) ++bin;
    observed[bin] += 1;
  }
  double stat = 0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    ASSERT_GE(expected[i], 5.0);
    stat += (observed[i] - expected[i]) * (observed[i] - expected[i]) / expected[i];
  }
  const boost::math::chi_squared_distribution<double> chi2(expected.size() - 1.0);
  EXPECT_LT(stat, boost::math::quantile(chi2, 0.99));
}

TEST(ChungLuTest, SmallestWeightIsMinimumDegree) {
  for (double b : {0.5, 1.0, 1.1, 2.0, 3.0}) {
    EXPECT_DOUBLE_EQ(ChungLuWeights(100, 5, b).weights.back(), 5.0);
  }
}

TEST(ChungLuTest, LargestWeightBySubstitution) {
  EXPECT_NEAR(ChungLuWeights(100, 5, 2).weights.front(), 50.0, 1e-12);
}

TEST(ChungLuTest, TotalMatchesIndependentSummation) {
  const NodeWeights w = ChungLuWeights(1000, 5, 1.1);
  long double total = 0;
  for (int i = 1; i <= 1000; ++i) {
    total += 5.0L * std::pow(1000.0L / i, 1.0L / 1.1L);
  }
  EXPECT_NEAR(w.total, static_cast<double>(total), 1e-9 * w.total);
  EXPECT_DOUBLE_EQ(w.beta, 1.0 / 1.1);
  EXPECT_TRUE(std::is_sorted(w.weights.rbegin(), w.weights.rend()));
}

TEST(ChungLuTest, RejectsNonPositiveParameters) {
  EXPECT_THROW(ChungLuWeights(10, 0, 1), ParameterError);
  EXPECT_THROW(ChungLuWeights(10, 1, 0), ParameterError);
}

TEST(ChungLuTest, ProbabilityIsClamped) {
  const NodeWeights w = ChungLuWeights(2500, 5, 1.1);
  ASSERT_GE(w.weights[0] * w.weights[1] / w.total, 1.0);
  EXPECT_DOUBLE_EQ(ChungLuEdgeProbability(w, 0, 1), 1.0);
  for (NodeId i = 0; i < 2500; i += 97) {
    for (NodeId j = i + 1; j < 2500; j += 89) {
      const double p = ChungLuEdgeProbability(w, i, j);
      EXPECT_GE(p, 0.0);
      EXPECT_LE(p, 1.0);
    }
  }
  // Pairs with certain inclusion are always present.
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = GenerateChungLu(w, seed);
    const auto nb = g.neighbors(0);
    EXPECT_NE(std::find(nb.begin(), nb.end(), 1u), nb.end());
  }
}

TEST(ChungLuTest, TwoEqualWeightsGiveHalfWeightProbability) {
  const double a = 0.8;
  NodeWeights w;
  w.weights = {a, a};
  w.min_degree = a;
  w.scale = 1;
  w.beta = 1;
  w.total = 2 * a;
  EXPECT_DOUBLE_EQ(ChungLuEdgeProbability(w, 0, 1), a / 2);
  int present = 0;
  const int runs = 20000;
  for (int s = 0; s < runs; ++s) present += GenerateChungLu(w, s).edge_count();
  const double se = std::sqrt(0.4 * 0.6 / runs);
  EXPECT_NEAR(present / static_cast<double>(runs), 0.4, 3 * se);
}

TEST(ChungLuTest, RankOneDegreeMatchesExpectedDegreeSum) {
  const NodeId n = 2500;
  const double d = 5, b = 1.1;
  std::vector<double> w(n);
  double total = 0;
  for (NodeId i = 1; i <= n; ++i) {
    w[i - 1] = d * std::pow(static_cast<double>(n) / i, 1.0 / b);
    total += w[i - 1];
  }
  double expected = 0;
  for (NodeId j = 1; j < n; ++j) expected += std::min(1.0, w[0] * w[j] / total);

  const NodeWeights weights = ChungLuWeights(n, d, b);
  const int seeds = 100;
  std::vector<double> deg;
  for (int s = 0; s < seeds; ++s) {
    deg.push_back(static_cast<double>(GenerateChungLu(weights, 300 + s).degree(0)));
  }
  const double mean = std::accumulate(deg.begin(), deg.end(), 0.0) / seeds;
  double var = 0;
  for (double x : deg) var += (x - mean) * (x - mean);
  var /= seeds - 1;
  EXPECT_NEAR(mean, expected, 3 * std::sqrt(var / seeds));
}

TEST(ChungLuTest, DeterministicGivenSeed) {
  const NodeWeights w = ChungLuWeights(300, 3, 1.5);
  EXPECT_EQ(GenerateChungLu(w, 4), GenerateChungLu(w, 4));
}

EdgeListLoad Parse(const std::string& text) {
  std::istringstream in(text);
  return ParseEdgeList(in);
}

TEST(EdgeListTest, ParsesSimplePath) {
  const EdgeListLoad load = Parse("0 1\n1 2");
  EXPECT_EQ(load.graph.node_count(), 3u);
  EXPECT_EQ(load.graph.edge_count(), 2u);
}

TEST(EdgeListTest, DropsDuplicatesAndSelfLoops) {
  const EdgeListLoad load = Parse("a b\nb a\na a");
  EXPECT_EQ(load.graph.node_count(), 2u);
  EXPECT_EQ(load.graph.edge_count(), 1u);
  EXPECT_EQ(load.duplicate_edges, 1u);
  EXPECT_EQ(load.self_loops, 1u);
  EXPECT_EQ(load.graph.external_id(0), "a");
  EXPECT_EQ(load.graph.external_id(1), "b");
}

TEST(EdgeListTest, CompactsIdsInFirstSeenOrder) {
  const EdgeListLoad load = Parse("# comment\n\n17 4\n4 99\n");
  EXPECT_EQ(load.graph.node_count(), 3u);
  EXPECT_EQ(load.graph.external_ids(), (std::vector<std::string>{"17", "4", "99"}));
  EXPECT_EQ(load.graph.edges()[1], (Edge{1, 2}));
}

TEST(EdgeListTest, ReportsMalformedLineNumber) {
  try {
    Parse("0 1\n# ok\n2\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(Parse("0 1 2\n"), ParseError);
}

TEST(EdgeListTest, UnreadableFileThrows) {
  EXPECT_THROW(LoadEdgeList("/nonexistent/graph.txt"), ParseError);
}

TEST(EdgeListTest, CanonicalDumpIsIdempotent) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto first = dir / "icpriv_graph_test_1.txt";
  const auto second = dir / "icpriv_graph_test_2.txt";
  // Sparse enough to leave isolated nodes, which must survive the round trip.
  const Graph g = GenerateErdosRenyi(40, 0.05, 3);
  SaveCanonical(g, first);
  const EdgeListLoad reload = LoadEdgeList(first);
  EXPECT_EQ(reload.graph, g);
  SaveCanonical(reload.graph, second);

  std::ifstream a(first), b(second);
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
  EXPECT_EQ(sa.str().rfind("# nodes=40 edges=", 0), 0u);
  std::filesystem::remove(first);
  std::filesystem::remove(second);
}

TEST(EdgeListTest, LoadedGraphDumpReloadsIdentically) {
  const EdgeListLoad load = Parse("5 3\n3 8\n8 5\n9 3\n");
  std::stringstream dump;
  WriteCanonical(load.graph, dump);
  const EdgeListLoad again = ParseEdgeList(dump);
  EXPECT_EQ(again.graph, load.graph);
}

}  // namespace
}  // namespace icpriv

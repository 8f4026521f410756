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

#ifndef ICPRIV_GRAPH_H_
#define ICPRIV_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace icpriv {

using NodeId = std::uint32_t;

// Undirected edge, normalized so that u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable undirected simple graph on nodes 0..n-1 with CSR adjacency.
// Edges are stored sorted, each once with u < v.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from edges that must already be simple: no self-loops,
  // no duplicates (in either orientation), every endpoint < node_count.
  // Throws ParameterError otherwise.
  static Graph FromEdges(NodeId node_count, std::vector<Edge> edges);

  NodeId node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::vector<std::size_t> degrees() const;

  // Original identifier of node v when the graph was loaded from a file;
  // the decimal id otherwise.
  std::string external_id(NodeId v) const;
  const std::vector<std::string>& external_ids() const { return external_ids_; }
  void set_external_ids(std::vector<std::string> ids);

  // Structural equality: same node count and edge set.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
  }

 private:
  NodeId node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
  std::vector<std::string> external_ids_;
};

// Power-law weights w_i = d (n / i)^beta, beta = 1 / b, for ranks i = 1..n.
// weights[i - 1] holds w_i, so the vector is non-increasing and ends at d.
struct NodeWeights {
  std::vector<double> weights;
  double min_degree = 0;  // d
  double scale = 0;       // b
  double beta = 0;        // 1 / b
  double total = 0;       // l_n = sum of weights
};

// Erdos-Renyi G(n, p): every pair joined independently with probability p.
Graph GenerateErdosRenyi(NodeId n, double p, std::uint64_t rng_seed);

NodeWeights ChungLuWeights(NodeId n, double min_degree, double scale);

// min(1, w_i w_j / l_n) for 0-based node indices i, j.
double ChungLuEdgeProbability(const NodeWeights& weights, NodeId i, NodeId j);

// Chung-Lu graph: pair (i, j), i < j, included with ChungLuEdgeProbability.
// Node k carries weight weights.weights[k] (rank k + 1).
Graph GenerateChungLu(const NodeWeights& weights, std::uint64_t rng_seed);

struct EdgeListLoad {
  Graph graph;
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;
};

// Parses whitespace-separated id pairs, one edge per line. Lines starting with
// '#' and blank lines are skipped. Ids are compacted to 0..n-1 in first-seen
// order; duplicates and self-loops are dropped and counted.
//
// If the first line is a canonical header "# nodes=<n> edges=<m>", the ids are
// read as dense integers in [0, n) and n is taken from the header, so
// canonical dumps (including isolated nodes) reload to an identical Graph.
EdgeListLoad ParseEdgeList(std::istream& in);
EdgeListLoad LoadEdgeList(const std::filesystem::path& path);

// Canonical dump: "# nodes=<n> edges=<m>" then sorted "u v" lines, u < v.
void WriteCanonical(const Graph& g, std::ostream& out);
void SaveCanonical(const Graph& g, const std::filesystem::path& path);

}  // namespace icpriv

#endif  // ICPRIV_GRAPH_H_

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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "icpriv/errors.h"
#include "icpriv/random.h"

namespace icpriv {

Graph Graph::FromEdges(NodeId node_count, std::vector<Edge> edges) {
  for (Edge& e : edges) {
    if (e.u == e.v) {
      throw ParameterError("self-loop on node " + std::to_string(e.u));
    }
    if (e.u >= node_count || e.v >= node_count) {
      throw ParameterError("edge endpoint out of range");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw ParameterError("duplicate edge");
  }

  Graph g;
  g.node_count_ = node_count;
  g.edges_ = std::move(edges);
  g.offsets_.assign(static_cast<std::size_t>(node_count) + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 1; i < g.offsets_.size(); ++i) {
    g.offsets_[i] += g.offsets_[i - 1];
  }
  g.adjacency_.resize(2 * g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted, so each neighbor list comes out sorted as well.
  for (const Edge& e : g.edges_) g.adjacency_[cursor[e.u]++] = e.v;
  for (const Edge& e : g.edges_) g.adjacency_[cursor[e.v]++] = e.u;
  for (NodeId v = 0; v < node_count; ++v) {
    std::sort(g.adjacency_.begin() + g.offsets_[v],
              g.adjacency_.begin() + g.offsets_[v + 1]);
  }
  return g;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(node_count_);
  for (NodeId v = 0; v < node_count_; ++v) out[v] = degree(v);
  return out;
}

std::string Graph::external_id(NodeId v) const {
  if (v < external_ids_.size()) return external_ids_[v];
  return std::to_string(v);
}

void Graph::set_external_ids(std::vector<std::string> ids) {
  if (!ids.empty() && ids.size() != node_count_) {
    throw ParameterError("external id table size does not match node count");
  }
  external_ids_ = std::move(ids);
}

Graph GenerateErdosRenyi(NodeId n, double p, std::uint64_t rng_seed) {
  if (n < 1) throw ParameterError("n must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("p must lie in [0, 1]");
  Rng rng = MakeRng(rng_seed);
  std::vector<Edge> edges;
  const double expected = 0.5 * n * (n - 1.0) * p;
  edges.reserve(static_cast<std::size_t>(expected + 4 * std::sqrt(expected + 1)));
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (Bernoulli(rng, p)) edges.push_back({u, v});
    }
  }
  return Graph::FromEdges(n, std::move(edges));
}

NodeWeights ChungLuWeights(NodeId n, double min_degree, double scale) {
  if (n < 1) throw ParameterError("n must be at least 1");
  if (!(min_degree > 0)) throw ParameterError("d must be positive");
  if (!(scale > 0)) throw ParameterError("b must be positive");
  NodeWeights w;
  w.min_degree = min_degree;
  w.scale = scale;
  w.beta = 1.0 / scale;
  w.weights.resize(n);
  for (NodeId i = 1; i <= n; ++i) {
    w.weights[i - 1] = i == n ? min_degree
                              : min_degree * std::pow(static_cast<double>(n) / i,
                                                      w.beta);
  }
  // Summed smallest first for accuracy.
  for (auto it = w.weights.rbegin(); it != w.weights.rend(); ++it) {
    w.total += *it;
  }
  return w;
}

double ChungLuEdgeProbability(const NodeWeights& weights, NodeId i, NodeId j) {
  const double p = weights.weights[i] * weights.weights[j] / weights.total;
  return std::clamp(p, 0.0, 1.0);
}

Graph GenerateChungLu(const NodeWeights& weights, std::uint64_t rng_seed) {
  const auto n = static_cast<NodeId>(weights.weights.size());
  if (n < 1 || !(weights.total > 0)) {
    throw ParameterError("invalid Chung-Lu weights");
  }
  Rng rng = MakeRng(rng_seed);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (Bernoulli(rng, ChungLuEdgeProbability(weights, u, v))) {
        edges.push_back({u, v});
      }
    }
  }
  return Graph::FromEdges(n, std::move(edges));
}

namespace {

bool ParseCanonicalHeader(const std::string& line, std::size_t& nodes) {
  char tail = 0;
  unsigned long long n = 0, m = 0;
  if (std::sscanf(line.c_str(), "# nodes=%llu edges=%llu %c", &n, &m, &tail) !=
      2) {
    return false;
  }
  nodes = static_cast<std::size_t>(n);
  return true;
}

bool ParseDense(const std::string& token, NodeId& out) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

EdgeListLoad ParseEdgeList(std::istream& in) {
  EdgeListLoad result;
  std::unordered_map<std::string, NodeId> index;
  std::vector<std::string> ids;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;

  bool canonical = false;
  std::size_t canonical_nodes = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && ParseCanonicalHeader(line, canonical_nodes)) {
      canonical = true;
      continue;
    }
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw ParseError("malformed edge at line " + std::to_string(line_no) +
                           ": expected two ids",
                       line_no);
    }

    NodeId u = 0, v = 0;
    if (canonical) {
      if (!ParseDense(a, u) || !ParseDense(b, v) || u >= canonical_nodes ||
          v >= canonical_nodes) {
        throw ParseError("invalid node id at line " + std::to_string(line_no),
                         line_no);
      }
    } else {
      auto intern = [&](const std::string& id) {
        auto [it, inserted] =
            index.try_emplace(id, static_cast<NodeId>(ids.size()));
        if (inserted) ids.push_back(id);
        return it->second;
      };
      u = intern(a);
      v = intern(b);
    }

    if (u == v) {
      ++result.self_loops;
      continue;
    }
    if (u > v) std::swap(u, v);
    const std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | v;
    if (!seen.insert(key).second) {
      ++result.duplicate_edges;
      continue;
    }
    edges.push_back({u, v});
  }
  if (in.bad()) throw ParseError("read failure");

  const auto n = canonical ? static_cast<NodeId>(canonical_nodes)
                           : static_cast<NodeId>(ids.size());
  result.graph = Graph::FromEdges(n, std::move(edges));
  if (!canonical) result.graph.set_external_ids(std::move(ids));
  return result;
}

EdgeListLoad LoadEdgeList(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open edge list: " + path.string());
  return ParseEdgeList(in);
}

void WriteCanonical(const Graph& g, std::ostream& out) {
  out << "# nodes=" << g.node_count() << " edges=" << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void SaveCanonical(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write graph: " + path.string());
  WriteCanonical(g, out);
}

}  // namespace icpriv

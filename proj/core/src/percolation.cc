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

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "icpriv/errors.h"
#include "icpriv/parallel.h"

namespace icpriv {
namespace {

constexpr std::uint32_t kUnset = ~std::uint32_t{0};

void CheckQ(double q) {
  if (!(q > 0.0 && q <= 1.0)) throw ParameterError("q must lie in (0, 1]");
}

void CheckTrials(std::size_t trials) {
  if (trials < 1) throw ParameterError("trials must be at least 1");
}

// Robert Floyd's sampling without replacement.
std::vector<NodeId> SampleUniform(NodeId n, NodeId s, Rng& rng) {
  std::vector<NodeId> out;
  out.reserve(s);
  std::unordered_set<NodeId> chosen;
  for (std::uint64_t j = n - s; j < n; ++j) {
    const auto t = static_cast<NodeId>(UniformIndex(rng, j + 1));
    const NodeId pick = chosen.count(t) ? static_cast<NodeId>(j) : t;
    chosen.insert(pick);
    out.push_back(pick);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeId> SampleDegreeProportional(const Graph& g, NodeId s,
                                             Rng& rng) {
  std::vector<double> weight(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) weight[v] = g.degree(v) + 1.0;
  std::vector<NodeId> out;
  out.reserve(s);
  for (NodeId k = 0; k < s; ++k) {
    double total = 0;
    for (double w : weight) total += w;
    double target = UniformUnit(rng) * total;
    NodeId pick = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (weight[v] == 0) continue;
      pick = v;
      if (target < weight[v]) break;
      target -= weight[v];
    }
    weight[pick] = 0;
    out.push_back(pick);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void CheckSeedCount(NodeId n, NodeId s) {
  if (s == 0 || s > n) {
    throw ParameterError("seed count must satisfy 0 < s <= n (s=" +
                         std::to_string(s) + ", n=" + std::to_string(n) + ")");
  }
}

}  // namespace

namespace internal {

TrialWorkspace::TrialWorkspace(const Graph& g)
    : g_(g),
      parent_(g.node_count()),
      root_label_(g.node_count()),
      labels_(g.node_count()),
      activated_(g.node_count()) {
  retained_.reserve(g.edge_count());
}

std::uint32_t TrialWorkspace::Find(std::uint32_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

void TrialWorkspace::Union(std::uint32_t a, std::uint32_t b) {
  a = Find(a);
  b = Find(b);
  if (a == b) return;
  if (a < b) std::swap(a, b);
  parent_[a] = b;
}

void TrialWorkspace::Percolate(double q, Rng& rng) {
  retained_.clear();
  for (const Edge& e : g_.edges()) {
    if (Bernoulli(rng, q)) retained_.push_back(e);
  }
  Rank();
}

void TrialWorkspace::Label(std::span<const Edge> retained) {
  retained_.assign(retained.begin(), retained.end());
  Rank();
}

void TrialWorkspace::Rank() {
  const NodeId n = g_.node_count();
  std::iota(parent_.begin(), parent_.end(), 0u);
  for (const Edge& e : retained_) Union(e.u, e.v);

  // Provisional ids follow the smallest node id of each component.
  std::fill(root_label_.begin(), root_label_.end(), kUnset);
  sizes_.clear();
  for (NodeId v = 0; v < n; ++v) {
    const std::uint32_t r = Find(v);
    if (root_label_[r] == kUnset) {
      root_label_[r] = static_cast<std::uint32_t>(sizes_.size());
      sizes_.push_back(0);
    }
    labels_[v] = root_label_[r];
    ++sizes_[labels_[v]];
  }

  // Largest first; equal sizes keep smallest-member order.
  order_.resize(sizes_.size());
  std::iota(order_.begin(), order_.end(), 0u);
  std::stable_sort(order_.begin(), order_.end(),
                   [&](std::uint32_t a, std::uint32_t b) {
                     return sizes_[a] > sizes_[b];
                   });
  rank_of_.resize(sizes_.size());
  std::vector<std::size_t> sorted(sizes_.size());
  for (std::uint32_t r = 0; r < order_.size(); ++r) {
    rank_of_[order_[r]] = r;
    sorted[r] = sizes_[order_[r]];
  }
  sizes_.swap(sorted);
  for (NodeId v = 0; v < n; ++v) labels_[v] = rank_of_[labels_[v]];
  giant_active_ = false;
}

std::size_t TrialWorkspace::Activate(std::span<const NodeId> seeds) {
  component_hit_.assign(sizes_.size(), 0);
  for (NodeId s : seeds) component_hit_[labels_[s]] = 1;
  std::size_t count = 0;
  for (std::size_t c = 0; c < sizes_.size(); ++c) {
    if (component_hit_[c]) count += sizes_[c];
  }
  for (NodeId v = 0; v < g_.node_count(); ++v) {
    activated_[v] = component_hit_[labels_[v]];
  }
  giant_active_ = !component_hit_.empty() && component_hit_[0];
  return count;
}

}  // namespace internal

TriggeringSet Percolate(const Graph& g, double q, std::uint64_t rng_seed) {
  CheckQ(q);
  Rng rng = MakeRng(rng_seed);
  TriggeringSet h{&g, q, {}};
  for (const Edge& e : g.edges()) {
    if (Bernoulli(rng, q)) h.retained_edges.push_back(e);
  }
  return h;
}

ComponentLabeling ConnectedComponents(const TriggeringSet& h) {
  internal::TrialWorkspace ws(*h.base);
  ws.Label(h.retained_edges);
  return {ws.labels(), ws.sizes()};
}

CascadeOutcome RunCascade(const TriggeringSet& h,
                          std::span<const NodeId> seeds) {
  const NodeId n = h.base->node_count();
  for (NodeId s : seeds) {
    if (s >= n) throw ParameterError("seed is not a graph node");
  }
  CascadeOutcome out;
  out.seeds.assign(seeds.begin(), seeds.end());
  std::sort(out.seeds.begin(), out.seeds.end());
  out.seeds.erase(std::unique(out.seeds.begin(), out.seeds.end()),
                  out.seeds.end());
  out.empty_seed_set = out.seeds.empty();

  // Union-find with path halving; size[] is valid at roots.
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  std::vector<std::uint32_t> size(n, 1);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : h.retained_edges) {
    std::uint32_t a = find(e.u), b = find(e.v);
    if (a == b) continue;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }

  // Marks live on roots first, then spread to every node.
  out.activated.assign(n, 0);
  for (NodeId s : out.seeds) out.activated[find(s)] = 1;
  std::uint32_t largest = 0;
  for (NodeId v = 0; v < n; ++v) {
    if (parent[v] == v) largest = std::max(largest, size[v]);
  }
  // Scanning in node order meets the tied component with the lowest id first.
  for (NodeId v = 0; v < n; ++v) {
    const std::uint32_t r = find(v);
    if (size[r] == largest) {
      out.giant_active = out.activated[r] != 0;
      break;
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    out.activated[v] = out.activated[find(v)];
    out.count += out.activated[v];
  }
  return out;
}

std::vector<NodeId> SampleSeeds(NodeId n, NodeId s, std::uint64_t rng_seed) {
  CheckSeedCount(n, s);
  Rng rng = MakeRng(rng_seed);
  return SampleUniform(n, s, rng);
}

std::vector<NodeId> SampleSeeds(const Graph& g, NodeId s, SeedPolicy policy,
                                Rng& rng) {
  CheckSeedCount(g.node_count(), s);
  switch (policy) {
    case SeedPolicy::kUniform:
      return SampleUniform(g.node_count(), s, rng);
    case SeedPolicy::kDegreeProportional:
      return SampleDegreeProportional(g, s, rng);
  }
  throw ParameterError("unknown seed policy");
}

std::vector<double> MembershipEstimate::frequencies() const {
  std::vector<double> out(giant_counts.size());
  for (std::size_t v = 0; v < out.size(); ++v) {
    out[v] = frequency(static_cast<NodeId>(v));
  }
  return out;
}

MembershipEstimate EstimateGiantMembership(const Graph& g, double q,
                                           std::size_t trials,
                                           std::uint64_t rng_seed,
                                           unsigned threads) {
  CheckQ(q);
  CheckTrials(trials);
  const NodeId n = g.node_count();
  const unsigned workers = EffectiveThreads(trials, threads);

  std::vector<std::vector<std::uint32_t>> counts(
      workers, std::vector<std::uint32_t>(n, 0));
  std::vector<internal::TrialWorkspace> scratch;
  scratch.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) scratch.emplace_back(g);

  MembershipEstimate est;
  est.trials = trials;
  est.largest_sizes.resize(trials);
  est.second_sizes.resize(trials);
  std::vector<char> tied(trials, 0);

  ParallelFor(trials, workers, [&](unsigned w, std::size_t t) {
    internal::TrialWorkspace& ws = scratch[w];
    Rng rng = ChildRng(rng_seed, t);
    ws.Percolate(q, rng);
    const auto& labels = ws.labels();
    auto& local = counts[w];
    for (NodeId v = 0; v < n; ++v) local[v] += labels[v] == 0;
    const auto& sizes = ws.sizes();
    est.largest_sizes[t] = sizes.empty() ? 0 : sizes[0];
    est.second_sizes[t] = sizes.size() < 2 ? 0 : sizes[1];
    tied[t] = sizes.size() >= 2 && sizes[0] == sizes[1];
  });

  est.giant_counts.assign(n, 0);
  for (const auto& local : counts) {
    for (NodeId v = 0; v < n; ++v) est.giant_counts[v] += local[v];
  }
  est.ties_broken =
      static_cast<std::size_t>(std::count(tied.begin(), tied.end(), 1));
  return est;
}

namespace {

struct TrialRecord {
  std::vector<std::uint32_t> count;  // X per trial
  std::vector<char> giant;           // giant_active per trial
  std::vector<char> watched;         // x_v per (trial, watched node)
};

TrialRecord RunCascadeTrials(const Graph& g, std::span<const NodeId> watch,
                             const CascadeTrials& config) {
  CheckQ(config.q);
  CheckTrials(config.trials);
  CheckSeedCount(g.node_count(), config.seeds);
  for (NodeId v : watch) {
    if (v >= g.node_count()) throw ParameterError("node is not in the graph");
  }
  const std::size_t trials = config.trials;
  const unsigned workers = EffectiveThreads(trials, config.threads);
  std::vector<internal::TrialWorkspace> scratch;
  scratch.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) scratch.emplace_back(g);

  TrialRecord rec;
  rec.count.resize(trials);
  rec.giant.resize(trials);
  rec.watched.resize(trials * watch.size());
  ParallelFor(trials, workers, [&](unsigned w, std::size_t t) {
    internal::TrialWorkspace& ws = scratch[w];
    Rng rng = ChildRng(config.rng_seed, t);
    ws.Percolate(config.q, rng);
    const auto seeds = SampleSeeds(g, config.seeds, config.policy, rng);
    rec.count[t] = static_cast<std::uint32_t>(ws.Activate(seeds));
    rec.giant[t] = ws.giant_active();
    const auto& act = ws.activated();
    for (std::size_t j = 0; j < watch.size(); ++j) {
      rec.watched[t * watch.size() + j] = act[watch[j]];
    }
  });
  return rec;
}

}  // namespace

std::vector<NodeConditionedCounts> ConditionalCountDistributionsBatch(
    const Graph& g, std::span<const NodeId> nodes,
    const CascadeTrials& config) {
  const TrialRecord rec = RunCascadeTrials(g, nodes, config);
  const std::size_t k = nodes.size();
  const std::size_t support = static_cast<std::size_t>(g.node_count()) + 1;
  std::vector<NodeConditionedCounts> out(k);
  ParallelFor(k, config.threads, [&](unsigned, std::size_t j) {
    std::vector<std::size_t> hist0(support, 0), hist1(support, 0);
    for (std::size_t t = 0; t < config.trials; ++t) {
      auto& hist = rec.watched[t * k + j] ? hist1 : hist0;
      ++hist[rec.count[t]];
    }
    NodeConditionedCounts& c = out[j];
    c.node = nodes[j];
    for (std::size_t x = 0; x < support; ++x) {
      c.inactive_samples += hist0[x];
      c.active_samples += hist1[x];
    }
    if (c.inactive_samples > 0) c.mu0 = EmpiricalDistribution::FromCounts(hist0);
    if (c.active_samples > 0) c.mu1 = EmpiricalDistribution::FromCounts(hist1);
  });
  return out;
}

NodeConditionedCounts ConditionalCountDistributions(
    const Graph& g, NodeId v, const CascadeTrials& config) {
  const NodeId nodes[] = {v};
  auto batch = ConditionalCountDistributionsBatch(g, nodes, config);
  NodeConditionedCounts& c = batch.front();
  const std::string name = "node " + std::to_string(v);
  if (c.inactive_samples == 0) {
    throw DegenerateConditioningError(
        "no trial had x_v = 0 for " + name, "x_v=0");
  }
  if (c.active_samples == 0) {
    throw DegenerateConditioningError(
        "no trial had x_v = 1 for " + name, "x_v=1");
  }
  return std::move(c);
}

GiantConditionedCounts ConditionalGiantDistributions(
    const Graph& g, const CascadeTrials& config) {
  const TrialRecord rec = RunCascadeTrials(g, {}, config);
  const std::size_t support = static_cast<std::size_t>(g.node_count()) + 1;
  std::vector<std::size_t> hist0(support, 0), hist1(support, 0);
  for (std::size_t t = 0; t < config.trials; ++t) {
    ++(rec.giant[t] ? hist1 : hist0)[rec.count[t]];
  }
  GiantConditionedCounts out;
  for (std::size_t x = 0; x < support; ++x) {
    out.inactive_samples += hist0[x];
    out.active_samples += hist1[x];
  }
  if (out.inactive_samples == 0) {
    throw DegenerateConditioningError(
        "C^H_1 received a seed in every trial; X_0 is empty", "giant=0");
  }
  if (out.active_samples == 0) {
    throw DegenerateConditioningError(
        "C^H_1 never received a seed; X_1 is empty", "giant=1");
  }
  out.x0 = EmpiricalDistribution::FromCounts(hist0);
  out.x1 = EmpiricalDistribution::FromCounts(hist1);
  out.theta0 = out.x0.max_value();
  out.theta1 = out.x1.min_value();
  out.theta_mid = 0.5 * (out.theta0 + out.theta1);
  return out;
}

}  // namespace icpriv

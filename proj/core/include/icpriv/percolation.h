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

#ifndef ICPRIV_PERCOLATION_H_
#define ICPRIV_PERCOLATION_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "icpriv/distribution.h"
#include "icpriv/graph.h"
#include "icpriv/random.h"

namespace icpriv {

// Triggering set H: the subgraph of `base` whose edges survived independent
// retention with probability q. `base` must outlive the set.
struct TriggeringSet {
  const Graph* base = nullptr;
  double q = 1.0;
  std::vector<Edge> retained_edges;
};

// Connected components of a triggering set. Component 0 is the largest
// (C^H_1); ties in size are ordered by the smallest node id they contain.
struct ComponentLabeling {
  std::vector<std::uint32_t> labels;  // per node, index into sizes
  std::vector<std::size_t> sizes;     // non-increasing

  std::size_t largest() const { return sizes.empty() ? 0 : sizes[0]; }
  std::size_t second_largest() const { return sizes.size() < 2 ? 0 : sizes[1]; }
  bool largest_is_tied() const {
    return sizes.size() >= 2 && sizes[0] == sizes[1];
  }
};

struct CascadeOutcome {
  std::vector<NodeId> seeds;
  std::vector<char> activated;  // x_v per node, 0 or 1
  std::size_t count = 0;        // X
  bool giant_active = false;    // a seed landed in C^H_1
  bool empty_seed_set = false;  // flagged: the model assumes s > 0
};

enum class SeedPolicy {
  kUniform,             // uniform over nodes, without replacement
  kDegreeProportional,  // successive draws weighted by (degree + 1)
};

// Edge retention with one coin per undirected edge, in edge order.
TriggeringSet Percolate(const Graph& g, double q, std::uint64_t rng_seed);

ComponentLabeling ConnectedComponents(const TriggeringSet& h);

// Activates every component of h that holds a seed. Throws ParameterError if
// a seed is not a node of h.base.
CascadeOutcome RunCascade(const TriggeringSet& h, std::span<const NodeId> seeds);

// s distinct nodes out of n, returned sorted. Throws ParameterError unless
// 0 < s <= n.
std::vector<NodeId> SampleSeeds(NodeId n, NodeId s, std::uint64_t rng_seed);
std::vector<NodeId> SampleSeeds(const Graph& g, NodeId s, SeedPolicy policy,
                                Rng& rng);

// Per-node frequency of membership in C^H_1 over T independent triggering
// sets. Trial t draws from ChildRng(rng_seed, t), so the result is identical
// for any thread count.
struct MembershipEstimate {
  std::size_t trials = 0;
  std::vector<std::uint32_t> giant_counts;  // per node, trials with v in C^H_1
  std::size_t ties_broken = 0;
  std::vector<std::size_t> largest_sizes;  // |C^H_1| per trial
  std::vector<std::size_t> second_sizes;   // |C^H_2| per trial

  double frequency(NodeId v) const {
    return static_cast<double>(giant_counts[v]) / static_cast<double>(trials);
  }
  std::vector<double> frequencies() const;
};

MembershipEstimate EstimateGiantMembership(const Graph& g, double q,
                                           std::size_t trials,
                                           std::uint64_t rng_seed,
                                           unsigned threads = 1);

// Cascade trials sample a fresh triggering set and a fresh seed set each
// time. This is the parameter bundle shared by the conditional estimators.
struct CascadeTrials {
  double q = 0.3;
  NodeId seeds = 1;
  std::size_t trials = 1000;
  std::uint64_t rng_seed = 0;
  unsigned threads = 1;
  SeedPolicy policy = SeedPolicy::kUniform;
};

// X conditioned on x_v. mu0 / mu1 are the laws of X given x_v = 0 / 1.
struct NodeConditionedCounts {
  NodeId node = 0;
  std::size_t inactive_samples = 0;
  std::size_t active_samples = 0;
  EmpiricalDistribution mu0;
  EmpiricalDistribution mu1;
};

// Throws DegenerateConditioningError naming the empty branch ("x_v=0" or
// "x_v=1").
NodeConditionedCounts ConditionalCountDistributions(const Graph& g, NodeId v,
                                                    const CascadeTrials& config);

// Same statistics for several nodes from one shared batch of trials. Nodes
// with an empty branch get a default-constructed distribution in that branch
// and a zero sample count; no exception is thrown.
std::vector<NodeConditionedCounts> ConditionalCountDistributionsBatch(
    const Graph& g, std::span<const NodeId> nodes, const CascadeTrials& config);

// X conditioned on whether C^H_1 received a seed.
struct GiantConditionedCounts {
  std::size_t inactive_samples = 0;
  std::size_t active_samples = 0;
  EmpiricalDistribution x0;  // C^H_1 inactive
  EmpiricalDistribution x1;  // C^H_1 active
  double theta0 = 0;         // largest observed X with C^H_1 inactive
  double theta1 = 0;         // smallest observed X with C^H_1 active
  double theta_mid = 0;
};

// Throws DegenerateConditioningError naming the empty branch ("giant=0" or
// "giant=1").
GiantConditionedCounts ConditionalGiantDistributions(const Graph& g,
                                                     const CascadeTrials& config);

namespace internal {

// Reusable per-worker scratch for one trial: retained-edge sampling, union
// find and component ranking without reallocating.
class TrialWorkspace {
 public:
  explicit TrialWorkspace(const Graph& g);

  // Samples a triggering set from rng and labels its components.
  void Percolate(double q, Rng& rng);
  // Labels components of an explicit edge subset of the base graph.
  void Label(std::span<const Edge> retained);

  // Marks the components containing `seeds`; returns X.
  std::size_t Activate(std::span<const NodeId> seeds);

  const std::vector<std::uint32_t>& labels() const { return labels_; }
  const std::vector<std::size_t>& sizes() const { return sizes_; }
  const std::vector<char>& activated() const { return activated_; }
  std::span<const Edge> retained() const { return retained_; }
  bool giant_active() const { return giant_active_; }

 private:
  std::uint32_t Find(std::uint32_t x);
  void Union(std::uint32_t a, std::uint32_t b);
  void Rank();

  const Graph& g_;
  std::vector<Edge> retained_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> root_label_;
  std::vector<std::uint32_t> labels_;
  std::vector<std::size_t> sizes_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> rank_of_;
  std::vector<char> activated_;
  std::vector<char> component_hit_;
  bool giant_active_ = false;
};

}  // namespace internal
}  // namespace icpriv

#endif  // ICPRIV_PERCOLATION_H_

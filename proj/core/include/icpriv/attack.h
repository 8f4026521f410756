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

#ifndef ICPRIV_ATTACK_H_
#define ICPRIV_ATTACK_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "icpriv/graph.h"
#include "icpriv/percolation.h"
#include "icpriv/privacy.h"

namespace icpriv {

enum class GiantStatus { kInactive, kActive };

// Adversary parameters. `max_error` is the assumed bound e_M on |M(X) - X|;
// `slack` is the confidence slack of the vulnerability certificates.
struct AttackConfig {
  double max_error = 0;
  double theta_mid = 0;
  double slack = 0.05;
  MembershipEstimate membership;

  void Validate() const;
};

struct NodePrediction {
  NodeId node = 0;
  int label = 0;  // predicted x_v
  double confidence = 0;
};

struct AttackVerdict {
  GiantStatus status = GiantStatus::kInactive;
  std::vector<NodePrediction> predictions;
  std::vector<NodeId> abstained;
};

// Active iff reported > theta_mid. Throws ParameterError unless
// theta_mid > 0.
GiantStatus ClassifyGiantStatus(double reported, double theta_mid);

// Predicts x_v = 1 (active) or x_v = 0 (inactive) for every node whose
// membership frequency is at least `confidence_floor`; the confidence is the
// frequency itself. Everything else abstains.
AttackVerdict InferNodes(GiantStatus status, const MembershipEstimate& membership,
                         double confidence_floor);

// (1 - delta)-quantile of the absolute mechanism error, used as e_M for
// mechanisms without a hard error bound. Laplace: scale * ln(1 / delta).
// Randomized response: the Hoeffding radius sqrt(n ln(2 / delta) / 2) / (1 - f).
double MechanismErrorQuantile(const MechanismSpec& spec, std::size_t n,
                              double delta = 1e-3);

struct AttackEvaluationConfig {
  double q = 0.3;
  NodeId seeds = 1;
  MechanismSpec mechanism;
  std::vector<double> floors{0.99, 0.95, 0.90, 0.75, 0.50};
  std::size_t trials = 1000;              // attacked cascades
  std::size_t calibration_trials = 1000;  // membership and threshold estimates
  std::uint64_t rng_seed = 0;
  unsigned threads = 1;
  SeedPolicy policy = SeedPolicy::kUniform;
  std::optional<double> theta_mid;  // default: midpoint of measured theta0/1
  double error_delta = 1e-3;
};

struct FloorAccuracy {
  double floor = 0;
  std::size_t targeted_nodes = 0;  // nodes with frequency >= floor
  std::size_t predictions = 0;     // summed over trials
  std::size_t correct = 0;
  double precision = 0;  // correct / predictions, NaN without predictions
  double coverage = 0;   // targeted_nodes / n
};

struct AttackReport {
  std::size_t trials = 0;
  double theta_mid = 0;
  bool theta_from_midpoint = true;
  double max_error = 0;
  double giant_accuracy = 0;     // classification of C^H_1's status
  double giant_active_rate = 0;  // fraction of trials with C^H_1 seeded
  double prior_baseline = 0;     // max(active rate, 1 - active rate)
  std::vector<FloorAccuracy> floors;
  // Per-node fraction of trials whose (always issued) prediction was right;
  // a node counts as predicted at every floor its frequency reaches.
  std::vector<double> node_accuracy;
  MembershipEstimate membership;
};

// Calibrates membership frequencies and theta_mid on independent trials,
// then attacks `trials` fresh cascades released through the mechanism and
// scores predictions against the simulated x_v.
AttackReport EvaluateAttack(const Graph& g, const AttackEvaluationConfig& config);

// Nodes whose Erdos-Renyi non-membership bound at y(n p q) is at most
// `slack`. Throws ParameterError unless n p q > 1.
std::vector<NodeId> VulnerableSetEr(const Graph& g, double p, double q,
                                    double slack);

// Nodes (rank - 1) whose Chung-Lu non-membership bound is at most `slack`.
// Throws ParameterError when the giant-component condition fails.
std::vector<NodeId> VulnerableSetCl(const NodeWeights& weights, double q,
                                    double slack, double alpha);

}  // namespace icpriv

#endif  // ICPRIV_ATTACK_H_

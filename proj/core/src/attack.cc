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

#include "icpriv/attack.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "icpriv/bounds.h"
#include "icpriv/errors.h"
#include "icpriv/parallel.h"

namespace icpriv {
namespace {

// Stream indices under the master seed.
constexpr std::uint64_t kCalibrationStream = 1;
constexpr std::uint64_t kThresholdStream = 2;
constexpr std::uint64_t kEvaluationStream = 3;

}  // namespace

void AttackConfig::Validate() const {
  if (!(theta_mid > 0)) throw ParameterError("theta_mid must be positive");
  if (!(max_error >= 0)) throw ParameterError("e_M must be non-negative");
  if (!(slack >= 0 && slack < 1)) throw ParameterError("slack must lie in [0, 1)");
}

GiantStatus ClassifyGiantStatus(double reported, double theta_mid) {
  if (!(theta_mid > 0)) throw ParameterError("theta_mid must be positive");
  return reported > theta_mid ? GiantStatus::kActive : GiantStatus::kInactive;
}

AttackVerdict InferNodes(GiantStatus status, const MembershipEstimate& membership,
                         double confidence_floor) {
  if (!(confidence_floor >= 0 && confidence_floor <= 1)) {
    throw ParameterError("confidence floor must lie in [0, 1]");
  }
  AttackVerdict verdict;
  verdict.status = status;
  const int label = status == GiantStatus::kActive ? 1 : 0;
  for (NodeId v = 0; v < membership.giant_counts.size(); ++v) {
    const double f = membership.frequency(v);
    if (f >= confidence_floor) {
      verdict.predictions.push_back({v, label, f});
    } else {
      verdict.abstained.push_back(v);
    }
  }
  return verdict;
}

double MechanismErrorQuantile(const MechanismSpec& spec, std::size_t n,
                              double delta) {
  if (!(delta > 0 && delta < 1)) throw ParameterError("delta must lie in (0, 1)");
  spec.Validate();
  switch (spec.kind) {
    case MechanismKind::kLaplace:
    case MechanismKind::kWasserstein:
      return spec.scale * std::log(1.0 / delta);
    case MechanismKind::kRandomizedResponse:
      return std::sqrt(static_cast<double>(n) * std::log(2.0 / delta) / 2.0) /
             (1.0 - spec.flip_prob);
  }
  throw ParameterError("unsupported mechanism kind");
}

AttackReport EvaluateAttack(const Graph& g, const AttackEvaluationConfig& config) {
  config.mechanism.Validate();
  if (config.trials < 1) throw ParameterError("trials must be at least 1");
  for (double f : config.floors) {
    if (!(f >= 0 && f <= 1)) throw ParameterError("floors must lie in [0, 1]");
  }
  const NodeId n = g.node_count();

  AttackReport report;
  report.trials = config.trials;
  report.membership = EstimateGiantMembership(
      g, config.q, config.calibration_trials,
      ChildSeed(config.rng_seed, kCalibrationStream), config.threads);

  if (config.theta_mid) {
    report.theta_mid = *config.theta_mid;
    report.theta_from_midpoint = false;
  } else {
    CascadeTrials calib;
    calib.q = config.q;
    calib.seeds = config.seeds;
    calib.trials = config.calibration_trials;
    calib.rng_seed = ChildSeed(config.rng_seed, kThresholdStream);
    calib.threads = config.threads;
    calib.policy = config.policy;
    try {
      report.theta_mid = ConditionalGiantDistributions(g, calib).theta_mid;
    } catch (const DegenerateConditioningError&) {
      // One status never occurred; split at half the mean giant size.
      double mean = 0;
      for (std::size_t s : report.membership.largest_sizes) mean += s;
      mean /= static_cast<double>(report.membership.largest_sizes.size());
      report.theta_mid = std::max(0.5, 0.5 * mean);
      report.theta_from_midpoint = false;
    }
  }
  report.max_error =
      MechanismErrorQuantile(config.mechanism, n, config.error_delta);

  const std::vector<double> freq = report.membership.frequencies();
  const double lowest_floor =
      config.floors.empty()
          ? 2.0
          : *std::min_element(config.floors.begin(), config.floors.end());

  const unsigned workers = EffectiveThreads(config.trials, config.threads);
  std::vector<internal::TrialWorkspace> scratch;
  scratch.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) scratch.emplace_back(g);
  std::vector<std::vector<std::uint32_t>> node_correct(
      workers, std::vector<std::uint32_t>(n, 0));
  std::vector<char> status_right(config.trials, 0);
  std::vector<char> giant_seeded(config.trials, 0);
  const std::uint64_t eval_master =
      ChildSeed(config.rng_seed, kEvaluationStream);

  ParallelFor(config.trials, workers, [&](unsigned w, std::size_t t) {
    internal::TrialWorkspace& ws = scratch[w];
    Rng rng = ChildRng(eval_master, t);
    ws.Percolate(config.q, rng);
    const auto seeds = SampleSeeds(g, config.seeds, config.policy, rng);
    const double x = static_cast<double>(ws.Activate(seeds));
    const double reported = ApplyMechanism(config.mechanism, x, n, rng);
    const GiantStatus status = ClassifyGiantStatus(reported, report.theta_mid);
    const bool truth = ws.giant_active();
    giant_seeded[t] = truth;
    status_right[t] = truth == (status == GiantStatus::kActive);

    const char label = status == GiantStatus::kActive ? 1 : 0;
    const auto& act = ws.activated();
    auto& correct = node_correct[w];
    for (NodeId v = 0; v < n; ++v) {
      if (freq[v] >= lowest_floor) correct[v] += act[v] == label;
    }
  });

  std::vector<std::uint64_t> correct(n, 0);
  for (const auto& local : node_correct) {
    for (NodeId v = 0; v < n; ++v) correct[v] += local[v];
  }
  const auto trials = static_cast<double>(config.trials);
  report.giant_accuracy =
      std::count(status_right.begin(), status_right.end(), 1) / trials;
  report.giant_active_rate =
      std::count(giant_seeded.begin(), giant_seeded.end(), 1) / trials;
  report.prior_baseline =
      std::max(report.giant_active_rate, 1.0 - report.giant_active_rate);

  report.node_accuracy.assign(n, std::numeric_limits<double>::quiet_NaN());
  for (NodeId v = 0; v < n; ++v) {
    if (freq[v] >= lowest_floor) report.node_accuracy[v] = correct[v] / trials;
  }
  for (double f : config.floors) {
    FloorAccuracy acc;
    acc.floor = f;
    for (NodeId v = 0; v < n; ++v) {
      if (freq[v] < f) continue;
      ++acc.targeted_nodes;
      acc.correct += correct[v];
    }
    acc.predictions = acc.targeted_nodes * config.trials;
    acc.precision = acc.predictions == 0
                        ? std::numeric_limits<double>::quiet_NaN()
                        : static_cast<double>(acc.correct) / acc.predictions;
    acc.coverage = n == 0 ? 0.0 : static_cast<double>(acc.targeted_nodes) / n;
    report.floors.push_back(acc);
  }
  return report;
}

std::vector<NodeId> VulnerableSetEr(const Graph& g, double p, double q,
                                    double slack) {
  const double c = static_cast<double>(g.node_count()) * p * q;
  if (!(c > 1)) throw ParameterError("n p q must exceed 1");
  const double y = SolveGiantFraction(c).y;
  std::vector<NodeId> out;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (ErNonMembershipBound(static_cast<double>(g.degree(v)), q, y) <= slack) {
      out.push_back(v);
    }
  }
  return out;
}

std::vector<NodeId> VulnerableSetCl(const NodeWeights& weights, double q,
                                    double slack, double alpha) {
  if (!ClGiantCondition(weights.scale, weights.min_degree, q)) {
    throw ParameterError("Chung-Lu parameters admit no giant component");
  }
  const std::size_t n = weights.weights.size();
  const double sum = PowerPartialSum(n, weights.beta);
  std::vector<NodeId> out;
  for (std::size_t rank = 1; rank <= n; ++rank) {
    if (ClNonMembershipBound(rank, n, weights.min_degree, q, weights.scale,
                             alpha, sum) <= slack) {
      out.push_back(static_cast<NodeId>(rank - 1));
    }
  }
  return out;
}

}  // namespace icpriv

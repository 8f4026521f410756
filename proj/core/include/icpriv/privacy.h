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

#ifndef ICPRIV_PRIVACY_H_
#define ICPRIV_PRIVACY_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "icpriv/distribution.h"
#include "icpriv/graph.h"
#include "icpriv/percolation.h"
#include "icpriv/random.h"

namespace icpriv {

enum class MechanismKind { kLaplace, kRandomizedResponse, kWasserstein };

std::string ToString(MechanismKind kind);
MechanismKind ParseMechanismKind(const std::string& name);

// A release mechanism for the count X. Use the factories; they enforce which
// fields belong to which kind.
struct MechanismSpec {
  MechanismKind kind = MechanismKind::kLaplace;
  double scale = 1;    // Laplace scale; W / epsilon for kWasserstein
  double epsilon = 0;  // kWasserstein only
  double flip_prob = 0;  // kRandomizedResponse only
  bool clamp = false;    // clip outputs to [0, n]
  bool round = false;    // round outputs to the nearest integer

  static MechanismSpec Laplace(double scale, bool clamp = false);
  static MechanismSpec Wasserstein(double w, double epsilon, bool clamp = false);
  static MechanismSpec RandomizedResponse(double flip_prob);

  // Throws ParameterError if the fields do not match the kind.
  void Validate() const;
};

// 1/2 * sum over the union support of |mu(x) - nu(x)|.
double Tvd(const EmpiricalDistribution& mu, const EmpiricalDistribution& nu);

// Infinity-Wasserstein distance on the line, from the comonotone (quantile)
// coupling: the largest |x - y| over atom pairs whose quantile intervals
// overlap by more than 1e-12 of mass.
double WassersteinInfinity(const EmpiricalDistribution& mu,
                           const EmpiricalDistribution& nu);

// One Laplace(0, scale) draw by inversion.
double SampleLaplace(Rng& rng, double scale);

// x + Laplace(0, scale), clipped to [0, n] when clamp is set.
double LaplacePerturb(double x, double scale, bool clamp, double n,
                      std::uint64_t rng_seed);

struct RandomizedResponseResult {
  std::size_t reported_count = 0;
  double estimate = 0;  // (reported - n f / 2) / (1 - f)
};

// Each bit is reported truthfully with probability 1 - f and replaced by a
// fair coin with probability f. Throws ParameterError unless f in [0, 1).
RandomizedResponseResult RandomizedResponseEstimate(std::span<const char> bits,
                                                    double flip_prob,
                                                    std::uint64_t rng_seed);

// Applies the mechanism to a single value. `n` is the population size used
// for clamping and randomized response.
double ApplyMechanism(const MechanismSpec& spec, double x, std::size_t n,
                      Rng& rng);

// Deterministic output distribution of the mechanism applied to X ~ dist,
// by exact convolution with the noise law discretized on a grid of the given
// resolution. Laplace noise is binned by its CDF over
// [k h - h/2, k h + h/2] and truncated at 12 scales (tail mass < 1e-5, put
// back on the outermost bins). Randomized response is the exact law of the
// debiased estimate, rounded to the grid.
EmpiricalDistribution PushThroughMechanism(const EmpiricalDistribution& dist,
                                           const MechanismSpec& spec,
                                           std::size_t n,
                                           double resolution = 1.0);

struct HypothesisTestReport {
  double tvd = 0;
  double test_error = 1;  // 1 - tvd
  double theta_mid = std::numeric_limits<double>::quiet_NaN();
  // P(Z0 > theta_mid) + P(Z1 <= theta_mid), when theta_mid is given.
  double threshold_test_error = std::numeric_limits<double>::quiet_NaN();
};

HypothesisTestReport HypothesisTestError(
    const EmpiricalDistribution& z0, const EmpiricalDistribution& z1,
    double theta_mid = std::numeric_limits<double>::quiet_NaN());

// Scale W of the Wasserstein mechanism protecting the secrets x_v = 0 vs
// x_v = 1 for every v in `protected_nodes`.
struct WassersteinScale {
  double w = 0;  // sup over non-degenerate nodes
  std::map<NodeId, double> per_node;
  std::vector<NodeId> degenerate;  // nodes with an empty branch
  std::vector<NodeConditionedCounts> conditioned;
};

// Nodes whose secret pair never occurred are listed in `degenerate` and left
// out of the supremum. Throws DegenerateConditioningError if that leaves no
// node, and ParameterError if `protected_nodes` is empty.
WassersteinScale WassersteinMechanismScale(
    const Graph& g, std::span<const NodeId> protected_nodes,
    const CascadeTrials& config);

}  // namespace icpriv

#endif  // ICPRIV_PRIVACY_H_

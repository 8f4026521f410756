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

#include "icpriv/privacy.h"

#include <algorithm>
#include <cmath>

#include "icpriv/errors.h"
#include "icpriv/parallel.h"

namespace icpriv {

std::string ToString(MechanismKind kind) {
  switch (kind) {
    case MechanismKind::kLaplace:
      return "laplace";
    case MechanismKind::kRandomizedResponse:
      return "randomized_response";
    case MechanismKind::kWasserstein:
      return "wasserstein";
  }
  return "unknown";
}

MechanismKind ParseMechanismKind(const std::string& name) {
  if (name == "laplace") return MechanismKind::kLaplace;
  if (name == "randomized_response") return MechanismKind::kRandomizedResponse;
  if (name == "wasserstein") return MechanismKind::kWasserstein;
  throw ParameterError("unknown mechanism kind '" + name + "'");
}

MechanismSpec MechanismSpec::Laplace(double scale, bool clamp) {
  MechanismSpec s;
  s.kind = MechanismKind::kLaplace;
  s.scale = scale;
  s.clamp = clamp;
  s.Validate();
  return s;
}

MechanismSpec MechanismSpec::Wasserstein(double w, double epsilon, bool clamp) {
  if (!(epsilon > 0)) throw ParameterError("epsilon must be positive");
  MechanismSpec s;
  s.kind = MechanismKind::kWasserstein;
  s.epsilon = epsilon;
  s.scale = w / epsilon;
  s.clamp = clamp;
  s.Validate();
  return s;
}

MechanismSpec MechanismSpec::RandomizedResponse(double flip_prob) {
  MechanismSpec s;
  s.kind = MechanismKind::kRandomizedResponse;
  s.flip_prob = flip_prob;
  s.scale = 1;
  s.Validate();
  return s;
}

void MechanismSpec::Validate() const {
  switch (kind) {
    case MechanismKind::kLaplace:
      if (!(scale > 0) || !std::isfinite(scale)) {
        throw ParameterError("Laplace scale must be positive");
      }
      if (epsilon != 0 || flip_prob != 0) {
        throw ParameterError("Laplace mechanism takes only a scale");
      }
      return;
    case MechanismKind::kWasserstein:
      if (!(scale > 0) || !std::isfinite(scale)) {
        throw ParameterError("Wasserstein scale W/epsilon must be positive");
      }
      if (!(epsilon > 0)) throw ParameterError("epsilon must be positive");
      if (flip_prob != 0) {
        throw ParameterError("Wasserstein mechanism has no flip probability");
      }
      return;
    case MechanismKind::kRandomizedResponse:
      if (!(flip_prob >= 0 && flip_prob < 1)) {
        throw ParameterError("flip probability must lie in [0, 1)");
      }
      if (epsilon != 0) {
        throw ParameterError("randomized response has no epsilon");
      }
      return;
  }
  throw ParameterError("unsupported mechanism kind");
}

double Tvd(const EmpiricalDistribution& mu, const EmpiricalDistribution& nu) {
  const auto a = mu.atoms();
  const auto b = nu.atoms();
  std::size_t i = 0, j = 0;
  double sum = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].value < b[j].value)) {
      sum += a[i++].probability;
    } else if (i == a.size() || b[j].value < a[i].value) {
      sum += b[j++].probability;
    } else {
      sum += std::abs(a[i++].probability - b[j++].probability);
    }
  }
  return std::min(1.0, 0.5 * sum);
}

double WassersteinInfinity(const EmpiricalDistribution& mu,
                           const EmpiricalDistribution& nu) {
  constexpr double kMassEps = 1e-12;
  const auto a = mu.atoms();
  const auto b = nu.atoms();
  if (a.empty() || b.empty()) throw ParameterError("empty distribution");
  // Quantile intervals (lo, hi] of atom i of mu and atom j of nu.
  std::size_t i = 0, j = 0;
  double a_lo = 0, a_hi = a.size() == 1 ? 1.0 : a[0].probability;
  double b_lo = 0, b_hi = b.size() == 1 ? 1.0 : b[0].probability;
  double worst = 0;
  while (i < a.size() && j < b.size()) {
    const double overlap = std::min(a_hi, b_hi) - std::max(a_lo, b_lo);
    if (overlap > kMassEps) {
      worst = std::max(worst, std::abs(a[i].value - b[j].value));
    }
    const bool last_a = i + 1 == a.size();
    const bool last_b = j + 1 == b.size();
    if (last_a && last_b) break;
    // Advance the interval that ends first; the last atom never ends early.
    const bool step_a = !last_a && (last_b || a_hi <= b_hi);
    const bool step_b = !last_b && (last_a || b_hi <= a_hi);
    if (step_a) {
      ++i;
      a_lo = a_hi;
      a_hi = i + 1 == a.size() ? std::max(1.0, b_hi) : a_hi + a[i].probability;
    }
    if (step_b) {
      ++j;
      b_lo = b_hi;
      b_hi = j + 1 == b.size() ? std::max(1.0, a_hi) : b_hi + b[j].probability;
    }
  }
  return worst;
}

double SampleLaplace(Rng& rng, double scale) {
  const double u = UniformOpenUnit(rng) - 0.5;  // (-1/2, 1/2)
  const double magnitude = -scale * std::log1p(-2.0 * std::abs(u));
  return u < 0 ? -magnitude : magnitude;
}

double LaplacePerturb(double x, double scale, bool clamp, double n,
                      std::uint64_t rng_seed) {
  if (!(scale > 0)) throw ParameterError("Laplace scale must be positive");
  Rng rng = MakeRng(rng_seed);
  double out = x + SampleLaplace(rng, scale);
  if (clamp) out = std::clamp(out, 0.0, n);
  return out;
}

RandomizedResponseResult RandomizedResponseEstimate(std::span<const char> bits,
                                                    double flip_prob,
                                                    std::uint64_t rng_seed) {
  if (!(flip_prob >= 0 && flip_prob < 1)) {
    throw ParameterError("flip probability must lie in [0, 1)");
  }
  Rng rng = MakeRng(rng_seed);
  RandomizedResponseResult out;
  for (char bit : bits) {
    bool report = bit != 0;
    if (Bernoulli(rng, flip_prob)) report = Bernoulli(rng, 0.5);
    out.reported_count += report;
  }
  const double n = static_cast<double>(bits.size());
  out.estimate =
      (static_cast<double>(out.reported_count) - n * flip_prob / 2.0) /
      (1.0 - flip_prob);
  return out;
}

namespace {

double Finish(const MechanismSpec& spec, double value, std::size_t n) {
  if (spec.clamp) value = std::clamp(value, 0.0, static_cast<double>(n));
  if (spec.round) value = std::nearbyint(value);
  return value;
}

double LaplaceCdf(double x, double scale) {
  return x < 0 ? 0.5 * std::exp(x / scale)
               : 1.0 - 0.5 * std::exp(-x / scale);
}

// Binomial(trials, p) pmf over 0..trials.
std::vector<double> BinomialPmf(std::size_t trials, double p) {
  std::vector<double> pmf(trials + 1, 0.0);
  if (p <= 0) {
    pmf[0] = 1;
    return pmf;
  }
  if (p >= 1) {
    pmf[trials] = 1;
    return pmf;
  }
  const double lp = std::log(p), lq = std::log1p(-p);
  const double lg = std::lgamma(trials + 1.0);
  for (std::size_t k = 0; k <= trials; ++k) {
    pmf[k] = std::exp(lg - std::lgamma(k + 1.0) - std::lgamma(trials - k + 1.0) +
                      k * lp + (trials - k) * lq);
  }
  return pmf;
}

// Accumulates mass on integer grid indices over a growing window.
class GridMass {
 public:
  void Add(long long index, double mass) {
    if (mass == 0) return;
    if (mass_.empty()) {
      origin_ = index;
      mass_.push_back(0);
    }
    if (index < origin_) {
      mass_.insert(mass_.begin(), static_cast<std::size_t>(origin_ - index), 0);
      origin_ = index;
    }
    const auto at = static_cast<std::size_t>(index - origin_);
    if (at >= mass_.size()) mass_.resize(at + 1, 0);
    mass_[at] += mass;
  }

  void Reserve(long long lo, long long hi) {
    if (!mass_.empty() || hi < lo) return;
    origin_ = lo;
    mass_.assign(static_cast<std::size_t>(hi - lo + 1), 0);
  }

  std::vector<double>& mass() { return mass_; }
  long long origin() const { return origin_; }

 private:
  long long origin_ = 0;
  std::vector<double> mass_;
};

EmpiricalDistribution ToDistribution(GridMass& grid, double resolution,
                                     const MechanismSpec& spec, std::size_t n) {
  std::vector<Atom> atoms;
  const auto& mass = grid.mass();
  for (std::size_t k = 0; k < mass.size(); ++k) {
    if (mass[k] <= 0) continue;
    const double value =
        static_cast<double>(grid.origin() + static_cast<long long>(k)) *
        resolution;
    atoms.push_back({Finish(spec, value, n), mass[k]});
  }
  // Clamping and rounding keep the order but may merge neighbours.
  std::vector<Atom> merged;
  double total = 0;
  for (const Atom& a : atoms) {
    total += a.probability;
    if (!merged.empty() && merged.back().value == a.value) {
      merged.back().probability += a.probability;
    } else {
      merged.push_back(a);
    }
  }
  for (Atom& a : merged) a.probability /= total;
  return EmpiricalDistribution::FromAtoms(std::move(merged));
}

EmpiricalDistribution PushLaplace(const EmpiricalDistribution& dist,
                                  const MechanismSpec& spec, std::size_t n,
                                  double h) {
  const double scale = spec.scale;
  const auto reach = static_cast<long long>(std::ceil(12.0 * scale / h));
  std::vector<double> kernel(static_cast<std::size_t>(2 * reach + 1));
  for (long long k = -reach; k <= reach; ++k) {
    kernel[static_cast<std::size_t>(k + reach)] =
        LaplaceCdf((k + 0.5) * h, scale) - LaplaceCdf((k - 0.5) * h, scale);
  }
  // Tails beyond the truncation go to the outermost bins.
  const double tail = LaplaceCdf((-reach - 0.5) * h, scale);
  kernel.front() += tail;
  kernel.back() += tail;

  GridMass grid;
  const auto lo = static_cast<long long>(std::llround(dist.min_value() / h));
  const auto hi = static_cast<long long>(std::llround(dist.max_value() / h));
  grid.Reserve(lo - reach, hi + reach);
  auto& mass = grid.mass();
  for (const Atom& a : dist.atoms()) {
    const long long centre = std::llround(a.value / h);
    double* out = mass.data() + (centre - reach - grid.origin());
    for (std::size_t k = 0; k < kernel.size(); ++k) {
      out[k] += a.probability * kernel[k];
    }
  }
  return ToDistribution(grid, h, spec, n);
}

EmpiricalDistribution PushRandomizedResponse(const EmpiricalDistribution& dist,
                                             const MechanismSpec& spec,
                                             std::size_t n, double h) {
  const double f = spec.flip_prob;
  GridMass grid;
  for (const Atom& a : dist.atoms()) {
    const double x = std::clamp(std::nearbyint(a.value), 0.0,
                                static_cast<double>(n));
    const auto ones = static_cast<std::size_t>(x);
    const auto ones_pmf = BinomialPmf(ones, 1.0 - f / 2.0);
    const auto zeros_pmf = BinomialPmf(n - ones, f / 2.0);
    for (std::size_t r1 = 0; r1 < ones_pmf.size(); ++r1) {
      if (ones_pmf[r1] < 1e-300) continue;
      for (std::size_t r0 = 0; r0 < zeros_pmf.size(); ++r0) {
        const double m = a.probability * ones_pmf[r1] * zeros_pmf[r0];
        if (m < 1e-300) continue;
        const double estimate =
            (static_cast<double>(r1 + r0) - n * f / 2.0) / (1.0 - f);
        grid.Add(std::llround(estimate / h), m);
      }
    }
  }
  return ToDistribution(grid, h, spec, n);
}

}  // namespace

double ApplyMechanism(const MechanismSpec& spec, double x, std::size_t n,
                      Rng& rng) {
  spec.Validate();
  switch (spec.kind) {
    case MechanismKind::kLaplace:
    case MechanismKind::kWasserstein:
      return Finish(spec, x + SampleLaplace(rng, spec.scale), n);
    case MechanismKind::kRandomizedResponse: {
      const double f = spec.flip_prob;
      const auto ones = static_cast<std::size_t>(
          std::clamp(std::nearbyint(x), 0.0, static_cast<double>(n)));
      std::size_t reported = 0;
      for (std::size_t u = 0; u < n; ++u) {
        bool bit = u < ones;
        if (Bernoulli(rng, f)) bit = Bernoulli(rng, 0.5);
        reported += bit;
      }
      return Finish(spec, (reported - n * f / 2.0) / (1.0 - f), n);
    }
  }
  throw ParameterError("unsupported mechanism kind");
}

EmpiricalDistribution PushThroughMechanism(const EmpiricalDistribution& dist,
                                           const MechanismSpec& spec,
                                           std::size_t n, double resolution) {
  spec.Validate();
  if (dist.empty()) throw ParameterError("empty distribution");
  if (!(resolution > 0)) throw ParameterError("grid resolution must be positive");
  switch (spec.kind) {
    case MechanismKind::kLaplace:
    case MechanismKind::kWasserstein:
      return PushLaplace(dist, spec, n, resolution);
    case MechanismKind::kRandomizedResponse:
      return PushRandomizedResponse(dist, spec, n, resolution);
  }
  throw ParameterError("unsupported mechanism kind");
}

HypothesisTestReport HypothesisTestError(const EmpiricalDistribution& z0,
                                         const EmpiricalDistribution& z1,
                                         double theta_mid) {
  HypothesisTestReport r;
  r.tvd = Tvd(z0, z1);
  r.test_error = 1.0 - r.tvd;
  r.theta_mid = theta_mid;
  if (!std::isnan(theta_mid)) {
    r.threshold_test_error = (1.0 - z0.cdf(theta_mid)) + z1.cdf(theta_mid);
  }
  return r;
}

WassersteinScale WassersteinMechanismScale(
    const Graph& g, std::span<const NodeId> protected_nodes,
    const CascadeTrials& config) {
  if (protected_nodes.empty()) {
    throw ParameterError("protected node set is empty");
  }
  WassersteinScale out;
  out.conditioned =
      ConditionalCountDistributionsBatch(g, protected_nodes, config);
  std::vector<double> w(out.conditioned.size(), -1.0);
  ParallelFor(out.conditioned.size(), config.threads,
              [&](unsigned, std::size_t j) {
                const auto& c = out.conditioned[j];
                if (c.inactive_samples == 0 || c.active_samples == 0) return;
                w[j] = WassersteinInfinity(c.mu0, c.mu1);
              });
  bool any = false;
  for (std::size_t j = 0; j < w.size(); ++j) {
    const NodeId v = out.conditioned[j].node;
    if (w[j] < 0) {
      out.degenerate.push_back(v);
      continue;
    }
    out.per_node[v] = w[j];
    out.w = any ? std::max(out.w, w[j]) : w[j];
    any = true;
  }
  if (!any) {
    const auto& c = out.conditioned.front();
    throw DegenerateConditioningError(
        "every protected node has an unobserved secret",
        c.inactive_samples == 0 ? "x_v=0" : "x_v=1");
  }
  return out;
}

}  // namespace icpriv

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

#include "icpriv/distribution.h"

#include <algorithm>
#include <cmath>

#include "icpriv/errors.h"

namespace icpriv {

EmpiricalDistribution EmpiricalDistribution::FromAtoms(std::vector<Atom> atoms) {
  if (atoms.empty()) throw ParameterError("distribution has no atoms");
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.value < b.value; });
  double total = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const Atom& a = atoms[i];
    if (!std::isfinite(a.value) || !std::isfinite(a.probability) ||
        a.probability < 0) {
      throw ParameterError("atom with invalid value or probability");
    }
    if (i > 0 && atoms[i - 1].value == a.value) {
      throw ParameterError("repeated atom value");
    }
    total += a.probability;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw ParameterError("probabilities do not sum to 1");
  }
  EmpiricalDistribution d;
  d.atoms_ = std::move(atoms);
  return d;
}

EmpiricalDistribution EmpiricalDistribution::FromCounts(
    std::span<const std::size_t> counts, double offset, double step) {
  std::size_t total = 0;
  for (std::size_t c : counts) total += c;
  if (total == 0) throw ParameterError("no samples");
  EmpiricalDistribution d;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    d.atoms_.push_back({offset + static_cast<double>(i) * step,
                        static_cast<double>(counts[i]) / total});
  }
  return d;
}

EmpiricalDistribution EmpiricalDistribution::PointMass(double value) {
  return FromAtoms({{value, 1.0}});
}

double EmpiricalDistribution::min_value() const {
  if (atoms_.empty()) throw ParameterError("empty distribution");
  return atoms_.front().value;
}

double EmpiricalDistribution::max_value() const {
  if (atoms_.empty()) throw ParameterError("empty distribution");
  return atoms_.back().value;
}

double EmpiricalDistribution::mean() const {
  double m = 0;
  for (const Atom& a : atoms_) m += a.value * a.probability;
  return m;
}

double EmpiricalDistribution::probability_at(double value) const {
  auto it = std::lower_bound(
      atoms_.begin(), atoms_.end(), value,
      [](const Atom& a, double v) { return a.value < v; });
  return it != atoms_.end() && it->value == value ? it->probability : 0.0;
}

double EmpiricalDistribution::cdf(double x) const {
  double c = 0;
  for (const Atom& a : atoms_) {
    if (a.value > x) break;
    c += a.probability;
  }
  return c;
}

double EmpiricalDistribution::mass_between(double lo, double hi) const {
  double m = 0;
  for (const Atom& a : atoms_) {
    if (a.value >= lo && a.value <= hi) m += a.probability;
  }
  return m;
}

}  // namespace icpriv

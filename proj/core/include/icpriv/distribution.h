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

#ifndef ICPRIV_DISTRIBUTION_H_
#define ICPRIV_DISTRIBUTION_H_

#include <cstddef>
#include <span>
#include <vector>

namespace icpriv {

struct Atom {
  double value = 0;
  double probability = 0;

  friend bool operator==(const Atom&, const Atom&) = default;
};

// Finitely supported distribution on the real line. Atoms are sorted by
// strictly increasing value; probabilities are non-negative and sum to 1
// within 1e-9. Counts X live on integers; mechanism outputs live on a grid.
class EmpiricalDistribution {
 public:
  EmpiricalDistribution() = default;

  // Sorts the atoms and validates them. Throws ParameterError on negative or
  // non-finite mass, repeated values, or a total mass off by more than 1e-9.
  static EmpiricalDistribution FromAtoms(std::vector<Atom> atoms);

  // Atom offset + i * step for every i with counts[i] > 0, weighted by
  // counts[i] / sum(counts). Throws ParameterError if every count is zero.
  static EmpiricalDistribution FromCounts(std::span<const std::size_t> counts,
                                          double offset = 0, double step = 1);

  static EmpiricalDistribution PointMass(double value);

  std::span<const Atom> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }

  double min_value() const;
  double max_value() const;
  double mean() const;
  // Mass at exactly `value`.
  double probability_at(double value) const;
  // P(X <= x).
  double cdf(double x) const;
  // Mass in the closed interval [lo, hi].
  double mass_between(double lo, double hi) const;

  friend bool operator==(const EmpiricalDistribution&,
                         const EmpiricalDistribution&) = default;

 private:
  std::vector<Atom> atoms_;
};

}  // namespace icpriv

#endif  // ICPRIV_DISTRIBUTION_H_

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

#include "icpriv/bounds.h"

#include <algorithm>
#include <cmath>

#include "icpriv/errors.h"

namespace icpriv {

GiantFractionSolution SolveGiantFraction(double c) {
  if (!(c > 0)) throw ParameterError("c must be positive");
  GiantFractionSolution out{c, 0.0};
  if (c <= 1.0) return out;

  // f(lo) < 0 for small lo when c > 1, and f(1) = exp(-c) > 0.
  auto f = [c](double y) { return std::exp(-c * y) - 1.0 + y; };
  double lo = 0.0, hi = 1.0;
  // Move lo off the trivial root at 0.
  double probe = 0.5;
  while (f(probe) >= 0 && probe > 1e-300) probe *= 0.5;
  lo = probe;
  for (int iter = 0; iter < 200 && hi - lo > 1e-12; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.y = 0.5 * (lo + hi);
  return out;
}

double ErMaxDegreeEstimate(std::size_t n) {
  if (n < 16) throw ParameterError("n must be at least 16");
  const double ln = std::log(static_cast<double>(n));
  return ln / std::log(ln);
}

double DegreeNonMembershipEstimate(std::size_t k, double y) {
  if (!(y >= 0 && y < 1)) throw ParameterError("y must lie in [0, 1)");
  return std::exp(-static_cast<double>(k) * y);
}

double ErNonMembershipBound(double degree, double q, double y) {
  if (!(degree >= 0)) throw ParameterError("degree must be non-negative");
  const double dq = degree * q;
  return std::min(1.0, std::exp(-dq / 8.0) + std::exp(-dq * y / 2.0));
}

double PowerPartialSum(std::size_t n, double beta) {
  double sum = 0;
  for (std::size_t j = n; j >= 1; --j) {
    sum += std::pow(static_cast<double>(j), -beta);
  }
  return sum;
}

double ClNonMembershipBound(std::size_t rank, std::size_t n, double d,
                            double q, double b, double alpha) {
  if (!(b > 0)) throw ParameterError("b must be positive");
  return ClNonMembershipBound(rank, n, d, q, b, alpha,
                              PowerPartialSum(n, 1.0 / b));
}

double ClNonMembershipBound(std::size_t rank, std::size_t n, double d,
                            double q, double b, double alpha,
                            double partial_sum) {
  if (rank < 1 || rank > n) throw ParameterError("rank must lie in [1, n]");
  if (!(alpha > 0 && alpha <= 1)) throw ParameterError("alpha must lie in (0, 1]");
  if (!(b > 0)) throw ParameterError("b must be positive");
  const double beta = 1.0 / b;
  const double exponent =
      d * q * alpha * static_cast<double>(n) /
      (std::pow(static_cast<double>(rank), beta) * partial_sum);
  return std::min(1.0, std::exp(-exponent));
}

RankThreshold ClRankThreshold(double b) {
  if (!(b > 0)) throw ParameterError("b must be positive");
  if (std::abs(b - 1.0) <= 1e-12) {
    return {RankRegime::kNearLinear, "n/log n ranks",
            [](double n) { return n / std::log(n); }};
  }
  if (b < 1.0) {
    return {RankRegime::kSubPolynomial, "sub-polynomial ranks",
            [b](double n) { return std::pow(n, b); }};
  }
  return {RankRegime::kLinear, "linear ranks", [](double n) { return n; }};
}

bool ClGiantCondition(double b, double d, double q) {
  if (!(b > 0 && d > 0 && q > 0)) {
    throw ParameterError("b, d and q must be positive");
  }
  if (b <= 2.0) return true;
  return d * q > (b - 1.0) * (b - 2.0);
}

double PercolationThresholdGeneral(const Graph& g) {
  if (g.edge_count() == 0) throw ParameterError("graph has no edges");
  double sum = 0, sum_sq = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const double d = static_cast<double>(g.degree(v));
    sum += d;
    sum_sq += d * d;
  }
  return sum / sum_sq;
}

}  // namespace icpriv

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

#ifndef ICPRIV_BOUNDS_H_
#define ICPRIV_BOUNDS_H_

#include <cstddef>
#include <functional>
#include <string>

#include "icpriv/graph.h"

namespace icpriv {

// Giant-component fraction y of G(n, c/n): the positive root of
// exp(-c y) = 1 - y for c > 1, and 0 for c <= 1.
struct GiantFractionSolution {
  double c = 0;
  double y = 0;
};

// Bisection on f(y) = exp(-c y) - 1 + y over (0, 1), tolerance 1e-10,
// at most 200 iterations. Throws ParameterError unless c > 0.
GiantFractionSolution SolveGiantFraction(double c);

// ln n / ln ln n, the typical maximum degree of a sparse G(n, p).
// Throws ParameterError for n < 16.
double ErMaxDegreeEstimate(std::size_t n);

// exp(-k y): approximate probability that a node with k retained edges
// stays out of C^H_1.
double DegreeNonMembershipEstimate(std::size_t k, double y);

// min(1, exp(-d q / 8) + exp(-d q y / 2)): upper bound on the probability
// that a node of degree d in G misses C^H_1.
double ErNonMembershipBound(double degree, double q, double y);

// min(1, exp(-d q alpha n / (i^beta * sum_{j<=n} j^-beta))), beta = 1 / b,
// for the rank-i node of a Chung-Lu graph whose triggering set has a giant
// component of fraction alpha.
double ClNonMembershipBound(std::size_t rank, std::size_t n, double d,
                            double q, double b, double alpha);
// Same, with sum_{j<=n} j^-beta supplied by the caller (see PowerPartialSum).
double ClNonMembershipBound(std::size_t rank, std::size_t n, double d,
                            double q, double b, double alpha,
                            double partial_sum);

// sum_{j=1}^{n} j^-beta, summed exactly from the small terms up.
double PowerPartialSum(std::size_t n, double beta);

enum class RankRegime {
  kSubPolynomial,  // b < 1: ranks i = o(n^b)
  kNearLinear,     // b = 1: ranks i = o(n / ln n)
  kLinear,         // b > 1: ranks i = o(n)
};

struct RankThreshold {
  RankRegime regime;
  std::string tag;
  std::function<double(double)> envelope;  // f(n)
};

// Which rank envelope bounds the certified-vulnerable Chung-Lu nodes.
// b within 1e-12 of 1 counts as b = 1.
RankThreshold ClRankThreshold(double b);

// True iff b in (0, 2], or b > 2 and d q > (b - 1)(b - 2).
bool ClGiantCondition(double b, double d, double q);

// sum d_v / sum d_v^2, the inverse second-order average degree. Retention
// above (1 + eps) times this value predicts a giant component.
// Throws ParameterError for an edgeless graph.
double PercolationThresholdGeneral(const Graph& g);

}  // namespace icpriv

#endif  // ICPRIV_BOUNDS_H_

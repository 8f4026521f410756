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

#ifndef ICPRIV_TESTS_ORACLES_H_
#define ICPRIV_TESTS_ORACLES_H_

// Reference implementations that share no code with the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <queue>
#include <utility>
#include <vector>

namespace icpriv::testing {

// Independent cascade by breadth-first search: an active node u activates a
// neighbour w iff the coin of edge {u, w} came up heads. `coins` is indexed
// like `edges`.
inline std::vector<char> BfsCascade(
    int n, const std::vector<std::pair<int, int>>& edges,
    const std::vector<char>& coins, const std::vector<int>& seeds) {
  std::vector<std::vector<int>> live(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!coins[e]) continue;
    live[edges[e].first].push_back(edges[e].second);
    live[edges[e].second].push_back(edges[e].first);
  }
  std::vector<char> active(n, 0);
  std::queue<int> frontier;
  for (int s : seeds) {
    if (!active[s]) {
      active[s] = 1;
      frontier.push(s);
    }
  }
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int w : live[u]) {
      if (!active[w]) {
        active[w] = 1;
        frontier.push(w);
      }
    }
  }
  return active;
}

// Nodes of the largest component of the live-edge graph; among equally large
// components, the one holding the smallest node id.
inline std::vector<char> LargestComponent(
    int n, const std::vector<std::pair<int, int>>& edges,
    const std::vector<char>& coins) {
  std::vector<char> best(n, 0);
  std::size_t best_size = 0;
  std::vector<char> seen(n, 0);
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    std::vector<char> comp = BfsCascade(n, edges, coins, {v});
    std::size_t size = 0;
    for (int u = 0; u < n; ++u) {
      if (comp[u]) {
        seen[u] = 1;
        ++size;
      }
    }
    if (size > best_size) {
      best_size = size;
      best = comp;
    }
  }
  return best;
}

// Exact law of X by enumerating every retained-edge pattern and every single
// seed. Returns P(X = x, x_v = i) in `joint_node[i]` and
// P(X = x, giant seeded = i) in `joint_giant[i]`.
struct ExactCascadeLaw {
  std::map<int, double> joint_node[2];
  std::map<int, double> joint_giant[2];
};

inline ExactCascadeLaw EnumerateSingleSeed(
    int n, const std::vector<std::pair<int, int>>& edges, double q, int v) {
  ExactCascadeLaw law;
  const int m = static_cast<int>(edges.size());
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<char> coins(m);
    double weight = 1;
    for (int e = 0; e < m; ++e) {
      coins[e] = (mask >> e) & 1;
      weight *= coins[e] ? q : 1 - q;
    }
    const std::vector<char> giant = LargestComponent(n, edges, coins);
    for (int s = 0; s < n; ++s) {
      const std::vector<char> active = BfsCascade(n, edges, coins, {s});
      int x = 0;
      for (char a : active) x += a;
      law.joint_node[active[v] ? 1 : 0][x] += weight / n;
      law.joint_giant[giant[s] ? 1 : 0][x] += weight / n;
    }
  }
  return law;
}

// min over couplings of max |a - b| for finitely supported laws, via Hall's
// condition: a coupling restricted to pairs at distance <= t exists iff every
// set A of mu-atoms has mu(A) <= nu(N_t(A)).
inline double BruteForceWassersteinInfinity(
    const std::vector<std::pair<double, double>>& mu,
    const std::vector<std::pair<double, double>>& nu) {
  std::vector<double> candidates;
  for (const auto& [a, pa] : mu) {
    for (const auto& [b, pb] : nu) candidates.push_back(std::abs(a - b));
  }
  std::sort(candidates.begin(), candidates.end());
  const std::size_t k = mu.size();
  for (double t : candidates) {
    bool feasible = true;
    for (std::uint32_t set = 1; set < (1u << k) && feasible; ++set) {
      double left = 0;
      std::vector<char> hit(nu.size(), 0);
      for (std::size_t i = 0; i < k; ++i) {
        if (!((set >> i) & 1)) continue;
        left += mu[i].second;
        for (std::size_t j = 0; j < nu.size(); ++j) {
          if (std::abs(mu[i].first - nu[j].first) <= t) hit[j] = 1;
        }
      }
      double right = 0;
      for (std::size_t j = 0; j < nu.size(); ++j) {
        if (hit[j]) right += nu[j].second;
      }
      if (left > right + 1e-12) feasible = false;
    }
    if (feasible) return t;
  }
  return candidates.back();
}

}  // namespace icpriv::testing

#endif  // ICPRIV_TESTS_ORACLES_H_

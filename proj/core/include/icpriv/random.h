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

#ifndef ICPRIV_RANDOM_H_
#define ICPRIV_RANDOM_H_

#include <cstdint>
#include <random>

namespace icpriv {

using Rng = std::mt19937_64;

// splitmix64 finalizer.
constexpr std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed of the child stream `index` under `master`. Streams depend only on
// (master, index), never on which worker runs them.
constexpr std::uint64_t ChildSeed(std::uint64_t master, std::uint64_t index) {
  return Mix64(master + 0x9e3779b97f4a7c15ULL * (index + 1));
}

inline Rng MakeRng(std::uint64_t seed) { return Rng(seed); }

inline Rng ChildRng(std::uint64_t master, std::uint64_t index) {
  return Rng(ChildSeed(master, index));
}

// Uniform double in [0, 1) with 53 random bits.
inline double UniformUnit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform double in the open interval (0, 1).
inline double UniformOpenUnit(Rng& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

inline bool Bernoulli(Rng& rng, double p) { return UniformUnit(rng) < p; }

// Uniform integer in [0, bound), bound > 0. Rejection sampling, unbiased.
inline std::uint64_t UniformIndex(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= limit) return r % bound;
  }
}

}  // namespace icpriv

#endif  // ICPRIV_RANDOM_H_

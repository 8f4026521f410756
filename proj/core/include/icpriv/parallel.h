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

#ifndef ICPRIV_PARALLEL_H_
#define ICPRIV_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace icpriv {

// Number of worker threads to use when the caller passes 0.
inline unsigned DefaultThreadCount() {
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(worker, index) for every index in [0, count) on `threads`
// workers. Indices are split into contiguous blocks, one per worker, so the
// body may keep per-worker scratch indexed by `worker`. Callers that need
// schedule-independent results must either write to per-index slots or
// reduce per-worker state commutatively. The first exception thrown by any
// body is rethrown after all workers join.
template <typename Body>
void ParallelFor(std::size_t count, unsigned threads, Body&& body) {
  if (threads == 0) threads = DefaultThreadCount();
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(0u, i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    const std::size_t begin = count * w / threads;
    const std::size_t end = count * (w + 1) / threads;
    workers.emplace_back([&, w, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) body(w, i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

// Worker count ParallelFor will actually use for `count` items.
inline unsigned EffectiveThreads(std::size_t count, unsigned threads) {
  if (threads == 0) threads = DefaultThreadCount();
  return static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
}

}  // namespace icpriv

#endif  // ICPRIV_PARALLEL_H_

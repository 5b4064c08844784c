// Copyright 2026 The anongame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ANONGAME_PARALLEL_SCAN_H_
#define ANONGAME_PARALLEL_SCAN_H_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "anongame/partition.h"

namespace anongame {

// Environment variable overriding the worker count of partition scans.
inline constexpr const char* kThreadsEnvVar = "ANONGAME_THREADS";

// Requested count if positive, else $ANONGAME_THREADS, else the hardware
// concurrency.
inline int ResolveThreads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv(kThreadsEnvVar)) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

template <typename T>
struct ScanHit {
  std::uint64_t rank = 0;
  T value;
};

// Calls try_one(const Partition&) -> std::optional<T> over the partitions of
// `total` into `parts` bins and returns the lowest-rank success. Workers
// claim fixed rank blocks; blocks starting past the best success so far are
// skipped, so the answer does not depend on the worker count.
template <typename T, typename Fn>
std::optional<ScanHit<T>> FirstInRankOrder(int total, int parts, int threads,
                                           Fn&& try_one) {
  const std::uint64_t count = NumPartitions(total, parts);
  constexpr std::uint64_t kBlock = 256;
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> next_block{0};
  std::atomic<std::uint64_t> best_rank{kNone};
  std::mutex mu;
  std::optional<ScanHit<T>> best;
  std::exception_ptr error;

  auto worker = [&] {
    try {
      while (true) {
        const std::uint64_t start = next_block.fetch_add(kBlock);
        if (start >= count || start > best_rank.load()) return;
        const std::uint64_t stop = std::min(count, start + kBlock);
        Partition x = Partition::Unrank(start, total, parts);
        for (std::uint64_t r = start; r < stop; ++r) {
          if (r > best_rank.load()) break;
          if (std::optional<T> hit = try_one(x)) {
            std::lock_guard<std::mutex> lock(mu);
            if (!best || r < best->rank) {
              best = ScanHit<T>{r, std::move(*hit)};
              best_rank.store(r);
            }
            break;
          }
          if (r + 1 < stop) x.Advance();
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!error) error = std::current_exception();
      best_rank.store(0);
    }
  };

  const int n_threads = static_cast<int>(
      std::min<std::uint64_t>(ResolveThreads(threads), count / kBlock + 1));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return best;
}

// Applies visit(const Partition&, std::uint64_t rank) to every partition,
// split across workers by rank block. visit must be thread safe.
template <typename Fn>
void ForEachPartition(int total, int parts, int threads, Fn&& visit) {
  const std::uint64_t count = NumPartitions(total, parts);
  constexpr std::uint64_t kBlock = 256;
  std::atomic<std::uint64_t> next_block{0};
  std::mutex mu;
  std::exception_ptr error;
  std::atomic<bool> failed{false};

  auto worker = [&] {
    try {
      while (!failed.load()) {
        const std::uint64_t start = next_block.fetch_add(kBlock);
        if (start >= count) return;
        const std::uint64_t stop = std::min(count, start + kBlock);
        Partition x = Partition::Unrank(start, total, parts);
        for (std::uint64_t r = start; r < stop; ++r) {
          visit(x, r);
          if (r + 1 < stop) x.Advance();
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!error) error = std::current_exception();
      failed.store(true);
    }
  };

  const int n_threads = static_cast<int>(
      std::min<std::uint64_t>(ResolveThreads(threads), count / kBlock + 1));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace anongame

#endif  // ANONGAME_PARALLEL_SCAN_H_

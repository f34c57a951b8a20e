// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace cutmit {

/// Runs fn(0..n-1) on up to `jobs` threads. Results must be written to
/// index-addressed storage by the caller, which makes the outcome identical
/// to the sequential order regardless of scheduling. If any call throws, the
/// exception from the lowest index is rethrown after all threads join.
template <typename Fn>
void parallel_for_index(std::size_t n, int jobs, Fn&& fn) {
  if (jobs < 1) jobs = 1;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw > 0 && static_cast<unsigned>(jobs) > hw) jobs = static_cast<int>(hw);
  if (static_cast<std::size_t>(jobs) > n) jobs = static_cast<int>(n);

  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }

  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace cutmit

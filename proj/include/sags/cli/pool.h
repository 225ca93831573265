#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace sags::cli {

// Runs task(i) for i in [0, count) on up to `workers` threads. Results are
// stored by index, so the output never depends on scheduling. The first
// exception thrown by any task is rethrown after all threads join.
template <class Result>
std::vector<Result> parallel_map(std::size_t count, int workers, const std::function<Result(std::size_t)>& task) {
  std::vector<Result> results(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      if (failed) return;
      try {
        results[i] = task(i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  const auto threads = static_cast<std::size_t>(std::max(1, workers));
  if (threads == 1 || count <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < std::min(threads, count); ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace sags::cli

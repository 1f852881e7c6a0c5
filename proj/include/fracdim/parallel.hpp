#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "fracdim/common.hpp"

namespace fracdim {

/// Runs worker(t) for every t in [0, num_tasks) across up to thread_count()
/// threads. Tasks are pulled dynamically; each task writes only to its own
/// output slot, so results are identical for any worker count.
template <typename F>
void parallel_for_tasks(std::size_t num_tasks, F&& worker) {
  if (num_tasks == 0) return;
  const int threads =
      static_cast<int>(std::min<std::size_t>(thread_count(), num_tasks));
  if (threads <= 1) {
    for (std::size_t t = 0; t < num_tasks; ++t) worker(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto run = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= num_tasks || failed.load(std::memory_order_relaxed)) return;
      try {
        worker(t);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (int i = 1; i < threads; ++i) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace fracdim

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace covermip::detail {

// Calls fn(i) for i in [0, count) on up to `threads` workers. Callers write
// results into per-index slots and reduce sequentially afterwards, so the
// outcome does not depend on the schedule. The first exception (lowest
// index) is rethrown.
template <typename Fn>
void parallel_for(std::uint64_t count, int threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  std::uint64_t error_index = count;
  auto worker = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
  };
  const auto n = static_cast<std::uint64_t>(threads);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(std::min(n, count)));
  for (std::uint64_t t = 0; t < std::min(n, count); ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace covermip::detail

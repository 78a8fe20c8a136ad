#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace edgecut::detail {

/// Splits [0, total) into `workers` contiguous ranges and runs
/// fn(begin, end, worker) on each, one thread per range. The first exception
/// thrown by any range is rethrown after all threads join.
template <typename Fn>
void parallel_ranges(std::uint64_t total, unsigned workers, Fn&& fn) {
  workers = std::max(1U, workers);
  if (workers == 1 || total < 2) {
    fn(std::uint64_t{0}, total, 0U);
    return;
  }
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  const std::uint64_t step = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min(total, step * w);
    const std::uint64_t end = std::min(total, begin + step);
    threads.emplace_back([&, begin, end, w] {
      try {
        fn(begin, end, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace edgecut::detail

#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cubeforge {

inline int effective_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc < 8u ? hc : 8u);
}

/// Runs fn(0..count-1) on a small worker pool. fn must only touch shared
/// state it owns per index; the first exception is rethrown after the join.
template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  const int j = effective_jobs(jobs);
  if (j <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
    } catch (...) {
      std::scoped_lock lock(error_mu);
      if (!error) error = std::current_exception();
      next.store(count);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(j);
  for (int t = 0; t < j; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace cubeforge

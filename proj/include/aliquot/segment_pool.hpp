#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "aliquot/divisor_sieve.hpp"

namespace aliquot {

struct SieveConfig {
  u64 segment_size = u64{1} << 20;
  unsigned threads = 0;  // 0 = std::thread::hardware_concurrency()

  unsigned resolved_threads() const {
    if (threads != 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }
};

// Runs `job(index)` for index in [0, count) on a small worker pool and returns
// the results in index order, so any later fold is independent of scheduling.
// The first exception thrown by a job is rethrown on the calling thread.
template <typename Result>
std::vector<Result> parallel_map(std::size_t count, unsigned threads,
                                 const std::function<Result(std::size_t)>& job) {
  std::vector<Result> results(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        results[i] = job(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };

  unsigned n = threads == 0 ? 1 : threads;
  if (n > count) n = count == 0 ? 1 : static_cast<unsigned>(count);
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

// Sieves [lo, hi) in segments of cfg.segment_size, hands each segment to
// `tally`, and returns the per-segment tallies in ascending segment order.
template <typename Tally>
std::vector<Tally> map_segments(u64 lo, u64 hi, const PrimeTable& pt, const SieveConfig& cfg,
                                const std::function<Tally(const SieveSegment&)>& tally) {
  if (hi <= lo) return {};
  const u64 step = cfg.segment_size == 0 ? 1 : cfg.segment_size;
  const std::size_t count = static_cast<std::size_t>((hi - lo + step - 1) / step);
  return parallel_map<Tally>(count, cfg.resolved_threads(), [&](std::size_t i) {
    u64 a = lo + i * step;
    u64 b = (hi - a > step) ? a + step : hi;
    return tally(sieve_range(a, b, pt));
  });
}

// Prime table large enough to sieve any window ending at or below x.
inline PrimeTable primes_for_sieve(u64 x) { return primes_up_to(isqrt(x) + 1); }

}  // namespace aliquot

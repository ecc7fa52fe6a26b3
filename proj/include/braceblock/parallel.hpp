#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace braceblock {

/// Worker count: hardware concurrency, capped by BRACEBLOCK_THREADS when set.
unsigned worker_count();

/// Runs body(i) for i in [0, count) with dynamic scheduling across workers.
/// body must be safe to call concurrently for distinct i. The first exception
/// thrown by any call stops further scheduling and is rethrown to the caller.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(worker_count(), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    try {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    } catch (...) {
      next = count;
      const std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

/// Tracks the smallest failing index among concurrently scanned ranges.
/// Scanners skip indices above the current minimum, so the result is the
/// first failure in index order regardless of scheduling.
class FirstFailure {
 public:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool beyond(std::size_t i) const { return i > first_.load(std::memory_order_relaxed); }

  void record(std::size_t i) {
    std::size_t cur = first_.load();
    while (i < cur && !first_.compare_exchange_weak(cur, i)) {
    }
  }

  bool found() const { return first_.load() != kNone; }
  std::size_t index() const { return first_.load(); }

 private:
  std::atomic<std::size_t> first_{kNone};
};

}  // namespace braceblock

#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <optional>
#include <thread>
#include <vector>

namespace majority {

struct SearchBudget {
  // Wall-clock limit; unset means unlimited.
  std::optional<std::chrono::seconds> time_limit;
  // Upper limit on candidate hypergraphs examined; 0 means unlimited.
  long max_candidates = 0;
  // Worker count for sharded scans. Results never depend on it.
  int threads = 1;
};

// Tracks a SearchBudget from the moment a search starts.
class BudgetClock {
 public:
  explicit BudgetClock(const SearchBudget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  bool expired(long candidates) const {
    if (budget_.max_candidates > 0 && candidates > budget_.max_candidates) return true;
    if (budget_.time_limit &&
        std::chrono::steady_clock::now() - start_ > *budget_.time_limit)
      return true;
    return false;
  }
  int threads() const { return std::max(1, budget_.threads); }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
};

// Runs body(i) for i in [0, count) over `threads` workers, each taking a
// contiguous shard. body must only write to per-index state.
template <class Body>
void parallel_for(std::size_t count, int threads, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(std::max(1, threads), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    pool.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
}

}  // namespace majority

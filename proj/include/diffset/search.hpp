#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace diffset {

enum class SearchMode { Exists, Count, All };

/// EXISTS: a proper witness was found. DS_ONLY: only perfect difference sets
/// are possible for these parameters and one was found. NONE: exhausted.
enum class SearchStatus { Exists, DsOnly, None, Timeout };

std::string to_string(SearchMode mode);
std::string to_string(SearchStatus status);

/// Node and wall-clock limits for an exhaustive search. Zero means unlimited.
struct SearchBudget {
  std::uint64_t node_limit = 0;
  double seconds = 0.0;
};

struct SearchReport {
  SearchStatus status = SearchStatus::None;
  std::vector<std::uint32_t> witness;
  std::vector<std::vector<std::uint32_t>> witnesses;  // ALL mode only
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

namespace detail {

/// Budget shared by all workers of one search. Workers report nodes in
/// batches, so limits are enforced to within a few thousand nodes.
class SharedBudget {
 public:
  explicit SharedBudget(const SearchBudget& budget)
      : node_limit_(budget.node_limit == 0 ? std::numeric_limits<std::uint64_t>::max() : budget.node_limit),
        has_deadline_(budget.seconds > 0.0),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(budget.seconds > 0.0 ? budget.seconds : 0.0))) {}

  bool expired() const noexcept { return expired_.load(std::memory_order_relaxed); }

  /// Adds a batch of nodes; returns false once the budget is spent.
  bool report(std::uint64_t batch) {
    const std::uint64_t total = nodes_.fetch_add(batch, std::memory_order_relaxed) + batch;
    if (total > node_limit_ || (has_deadline_ && std::chrono::steady_clock::now() > deadline_))
      expired_.store(true, std::memory_order_relaxed);
    return !expired();
  }

 private:
  std::uint64_t node_limit_;
  bool has_deadline_;
  std::chrono::steady_clock::time_point deadline_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> expired_{false};
};

/// Per-worker node counter that flushes to the shared budget every 256 nodes.
class BudgetGuard {
 public:
  explicit BudgetGuard(SharedBudget& shared) : shared_(shared), ok_(!shared.expired()) {}
  ~BudgetGuard() { flush(); }
  BudgetGuard(const BudgetGuard&) = delete;
  BudgetGuard& operator=(const BudgetGuard&) = delete;

  bool tick() {
    ++nodes_;
    if (++pending_ < 256) return ok_;
    return flush();
  }

  bool flush() {
    if (pending_ > 0) ok_ = shared_.report(pending_) && ok_;
    pending_ = 0;
    return ok_;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  SharedBudget& shared_;
  std::uint64_t nodes_ = 0;
  std::uint64_t pending_ = 0;
  bool ok_;
};

}  // namespace detail

}  // namespace diffset

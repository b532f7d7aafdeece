#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diffset/search.hpp"

namespace diffset {

/// Parameters forced on any (v, k)-ADS by the two-value counting identity.
struct ForcedParams {
  std::uint64_t lambda = 0;  // floor(k(k-1) / (v-1))
  std::uint64_t t = 0;       // (lambda+1)(v-1) - k(k-1)
  std::uint64_t t_hat = 0;   // min(t, v-1-t)

  /// t == v - 1: the counts are forced to be all lambda, so only a perfect DS can occur.
  bool ds_only(std::uint64_t v) const noexcept { return t == v - 1; }
};

ForcedParams forced_params(std::uint64_t v, std::uint64_t k);

/**
 * Walks one representative k-subset of Z_v per rotation class.
 *
 * A k-subset up to rotation is a necklace of its k cyclic gaps (positive,
 * summing to v). Gap necklaces are generated with the FKM prenecklace rule,
 * with the last gap forced by the sum and every later gap bounded below by
 * the first, so no branch is opened that cannot complete. The represented set
 * is {0, g1, g1+g2, ...}; moving between consecutive candidates changes one
 * mark per level, and the pairwise-difference profile is updated in O(k) per
 * changed mark.
 */
class NecklaceCursor {
 public:
  NecklaceCursor(std::uint32_t v, std::uint32_t k);

  std::uint32_t v() const noexcept { return v_; }
  std::uint32_t k() const noexcept { return k_; }
  /// Current marks, ascending, first mark 0.
  std::span<const std::uint32_t> marks() const noexcept { return {marks_.data(), marks_.size()}; }
  /// Incrementally maintained difference counts indexed by residue (index 0 unused).
  std::span<const std::uint32_t> profile() const noexcept { return counts_; }
  /// Characteristic word of the current set.
  std::vector<std::uint8_t> word() const;

  /// Visits every representative; the visitor returns false to stop early.
  /// Returns the number of representatives visited.
  std::uint64_t for_each(const std::function<bool(const NecklaceCursor&)>& visit);

  void push_mark(std::uint32_t x);
  void pop_mark();

 private:
  std::uint32_t v_;
  std::uint32_t k_;
  std::vector<std::uint32_t> marks_;
  std::vector<std::uint32_t> counts_;
};

/// Number of rotation classes visited by NecklaceCursor::for_each.
std::uint64_t enumerate_fixed_density(std::uint32_t v, std::uint32_t k,
                                      const std::function<bool(const NecklaceCursor&)>& visit = {});

struct AdsSearchOptions {
  SearchMode mode = SearchMode::Exists;
  SearchBudget budget;
  /// Prune a branch once a count exceeds lambda+1, too many counts reach lambda+1,
  /// or the remaining pairs cannot fill the deficit below lambda. Off: test every necklace.
  bool prune = true;
  unsigned jobs = 1;
};

/// Exhaustive search over rotation classes for a k-subset of Z_v whose counts lie in {lambda, lambda+1}.
/// Witnesses are lex-least under rotation. Requires 2 <= k <= v - 2.
SearchReport search_ads(std::uint32_t v, std::uint32_t k, const AdsSearchOptions& options = {});

/// Lex-least rotation of a set in Z_v, as a sorted vector.
std::vector<std::uint32_t> least_rotation(std::span<const std::uint32_t> set, std::uint32_t v);

struct GridCell {
  std::uint32_t v = 0;
  std::uint32_t k = 0;
  ForcedParams forced;
  SearchStatus status = SearchStatus::None;
  std::vector<std::uint32_t> witness;
  bool via_complement = false;
  std::uint64_t nodes = 0;
};

struct GridOptions {
  std::uint32_t v_min = 4;
  std::uint32_t v_max = 20;
  std::uint32_t k_min = 2;
  std::uint32_t k_max = 0;  // 0: up to v - 2
  AdsSearchOptions search;  // budget applies per cell
  /// Search both halves instead of deriving k > v/2 from the complement.
  bool search_both_halves = false;
};

/// One cell per (v, k) in v-major order.
std::vector<GridCell> existence_grid(const GridOptions& options);

/// CSV with header v,k,lambda,t,t_hat,status,witness (witness marks separated by spaces).
std::string grid_to_csv(std::span<const GridCell> cells);

/// One row per k, one column per v: E exists, D perfect DS, ? timeout, digit(s) t_hat for no ADS, '.' outside range.
std::string grid_to_text(std::span<const GridCell> cells);

}  // namespace diffset

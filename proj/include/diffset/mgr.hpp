#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diffset/groups.hpp"
#include "diffset/search.hpp"

namespace diffset {

/// True iff the k(k-1) ordered differences of `marks` mod v are pairwise distinct.
bool is_mgr(std::span<const std::uint32_t> marks, std::uint32_t v);

/// True iff no affine map x -> a x + b (gcd(a, v) = 1) sends the sorted set to a
/// lexicographically smaller sorted tuple. Marks must be sorted and contain 0.
bool is_canonical_affine(std::span<const std::uint32_t> marks, std::uint32_t v);

/// Prefix form of the test: false only if some affine image of the prefix is
/// already lexicographically below it, which rules out every extension whose
/// remaining marks are larger than the prefix's last mark.
bool is_canonical_prefix(std::span<const std::uint32_t> prefix, std::uint32_t v);

/// Lexicographically least sorted image of `set` under all affine maps mod v.
std::vector<std::uint32_t> affine_canonical_form(std::span<const std::uint32_t> set, std::uint32_t v);

struct MgrSearchOptions {
  SearchMode mode = SearchMode::Exists;
  SearchBudget budget;
  unsigned jobs = 1;
  /// With canonicity off, only translation is normalized (first mark 0);
  /// COUNT/ALL then report every MGR containing 0 as its least mark.
  bool canonical = true;
};

/// Exhaustive backtracking search for a (v, k)-MGR.
/// EXISTS returns the first witness in a fixed order, identical for any job count.
SearchReport search_mgr(std::uint32_t v, std::uint32_t k, const MgrSearchOptions& options = {});

/// Length of the shortest Golomb ruler with k marks, 1 <= k <= 15.
std::uint32_t golomb_length(std::uint32_t k);

struct Spectrum {
  std::uint32_t k = 0;
  std::uint32_t bound = 0;  // 2 L(k) + 1; every v >= bound is a member
  std::uint32_t first_searched = 0;
  std::vector<std::uint32_t> members;  // members below the bound, ascending
  std::vector<std::vector<std::uint32_t>> witnesses;
  std::vector<std::uint32_t> timeouts;  // moduli whose search ran out of budget
  std::uint64_t nodes = 0;

  bool complete() const noexcept { return timeouts.empty(); }
};

/// MGR(k): searches every v in [k(k-1)+1, 2 L(k)]; smaller v cannot hold k(k-1) distinct differences.
/// The budget in `options` applies per modulus.
Spectrum spectrum(std::uint32_t k, const MgrSearchOptions& options = {});

struct RelativeDsCheck {
  std::uint32_t v = 0;
  std::uint32_t m = 0;
  std::vector<std::uint32_t> set;
  std::vector<std::uint32_t> forbidden;  // {0, v/2}
  bool verified = false;
};

/// Reads a (k^2-k+2, k)-MGR as a relative ((k^2-k+2)/2, 2, k, 1)-DS in Z_v relative to {0, v/2}.
/// Throws std::invalid_argument if v has the wrong form or the marks are not an MGR.
RelativeDsCheck mgr_to_relative_ds(std::span<const std::uint32_t> marks, std::uint32_t k);

struct RyserVerdict {
  bool pass = false;
  std::string reason;
};

/// Necessary conditions for a cyclic relative (m, 2, k, lambda)-DS:
/// m even needs k - 2 lambda square, m odd needs k square.
RyserVerdict ryser_conditions(std::uint64_t m, std::uint64_t k, std::uint64_t lambda);

/// Reduces a relative (m, 2, k, lambda)-DS in Z_{2m} (forbidden {0, m}) mod m
/// and checks that the image is an (m, k, 2 lambda)-DS. Throws std::invalid_argument otherwise.
std::vector<std::uint32_t> ryser_project(std::span<const std::uint32_t> set, std::uint32_t m);

}  // namespace diffset

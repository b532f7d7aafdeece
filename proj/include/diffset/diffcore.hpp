#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diffset/groups.hpp"

namespace diffset {

/**
 * Multiset of pairwise differences of a subset D: counts[g] is the number of
 * ordered pairs (d_i, d_j), i != j, with d_i - d_j = g. This is the
 * off-identity coefficient vector of D D^{-1} in the group ring.
 *
 * Stored densely by element index; counts[0] is always zero.
 */
class DiffProfile {
 public:
  DiffProfile(const GroupSpec& group, std::span<const std::uint32_t> set);

  const GroupSpec& group() const noexcept { return group_; }
  std::uint32_t subset_size() const noexcept { return k_; }
  std::uint32_t count(std::uint32_t element) const { return counts_.at(element); }
  std::span<const std::uint32_t> counts() const noexcept { return counts_; }
  std::uint64_t total() const noexcept;

 private:
  GroupSpec group_;
  std::uint32_t k_;
  std::vector<std::uint32_t> counts_;
};

enum class SetKind { DifferenceSet, AlmostDifferenceSet, None };

std::string to_string(SetKind kind);

/// (v, k, lambda, t) with n = k - lambda. For a difference set t is v - 1.
struct AdsParams {
  std::uint64_t v = 0;
  std::uint64_t k = 0;
  std::uint64_t lambda = 0;
  std::uint64_t t = 0;

  std::uint64_t n() const noexcept { return k - lambda; }
  std::uint64_t t_hat() const noexcept;

  friend bool operator==(const AdsParams&, const AdsParams&) = default;
};

struct Classification {
  SetKind kind = SetKind::None;
  std::uint64_t v = 0;
  std::uint64_t k = 0;
  AdsParams params;  // meaningful unless kind == None

  bool is_ds() const noexcept { return kind == SetKind::DifferenceSet; }
  bool is_ads() const noexcept { return kind == SetKind::AlmostDifferenceSet; }
  bool matches(const AdsParams& p) const noexcept { return kind != SetKind::None && params == p; }

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// min(t, v - 1 - t). Throws std::out_of_range unless 0 <= t <= v - 1.
std::uint64_t t_hat(std::uint64_t t, std::uint64_t v);

/// Two-value classification of a profile; a perfect difference set is never reported as an ADS.
Classification classify(const DiffProfile& profile);
Classification classify(const GroupSpec& group, std::span<const std::uint32_t> set);

/// Classification from per-element counts given as (value, multiplicity) pairs over G \ {0}.
Classification classify_counts(std::uint64_t v, std::uint64_t k,
                               std::span<const std::pair<std::uint64_t, std::uint64_t>> value_multiplicities);

/// S(D): all sums of two distinct elements, sorted.
IndexSet sumset(const GroupSpec& group, std::span<const std::uint32_t> set);

/// G \ D, sorted.
IndexSet complement_set(const GroupSpec& group, std::span<const std::uint32_t> set);

struct ComplementResult {
  IndexSet set;
  Classification original;
  Classification complement;
  AdsParams predicted;  // (v, v - k, v - 2k + lambda, t)
};

/// Complements a DS or ADS and checks the parameter map by re-classifying.
/// Throws std::invalid_argument when D classifies as None.
ComplementResult complement(const GroupSpec& group, std::span<const std::uint32_t> set);

/// True iff every count is 0 on N \ {0} and lambda on G \ N, |D| = k and |G| = m n.
/// Throws std::invalid_argument if `subgroup` is not closed under subtraction or misses 0.
bool verify_relative_ds(const GroupSpec& group, std::span<const std::uint32_t> set,
                        std::span<const std::uint32_t> subgroup, std::uint64_t m, std::uint64_t n, std::uint64_t k,
                        std::uint64_t lambda);

/// Independent O(k^2) recount used to check incrementally maintained profiles.
std::vector<std::uint32_t> recount_profile(const GroupSpec& group, std::span<const std::uint32_t> set);

}  // namespace diffset

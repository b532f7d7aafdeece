#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace diffset {

/// An element of Z_{n1} x ... x Z_{nr} as its reduced coordinate vector.
struct GroupElement {
  std::vector<std::uint32_t> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Element indices in [0, v) under the row-major mixed-radix ordering.
using IndexSet = std::vector<std::uint32_t>;

/**
 * A finite abelian group presented as a direct product of cyclic factors.
 *
 * The factor list is kept exactly as given (Z2 x Z8 is not merged into Z16).
 * Elements are addressed either by coordinates or by their row-major
 * mixed-radix index, so index_of((c0, c1)) = c0 * n1 + c1 for two factors.
 * All index-level arithmetic below is what the search and classification
 * code runs on; the coordinate API exists for I/O.
 */
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<std::uint32_t> orders);
  static GroupSpec cyclic(std::uint32_t v) { return GroupSpec({v}); }

  const std::vector<std::uint32_t>& orders() const noexcept { return orders_; }
  std::size_t factor_count() const noexcept { return orders_.size(); }
  std::uint32_t order() const noexcept { return v_; }

  /// True when the factor orders are pairwise coprime.
  bool is_cyclic() const noexcept;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t neg(std::uint32_t a) const noexcept;
  std::uint32_t twice(std::uint32_t a) const noexcept { return add(a, a); }

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement twice(const GroupElement& a) const { return add(a, a); }
  GroupElement identity() const;

  GroupElement element_at(std::uint32_t index) const;
  std::uint32_t index_of(const GroupElement& e) const;

  /// Throws std::invalid_argument unless `e` has the right arity and reduced coordinates.
  void check(const GroupElement& e) const;

  /// Converts and validates a coordinate list; rejects duplicates. Result is sorted.
  IndexSet to_indices(std::span<const GroupElement> elements) const;
  std::vector<GroupElement> to_elements(std::span<const std::uint32_t> indices) const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.orders_ == b.orders_; }

 private:
  std::vector<std::uint32_t> orders_;
  std::vector<std::uint32_t> strides_;
  std::uint32_t v_ = 1;
};

/// All a in [1, v) with gcd(a, v) = 1, ascending.
std::vector<std::uint32_t> units(std::uint32_t v);

/// Validates an index set against a group order: in range and pairwise distinct. Returns it sorted.
IndexSet normalized_set(std::span<const std::uint32_t> set, std::uint32_t v);

}  // namespace diffset

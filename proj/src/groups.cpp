#include "diffset/groups.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace diffset {

GroupSpec::GroupSpec(std::vector<std::uint32_t> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw std::invalid_argument("group needs at least one cyclic factor");
  std::uint64_t v = 1;
  for (const auto n : orders_) {
    if (n < 2) throw std::invalid_argument("cyclic factor order must be >= 2, got " + std::to_string(n));
    v *= n;
    if (v > (1ULL << 31)) throw std::invalid_argument("group order too large");
  }
  v_ = static_cast<std::uint32_t>(v);
  strides_.assign(orders_.size(), 1);
  for (std::size_t i = orders_.size() - 1; i > 0; --i) strides_[i - 1] = strides_[i] * orders_[i];
}

bool GroupSpec::is_cyclic() const noexcept {
  for (std::size_t i = 0; i < orders_.size(); ++i)
    for (std::size_t j = i + 1; j < orders_.size(); ++j)
      if (std::gcd(orders_[i], orders_[j]) != 1) return false;
  return true;
}

std::uint32_t GroupSpec::add(std::uint32_t a, std::uint32_t b) const noexcept {
  if (orders_.size() == 1) {
    const std::uint32_t s = a + b;
    return s >= v_ ? s - v_ : s;
  }
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const std::uint32_t n = orders_[i];
    const std::uint32_t ca = a / strides_[i] % n;
    const std::uint32_t cb = b / strides_[i] % n;
    const std::uint32_t c = ca + cb >= n ? ca + cb - n : ca + cb;
    out += c * strides_[i];
  }
  return out;
}

std::uint32_t GroupSpec::neg(std::uint32_t a) const noexcept {
  if (orders_.size() == 1) return a == 0 ? 0 : v_ - a;
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const std::uint32_t c = a / strides_[i] % orders_[i];
    out += (c == 0 ? 0 : orders_[i] - c) * strides_[i];
  }
  return out;
}

std::uint32_t GroupSpec::sub(std::uint32_t a, std::uint32_t b) const noexcept {
  if (orders_.size() == 1) return a >= b ? a - b : a + v_ - b;
  return add(a, neg(b));
}

void GroupSpec::check(const GroupElement& e) const {
  if (e.coords.size() != orders_.size())
    throw std::invalid_argument("element has " + std::to_string(e.coords.size()) + " coordinates, group has " +
                                std::to_string(orders_.size()) + " factors");
  for (std::size_t i = 0; i < orders_.size(); ++i)
    if (e.coords[i] >= orders_[i])
      throw std::invalid_argument("coordinate " + std::to_string(e.coords[i]) + " not reduced mod " +
                                  std::to_string(orders_[i]));
}

GroupElement GroupSpec::add(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  return element_at(add(index_of(a), index_of(b)));
}

GroupElement GroupSpec::neg(const GroupElement& a) const {
  check(a);
  return element_at(neg(index_of(a)));
}

GroupElement GroupSpec::identity() const { return GroupElement{std::vector<std::uint32_t>(orders_.size(), 0)}; }

GroupElement GroupSpec::element_at(std::uint32_t index) const {
  if (index >= v_) throw std::out_of_range("element index " + std::to_string(index) + " out of range");
  GroupElement e;
  e.coords.resize(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) e.coords[i] = index / strides_[i] % orders_[i];
  return e;
}

std::uint32_t GroupSpec::index_of(const GroupElement& e) const {
  check(e);
  std::uint32_t idx = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) idx += e.coords[i] * strides_[i];
  return idx;
}

IndexSet GroupSpec::to_indices(std::span<const GroupElement> elements) const {
  IndexSet out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(index_of(e));
  return normalized_set(out, v_);
}

std::vector<GroupElement> GroupSpec::to_elements(std::span<const std::uint32_t> indices) const {
  std::vector<GroupElement> out;
  out.reserve(indices.size());
  for (const auto i : indices) out.push_back(element_at(i));
  return out;
}

std::vector<std::uint32_t> units(std::uint32_t v) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t a = 1; a < v; ++a)
    if (std::gcd(a, v) == 1) out.push_back(a);
  return out;
}

IndexSet normalized_set(std::span<const std::uint32_t> set, std::uint32_t v) {
  IndexSet out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] >= v) throw std::invalid_argument("element " + std::to_string(out[i]) + " outside group of order " +
                                                 std::to_string(v));
    if (i > 0 && out[i] == out[i - 1])
      throw std::invalid_argument("duplicate element " + std::to_string(out[i]) + " in set");
  }
  return out;
}

}  // namespace diffset

#include "diffset/diffcore.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace diffset {

DiffProfile::DiffProfile(const GroupSpec& group, std::span<const std::uint32_t> set)
    : group_(group), k_(static_cast<std::uint32_t>(set.size())), counts_(recount_profile(group, set)) {}

std::uint64_t DiffProfile::total() const noexcept {
  std::uint64_t s = 0;
  for (const auto c : counts_) s += c;
  return s;
}

std::vector<std::uint32_t> recount_profile(const GroupSpec& group, std::span<const std::uint32_t> set) {
  const IndexSet d = normalized_set(set, group.order());
  std::vector<std::uint32_t> counts(group.order(), 0);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      if (i != j) ++counts[group.sub(d[i], d[j])];
  return counts;
}

std::string to_string(SetKind kind) {
  switch (kind) {
    case SetKind::DifferenceSet: return "DS";
    case SetKind::AlmostDifferenceSet: return "ADS";
    case SetKind::None: return "NONE";
  }
  return "NONE";
}

std::uint64_t t_hat(std::uint64_t t, std::uint64_t v) {
  if (v == 0 || t > v - 1) throw std::out_of_range("t_hat: t must lie in [0, v-1]");
  return std::min(t, v - 1 - t);
}

std::uint64_t AdsParams::t_hat() const noexcept { return (v == 0 || t > v - 1) ? 0 : std::min(t, v - 1 - t); }

Classification classify_counts(std::uint64_t v, std::uint64_t k,
                               std::span<const std::pair<std::uint64_t, std::uint64_t>> value_multiplicities) {
  Classification c;
  c.v = v;
  c.k = k;
  std::map<std::uint64_t, std::uint64_t> hist;
  for (const auto& [value, mult] : value_multiplicities)
    if (mult > 0) hist[value] += mult;
  if (hist.empty()) {
    // v == 1: nothing off the identity, treat as vacuous difference set
    c.kind = SetKind::DifferenceSet;
    c.params = AdsParams{v, k, 0, v - 1};
    return c;
  }
  if (hist.size() == 1) {
    c.kind = SetKind::DifferenceSet;
    c.params = AdsParams{v, k, hist.begin()->first, v - 1};
    return c;
  }
  if (hist.size() == 2) {
    const auto lo = *hist.begin();
    const auto hi = *std::next(hist.begin());
    if (hi.first == lo.first + 1) {
      c.kind = SetKind::AlmostDifferenceSet;
      c.params = AdsParams{v, k, lo.first, lo.second};
      return c;
    }
  }
  c.kind = SetKind::None;
  return c;
}

Classification classify(const DiffProfile& profile) {
  const auto counts = profile.counts();
  const std::uint64_t v = profile.group().order();
  std::map<std::uint64_t, std::uint64_t> hist;
  for (std::size_t g = 1; g < counts.size(); ++g) ++hist[counts[g]];
  std::vector<std::pair<std::uint64_t, std::uint64_t>> vm(hist.begin(), hist.end());
  return classify_counts(v, profile.subset_size(), vm);
}

Classification classify(const GroupSpec& group, std::span<const std::uint32_t> set) {
  return classify(DiffProfile(group, set));
}

IndexSet sumset(const GroupSpec& group, std::span<const std::uint32_t> set) {
  const IndexSet d = normalized_set(set, group.order());
  std::vector<char> hit(group.order(), 0);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) hit[group.add(d[i], d[j])] = 1;
  IndexSet out;
  for (std::uint32_t g = 0; g < group.order(); ++g)
    if (hit[g]) out.push_back(g);
  return out;
}

IndexSet complement_set(const GroupSpec& group, std::span<const std::uint32_t> set) {
  const IndexSet d = normalized_set(set, group.order());
  IndexSet out;
  out.reserve(group.order() - d.size());
  std::size_t j = 0;
  for (std::uint32_t g = 0; g < group.order(); ++g) {
    if (j < d.size() && d[j] == g) {
      ++j;
      continue;
    }
    out.push_back(g);
  }
  return out;
}

ComplementResult complement(const GroupSpec& group, std::span<const std::uint32_t> set) {
  ComplementResult r;
  r.original = classify(group, set);
  if (r.original.kind == SetKind::None) throw std::invalid_argument("complement: set is neither a DS nor an ADS");
  const auto& p = r.original.params;
  r.set = complement_set(group, set);
  r.complement = classify(group, r.set);
  r.predicted = AdsParams{p.v, p.v - p.k, p.v + p.lambda - 2 * p.k, p.t};
  if (!r.complement.matches(r.predicted))
    throw std::logic_error("complement parameter map violated; classification is inconsistent");
  return r;
}

bool verify_relative_ds(const GroupSpec& group, std::span<const std::uint32_t> set,
                        std::span<const std::uint32_t> subgroup, std::uint64_t m, std::uint64_t n, std::uint64_t k,
                        std::uint64_t lambda) {
  const IndexSet sub = normalized_set(subgroup, group.order());
  std::vector<char> in_n(group.order(), 0);
  for (const auto x : sub) in_n[x] = 1;
  if (sub.empty() || !in_n[0]) throw std::invalid_argument("forbidden subgroup must contain the identity");
  for (const auto x : sub)
    for (const auto y : sub)
      if (!in_n[group.sub(x, y)]) throw std::invalid_argument("forbidden subgroup is not closed");
  if (m * n != group.order() || sub.size() != n || set.size() != k) return false;
  const auto counts = recount_profile(group, set);
  for (std::uint32_t g = 1; g < group.order(); ++g) {
    const std::uint64_t want = in_n[g] ? 0 : lambda;
    if (counts[g] != want) return false;
  }
  return true;
}

}  // namespace diffset

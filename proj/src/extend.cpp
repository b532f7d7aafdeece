#include "diffset/extend.hpp"

#include <algorithm>
#include <stdexcept>

#include "parallel.hpp"

namespace diffset {

namespace {

Classification require_ds(const GroupSpec& group, std::span<const std::uint32_t> set) {
  const Classification c = classify(group, set);
  if (!c.is_ds()) throw std::invalid_argument("set is not a difference set (" + to_string(c.kind) + ")");
  return c;
}

// The verdict a one-element change must produce, given the ADS parameters it
// predicts: t = 0 or t = v - 1 collapse to a perfect difference set.
Classification expected_verdict(std::uint64_t v, std::uint64_t k, std::uint64_t lambda, std::uint64_t t) {
  Classification c;
  c.v = v;
  c.k = k;
  if (t == 0) {
    c.kind = SetKind::DifferenceSet;
    c.params = AdsParams{v, k, lambda + 1, v - 1};
  } else if (t == v - 1) {
    c.kind = SetKind::DifferenceSet;
    c.params = AdsParams{v, k, lambda, v - 1};
  } else {
    c.kind = SetKind::AlmostDifferenceSet;
    c.params = AdsParams{v, k, lambda, t};
  }
  return c;
}

bool use_sumset(const GroupSpec& group, ExtensionRoute route) {
  if (route == ExtensionRoute::Sumset) return true;
  if (route == ExtensionRoute::General) return false;
  return group.order() % 2 == 1;
}

// (g - D) cap (D - g) for a single candidate, evaluated literally.
// `skip_zero` ignores the intersection at 0 produced by g in D.
bool literal_condition(const GroupSpec& group, const IndexSet& d, std::uint32_t g, bool skip_zero,
                       std::vector<char>& scratch) {
  for (const auto x : d) scratch[group.sub(g, x)] = 1;
  bool ok = true;
  for (const auto x : d) {
    const std::uint32_t y = group.sub(x, g);
    if (skip_zero && y == 0) continue;
    if (scratch[y]) {
      ok = false;
      break;
    }
  }
  for (const auto x : d) scratch[group.sub(g, x)] = 0;
  return ok;
}

}  // namespace

IndexSet addable_elements(const GroupSpec& group, std::span<const std::uint32_t> set, ExtensionRoute route) {
  const IndexSet d = normalized_set(set, group.order());
  require_ds(group, d);
  std::vector<char> in_d(group.order(), 0);
  for (const auto x : d) in_d[x] = 1;
  IndexSet out;
  if (use_sumset(group, route)) {
    std::vector<char> in_sum(group.order(), 0);
    for (const auto s : sumset(group, d)) in_sum[s] = 1;
    for (std::uint32_t g = 0; g < group.order(); ++g)
      if (!in_d[g] && !in_sum[group.twice(g)]) out.push_back(g);
  } else {
    std::vector<char> scratch(group.order(), 0);
    for (std::uint32_t g = 0; g < group.order(); ++g)
      if (!in_d[g] && literal_condition(group, d, g, false, scratch)) out.push_back(g);
  }
  return out;
}

IndexSet removable_elements(const GroupSpec& group, std::span<const std::uint32_t> set, ExtensionRoute route) {
  const IndexSet d = normalized_set(set, group.order());
  const Classification base = require_ds(group, d);
  if (base.params.lambda < 1) throw std::invalid_argument("removal needs a difference set with lambda >= 1");
  IndexSet out;
  if (use_sumset(group, route)) {
    std::vector<char> in_sum(group.order(), 0);
    for (const auto s : sumset(group, d)) in_sum[s] = 1;
    for (const auto x : d)
      if (!in_sum[group.twice(x)]) out.push_back(x);
  } else {
    std::vector<char> scratch(group.order(), 0);
    for (const auto x : d)
      if (literal_condition(group, d, x, true, scratch)) out.push_back(x);
  }
  return out;
}

ExtensionReport extension_report(const GroupSpec& group, std::span<const std::uint32_t> set) {
  ExtensionReport rep{group, normalized_set(set, group.order()), {}, {}, {}};
  rep.base = require_ds(group, rep.set);
  const std::uint64_t v = group.order();
  const std::uint64_t k = rep.set.size();
  const std::uint64_t lambda = rep.base.params.lambda;

  const Classification want_add = expected_verdict(v, k + 1, lambda, v - 1 - 2 * k);
  for (const auto g : addable_elements(group, rep.set)) {
    IndexSet grown = rep.set;
    grown.insert(std::upper_bound(grown.begin(), grown.end(), g), g);
    const Classification got = classify(group, grown);
    if (got != want_add) throw std::logic_error("addition of element " + std::to_string(g) + " broke the ADS bound");
    rep.addable.push_back({g, got, got.is_ds()});
  }
  if (lambda >= 1) {
    const Classification want_remove = expected_verdict(v, k - 1, lambda - 1, 2 * (k - 1));
    for (const auto x : removable_elements(group, rep.set)) {
      IndexSet shrunk;
      for (const auto y : rep.set)
        if (y != x) shrunk.push_back(y);
      const Classification got = classify(group, shrunk);
      if (got != want_remove)
        throw std::logic_error("removal of element " + std::to_string(x) + " broke the ADS bound");
      rep.removable.push_back({x, got, got.is_ds()});
    }
  }
  return rep;
}

ScanResult scan_database(std::span<const SetRecord> records, unsigned jobs) {
  std::vector<std::optional<ExtensionReport>> reports(records.size());
  std::vector<std::string> errors(records.size());
  detail::parallel_for(records.size(), jobs, [&](std::size_t i) {
    try {
      reports[i] = extension_report(records[i].group, records[i].set);
    } catch (const std::exception& e) {
      errors[i] = e.what();
      if (errors[i].empty()) errors[i] = "error";
    }
  });
  ScanResult out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!errors[i].empty()) {
      out.failures.push_back({i, records[i].label, errors[i]});
      continue;
    }
    if (reports[i] && (!reports[i]->addable.empty() || !reports[i]->removable.empty()))
      out.reports.emplace_back(i, std::move(*reports[i]));
  }
  return out;
}

}  // namespace diffset

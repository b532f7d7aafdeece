#include <gtest/gtest.h>

#include <stdexcept>

#include "diffset/diffcore.hpp"
#include "diffset/extend.hpp"
#include "diffset/families.hpp"
#include "oracles.hpp"

using namespace diffset;

namespace {

std::vector<oracle::Coords> coords_of(const GroupSpec& g, const IndexSet& s) {
  std::vector<oracle::Coords> out;
  for (const auto i : s) out.push_back(g.element_at(i).coords);
  return out;
}

// Elements whose addition keeps every count in {lambda, lambda+1} with exactly 2k raised.
IndexSet addable_oracle(const GroupSpec& g, const IndexSet& d, std::uint64_t lambda) {
  IndexSet out;
  const std::uint64_t v = g.order(), k = d.size();
  for (std::uint32_t x = 0; x < v; ++x) {
    if (std::binary_search(d.begin(), d.end(), x)) continue;
    IndexSet e = d;
    e.insert(std::upper_bound(e.begin(), e.end(), x), x);
    const oracle::Kind kd = oracle::kind_of_set(g.orders(), coords_of(g, e));
    const bool ok = (kd.kind == 1 && kd.lambda == lambda && kd.t == v - 1 - 2 * k) ||
                    (kd.kind == 0 && 2 * k == v - 1 && kd.lambda == lambda + 1);
    if (ok) out.push_back(x);
  }
  return out;
}

// Elements whose removal lowers exactly 2(k-1) counts by one.
IndexSet removable_oracle(const GroupSpec& g, const IndexSet& d, std::uint64_t lambda) {
  IndexSet out;
  const std::uint64_t v = g.order(), k = d.size();
  for (const auto x : d) {
    IndexSet e;
    for (const auto y : d)
      if (y != x) e.push_back(y);
    const oracle::Kind kd = oracle::kind_of_set(g.orders(), coords_of(g, e));
    const bool ok = (kd.kind == 1 && kd.lambda == lambda - 1 && kd.t == 2 * (k - 1)) ||
                    (kd.kind == 0 && 2 * (k - 1) == v - 1 && kd.lambda == lambda - 1);
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<std::pair<GroupSpec, IndexSet>> difference_sets() {
  std::vector<std::pair<GroupSpec, IndexSet>> out;
  for (std::uint64_t p : {7ULL, 11ULL, 19ULL, 23ULL, 31ULL, 43ULL, 47ULL})
    out.emplace_back(GroupSpec::cyclic(static_cast<std::uint32_t>(p)), paley(p));
  for (std::uint32_t q : {2u, 3u, 5u}) out.emplace_back(GroupSpec::cyclic(q * q + q + 1), singer_planar(q));
  out.emplace_back(GroupSpec::cyclic(37), power_residues(37, 4));
  for (const auto& r : sporadic_records())
    if (r.group.order() <= 64) out.emplace_back(r.group, r.group.to_indices(r.set));
  return out;
}

}  // namespace

TEST(Extend, AutoRouteMatchesOracle) {
  for (const auto& [g, d] : difference_sets()) {
    const Classification c = classify(g, d);
    ASSERT_TRUE(c.is_ds());
    EXPECT_EQ(addable_elements(g, d), addable_oracle(g, d, c.params.lambda)) << g.order();
    if (c.params.lambda >= 1) {
      EXPECT_EQ(removable_elements(g, d), removable_oracle(g, d, c.params.lambda)) << g.order();
    }
  }
}

TEST(Extend, SumsetAndGeneralRoutesAgreeForOddOrder) {
  for (const auto& [g, d] : difference_sets()) {
    if (g.order() % 2 == 0) continue;
    EXPECT_EQ(addable_elements(g, d, ExtensionRoute::Sumset), addable_elements(g, d, ExtensionRoute::General));
    if (classify(g, d).params.lambda >= 1) {
      EXPECT_EQ(removable_elements(g, d, ExtensionRoute::Sumset), removable_elements(g, d, ExtensionRoute::General));
    }
  }
}

TEST(Extend, Z2xZ8CounterexampleBreaksTheSumsetRoute) {
  const SporadicRecord& r = sporadic("16-6-2-Z2xZ8");
  const IndexSet d = r.group.to_indices(r.set);
  const std::uint32_t e00 = r.group.index_of({{0, 0}});
  const std::uint32_t e02 = r.group.index_of({{0, 2}});
  const IndexSet removable = removable_elements(r.group, d);
  EXPECT_FALSE(std::binary_search(removable.begin(), removable.end(), e00));
  EXPECT_FALSE(std::binary_search(removable.begin(), removable.end(), e02));
  EXPECT_EQ(removable, removable_oracle(r.group, d, 2));
  // The sumset shortcut wrongly admits both.
  const IndexSet shortcut = removable_elements(r.group, d, ExtensionRoute::Sumset);
  EXPECT_TRUE(std::binary_search(shortcut.begin(), shortcut.end(), e00));
  EXPECT_TRUE(std::binary_search(shortcut.begin(), shortcut.end(), e02));
}

TEST(Extend, Quartic37EveryElementRemovable) {
  const GroupSpec g = GroupSpec::cyclic(37);
  const IndexSet d = power_residues(37, 4);
  EXPECT_EQ(removable_elements(g, d), d);
  const ExtensionReport rep = extension_report(g, d);
  ASSERT_EQ(rep.removable.size(), 9u);
  for (const auto& r : rep.removable) {
    EXPECT_TRUE(r.result.is_ads());
    EXPECT_EQ(r.result.params, (AdsParams{37, 8, 1, 16}));
    EXPECT_FALSE(r.degenerate);
  }
}

TEST(Extend, DocumentedExtensionsOfSporadicRecords) {
  for (const auto& r : sporadic_records()) {
    if (!r.extension) continue;
    const ExtensionReport rep = extension_report(r.group, r.group.to_indices(r.set));
    const std::uint32_t want = r.group.index_of(*r.extension);
    const auto it = std::find_if(rep.addable.begin(), rep.addable.end(),
                                 [&](const Extension& e) { return e.element == want; });
    ASSERT_NE(it, rep.addable.end()) << r.id;
    const std::uint64_t v = r.params.v, k = r.params.k;
    EXPECT_EQ(it->result.params, (AdsParams{v, k + 1, r.params.lambda, v - 1 - 2 * k})) << r.id;
  }
}

TEST(Extend, ReportResultsReclassify) {
  for (const auto& [g, d] : difference_sets()) {
    const ExtensionReport rep = extension_report(g, d);
    for (const auto& e : rep.addable) {
      IndexSet s = d;
      s.insert(std::upper_bound(s.begin(), s.end(), e.element), e.element);
      EXPECT_EQ(classify(g, s), e.result);
    }
  }
}

TEST(Extend, RejectsNonDifferenceSets) {
  const GroupSpec g = GroupSpec::cyclic(10);
  EXPECT_THROW(addable_elements(g, IndexSet{0, 1, 2, 3}), std::invalid_argument);
  // A planar set has lambda = 1, so removal is allowed; Z_7 {1,2,4} with lambda 1.
  EXPECT_NO_THROW(removable_elements(GroupSpec::cyclic(7), IndexSet{1, 2, 4}));
}

TEST(Extend, ScanCollectsFailuresAndSkipsEmptyReports) {
  std::vector<SetRecord> records;
  records.push_back({GroupSpec::cyclic(10), {0, 1, 2, 3}, "not-a-ds"});
  for (const auto& r : sporadic_records()) records.push_back({r.group, r.group.to_indices(r.set), r.id});
  const ScanResult one = scan_database(records, 1);
  const ScanResult many = scan_database(records, 4);
  ASSERT_EQ(one.failures.size(), 1u);
  EXPECT_EQ(one.failures[0].label, "not-a-ds");
  EXPECT_EQ(one.failures[0].index, 0u);
  ASSERT_EQ(one.reports.size(), many.reports.size());
  for (std::size_t i = 0; i < one.reports.size(); ++i) {
    EXPECT_EQ(one.reports[i].first, many.reports[i].first);
    EXPECT_FALSE(one.reports[i].second.addable.empty() && one.reports[i].second.removable.empty());
    if (i > 0) {
      EXPECT_LT(one.reports[i - 1].first, one.reports[i].first);
    }
  }
}

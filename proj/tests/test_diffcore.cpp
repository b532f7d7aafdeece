#include <gtest/gtest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "diffset/diffcore.hpp"
#include "diffset/families.hpp"
#include "oracles.hpp"

using namespace diffset;

namespace {

IndexSet random_subset(std::mt19937_64& rng, std::uint32_t v, std::uint32_t k) {
  std::vector<std::uint32_t> all(v);
  std::iota(all.begin(), all.end(), 0u);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<oracle::Coords> coords_of(const GroupSpec& g, const IndexSet& s) {
  std::vector<oracle::Coords> out;
  for (const auto i : s) out.push_back(g.element_at(i).coords);
  return out;
}

const std::vector<std::vector<std::uint32_t>> kShapes = {{13}, {16}, {2, 8}, {4, 4}, {3, 7}, {2, 2, 4}, {48}};

}  // namespace

TEST(DiffProfile, MatchesCoordinateOracle) {
  std::mt19937_64 rng(1);
  for (const auto& orders : kShapes) {
    const GroupSpec g(orders);
    for (int trial = 0; trial < 40; ++trial) {
      const IndexSet s = random_subset(rng, g.order(), 1 + rng() % (g.order() - 1));
      const DiffProfile p(g, s);
      const auto ref = oracle::differences(orders, coords_of(g, s));
      std::uint64_t total = 0;
      for (std::uint32_t e = 0; e < g.order(); ++e) {
        const auto it = ref.find(g.element_at(e).coords);
        EXPECT_EQ(p.count(e), it == ref.end() ? 0u : it->second);
        total += p.count(e);
      }
      EXPECT_EQ(p.count(0), 0u);
      EXPECT_EQ(p.total(), s.size() * (s.size() - 1));
      EXPECT_EQ(total, p.total());
      EXPECT_EQ(recount_profile(g, s), std::vector<std::uint32_t>(p.counts().begin(), p.counts().end()));
    }
  }
}

TEST(Classify, AgreesWithOracleOnRandomSets) {
  std::mt19937_64 rng(2);
  for (const auto& orders : kShapes) {
    const GroupSpec g(orders);
    for (int trial = 0; trial < 200; ++trial) {
      const IndexSet s = random_subset(rng, g.order(), 2 + rng() % (g.order() - 3));
      const Classification c = classify(g, s);
      const oracle::Kind k = oracle::kind_of_set(orders, coords_of(g, s));
      ASSERT_EQ(static_cast<int>(c.kind), k.kind);
      if (k.kind != 2) {
        EXPECT_EQ(c.params.lambda, k.lambda);
        EXPECT_EQ(c.params.t, k.t);
        EXPECT_EQ(c.params.v, g.order());
        EXPECT_EQ(c.params.k, s.size());
      }
    }
  }
}

TEST(Classify, KnownSets) {
  const Classification qr = classify(GroupSpec::cyclic(23), paley(23));
  EXPECT_TRUE(qr.is_ds());
  EXPECT_EQ(qr.params, (AdsParams{23, 11, 5, 22}));
  // Perfect difference sets are never reported as ADS.
  EXPECT_FALSE(qr.is_ads());
  const Classification mgr = classify(GroupSpec::cyclic(14), IndexSet{0, 1, 4, 6});
  EXPECT_TRUE(mgr.is_ads());
  EXPECT_EQ(mgr.params, (AdsParams{14, 4, 0, 1}));
  const Classification none = classify(GroupSpec::cyclic(10), IndexSet{0, 1, 2, 3});
  EXPECT_EQ(none.kind, SetKind::None);
}

TEST(Classify, InvariantUnderTranslationAndUnits) {
  std::mt19937_64 rng(3);
  const std::vector<std::pair<std::uint32_t, IndexSet>> seeds = {
      {23, paley(23)},
      {37, power_residues(37, 4)},
      {14, {0, 1, 4, 6}},
      {39, {1, 2, 3, 5, 9, 13, 16, 19, 21, 22, 24, 26, 27, 28, 31, 32, 33}},
      {50, {1, 2, 3, 5, 7, 8, 10, 12, 17, 18, 20, 21, 24, 25, 28, 29, 31, 37, 42, 43}},
  };
  for (const auto& [v, base] : seeds) {
    const GroupSpec g = GroupSpec::cyclic(v);
    const Classification c0 = classify(g, base);
    ASSERT_NE(c0.kind, SetKind::None);
    for (const auto a : units(v)) {
      const std::uint32_t shift = static_cast<std::uint32_t>(rng() % v);
      IndexSet moved;
      for (const auto x : base) moved.push_back(static_cast<std::uint32_t>((std::uint64_t(a) * x + shift) % v));
      std::sort(moved.begin(), moved.end());
      EXPECT_EQ(classify(g, moved), c0) << "v=" << v << " a=" << a;
    }
  }
}

TEST(Classify, CountsRouteAgreesWithSetRoute) {
  const GroupSpec g = GroupSpec::cyclic(37);
  const IndexSet s = power_residues(37, 4);
  const DiffProfile p(g, s);
  std::map<std::uint64_t, std::uint64_t> hist;
  for (std::uint32_t e = 1; e < 37; ++e) ++hist[p.count(e)];
  std::vector<std::pair<std::uint64_t, std::uint64_t>> vm(hist.begin(), hist.end());
  EXPECT_EQ(classify_counts(37, s.size(), vm), classify(p));
  EXPECT_EQ(classify_counts(10, 3, std::vector<std::pair<std::uint64_t, std::uint64_t>>{{0, 3}, {1, 3}, {2, 3}}).kind,
            SetKind::None);
}

TEST(Diffcore, THatRange) {
  EXPECT_EQ(t_hat(11, 48), 11u);
  EXPECT_EQ(t_hat(32, 39), 6u);
  EXPECT_EQ(t_hat(0, 10), 0u);
  EXPECT_THROW(t_hat(10, 10), std::out_of_range);
}

TEST(Sumset, MatchesDefinition) {
  std::mt19937_64 rng(4);
  for (const auto& orders : kShapes) {
    const GroupSpec g(orders);
    for (int trial = 0; trial < 30; ++trial) {
      const IndexSet s = random_subset(rng, g.order(), 1 + rng() % (g.order() / 2));
      std::set<std::uint32_t> ref;
      for (const auto x : s)
        for (const auto y : s)
          if (x != y) ref.insert(g.add(x, y));
      EXPECT_EQ(sumset(g, s), IndexSet(ref.begin(), ref.end()));
    }
  }
}

TEST(Sumset, Z2xZ8CounterexampleMissesExactlyThreeElements) {
  const SporadicRecord& r = sporadic("16-6-2-Z2xZ8");
  const IndexSet s = r.group.to_indices(r.set);
  const IndexSet missing = complement_set(r.group, sumset(r.group, s));
  const std::vector<GroupElement> want = {{{0, 0}}, {{0, 4}}, {{1, 4}}};
  EXPECT_EQ(missing, r.group.to_indices(want));
}

TEST(Complement, ParameterMap) {
  const std::vector<std::pair<std::uint32_t, IndexSet>> cases = {
      {23, paley(23)},
      {48, {1, 2, 3, 5, 7, 9, 10, 16, 17, 18, 21, 24, 27, 29, 30, 34, 39}},
      {14, {0, 1, 4, 6}},
  };
  for (const auto& [v, s] : cases) {
    const GroupSpec g = GroupSpec::cyclic(v);
    const ComplementResult r = complement(g, s);
    const AdsParams p = r.original.params;
    EXPECT_EQ(r.predicted, (AdsParams{p.v, p.v - p.k, p.v - 2 * p.k + p.lambda, p.t}));
    EXPECT_EQ(r.complement.params, r.predicted);
    EXPECT_EQ(r.set.size(), v - s.size());
    EXPECT_EQ(r.complement.kind, r.original.kind);
  }
  EXPECT_THROW(complement(GroupSpec::cyclic(10), IndexSet{0, 1, 2, 3}), std::invalid_argument);
}

TEST(RelativeDs, VerifiesPlanarReduction) {
  const GroupSpec g = GroupSpec::cyclic(14);
  const IndexSet n{0, 7};
  EXPECT_TRUE(verify_relative_ds(g, IndexSet{0, 1, 4, 6}, n, 7, 2, 4, 1));
  EXPECT_FALSE(verify_relative_ds(g, IndexSet{0, 1, 2, 6}, n, 7, 2, 4, 1));
  EXPECT_THROW(verify_relative_ds(g, IndexSet{0, 1, 4, 6}, IndexSet{0, 3}, 7, 2, 4, 1), std::invalid_argument);
}

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "diffset/adsearch.hpp"
#include "diffset/diffcore.hpp"
#include "oracles.hpp"

using namespace diffset;

TEST(ForcedParams, CountingIdentity) {
  for (std::uint64_t v = 3; v < 80; ++v)
    for (std::uint64_t k = 1; k <= v; ++k) {
      const ForcedParams f = forced_params(v, k);
      EXPECT_EQ(f.lambda, k * (k - 1) / (v - 1));
      EXPECT_EQ(f.t, (f.lambda + 1) * (v - 1) - k * (k - 1));
      EXPECT_GE(f.t, 1u);
      EXPECT_LE(f.t, v - 1);
      EXPECT_EQ(f.t_hat, std::min(f.t, v - 1 - f.t));
      EXPECT_EQ(f.ds_only(v), k * (k - 1) % (v - 1) == 0);
    }
  EXPECT_EQ(forced_params(48, 23).lambda, 10u);
  EXPECT_EQ(forced_params(48, 23).t, 11u);
  EXPECT_THROW(forced_params(2, 1), std::invalid_argument);
  EXPECT_THROW(forced_params(10, 11), std::invalid_argument);
}

TEST(Necklaces, CountsMatchBurnside) {
  for (std::uint32_t v = 1; v <= 16; ++v)
    for (std::uint32_t k = 0; k <= v; ++k) EXPECT_EQ(enumerate_fixed_density(v, k), oracle::necklaces(v, k)) << v << "," << k;
}

TEST(Necklaces, OneRepresentativePerRotationClass) {
  for (std::uint32_t v = 2; v <= 12; ++v)
    for (std::uint32_t k = 1; k < v; ++k) {
      std::set<std::vector<std::uint32_t>> seen;
      enumerate_fixed_density(v, k, [&](const NecklaceCursor& c) {
        const std::vector<std::uint32_t> marks(c.marks().begin(), c.marks().end());
        EXPECT_EQ(marks.size(), k);
        EXPECT_EQ(marks.front(), 0u);
        EXPECT_TRUE(std::is_sorted(marks.begin(), marks.end()));
        EXPECT_TRUE(seen.insert(least_rotation(marks, v)).second);
        const auto w = c.word();
        EXPECT_EQ(std::count(w.begin(), w.end(), 1), static_cast<long>(k));
        return true;
      });
      EXPECT_EQ(seen.size(), oracle::necklaces(v, k));
    }
}

TEST(Necklaces, IncrementalProfileEqualsRecount) {
  std::mt19937_64 rng(9);
  std::uint64_t checked = 0;
  for (std::uint32_t v = 8; v <= 20; ++v)
    for (std::uint32_t k = 2; k < v && k <= 9; ++k) {
      enumerate_fixed_density(v, k, [&](const NecklaceCursor& c) {
        if (rng() % 4 != 0) return true;
        const std::vector<std::uint32_t> marks(c.marks().begin(), c.marks().end());
        const auto fresh = recount_profile(GroupSpec::cyclic(v), marks);
        for (std::uint32_t r = 1; r < v; ++r) EXPECT_EQ(c.profile()[r], fresh[r]);
        ++checked;
        return true;
      });
    }
  EXPECT_GE(checked, 10000u);
}

TEST(Necklaces, EarlyStop) {
  std::uint64_t n = 0;
  const std::uint64_t visited = enumerate_fixed_density(20, 6, [&](const NecklaceCursor&) { return ++n < 5; });
  EXPECT_EQ(visited, 5u);
}

TEST(LeastRotation, IsMinimalRotation) {
  const std::vector<std::uint32_t> s{2, 3, 7};
  std::vector<std::uint32_t> best;
  for (std::uint32_t r = 0; r < 10; ++r) {
    std::vector<std::uint32_t> img;
    for (const auto x : s) img.push_back((x + r) % 10);
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) best = img;
  }
  EXPECT_EQ(least_rotation(s, 10), best);
}

TEST(AdsSearch, AgreesWithAllSubsetsOracle) {
  for (std::uint32_t v = 4; v <= 14; ++v)
    for (std::uint32_t k = 2; 2 * k <= v; ++k) {
      const int want = oracle::ads_exists(v, k);
      const SearchReport r = search_ads(v, k);
      const SearchStatus expect = want == 0 ? SearchStatus::Exists : want == 1 ? SearchStatus::DsOnly : SearchStatus::None;
      // A DS_ONLY answer means no proper ADS is possible, so the oracle must not find one either.
      EXPECT_EQ(r.status, expect) << v << "," << k;
      if (!r.witness.empty()) {
        const Classification c = classify(GroupSpec::cyclic(v), r.witness);
        const ForcedParams f = forced_params(v, k);
        EXPECT_EQ(c.params.lambda, f.lambda);
        EXPECT_EQ(c.params.t, f.t);
        EXPECT_EQ(r.witness, least_rotation(r.witness, v));
      }
    }
}

TEST(AdsSearch, PruningPreservesCounts) {
  for (const auto& [v, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{13, 4}, {14, 5}, {15, 6}, {16, 6}, {17, 8}}) {
    AdsSearchOptions pruned, plain;
    pruned.mode = plain.mode = SearchMode::Count;
    plain.prune = false;
    const SearchReport a = search_ads(v, k, pruned);
    const SearchReport b = search_ads(v, k, plain);
    EXPECT_EQ(a.count, b.count) << v << "," << k;
    EXPECT_LE(a.nodes, b.nodes);
    pruned.mode = SearchMode::All;
    const SearchReport all = search_ads(v, k, pruned);
    EXPECT_EQ(all.witnesses.size(), a.count);
  }
}

TEST(AdsSearch, DeterministicAcrossJobs) {
  for (const auto& [v, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{20, 7}, {22, 9}, {19, 9}}) {
    AdsSearchOptions one, many;
    many.jobs = 4;
    const SearchReport a = search_ads(v, k, one);
    const SearchReport b = search_ads(v, k, many);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.witness, b.witness);
    one.mode = many.mode = SearchMode::Count;
    EXPECT_EQ(search_ads(v, k, one).count, search_ads(v, k, many).count);
  }
}

TEST(AdsSearch, BudgetAndArgumentErrors) {
  AdsSearchOptions o;
  o.budget.node_limit = 500;
  o.mode = SearchMode::Count;
  EXPECT_EQ(search_ads(30, 12, o).status, SearchStatus::Timeout);
  EXPECT_THROW(search_ads(10, 1), std::invalid_argument);
  EXPECT_THROW(search_ads(10, 9), std::invalid_argument);
}

TEST(Grid, ComplementDerivationMatchesDirectSearch) {
  GridOptions derived;
  derived.v_max = 13;
  GridOptions direct = derived;
  direct.search_both_halves = true;
  const auto a = existence_grid(derived);
  const auto b = existence_grid(direct);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].v, b[i].v);
    EXPECT_EQ(a[i].k, b[i].k);
    EXPECT_EQ(a[i].status, b[i].status) << a[i].v << "," << a[i].k;
    EXPECT_FALSE(b[i].via_complement);
    if (!a[i].witness.empty()) {
      const Classification c = classify(GroupSpec::cyclic(a[i].v), a[i].witness);
      EXPECT_EQ(c.params.t, a[i].forced.t);
      EXPECT_EQ(c.k, a[i].k);
    }
  }
}

TEST(Grid, CsvAndTextRendering) {
  GridOptions g;
  g.v_min = 6;
  g.v_max = 8;
  const auto cells = existence_grid(g);
  const std::string csv = grid_to_csv(cells);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "v,k,lambda,t,t_hat,status,witness");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, cells.size());
  EXPECT_FALSE(grid_to_text(cells).empty());
  // v-major ordering.
  for (std::size_t i = 1; i < cells.size(); ++i)
    EXPECT_TRUE(cells[i - 1].v < cells[i].v || (cells[i - 1].v == cells[i].v && cells[i - 1].k < cells[i].k));
}

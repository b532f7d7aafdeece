#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "diffset/groups.hpp"
#include "diffset/numtheory.hpp"
#include "oracles.hpp"

using namespace diffset;

TEST(GroupSpec, MixedRadixIndexRoundTrip) {
  const GroupSpec g({2, 8, 3});
  EXPECT_EQ(g.order(), 48u);
  EXPECT_EQ(g.factor_count(), 3u);
  for (std::uint32_t i = 0; i < g.order(); ++i) EXPECT_EQ(g.index_of(g.element_at(i)), i);
  EXPECT_EQ(g.index_of({{1, 2, 0}}), 1u * 24 + 2u * 3 + 0u);
}

TEST(GroupSpec, ArithmeticMatchesCoordinates) {
  const std::vector<std::vector<std::uint32_t>> shapes = {{12}, {2, 8}, {4, 4}, {3, 5}, {2, 2, 3}};
  for (const auto& orders : shapes) {
    const GroupSpec g(orders);
    for (std::uint32_t a = 0; a < g.order(); ++a) {
      const GroupElement ea = g.element_at(a);
      EXPECT_EQ(g.index_of(g.neg(ea)), g.neg(a));
      EXPECT_EQ(g.add(a, g.neg(a)), 0u);
      for (std::uint32_t b = 0; b < g.order(); ++b) {
        const GroupElement eb = g.element_at(b);
        GroupElement sum{std::vector<std::uint32_t>(orders.size())};
        for (std::size_t i = 0; i < orders.size(); ++i) sum.coords[i] = (ea.coords[i] + eb.coords[i]) % orders[i];
        EXPECT_EQ(g.add(a, b), g.index_of(sum));
        EXPECT_EQ(g.add(g.sub(a, b), b), a);
      }
    }
  }
}

TEST(GroupSpec, CyclicIffCoprimeFactors) {
  EXPECT_TRUE(GroupSpec({15}).is_cyclic());
  EXPECT_TRUE(GroupSpec({3, 5}).is_cyclic());
  EXPECT_FALSE(GroupSpec({2, 8}).is_cyclic());
  EXPECT_FALSE(GroupSpec({4, 4}).is_cyclic());
  EXPECT_TRUE(GroupSpec({4, 9, 5}).is_cyclic());
}

TEST(GroupSpec, RejectsMalformedInput) {
  EXPECT_THROW(GroupSpec({}), std::invalid_argument);
  EXPECT_THROW(GroupSpec({1}), std::invalid_argument);
  EXPECT_THROW(GroupSpec({2, 0}), std::invalid_argument);
  const GroupSpec g({2, 8});
  EXPECT_THROW(g.check({{2, 0}}), std::invalid_argument);
  EXPECT_THROW(g.check({{0}}), std::invalid_argument);
  const std::vector<GroupElement> dup = {{{0, 1}}, {{0, 1}}};
  EXPECT_THROW(g.to_indices(dup), std::invalid_argument);
}

TEST(GroupSpec, DoublingIsAPermutationForOddCyclic) {
  for (std::uint32_t v = 3; v < 40; v += 2) {
    const GroupSpec g = GroupSpec::cyclic(v);
    std::vector<bool> hit(v, false);
    for (std::uint32_t a = 0; a < v; ++a) hit[g.twice(a)] = true;
    EXPECT_EQ(std::count(hit.begin(), hit.end(), true), static_cast<long>(v)) << v;
  }
}

TEST(Groups, UnitsAndNormalizedSet) {
  EXPECT_EQ(units(12), (std::vector<std::uint32_t>{1, 5, 7, 11}));
  for (std::uint32_t v = 2; v < 60; ++v) EXPECT_EQ(units(v).size(), oracle::phi(v));
  EXPECT_EQ(normalized_set(std::vector<std::uint32_t>{5, 1, 3}, 7), (IndexSet{1, 3, 5}));
  EXPECT_THROW(normalized_set(std::vector<std::uint32_t>{1, 1}, 7), std::invalid_argument);
  EXPECT_THROW(normalized_set(std::vector<std::uint32_t>{7}, 7), std::invalid_argument);
}

TEST(NumberTheory, PrimalityAgreesWithTrialDivision) {
  for (std::uint64_t n = 0; n < 20000; ++n) EXPECT_EQ(is_prime_u64(n), oracle::is_prime(n)) << n;
  EXPECT_TRUE(is_prime_u64(104411704393ULL));
  EXPECT_TRUE(is_prime_u64(660279756217ULL));
  EXPECT_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_TRUE(is_prime_u64(18446744073709551557ULL));
}

TEST(NumberTheory, BigPrimeCertainty) {
  // 2^64 + 13 lies below the deterministic Miller-Rabin bound 3.3e24; 2^89 - 1 lies above it.
  const BigInt above64 = (BigInt(1) << 64) + 13;
  const BigInt m89 = (BigInt(1) << 89) - 1;
  const BigInt m127 = (BigInt(1) << 127) - 1;
  EXPECT_EQ(prime_certainty(above64), PrimeCertainty::Prime);
  EXPECT_EQ(prime_certainty(above64 + 2), PrimeCertainty::Composite);
  EXPECT_EQ(prime_certainty(m89), PrimeCertainty::ProbablePrime);
  EXPECT_EQ(prime_certainty(m127), PrimeCertainty::ProbablePrime);
  EXPECT_EQ(prime_certainty(m89 * 3), PrimeCertainty::Composite);
  EXPECT_EQ(prime_certainty(BigInt(1)), PrimeCertainty::Composite);
}

TEST(NumberTheory, FactorizationAndRoots) {
  EXPECT_EQ(factorization_string(-12), "-2^2*3");
  EXPECT_EQ(factorization_string(196), "2^2*7^2");
  EXPECT_EQ(factorization_string(1), "1");
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t n = rng() % 1000000000ULL + 2;
    std::uint64_t prod = 1;
    for (const auto& [q, e] : factorize_u64(n)) {
      EXPECT_TRUE(oracle::is_prime(q));
      for (unsigned j = 0; j < e; ++j) prod *= q;
    }
    EXPECT_EQ(prod, n);
  }
  for (std::uint64_t p : {3ULL, 17ULL, 41ULL, 73ULL, 26041ULL}) {
    const std::uint64_t g = primitive_root(p);
    EXPECT_TRUE(is_primitive_root(g, p));
    for (std::uint64_t h = 2; h < g; ++h) EXPECT_FALSE(is_primitive_root(h, p));
  }
  for (std::uint64_t n : {0ULL, 1ULL, 15ULL, 16ULL, 1ULL << 62, 18446744073709551615ULL}) {
    const std::uint64_t r = isqrt_u64(n);
    EXPECT_LE(static_cast<unsigned __int128>(r) * r, n);
    EXPECT_GT(static_cast<unsigned __int128>(r + 1) * (r + 1), n);
  }
}

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "setmax/errors.hpp"
#include "setmax/order.hpp"

using namespace setmax;

TEST(Compare, ReportsTrueOrderAndChargesOne) {
  KeySpace keys({5, 2});
  ComparisonLedger ledger;
  EXPECT_EQ(keys.compare(0, 1, ledger), Ordering::greater);
  EXPECT_EQ(ledger.count(), 1u);
  ComparisonLedger other;
  EXPECT_EQ(keys.compare(1, 0, other), Ordering::less);
  EXPECT_EQ(other.count(), 1u);
}

TEST(Compare, RejectsBadIndices) {
  KeySpace keys({5, 2});
  ComparisonLedger ledger;
  EXPECT_THROW(keys.compare(0, 2, ledger), InputError);
  EXPECT_THROW(keys.compare(1, 1, ledger), ContractViolation);
  EXPECT_EQ(ledger.count(), 0u);
}

TEST(KeySpace, RejectsDuplicateKeys) { EXPECT_THROW(KeySpace({1, 2, 1}), InputError); }

TEST(KeySpace, RandomPermutationIsOneToN) {
  auto keys = KeySpace::random_permutation(50, 9);
  std::vector<std::int64_t> raw;
  for (ElementIndex e = 0; e < 50; ++e) raw.push_back(oracle::raw_key(keys, e));
  std::sort(raw.begin(), raw.end());
  for (std::int64_t v = 1; v <= 50; ++v) EXPECT_EQ(raw[v - 1], v);
}

TEST(Compare, StrictTotalOrderOnSampledTriples) {
  auto keys = KeySpace::random_permutation(30, 4);
  ComparisonLedger ledger;
  std::mt19937 rng(1);
  std::uniform_int_distribution<ElementIndex> pick(0, 29);
  for (int t = 0; t < 2000; ++t) {
    ElementIndex a = pick(rng), b = pick(rng), c = pick(rng);
    if (a == b || b == c || a == c) continue;
    auto ab = keys.compare(a, b, ledger);
    EXPECT_NE(ab, keys.compare(b, a, ledger));
    if (ab == Ordering::less && keys.compare(b, c, ledger) == Ordering::less) {
      EXPECT_EQ(keys.compare(a, c, ledger), Ordering::less);
    }
  }
}

TEST(Compare, ArgmaxReconstructionFindsTopKey) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 1 + seed * 3;
    auto keys = KeySpace::random_permutation(n, seed);
    ComparisonLedger ledger;
    ElementIndex best = 0;
    for (ElementIndex e = 1; e < n; ++e) {
      if (keys.compare(e, best, ledger) == Ordering::greater) best = e;
    }
    EXPECT_EQ(oracle::raw_key(keys, best), static_cast<std::int64_t>(n));
  }
}

TEST(MaxOfClass, Singleton) {
  std::vector<std::int64_t> raw(8);
  for (int i = 0; i < 8; ++i) raw[i] = 10 * i + 3;
  KeySpace keys(raw);
  ComparisonLedger ledger;
  std::vector<ElementIndex> cls{7};
  EXPECT_EQ(max_of_class(cls, keys, ledger), 7u);
  EXPECT_EQ(ledger.count(), 0u);
}

TEST(MaxOfClass, Tournament) {
  KeySpace keys({3, 1, 2});
  ComparisonLedger ledger;
  std::vector<ElementIndex> cls{0, 1, 2};
  EXPECT_EQ(max_of_class(cls, keys, ledger), 0u);
  EXPECT_EQ(ledger.count(), 2u);
}

TEST(MaxOfClass, EmptyIsInputError) {
  KeySpace keys({3});
  ComparisonLedger ledger;
  std::vector<ElementIndex> cls;
  EXPECT_THROW(max_of_class(cls, keys, ledger), InputError);
}

TEST(MaxOfClass, RandomClassesMatchRawScanWithExactCost) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    auto keys = KeySpace::random_permutation(40, rng());
    std::vector<ElementIndex> all(40);
    for (ElementIndex e = 0; e < 40; ++e) all[e] = e;
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<ElementIndex> cls(all.begin(), all.begin() + 10);
    ElementIndex expect = cls[0];
    for (auto e : cls) {
      if (oracle::raw_key(keys, e) > oracle::raw_key(keys, expect)) expect = e;
    }
    ComparisonLedger ledger;
    EXPECT_EQ(max_of_class(cls, keys, ledger), expect);
    EXPECT_EQ(ledger.count(), 9u);
  }
}

TEST(Ledger, TranscriptRecordsPairsInOrder) {
  KeySpace keys({4, 9, 1});
  ComparisonLedger ledger(true);
  keys.compare(0, 1, ledger);
  keys.compare(2, 0, ledger);
  ASSERT_EQ(ledger.transcript().size(), 2u);
  EXPECT_EQ(ledger.transcript()[1], std::make_pair(ElementIndex{2}, ElementIndex{0}));
}

TEST(Oracle, AccessesAreCounted) {
  KeySpace keys({4, 9});
  auto before = oracle::access_count();
  (void)oracle::raw_key(keys, 1);
  EXPECT_EQ(oracle::access_count(), before + 1);
}

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "setmax/errors.hpp"
#include "setmax/harness/generators.hpp"
#include "setmax/set_system.hpp"

namespace setmax {
struct SetSystemTestAccess {
  static void corrupt_total(SetSystem& s, std::size_t p) { s.p_ = p; }
};
}  // namespace setmax

using namespace setmax;

TEST(Validate, AcceptsDistinctNonEmptySets) {
  SetSystem s(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(validate(s).empty());
  EXPECT_EQ(s.p(), 4u);
}

TEST(Validate, ReportsDuplicates) {
  SetSystem s(3, {{0}, {0}});
  auto v = validate(s);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::duplicate_set);
  EXPECT_EQ(v[0].other, 0u);
}

TEST(Validate, ReportsOutOfRange) {
  SetSystem s(3, {{0, 5}});
  auto v = validate(s);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::index_out_of_range);
}

TEST(Validate, ReportsEmptyAndStaleTotal) {
  SetSystem s(3, {{}, {1}});
  SetSystemTestAccess::corrupt_total(s, 7);
  auto v = validate(s);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].kind, ViolationKind::empty_set);
  EXPECT_EQ(v[1].kind, ViolationKind::stale_total);
  EXPECT_THROW(require_valid(s), InputError);
}

TEST(Signature, ListsContainingSets) {
  SetSystem s(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(signature(1, s), (Label{0, 1}));
  EXPECT_EQ(signature(0, s), (Label{0}));
  EXPECT_THROW(signature(3, s), InputError);
}

TEST(Signature, StrayElementHasEmptySignature) {
  SetSystem s(4, {{0, 1}});
  EXPECT_TRUE(signature(3, s).empty());
}

TEST(Signature, BulkMatchesMembershipRecheck) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto s = harness::gen_random_system(25, 12, 0.3, seed);
    auto sigs = signatures(s);
    for (ElementIndex e = 0; e < s.n(); ++e) {
      Label expect;
      for (SetIndex i = 0; i < s.m(); ++i) {
        for (auto x : s.set(i)) {
          if (x == e) expect.push_back(i);
        }
      }
      EXPECT_EQ(sigs[e], expect);
      EXPECT_EQ(signature(e, s), expect);
    }
  }
}

TEST(Signature, ClassesPartitionCoveredElements) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto s = harness::gen_random_system(40, 8, 0.25, seed);
    auto sigs = signatures(s);
    std::set<Label> distinct;
    std::size_t covered = 0;
    for (const auto& sig : sigs) {
      if (sig.empty()) continue;
      ++covered;
      distinct.insert(sig);
    }
    EXPECT_LE(distinct.size(), covered);
    EXPECT_LE(distinct.size(), s.n());
  }
}

TEST(Labels, SubsetUnionOverlapAndFormat) {
  Label a{0, 2}, b{0, 1, 2};
  EXPECT_TRUE(is_subset(a, b));
  EXPECT_TRUE(is_strict_subset(a, b));
  EXPECT_FALSE(is_strict_subset(b, b));
  EXPECT_EQ(label_union(a, Label{1, 5}), (Label{0, 1, 2, 5}));
  EXPECT_EQ(overlap(a, b), 2u);
  EXPECT_EQ(format_label(b), "{1,2,3}");
}

TEST(Generator, SmallDenseCase) {
  auto s = harness::gen_random_system(3, 1, 1.0, 5);
  EXPECT_EQ(s.sets(), (std::vector<std::vector<ElementIndex>>{{0, 1, 2}}));
}

TEST(Generator, DeterministicAndValid) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto a = harness::gen_random_system(30, 15, 0.2, seed);
    auto b = harness::gen_random_system(30, 15, 0.2, seed);
    EXPECT_EQ(a, b);
    EXPECT_TRUE(validate(a).empty());
  }
}

TEST(Generator, RejectsImpossibleRequests) {
  EXPECT_THROW(harness::gen_random_system(2, 4, 0.5, 1), InputError);
  EXPECT_THROW(harness::gen_random_system(5, 2, 0.0, 1), InputError);
  EXPECT_THROW(harness::gen_random_system(3, 7, 0.01, 1), GenerationError);
}

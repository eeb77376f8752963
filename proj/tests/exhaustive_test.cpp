#include <gtest/gtest.h>

#include "amp/exhaustive.hpp"
#include "support.hpp"

using amp::GroupCtx;

namespace {

// Independent ground truth: every pair in (|A|, lex A, lex B) order, checked
// with the permutation oracle. Returns the first failing pair, if any.
std::optional<std::pair<oracle::Values, oracle::Values>> oracle_first_failure(std::int64_t n) {
  std::optional<std::pair<oracle::Values, oracle::Values>> found;
  amp::detail::for_each_cyclic_pair(n, 1, static_cast<std::size_t>(n), [&](const auto& a, const auto& b) {
    if (!oracle::has_acyclic(n, a, b)) {
      found.emplace(a, b);
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace

TEST(VerifyGroupAmp, SmallPrimesHold) {
  for (std::int64_t n : {2, 3, 5}) {
    for (bool sym : {true, false}) {
      const auto r = amp::verify_group_amp(GroupCtx::cyclic(n), sym);
      EXPECT_TRUE(r.holds) << n;
      EXPECT_FALSE(r.counterexample.has_value());
      EXPECT_GT(r.pairs_checked, 0u);
    }
  }
}

TEST(VerifyGroupAmp, OtherOrdersFail) {
  for (std::int64_t n : {4, 6, 7, 8}) {
    const auto r = amp::verify_group_amp(GroupCtx::cyclic(n), true);
    EXPECT_FALSE(r.holds) << n;
    ASSERT_TRUE(r.counterexample.has_value());
    EXPECT_FALSE(amp::acyclicity_report(*r.counterexample).acyclic_witness.has_value());
  }
}

TEST(VerifyGroupAmp, SevenFailsFirstAtSizeThree) {
  // First failure in (|A|, lex A, lex B) order. Its two matchings
  // (0->2, 1->4, 3->1) and (0->4, 1->1, 3->2) both have sums {2, 4, 5}.
  const auto r = amp::verify_group_amp(GroupCtx::cyclic(7), true);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_EQ(r.counterexample->size(), 3u);
  EXPECT_EQ(amp::values_of(r.counterexample->a()), (std::vector<std::int64_t>{0, 1, 3}));
  EXPECT_EQ(amp::values_of(r.counterexample->b()), (std::vector<std::int64_t>{1, 2, 4}));
  const auto report = amp::acyclicity_report(*r.counterexample);
  EXPECT_EQ(report.total_matchings, 2u);
  EXPECT_EQ(report.classes.size(), 1u);
}

TEST(VerifyGroupAmp, SymmetryReductionGivesIdenticalVerdictAndCounterexample) {
  for (std::int64_t n = 1; n <= 8; ++n) {
    const auto g = GroupCtx::cyclic(n);
    const auto with = amp::verify_group_amp(g, true);
    const auto without = amp::verify_group_amp(g, false);
    EXPECT_EQ(with.holds, without.holds) << n;
    EXPECT_EQ(with.counterexample, without.counterexample) << n;
    if (n > 2) {
      EXPECT_LE(with.pairs_checked, without.pairs_checked);
    }
  }
}

TEST(VerifyGroupAmp, AgreesWithPermutationOracle) {
  for (std::int64_t n = 2; n <= 7; ++n) {
    const auto r = amp::verify_group_amp(GroupCtx::cyclic(n), true);
    const auto want = oracle_first_failure(n);
    ASSERT_EQ(r.holds, !want.has_value()) << n;
    if (want) {
      EXPECT_EQ(amp::values_of(r.counterexample->a()), want->first);
      EXPECT_EQ(amp::values_of(r.counterexample->b()), want->second);
    }
  }
}

TEST(VerifyGroupAmp, TrivialGroupHoldsVacuously) {
  const auto r = amp::verify_group_amp(GroupCtx::cyclic(1), true);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.pairs_checked, 0u);
}

TEST(VerifyGroupAmp, BoundsAndDomain) {
  EXPECT_THROW(amp::verify_group_amp(GroupCtx::cyclic(9), true), amp::ResourceError);
  EXPECT_THROW(amp::verify_group_amp(GroupCtx::cyclic(9), true, 63), amp::ResourceError);
  EXPECT_THROW(amp::verify_group_amp(GroupCtx::integers(), true), amp::ContractError);
}

TEST(VerifyGroupAmp, DigestIsDeterministic) {
  const auto g = GroupCtx::cyclic(6);
  EXPECT_EQ(amp::verify_group_amp(g, true).digest, amp::verify_group_amp(g, true).digest);
  EXPECT_NE(amp::verify_group_amp(g, true).digest, amp::verify_group_amp(g, false).digest);
}

TEST(LargeSetCheck, HoldsForOddOrders) {
  for (std::int64_t n : {3, 5, 7}) EXPECT_TRUE(amp::large_set_check(GroupCtx::cyclic(n))) << n;
}

TEST(LargeSetCheck, EvenOrdersHavePairsWithoutAnyMatching) {
  for (std::int64_t n : {4, 6, 8}) EXPECT_FALSE(amp::large_set_check(GroupCtx::cyclic(n))) << n;
  // A = {0,2}, B = {1,2} in Z/4Z: 0 and 2 both need 1.
  const auto p = amp::SubsetPair::make(GroupCtx::cyclic(4), {0, 2}, {1, 2});
  EXPECT_FALSE(amp::matching_exists(p));
  EXPECT_TRUE(oracle::matchings(4, {0, 2}, {1, 2}).empty());
}

TEST(LargeSetCheck, MatchedPairsAreAcyclicallyMatched) {
  for (std::int64_t n = 3; n <= 8; ++n) EXPECT_TRUE(amp::large_set_check_matched(GroupCtx::cyclic(n))) << n;
}

TEST(LargeSetCheck, Domain) {
  EXPECT_THROW(amp::large_set_check(GroupCtx::cyclic(2)), amp::ContractError);
  EXPECT_THROW(amp::large_set_check(GroupCtx::cyclic(9)), amp::ResourceError);
  EXPECT_THROW(amp::large_set_check_matched(GroupCtx::cyclic(2)), amp::ContractError);
}

TEST(LargeSetCheck, SizeNMinusThreeCanFail) {
  // The size bound is sharp: Z/7Z already fails at |A| = 4 = n - 3.
  bool failure = false;
  amp::detail::for_each_cyclic_pair(7, 4, 4, [&](const auto& a, const auto& b) {
    failure = !amp::acyclicity_report(amp::SubsetPair::make(GroupCtx::cyclic(7), a, b)).acyclic_witness;
    return !failure;
  });
  EXPECT_TRUE(failure);
}

TEST(IntegerSample, DeterministicForSeed) {
  amp::IntegerSampleSpec spec;
  spec.samples = 50;
  amp::IntegerPairSampler s1(spec), s2(spec);
  for (int i = 0; i < 50; ++i) {
    const auto p = s1.next();
    EXPECT_EQ(p, s2.next());
    EXPECT_LE(p.size(), 5u);
    for (auto e : p.a()) EXPECT_LE(std::abs(e.value), 6);
    EXPECT_FALSE(p.b().contains(amp::Element{0}));
  }
}

TEST(IntegerSample, AllAcyclic) {
  const auto r = amp::verify_integer_sample(amp::IntegerSampleSpec{});
  EXPECT_EQ(r.samples, 500u);
  EXPECT_TRUE(r.all_acyclic);
  EXPECT_FALSE(r.first_failure.has_value());
}

TEST(IntegerSample, RejectsImpossibleSpec) {
  EXPECT_THROW(amp::IntegerPairSampler(amp::IntegerSampleSpec{1, 10, 5, 2}), amp::ContractError);
}

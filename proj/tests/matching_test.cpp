#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "smsudoku/errors.hpp"
#include "smsudoku/matching.hpp"
#include "smsudoku/reference_data.hpp"

using namespace smsudoku;

namespace {

std::vector<std::vector<int>> pairings(const std::vector<Matching>& matchings) {
  std::vector<std::vector<int>> out;
  for (const Matching& m : matchings) out.push_back(m.pairing());
  return out;
}

}  // namespace

TEST(Matching, RejectsNonBijections) {
  const PreferenceProfile p = reference::one_round_profile();
  EXPECT_THROW(Matching(p, {0, 0}), InvalidProfile);
  EXPECT_THROW(Matching(p, {0}), InvalidProfile);
  EXPECT_THROW(Matching(p, {0, 2}), InvalidProfile);
}

TEST(Matching, CostsAndBlockingPairs) {
  const PreferenceProfile p = reference::one_round_profile();
  const Matching crossed(p, {1, 0});
  EXPECT_EQ(crossed.couple_costs(), (std::vector<int>{2 + 2, 2 + 1}));
  EXPECT_EQ(crossed.total_cost(), 7);
  // Man 2 and woman 2 are soulmates kept apart.
  EXPECT_EQ(blocking_pairs(p, crossed), (std::vector<BlockingPair>{{1, 1}}));
  EXPECT_TRUE(is_stable(p, Matching(p, {0, 1})));
}

TEST(Matching, EnumerationMatchesOracleOnEverySmallProfile) {
  for (int n = 1; n <= 3; ++n)
    for (const PreferenceProfile& p : all_profiles(n))
      ASSERT_EQ(pairings(enumerate_stable_matchings(p)), oracle::stable_pairings(p));
}

TEST(Matching, EnumerationMatchesOracleOnRandomProfiles) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const PreferenceProfile p = random_profile(4 + trial % 3, rng);
    const auto expected = oracle::stable_pairings(p);
    EXPECT_EQ(pairings(enumerate_stable_matchings(p)), expected);
    EXPECT_EQ(count_stable_matchings(p), static_cast<std::int64_t>(expected.size()));
  }
}

TEST(Matching, EnumerationRefusesLargeInstances) {
  std::mt19937_64 rng(1);
  EXPECT_THROW(enumerate_stable_matchings(random_profile(kMaxEnumerationSize + 1, rng)), TooLarge);
}

TEST(GaleShapley, StableOptimalAndWithinRoundBoundOnRandomProfiles) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 6;
    const PreferenceProfile p = random_profile(n, rng);
    const auto stable = oracle::stable_pairings(p);
    ASSERT_FALSE(stable.empty());

    const GsTrace men = gale_shapley(p, Side::men);
    const GsTrace women = gale_shapley(p, Side::women);
    ASSERT_TRUE(is_stable(p, men.matching));
    ASSERT_TRUE(is_stable(p, women.matching));
    ASSERT_LE(static_cast<int>(men.rounds.size()), gale_shapley_round_bound(n));
    ASSERT_LE(static_cast<int>(women.rounds.size()), gale_shapley_round_bound(n));

    for (int m = 0; m < n; ++m) {
      int best = n + 1, worst = 0;
      for (const auto& pairing : stable) {
        best = std::min(best, p.man_rank(m, pairing[m]));
        worst = std::max(worst, p.man_rank(m, pairing[m]));
      }
      EXPECT_EQ(p.man_rank(m, men.matching.wife_of(m)), best);
      EXPECT_EQ(p.man_rank(m, women.matching.wife_of(m)), worst);
    }
    for (int w = 0; w < n; ++w) {
      int best = n + 1, worst = 0;
      for (const auto& pairing : stable) {
        const int husband = static_cast<int>(std::find(pairing.begin(), pairing.end(), w) - pairing.begin());
        best = std::min(best, p.woman_rank(w, husband));
        worst = std::max(worst, p.woman_rank(w, husband));
      }
      EXPECT_EQ(p.woman_rank(w, women.matching.husband_of(w)), best);
      EXPECT_EQ(p.woman_rank(w, men.matching.husband_of(w)), worst);
    }
  }
}

TEST(GaleShapley, RoundBoundHoldsOnEveryThreeByThreeProfile) {
  const int bound = gale_shapley_round_bound(3);
  EXPECT_EQ(bound, 7);
  for (const PreferenceProfile& p : all_profiles(3)) {
    ASSERT_LE(static_cast<int>(gale_shapley(p, Side::men).rounds.size()), bound);
    ASSERT_LE(static_cast<int>(gale_shapley(p, Side::women).rounds.size()), bound);
  }
}

TEST(GaleShapley, MutuallyLatinProfilesFinishInOneRound) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const PreferenceProfile p = oracle::random_latin_profile(1 + trial % 7, rng);
    EXPECT_EQ(gale_shapley(p, Side::men).rounds.size(), 1u);
    EXPECT_EQ(gale_shapley(p, Side::women).rounds.size(), 1u);
  }
  for (const PreferenceProfile& p : all_profiles(3)) {
    if (!family_flags(p).mutually_latin) continue;
    EXPECT_EQ(gale_shapley(p, Side::men).rounds.size(), 1u);
  }
}

TEST(GaleShapley, FourRoundExampleTrace) {
  const GsTrace trace = gale_shapley(reference::four_round_profile(), Side::men);
  EXPECT_EQ(render_trace(trace),
            "round 1: proposals 1->1 2->1 3->1 4->2; engaged (1,1) (4,2); rejected 2 3\n"
            "round 2: proposals 2->2 3->2; engaged (1,1) (2,2); rejected 3 4\n"
            "round 3: proposals 3->3 4->3; engaged (1,1) (2,2) (3,3); rejected 4\n"
            "round 4: proposals 4->4; engaged (1,1) (2,2) (3,3) (4,4); rejected -\n");
  // Man 4 is dumped by woman 2 in round 2.
  EXPECT_EQ(trace.rounds[1].review_phase[3].state, ProposerState::rejected);
  EXPECT_EQ(trace.rounds[1].review_phase[3].target, 1);
  EXPECT_EQ(trace.rounds[1].proposal_phase[0].state, ProposerState::idle);
  EXPECT_EQ(trace.rounds[1].proposal_phase[1].state, ProposerState::proposing);
}

TEST(GaleShapley, TwoByTwoExampleTakesOneRound) {
  const PreferenceProfile p = reference::one_round_profile();
  const GsTrace men = gale_shapley(p, Side::men);
  EXPECT_EQ(men.rounds.size(), 1u);
  EXPECT_EQ(men.matching.pairing(), (std::vector<int>{0, 1}));
  // Both women want man 2, so their run needs a second round.
  const GsTrace women = gale_shapley(p, Side::women);
  EXPECT_EQ(women.rounds.size(), 2u);
  EXPECT_EQ(women.matching.pairing(), (std::vector<int>{0, 1}));
  EXPECT_EQ(count_stable_matchings(p), 1);
}

TEST(Matching, EgalitarianAndValidPartnersMatchOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 5;
    const PreferenceProfile p = random_profile(n, rng);
    const auto stable = oracle::stable_pairings(p);
    int best_cost = 1 << 30;
    std::vector<int> best;
    SquareMatrix<std::uint8_t> partners(n, 0);
    for (const auto& pairing : stable) {
      int cost = 0;
      for (int m = 0; m < n; ++m) {
        cost += p.man_rank(m, pairing[m]) + p.woman_rank(pairing[m], m);
        partners(m, pairing[m]) = 1;
      }
      if (cost < best_cost) {
        best_cost = cost;
        best = pairing;
      }
    }
    const Matching egalitarian = egalitarian_matching(p);
    EXPECT_EQ(egalitarian.total_cost(), best_cost);
    EXPECT_EQ(egalitarian.pairing(), best);
    EXPECT_EQ(valid_partners(p), partners);
  }
}

TEST(Matching, NoHellCoupleInStableMatchingsOfJointProfiles) {
  // At n = 1 the only couple ranks each other last by default.
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    do {
      const PreferenceProfile p = profile_from_key(KeyFunction(images));
      for (const Matching& m : enumerate_stable_matchings(p)) EXPECT_FALSE(has_hell_couple(p, m));
    } while (std::next_permutation(images.begin(), images.end()));
  }
}

TEST(Matching, HellCoupleDetected) {
  const PreferenceProfile p = reference::one_round_profile();
  EXPECT_TRUE(has_hell_couple(p, Matching(p, {1, 0})));
}

TEST(Matching, UniformMatchingStabilityRuleAgreesWithBlockingPairs) {
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    do {
      const KeyFunction key(images);
      const PreferenceProfile p = profile_from_key(key);
      for (int i = 1; i <= n; ++i) {
        const auto uniform = uniform_matching(p, {i, key(i)});
        ASSERT_TRUE(uniform.has_value());
        EXPECT_EQ(uniform->stable, is_stable(p, uniform->matching));
        for (int m = 0; m < n; ++m) {
          const int w = uniform->matching.wife_of(m);
          EXPECT_EQ(p.woman_rank(w, m), i);
          EXPECT_EQ(p.man_rank(m, w), key(i));
        }
        for (int j = 1; j <= n; ++j)
          if (j != key(i)) EXPECT_FALSE(uniform_matching(p, {i, j}).has_value());
      }
    } while (std::next_permutation(images.begin(), images.end()));
  }
}

TEST(Matching, UniformMatchingRequiresJointProfile) {
  EXPECT_THROW(uniform_matching(reference::one_round_profile(), {1, 1}), InvalidProfile);
  const PreferenceProfile p = profile_from_key(KeyFunction({2, 1}));
  EXPECT_FALSE(uniform_matching(p, {1, 1}).has_value());
}

TEST(Matching, PseudoLatinJointProfilesHaveAtLeastNStableMatchings) {
  for (int n = 1; n <= 6; ++n)
    EXPECT_GE(count_stable_matchings(profile_from_key(KeyFunction::reversal(n))), n);
}

TEST(Matching, FourByFourRankingExample) {
  const PreferenceProfile p = reference::four_by_four_ranking_profile();
  EXPECT_TRUE(is_stable(p, Matching(p, reference::four_by_four_stable_pairing())));
}

#include <gtest/gtest.h>

#include <random>

#include "borda_range/core.hpp"
#include "reference.hpp"

using namespace borda_range;

namespace {

Profile random_profile(int m, int n, std::mt19937_64& rng) {
  return Profile::from_orders(reference::random_ballots(m, n, rng));
}

const Profile kTwoTwo = Profile::from_orders({{0, 1, 2, 3}, {2, 3, 0, 1}, {1, 3, 0, 2}});

}  // namespace

TEST(Ranking, RejectsNonPermutations) {
  EXPECT_THROW(Ranking({0, 0, 1}), InvalidProfile);
  EXPECT_THROW(Ranking({0, 3, 1}), InvalidProfile);
  EXPECT_THROW(Ranking({-1, 0}), InvalidProfile);
  EXPECT_NO_THROW(Ranking({2, 0, 1}));
}

TEST(Ranking, RankLookupMatchesOrder) {
  const Ranking r{2, 0, 3, 1};
  EXPECT_EQ(r.at(1), 2);
  EXPECT_EQ(r.rank_of(2), 1);
  EXPECT_EQ(r.rank_of(1), 4);
  EXPECT_EQ(r.reversed(), (Ranking{1, 3, 0, 2}));
}

TEST(Profile, RejectsMismatchedLengthsAndNoVoters) {
  EXPECT_THROW(Profile::from_orders({{0, 1, 2}, {0, 1}}), InvalidProfile);
  EXPECT_THROW(Profile(2, {}), InvalidProfile);
}

TEST(Scoring, TwoByTwoExample) {
  const auto s = borda_scores(kTwoTwo);
  EXPECT_EQ(s.scores, (std::vector<Score>{7, 7, 8, 8}));
  const auto w = weak_order_of(kTwoTwo);
  EXPECT_EQ(w.levels, (std::vector<std::vector<Alternative>>{{0, 1}, {2, 3}}));
  EXPECT_EQ(w.level_scores, (std::vector<Score>{7, 8}));
  EXPECT_EQ(pattern_of(kTwoTwo), (LevelPattern{2, 2}));
}

TEST(Scoring, UnanimousProfileHasSingletonLevels) {
  const auto u = Profile::from_orders({{1, 0, 2}, {1, 0, 2}, {1, 0, 2}});
  EXPECT_EQ(borda_scores(u).scores, (std::vector<Score>{6, 3, 9}));
  EXPECT_EQ(pattern_of(u), (LevelPattern{1, 1, 1}));
}

TEST(Scoring, CycleTiesEverything) {
  const auto u = Profile::from_orders({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  EXPECT_EQ(pattern_of(u), (LevelPattern{3}));
}

TEST(Scoring, AgreesWithReferenceOnRandomProfiles) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 9);
    const int n = 1 + 2 * static_cast<int>(rng() % 4);
    const auto b = reference::random_ballots(m, n, rng);
    const auto u = Profile::from_orders(b);
    const auto ref = reference::scores(b);
    ASSERT_EQ(borda_scores(u).scores, std::vector<Score>(ref.begin(), ref.end()));
    const auto w = weak_order_of(u);
    ASSERT_EQ(w.levels, reference::levels(b));
    ASSERT_EQ(w.pattern().sizes(), reference::pattern(b));
  }
}

TEST(Scoring, ConservationAndBounds) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 10);
    const int n = 1 + static_cast<int>(rng() % 7);
    const auto u = random_profile(m, n, rng);
    const auto s = borda_scores(u);
    ASSERT_EQ(s.total(), static_cast<Score>(n) * m * (m + 1) / 2);
    for (Score v : s.scores) {
      ASSERT_GE(v, n);
      ASSERT_LE(v, static_cast<Score>(n) * m);
    }
    const auto w = weak_order_of(s);
    ASSERT_EQ(w.pattern().total(), m);
    for (std::size_t i = 1; i < w.level_scores.size(); ++i) {
      ASSERT_LT(w.level_scores[i - 1], w.level_scores[i]);
    }
  }
}

TEST(Scoring, NeutralityUnderRelabeling) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 7);
    const auto u = random_profile(m, 3, rng);
    std::vector<int> sigma(m);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    std::vector<std::vector<int>> relabeled;
    for (const auto& r : u.rankings()) {
      std::vector<int> o;
      for (int x : r.order()) o.push_back(sigma[x]);
      relabeled.push_back(o);
    }
    const auto v = Profile::from_orders(relabeled);
    const auto su = borda_scores(u), sv = borda_scores(v);
    for (int x = 0; x < m; ++x) ASSERT_EQ(su[x], sv[sigma[x]]);
    ASSERT_EQ(pattern_of(u), pattern_of(v));
  }
}

TEST(Scoring, VoterOrderDoesNotMatter) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto b = reference::random_ballots(6, 5, rng);
    const auto before = borda_scores(Profile::from_orders(b));
    std::shuffle(b.begin(), b.end(), rng);
    ASSERT_EQ(borda_scores(Profile::from_orders(b)), before);
  }
}

TEST(Inversion, ScoresReflectAndPatternReverses) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 10);
    const int n = (trial % 2 == 0) ? 3 : 5;
    const auto u = random_profile(m, n, rng);
    const auto inv = invert_profile(u);
    const auto s = borda_scores(u), t = borda_scores(inv);
    for (int x = 0; x < m; ++x) ASSERT_EQ(t[x], static_cast<Score>(n) * (m + 1) - s[x]);
    ASSERT_EQ(pattern_of(inv), pattern_of(u).reversed());
    ASSERT_EQ(invert_profile(inv), u);
  }
}

TEST(Catenation, PatternsConcatenate) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_profile(1 + static_cast<int>(rng() % 6), 3, rng);
    const auto b = random_profile(1 + static_cast<int>(rng() % 6), 3, rng);
    const auto c = catenate(a, b);
    ASSERT_EQ(c.m(), a.m() + b.m());
    ASSERT_EQ(pattern_of(c), pattern_of(a) + pattern_of(b));
    const auto s = borda_scores(c), sa = borda_scores(a), sb = borda_scores(b);
    for (int x = 0; x < a.m(); ++x) ASSERT_EQ(s[x], sa[x]);
    for (int x = 0; x < b.m(); ++x) ASSERT_EQ(s[a.m() + x], sb[x] + 3 * a.m());
  }
}

TEST(Catenation, EmptyProfileIsNeutral) {
  EXPECT_EQ(catenate(Profile::empty(3), kTwoTwo), kTwoTwo);
  EXPECT_EQ(catenate(kTwoTwo, Profile::empty(3)), kTwoTwo);
}

TEST(Catenation, VoterCountsMustMatch) {
  EXPECT_THROW(catenate(kTwoTwo, Profile::empty(5)), VoterCountMismatch);
}

TEST(OddExtension, TwoTwoToFiveVoters) {
  const auto u = extend_to_odd_n(kTwoTwo, 5);
  EXPECT_EQ(u.n(), 5);
  EXPECT_EQ(borda_scores(u).scores, (std::vector<Score>{12, 12, 13, 13}));
  EXPECT_EQ(weak_order_of(u).levels, weak_order_of(kTwoTwo).levels);
}

TEST(OddExtension, ShiftsEveryScoreByMPlusOnePerPair) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 8);
    const auto u = random_profile(m, 3, rng);
    for (int target : {3, 5, 7, 9}) {
      const auto v = extend_to_odd_n(u, target);
      const auto su = borda_scores(u), sv = borda_scores(v);
      for (int x = 0; x < m; ++x) ASSERT_EQ(sv[x], su[x] + (m + 1) * (target - 3) / 2);
      ASSERT_EQ(weak_order_of(v).levels, weak_order_of(u).levels);
    }
  }
}

TEST(OddExtension, ParityErrors) {
  EXPECT_THROW(extend_to_odd_n(kTwoTwo, 4), ParityError);
  EXPECT_THROW(extend_to_odd_n(kTwoTwo, 1), ParityError);
  const auto even = Profile::from_orders({{0, 1}, {1, 0}});
  EXPECT_THROW(extend_to_odd_n(even, 5), ParityError);
}

TEST(LevelPattern, RejectsNonPositiveSizes) {
  EXPECT_THROW(LevelPattern({2, 0}), InvalidPattern);
  EXPECT_EQ((LevelPattern{2, 4}).reversed(), (LevelPattern{4, 2}));
  EXPECT_EQ((LevelPattern{2, 4}).total(), 6);
}

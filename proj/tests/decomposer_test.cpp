#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "borda_range/decomposer.hpp"
#include "reference.hpp"

using namespace borda_range;

namespace {

std::vector<std::string> plan_text(const LevelPattern& p) {
  std::vector<std::string> out;
  for (const auto& b : plan_decomposition(p).blocks) out.push_back(describe(b));
  return out;
}

LevelPattern ref_pattern(const Profile& u) {
  reference::Ballots b;
  for (const auto& r : u.rankings()) b.emplace_back(r.order().begin(), r.order().end());
  return LevelPattern(reference::pattern(b));
}

// {2,4} sequences with an even number (>= 2) of 2s, total <= max_total.
std::vector<LevelPattern> valid_patterns(int max_total) {
  std::vector<LevelPattern> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    const auto twos = std::count(cur.begin(), cur.end(), 2);
    if (!cur.empty() && twos >= 2 && twos % 2 == 0) out.emplace_back(cur);
    for (int v : {2, 4}) {
      if (v > left) continue;
      cur.push_back(v);
      rec(left - v);
      cur.pop_back();
    }
  };
  rec(max_total);
  return out;
}

}  // namespace

TEST(Plan, Examples) {
  EXPECT_EQ(plan_text({2, 4, 4, 2}), (std::vector<std::string>{"SeqI{2}"}));
  EXPECT_EQ(plan_text({2, 2, 2, 2}), (std::vector<std::string>{"TwoLevel{1,1}", "TwoLevel{1,1}"}));
  EXPECT_EQ(plan_text({4, 4, 2, 4, 2, 4, 4, 4}),
            (std::vector<std::string>{"FourBlock{1}", "SeqIII{2}", "FourBlock{1}"}));
  EXPECT_EQ(plan_text({4, 2, 2}), (std::vector<std::string>{"SeqII{1}"}));
  EXPECT_EQ(plan_text({4, 4, 4, 2, 2}), (std::vector<std::string>{"FourBlock{1}", "SeqII{1}"}));
  EXPECT_EQ(plan_text({2, 2, 4, 4, 4}), (std::vector<std::string>{"SeqIII{1}", "FourBlock{1}"}));
  EXPECT_EQ(plan_text({2, 4, 2, 2, 2}), (std::vector<std::string>{"SeqI{1}", "TwoLevel{1,1}"}));
}

TEST(Plan, RejectsPatternsOutsideTheFamily) {
  EXPECT_THROW(plan_decomposition({2, 4, 2, 2}), NotDecomposable);
  EXPECT_THROW(plan_decomposition({4, 4}), NotDecomposable);
  EXPECT_THROW(plan_decomposition({2, 6, 2}), NotDecomposable);
  EXPECT_THROW(plan_decomposition({2}), NotDecomposable);
}

TEST(Plan, BlocksConcatenateToTheInputOnRandomPatterns) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<int> s;
    const int len = 2 + static_cast<int>(rng() % 20);
    for (int i = 0; i < len; ++i) s.push_back(rng() % 2 ? 4 : 2);
    if (std::count(s.begin(), s.end(), 2) % 2 == 1) {
      s.push_back(2);
    }
    if (std::count(s.begin(), s.end(), 2) == 0) s.insert(s.begin(), {2, 2});
    const LevelPattern p(s);
    const auto plan = plan_decomposition(p);
    LevelPattern joined;
    for (const auto& b : plan.blocks) joined = joined + target_pattern(b);
    ASSERT_EQ(joined, p) << to_string(p);
  }
}

TEST(Realize, Examples) {
  auto u = realize({2, 4, 4, 2}, 3);
  EXPECT_EQ(u.m(), 12);
  EXPECT_EQ(ref_pattern(u), (LevelPattern{2, 4, 4, 2}));

  u = realize({2, 2, 2, 2}, 5);
  EXPECT_EQ(u.m(), 8);
  EXPECT_EQ(u.n(), 5);
  const auto three = realize({2, 2, 2, 2}, 3);
  const auto s3 = borda_scores(three), s5 = borda_scores(u);
  for (int x = 0; x < 8; ++x) EXPECT_EQ(s5[x], s3[x] + 9);
}

TEST(Realize, Errors) {
  EXPECT_THROW(realize({2, 4}, 3), NotInRangeError);
  EXPECT_THROW(realize({3, 5}, 3), UnsupportedConstruction);
  EXPECT_THROW(realize({8, 4, 4}, 3), UnsupportedConstruction);
  EXPECT_THROW(realize({12, 20}, 3), UnsupportedConstruction);
  EXPECT_THROW(realize({2, 4, 4, 2}, 4), ParityError);
  EXPECT_THROW(realize({2, 4, 4, 2}, 1), ParityError);
}

TEST(Realize, TwoLevelCatenations) {
  EXPECT_EQ(ref_pattern(realize({2, 6, 10, 2}, 3)), (LevelPattern{2, 6, 10, 2}));
  EXPECT_EQ(ref_pattern(realize({4, 4}, 3)), (LevelPattern{4, 4}));
  EXPECT_EQ(ref_pattern(realize({4, 4, 4, 4}, 5)), (LevelPattern{4, 4, 4, 4}));
}

TEST(Realize, EveryFamilyPatternUpTo28) {
  const auto patterns = valid_patterns(28);
  ASSERT_GT(patterns.size(), 500u);
  for (const auto& p : patterns) {
    const auto u = realize(p, 3);
    ASSERT_EQ(ref_pattern(u), p) << to_string(p);
  }
}

TEST(Realize, LevelSetsAgreeAcrossVoterCounts) {
  for (const auto& p : {LevelPattern{2, 4, 2, 2, 4, 2}, LevelPattern{4, 4, 2, 4, 2, 4, 4, 4},
                        LevelPattern{2, 2, 4, 4, 2, 2}}) {
    const auto w3 = weak_order_of(realize(p, 3));
    const int m = p.total();
    for (int n : {5, 7}) {
      const auto w = weak_order_of(realize(p, n));
      ASSERT_EQ(w.levels, w3.levels);
      for (std::size_t i = 0; i < w.level_scores.size(); ++i) {
        ASSERT_EQ(w.level_scores[i], w3.level_scores[i] + (m + 1) * (n - 3) / 2);
      }
    }
  }
}

#ifndef BORDA_RANGE_CONSTRUCTIONS_HPP
#define BORDA_RANGE_CONSTRUCTIONS_HPP

// Explicit three-voter witnesses:
//
//   two-level base       (2*s1, 2*s2), s1 and s2 odd
//   sequence I           (2, 4..4, 2)
//   sequence II          (4, 2, 4..4, 2)
//   sequence III         (2, 4..4, 2, 4)      inversion of II
//   sequence IV          (4, 2, 4..4, 2, 4)
//   fixed tables         (4,2,4,2) (4,2,2,4) (4,2,2) (2,2,4) (4,2,4,2,4)
//
// Sequences I, II and IV start from the two-level base and rewrite voter 1
// only. Every builder scores its result and throws ConstructionError rather
// than return a profile whose pattern differs from the one requested.

#include <array>
#include <string>
#include <variant>

#include "borda_range/core.hpp"
#include "borda_range/io.hpp"

namespace borda_range {

class ConstructionError : public Error {
 public:
  using Error::Error;
};

class NotInTable : public Error {
 public:
  using Error::Error;
};

struct TwoLevel {
  int s1 = 1;
  int s2 = 1;
  friend bool operator==(const TwoLevel&, const TwoLevel&) = default;
};
struct SeqI {
  int fours = 0;
  friend bool operator==(const SeqI&, const SeqI&) = default;
};
struct SeqII {
  int fours = 1;
  friend bool operator==(const SeqII&, const SeqII&) = default;
};
struct SeqIII {
  int fours = 1;
  friend bool operator==(const SeqIII&, const SeqIII&) = default;
};
struct SeqIV {
  int fours = 2;
  friend bool operator==(const SeqIV&, const SeqIV&) = default;
};
struct Appendix {
  LevelPattern pattern;
  friend bool operator==(const Appendix&, const Appendix&) = default;
};

using BaseWitnessRequest = std::variant<TwoLevel, SeqI, SeqII, SeqIII, SeqIV, Appendix>;

namespace detail {

inline std::vector<int> fours_run(int count) { return std::vector<int>(static_cast<std::size_t>(count), 4); }

inline LevelPattern join(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return LevelPattern(std::move(out));
}

}  // namespace detail

inline LevelPattern seq_I_pattern(int fours) {
  return detail::join({{2}, detail::fours_run(fours), {2}});
}
inline LevelPattern seq_II_pattern(int fours) {
  return detail::join({{4, 2}, detail::fours_run(fours - 1), {2}});
}
inline LevelPattern seq_III_pattern(int fours) { return seq_II_pattern(fours).reversed(); }
inline LevelPattern seq_IV_pattern(int fours) {
  return detail::join({{4, 2}, detail::fours_run(fours - 2), {2, 4}});
}

inline LevelPattern target_pattern(const BaseWitnessRequest& req) {
  struct Visitor {
    LevelPattern operator()(const TwoLevel& r) const { return {2 * r.s1, 2 * r.s2}; }
    LevelPattern operator()(const SeqI& r) const { return seq_I_pattern(r.fours); }
    LevelPattern operator()(const SeqII& r) const { return seq_II_pattern(r.fours); }
    LevelPattern operator()(const SeqIII& r) const { return seq_III_pattern(r.fours); }
    LevelPattern operator()(const SeqIV& r) const { return seq_IV_pattern(r.fours); }
    LevelPattern operator()(const Appendix& r) const { return r.pattern; }
  };
  return std::visit(Visitor{}, req);
}

inline std::string describe(const BaseWitnessRequest& req) {
  struct Visitor {
    std::string operator()(const TwoLevel& r) const {
      return "TwoLevel{" + std::to_string(r.s1) + "," + std::to_string(r.s2) + "}";
    }
    std::string operator()(const SeqI& r) const { return "SeqI{" + std::to_string(r.fours) + "}"; }
    std::string operator()(const SeqII& r) const { return "SeqII{" + std::to_string(r.fours) + "}"; }
    std::string operator()(const SeqIII& r) const { return "SeqIII{" + std::to_string(r.fours) + "}"; }
    std::string operator()(const SeqIV& r) const { return "SeqIV{" + std::to_string(r.fours) + "}"; }
    std::string operator()(const Appendix& r) const { return "Appendix{" + to_string(r.pattern) + "}"; }
  };
  return std::visit(Visitor{}, req);
}

namespace detail {

inline Profile verified(Profile u, const LevelPattern& target, const std::string& what) {
  const auto got = pattern_of(u);
  if (got != target) {
    throw ConstructionError(what + " produced pattern " + to_string(got) + ", expected " +
                            to_string(target));
  }
  return u;
}

// Fixed three-voter tables, transcribed with 1-based ids x_1..x_m, together
// with the level sets they are known to produce (best level first).
struct FixtureTable {
  std::vector<int> pattern;
  std::array<std::vector<int>, 3> voters;
  std::vector<std::vector<int>> levels;
};

inline const std::vector<FixtureTable>& fixture_tables() {
  static const std::vector<FixtureTable> tables = {
      {{4, 2, 4, 2},
       {{{1, 4, 5, 2, 3, 6, 7, 10, 11, 8, 9, 12},
         {10, 8, 12, 4, 2, 6, 11, 9, 7, 5, 3, 1},
         {11, 9, 7, 5, 3, 1, 12, 10, 8, 6, 4, 2}}},
       {{4, 5, 10, 11}, {1, 7}, {2, 3, 8, 9}, {6, 12}}},
      {{4, 2, 2, 4},
       {{{2, 3, 1, 6, 4, 5, 8, 9, 7, 12, 10, 11},
         {8, 12, 10, 2, 6, 4, 11, 9, 7, 5, 3, 1},
         {9, 7, 11, 3, 1, 5, 12, 10, 8, 6, 4, 2}}},
       {{2, 3, 8, 9}, {6, 12}, {1, 7}, {4, 5, 10, 11}}},
      {{4, 2, 2},
       {{{2, 3, 4, 1, 6, 7, 8, 5},
         {7, 5, 3, 1, 8, 6, 4, 2},
         {6, 8, 2, 4, 7, 5, 3, 1}}},
       {{2, 3, 6, 7}, {4, 8}, {1, 5}}},
      {{4, 2, 4, 2, 4},
       {{{4, 5, 3, 7, 8, 6, 1, 2, 12, 13, 11, 15, 16, 14, 9, 10},
         {12, 10, 16, 14, 4, 2, 8, 6, 15, 13, 11, 9, 7, 5, 3, 1},
         {13, 11, 9, 15, 5, 3, 1, 7, 16, 14, 12, 10, 8, 6, 4, 2}}},
       {{4, 5, 12, 13}, {3, 11}, {7, 8, 15, 16}, {6, 14}, {1, 2, 9, 10}}},
  };
  return tables;
}

inline Profile from_one_based(const std::array<std::vector<int>, 3>& voters) {
  std::vector<std::vector<Alternative>> orders;
  for (const auto& v : voters) {
    std::vector<Alternative> o;
    for (int x : v) o.push_back(x - 1);
    orders.push_back(std::move(o));
  }
  return Profile::from_orders(orders);
}

inline std::vector<std::vector<Alternative>> to_zero_based(const std::vector<std::vector<int>>& levels) {
  std::vector<std::vector<Alternative>> out;
  for (const auto& l : levels) {
    std::vector<Alternative> z;
    for (int x : l) z.push_back(x - 1);
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace detail

/// Patterns covered by the fixed tables, including the inverted (2,2,4).
inline std::vector<LevelPattern> appendix_patterns() {
  return {{4, 2, 4, 2}, {4, 2, 2, 4}, {4, 2, 2}, {2, 2, 4}, {4, 2, 4, 2, 4}};
}

/// Level sets (0-based ids, best first) the fixed table for p must produce.
inline std::vector<std::vector<Alternative>> appendix_level_sets(const LevelPattern& p) {
  if (p == LevelPattern{2, 2, 4}) {
    auto levels = appendix_level_sets({4, 2, 2});
    return {levels.rbegin(), levels.rend()};
  }
  for (const auto& t : detail::fixture_tables()) {
    if (LevelPattern(t.pattern) == p) return detail::to_zero_based(t.levels);
  }
  throw NotInTable("no fixed table for pattern " + to_string(p));
}

inline Profile appendix_witness(const LevelPattern& p) {
  Profile u;
  if (p == LevelPattern{2, 2, 4}) {
    u = invert_profile(appendix_witness({4, 2, 2}));
  } else {
    const detail::FixtureTable* found = nullptr;
    for (const auto& t : detail::fixture_tables()) {
      if (LevelPattern(t.pattern) == p) found = &t;
    }
    if (!found) throw NotInTable("no fixed table for pattern " + to_string(p));
    u = detail::from_one_based(found->voters);
  }
  if (weak_order_of(u).levels != appendix_level_sets(p)) {
    throw ConstructionError("fixed table for " + to_string(p) + " does not give its level sets");
  }
  return u;
}

namespace detail {

// Voters 2 and 3 of the two-level base, as 1-based ids. With S = s1 + s2 the
// better level is {1..s1} u {S+1..S+s1}; voter 1 is the identity.
inline Profile two_level_table(int s1, int s2) {
  const int S = s1 + s2;
  auto desc = [](int lo, int hi, int parity, std::vector<int>& out) {
    for (int x = hi; x >= lo; --x) {
      if (x % 2 == parity) out.push_back(x);
    }
  };
  std::vector<int> v2, v3;
  desc(S + 1, S + s1 - 1, 0, v2);
  desc(S + s1 + 1, 2 * S, 0, v2);
  desc(2, s1 - 1, 0, v2);
  desc(s1 + 1, S, 0, v2);
  desc(1, 2 * S, 1, v2);

  desc(S + 1, S + s1, 1, v3);
  desc(S + s1 + 2, 2 * S - 1, 1, v3);
  desc(1, s1, 1, v3);
  desc(s1 + 2, S - 1, 1, v3);
  desc(2, 2 * S, 0, v3);

  std::vector<int> v1(static_cast<std::size_t>(2 * S));
  std::iota(v1.begin(), v1.end(), 1);
  return from_one_based({v1, v2, v3});
}

// Orders of one block of voter 1, as 1-based offsets within the block.

// n, n-2, n-1, ..., 3, 4, 1, 2
inline std::vector<int> single_on_top(int n) {
  std::vector<int> out{n};
  for (int j = n - 2; j >= 1; j -= 2) {
    out.push_back(j);
    out.push_back(j + 1);
  }
  return out;
}

// n-1, n, n-2, n-4, n-3, ..., 1, 2
inline std::vector<int> pair_then_single_on_top(int n) {
  std::vector<int> out{n - 1, n, n - 2};
  for (int j = n - 4; j >= 1; j -= 2) {
    out.push_back(j);
    out.push_back(j + 1);
  }
  return out;
}

// n-1, n, n-3, n-2, ..., 2, 3, 1
inline std::vector<int> single_at_bottom(int n) {
  std::vector<int> out;
  for (int j = n - 1; j >= 2; j -= 2) {
    out.push_back(j);
    out.push_back(j + 1);
  }
  out.push_back(1);
  return out;
}

// n-1, n, ..., 4, 5, 3, 1, 2
inline std::vector<int> single_then_pair_at_bottom(int n) {
  std::vector<int> out;
  for (int j = n - 1; j >= 4; j -= 2) {
    out.push_back(j);
    out.push_back(j + 1);
  }
  out.insert(out.end(), {3, 1, 2});
  return out;
}

// Rewrites voter 1 of the base: in each half, the better block (s1 ids) is
// reordered by `better` and the worse block (s2 ids) by `worse`.
inline Profile rewrite_first_voter(const Profile& base, int s1, int s2,
                                   const std::vector<int>& better,
                                   const std::vector<int>& worse) {
  const int S = s1 + s2;
  std::vector<Alternative> order;
  for (int half : {0, S}) {
    for (int o : better) order.push_back(half + o - 1);
    for (int o : worse) order.push_back(half + s1 + o - 1);
  }
  std::vector<Ranking> rs(base.rankings().begin(), base.rankings().end());
  rs[0] = Ranking(std::move(order));
  return Profile(base.m(), std::move(rs));
}

// Used when the count of 4s is odd. In voter 1 the bottom pair {x1,x2} of the
// better block can tie with the worse-block level that moved up by exactly one
// place. If such a level exists, the pair is reinserted right below it, then
// moved in steps of two places (down first, then up) until the target pattern
// appears. Both halves get the same reinsertion.
inline Profile separate_bottom_pair(const Profile& u, int s1, int s2, const LevelPattern& target) {
  const int S = s1 + s2;
  const auto first = u.voter(0).order();

  int level_end = -1;
  for (int pos = 0; pos < S; ++pos) {
    const Alternative x = first[static_cast<std::size_t>(pos)];
    const int gain = x - pos;  // identity position minus new position
    if (x >= s1 && gain == 1) level_end = pos + 1;
  }
  if (level_end < 0) return u;

  std::vector<Alternative> rest;  // one half without the pair, local ids
  for (int pos = 0; pos < S; ++pos) {
    const Alternative x = first[static_cast<std::size_t>(pos)];
    if (x != 0 && x != 1) rest.push_back(x);
  }
  const int start = level_end - 2;
  const int slots = S - 1;  // insertion indices 0..S-2

  std::vector<int> candidates{start};
  for (int d = 2; d <= 2 * slots; d += 2) {
    candidates.push_back(start + d);
    candidates.push_back(start - d);
  }
  for (int idx : candidates) {
    if (idx < 0 || idx >= slots) continue;
    std::vector<Alternative> order;
    for (int half : {0, S}) {
      for (int i = 0; i <= static_cast<int>(rest.size()); ++i) {
        if (i == idx) {
          order.push_back(half + 0);
          order.push_back(half + 1);
        }
        if (i < static_cast<int>(rest.size())) order.push_back(half + rest[static_cast<std::size_t>(i)]);
      }
    }
    std::vector<Ranking> rs(u.rankings().begin(), u.rankings().end());
    rs[0] = Ranking(std::move(order));
    Profile candidate(u.m(), std::move(rs));
    if (pattern_of(candidate) == target) return candidate;
  }
  throw ConstructionError("no placement of the bottom pair separates the levels for " +
                          to_string(target));
}

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw PreconditionError(msg);
}

}  // namespace detail

/// Three voters over 2(s1+s2) alternatives with pattern (2*s1, 2*s2); the two
/// level scores differ by (s1+s2)/2. Voter 1 ranks 0..m-1 in order.
inline Profile construct_two_level(int s1, int s2) {
  detail::require(s1 >= 1 && s2 >= 1 && s1 % 2 == 1 && s2 % 2 == 1,
                  "two-level construction needs odd positive s1, s2 (got " +
                      std::to_string(s1) + ", " + std::to_string(s2) + ")");
  const LevelPattern target{2 * s1, 2 * s2};
  auto u = detail::verified(detail::two_level_table(s1, s2), target,
                            "two-level construction");
  const auto w = weak_order_of(u);
  if (w.level_scores[1] - w.level_scores[0] != (s1 + s2) / 2) {
    throw ConstructionError("two-level construction has score gap " +
                            std::to_string(w.level_scores[1] - w.level_scores[0]));
  }
  return u;
}

/// (2, 4 x fours, 2).
inline Profile construct_seq_I(int fours) {
  detail::require(fours >= 0, "sequence I needs fours >= 0");
  if (fours == 0) return construct_two_level(1, 1);
  const auto target = seq_I_pattern(fours);
  const int k = fours / 2;
  if (fours % 2 == 0) {
    const int s = 2 * k + 1;
    auto u = detail::rewrite_first_voter(detail::two_level_table(s, s), s, s,
                                         detail::single_on_top(s), detail::single_at_bottom(s));
    return detail::verified(std::move(u), target, "sequence I");
  }
  const int s1 = 2 * k + 3, s2 = 2 * k + 1;
  auto u = detail::rewrite_first_voter(detail::two_level_table(s1, s2), s1, s2,
                                       detail::single_on_top(s1), detail::single_at_bottom(s2));
  return detail::verified(detail::separate_bottom_pair(u, s1, s2, target), target, "sequence I");
}

/// (4, 2, 4 x (fours-1), 2).
inline Profile construct_seq_II(int fours) {
  detail::require(fours >= 1, "sequence II needs fours >= 1");
  if (fours == 1) return appendix_witness({4, 2, 2});
  if (fours == 2) return appendix_witness({4, 2, 4, 2});
  const auto target = seq_II_pattern(fours);
  const int k = fours / 2;
  if (fours % 2 == 0) {
    const int s = 2 * k + 1;
    auto u = detail::rewrite_first_voter(detail::two_level_table(s, s), s, s,
                                         detail::pair_then_single_on_top(s),
                                         detail::single_at_bottom(s));
    return detail::verified(std::move(u), target, "sequence II");
  }
  const int s1 = 2 * k + 3, s2 = 2 * k + 1;
  auto u = detail::rewrite_first_voter(detail::two_level_table(s1, s2), s1, s2,
                                       detail::pair_then_single_on_top(s1),
                                       detail::single_at_bottom(s2));
  return detail::verified(detail::separate_bottom_pair(u, s1, s2, target), target, "sequence II");
}

/// (2, 4 x (fours-1), 2, 4): every ballot of the sequence II witness reversed.
inline Profile construct_seq_III(int fours) {
  detail::require(fours >= 1, "sequence III needs fours >= 1");
  return detail::verified(invert_profile(construct_seq_II(fours)), seq_III_pattern(fours),
                          "sequence III");
}

/// (4, 2, 4 x (fours-2), 2, 4).
inline Profile construct_seq_IV(int fours) {
  detail::require(fours >= 2, "sequence IV needs fours >= 2");
  if (fours == 2) return appendix_witness({4, 2, 2, 4});
  if (fours == 3) return appendix_witness({4, 2, 4, 2, 4});
  const auto target = seq_IV_pattern(fours);
  const int k = fours / 2;
  if (fours % 2 == 0) {
    const int s = 2 * k + 1;
    auto u = detail::rewrite_first_voter(detail::two_level_table(s, s), s, s,
                                         detail::pair_then_single_on_top(s),
                                         detail::single_then_pair_at_bottom(s));
    return detail::verified(std::move(u), target, "sequence IV");
  }
  const int s1 = 2 * k + 3, s2 = 2 * k + 1;
  auto u = detail::rewrite_first_voter(detail::two_level_table(s1, s2), s1, s2,
                                       detail::pair_then_single_on_top(s1),
                                       detail::single_then_pair_at_bottom(s2));
  return detail::verified(detail::separate_bottom_pair(u, s1, s2, target), target, "sequence IV");
}

inline Profile construct_base(const BaseWitnessRequest& req) {
  struct Visitor {
    Profile operator()(const TwoLevel& r) const { return construct_two_level(r.s1, r.s2); }
    Profile operator()(const SeqI& r) const { return construct_seq_I(r.fours); }
    Profile operator()(const SeqII& r) const { return construct_seq_II(r.fours); }
    Profile operator()(const SeqIII& r) const { return construct_seq_III(r.fours); }
    Profile operator()(const SeqIV& r) const { return construct_seq_IV(r.fours); }
    Profile operator()(const Appendix& r) const { return appendix_witness(r.pattern); }
  };
  auto u = std::visit(Visitor{}, req);
  if (u.n() != 3) throw ConstructionError(describe(req) + " did not produce three voters");
  return detail::verified(std::move(u), target_pattern(req), describe(req));
}

/// The fixed tables in profile JSON form, keyed by pattern text.
inline nlohmann::json appendix_fixture_json() {
  nlohmann::json profiles = nlohmann::json::object();
  for (const auto& p : appendix_patterns()) {
    profiles[to_string(p)] = to_json(appendix_witness(p));
  }
  return nlohmann::json{{"profiles", profiles}, {"version", 1}};
}

}  // namespace borda_range

#endif  // BORDA_RANGE_CONSTRUCTIONS_HPP

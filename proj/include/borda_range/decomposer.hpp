#ifndef BORDA_RANGE_DECOMPOSER_HPP
#define BORDA_RANGE_DECOMPOSER_HPP

// Patterns made of 4s and an even number (>= 2) of 2s, realized block by
// block. The pattern is cut as
//
//   leading even run of 4s | prefix through the second 2 | remainder
//
// and the remainder is cut again while it still holds 2s. A trailing odd run
// of 4s lends one 4 to the preceding two-2s block. Each block has a direct
// three-voter witness; catenating them and padding with reversed ballot pairs
// gives a witness for any odd n >= 3.

#include <variant>

#include "borda_range/classifier.hpp"
#include "borda_range/constructions.hpp"
#include "borda_range/core.hpp"
#include "borda_range/oracle.hpp"

namespace borda_range {

class NotDecomposable : public Error {
 public:
  using Error::Error;
};

class NotInRangeError : public Error {
 public:
  using Error::Error;
};

class UnsupportedConstruction : public Error {
 public:
  using Error::Error;
};

/// A run of 2*pairs levels of size 4, realized as catenated (4,4) witnesses.
struct FourBlock {
  int pairs = 1;
  friend bool operator==(const FourBlock&, const FourBlock&) = default;
};

using PlanBlock = std::variant<BaseWitnessRequest, FourBlock>;

inline LevelPattern target_pattern(const PlanBlock& block) {
  if (const auto* f = std::get_if<FourBlock>(&block)) {
    return LevelPattern(std::vector<int>(static_cast<std::size_t>(2 * f->pairs), 4));
  }
  return target_pattern(std::get<BaseWitnessRequest>(block));
}

inline std::string describe(const PlanBlock& block) {
  if (const auto* f = std::get_if<FourBlock>(&block)) {
    return "FourBlock{" + std::to_string(f->pairs) + "}";
  }
  return describe(std::get<BaseWitnessRequest>(block));
}

struct DecompositionPlan {
  std::vector<PlanBlock> blocks;

  LevelPattern pattern() const {
    LevelPattern out;
    for (const auto& b : blocks) out = out + target_pattern(b);
    return out;
  }
};

namespace detail {

inline int count_value(std::span<const int> s, int v) {
  return static_cast<int>(std::count(s.begin(), s.end(), v));
}

// Block for a prefix holding exactly two 2s: (2,4^f,2), (4,2,4^f,2) or either
// of them followed by one borrowed 4.
inline BaseWitnessRequest two_twos_block(std::span<const int> block) {
  const LevelPattern p(std::vector<int>(block.begin(), block.end()));
  const int fours = count_value(block, 4);
  switch (lemma_shape(p)) {
    case LemmaShape::seq_I: return SeqI{fours};
    case LemmaShape::seq_II: return SeqII{fours};
    case LemmaShape::seq_III: return SeqIII{fours};
    case LemmaShape::seq_IV: return SeqIV{fours};
    case LemmaShape::none: break;
  }
  if (p == LevelPattern{2, 2}) return TwoLevel{1, 1};
  throw NotDecomposable("internal: unexpected block " + to_string(p));
}

inline void plan_into(std::span<const int> p, std::vector<PlanBlock>& out) {
  // leading 4s before the first 2; keep an even number of them
  std::size_t lead = 0;
  while (lead < p.size() && p[lead] == 4) ++lead;
  const std::size_t even_lead = lead - lead % 2;
  if (even_lead > 0) out.push_back(FourBlock{static_cast<int>(even_lead / 2)});
  const auto rest = p.subspan(even_lead);

  // prefix through the second 2
  std::size_t cut = 0;
  for (int seen = 0; cut < rest.size(); ++cut) {
    if (rest[cut] == 2 && ++seen == 2) {
      ++cut;
      break;
    }
  }
  auto head = rest.first(cut);
  auto tail = rest.subspan(cut);

  if (count_value(tail, 2) > 0) {
    out.push_back(two_twos_block(head));
    plan_into(tail, out);
    return;
  }
  if (tail.size() % 2 == 1) {
    head = rest.first(cut + 1);
    tail = rest.subspan(cut + 1);
  }
  out.push_back(two_twos_block(head));
  if (!tail.empty()) out.push_back(FourBlock{static_cast<int>(tail.size() / 2)});
}

}  // namespace detail

/// Block decomposition of a pattern of 4s and an even number (>= 2) of 2s.
inline DecompositionPlan plan_decomposition(const LevelPattern& p) {
  const auto& s = p.sizes();
  const bool only_2_4 = std::all_of(s.begin(), s.end(), [](int v) { return v == 2 || v == 4; });
  const int twos = detail::count_value(s, 2);
  if (!only_2_4 || twos < 2 || twos % 2 != 0) {
    throw NotDecomposable("pattern " + to_string(p) +
                          " is not made of 4s and an even number (>= 2) of 2s");
  }
  DecompositionPlan plan;
  detail::plan_into(s, plan.blocks);
  if (plan.pattern() != p) throw Error("internal: plan does not reproduce " + to_string(p));
  return plan;
}

/// Fixed seed for the (4,4) search so FourBlock witnesses are reproducible.
inline constexpr std::uint64_t kFourFourSeed = 44;

namespace detail {

inline WitnessCache& process_cache() {
  static WitnessCache cache;
  return cache;
}

inline Profile realize_block(const PlanBlock& block, WitnessCache& cache) {
  if (const auto* f = std::get_if<FourBlock>(&block)) {
    const Profile pair = cache.get_or_search({4, 4}, 3, SearchBudget{}, kFourFourSeed);
    Profile out = Profile::empty(3);
    for (int i = 0; i < f->pairs; ++i) out = catenate(out, pair);
    return out;
  }
  return construct_base(std::get<BaseWitnessRequest>(block));
}

// Plan for patterns that need only catenated two-level blocks: with k = 1
// every consecutive pair is (2a, 2b), a and b odd; with k >= 2 only runs of
// (4,4) pairs are covered.
inline std::optional<DecompositionPlan> two_level_plan(const LevelPattern& p) {
  const auto d = power_decomposition(p);
  DecompositionPlan plan;
  if (d.k == 1) {
    for (std::size_t i = 0; i + 1 < d.s.size(); i += 2) {
      plan.blocks.push_back(BaseWitnessRequest{TwoLevel{d.s[i], d.s[i + 1]}});
    }
    return plan;
  }
  const auto& s = p.sizes();
  if (std::all_of(s.begin(), s.end(), [](int v) { return v == 4; })) {
    plan.blocks.push_back(FourBlock{p.levels() / 2});
    return plan;
  }
  return std::nullopt;
}

}  // namespace detail

/// Plan used by realize(), or UnsupportedConstruction/NotInRangeError.
inline DecompositionPlan realization_plan(const LevelPattern& p) {
  const auto c = classify(p);
  switch (c.rule) {
    case Rule::theorem3:
      throw NotInRangeError("NOT_IN_RANGE (Theorem 3): " + to_string(p) +
                            " is not a Borda outcome for any odd n");
    case Rule::new_lemma:
    case Rule::new_theorem:
      return plan_decomposition(p);
    case Rule::lemma4:
      if (auto plan = detail::two_level_plan(p)) return *plan;
      throw UnsupportedConstruction("no construction available for " + to_string(p) +
                                    " (two-level blocks other than (4,4) at this power of 2)");
    case Rule::odd_level:
      throw UnsupportedConstruction("no construction available for " + to_string(p) +
                                    " (odd level; classification only)");
    case Rule::none:
      break;
  }
  throw UnsupportedConstruction("no rule classifies " + to_string(p));
}

/// Verified witness for p with n voters (odd, >= 3).
inline Profile realize(const LevelPattern& p, int n, WitnessCache& cache) {
  if (n < 3 || n % 2 == 0) throw ParityError("realize needs an odd n >= 3, got " + std::to_string(n));
  const auto plan = realization_plan(p);

  std::vector<Profile> parts;
  parts.reserve(plan.blocks.size());
  for (const auto& b : plan.blocks) parts.push_back(detail::realize_block(b, cache));

  Profile u = Profile::empty(3);
  for (const auto& part : parts) u = catenate(u, part);

  // block i must sit strictly above block i+1
  const auto scores = borda_scores(u);
  int offset = 0;
  Score prev_max = std::numeric_limits<Score>::min();
  for (const auto& part : parts) {
    Score lo = std::numeric_limits<Score>::max(), hi = std::numeric_limits<Score>::min();
    for (int x = offset; x < offset + part.m(); ++x) {
      lo = std::min(lo, scores[x]);
      hi = std::max(hi, scores[x]);
    }
    if (part.m() > 0 && lo <= prev_max) throw ConstructionError("catenated blocks overlap in score");
    if (part.m() > 0) prev_max = hi;
    offset += part.m();
  }

  u = extend_to_odd_n(u, n);
  if (pattern_of(u) != p) {
    throw ConstructionError("realized profile has pattern " + to_string(pattern_of(u)) +
                            ", expected " + to_string(p));
  }
  return u;
}

/// As above, with a process-wide in-memory witness cache.
inline Profile realize(const LevelPattern& p, int n) { return realize(p, n, detail::process_cache()); }

}  // namespace borda_range

#endif  // BORDA_RANGE_DECOMPOSER_HPP

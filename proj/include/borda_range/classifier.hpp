#ifndef BORDA_RANGE_CLASSIFIER_HPP
#define BORDA_RANGE_CLASSIFIER_HPP

// Membership of a level pattern in the Borda range for odd n, decided by the
// known rules only. Patterns no rule covers come back Unknown.

#include <algorithm>
#include <string>

#include "borda_range/core.hpp"

namespace borda_range {

class OddLevelPresent : public Error {
 public:
  using Error::Error;
};

/// m_i = 2^k * s_i with k maximal; only defined when every m_i is even.
struct PowerDecomposition {
  int k = 0;
  std::vector<int> s;
  int s_sum = 0;
};

inline PowerDecomposition power_decomposition(const LevelPattern& p) {
  if (p.empty()) throw InvalidPattern("empty pattern");
  for (int size : p) {
    if (size % 2 != 0) {
      throw OddLevelPresent("level of odd size " + std::to_string(size));
    }
  }
  PowerDecomposition d;
  d.s = p.sizes();
  while (std::all_of(d.s.begin(), d.s.end(), [](int v) { return v % 2 == 0; })) {
    for (int& v : d.s) v /= 2;
    ++d.k;
  }
  for (int v : d.s) d.s_sum += v;
  return d;
}

enum class Verdict { in_range, not_in_range, unknown };

enum class Rule { none, odd_level, lemma4, new_lemma, new_theorem, theorem3 };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::in_range: return "IN_RANGE";
    case Verdict::not_in_range: return "NOT_IN_RANGE";
    case Verdict::unknown: return "UNKNOWN";
  }
  return "?";
}

inline const char* to_string(Rule r) {
  switch (r) {
    case Rule::none: return "None";
    case Rule::odd_level: return "OddLevel";
    case Rule::lemma4: return "Lemma4";
    case Rule::new_lemma: return "NewLemma";
    case Rule::new_theorem: return "NewTheorem";
    case Rule::theorem3: return "Theorem3";
  }
  return "?";
}

struct Classification {
  Verdict verdict = Verdict::unknown;
  Rule rule = Rule::none;

  std::string applicable_n() const {
    switch (verdict) {
      case Verdict::in_range: return "all odd ≥ 3";
      case Verdict::not_in_range: return "no odd n";
      case Verdict::unknown: return "unknown";
    }
    return "unknown";
  }
  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Which of the four two-2s shapes (if any) a pattern is.
enum class LemmaShape { none, seq_I, seq_II, seq_III, seq_IV };

/// Shapes, with f = number of 4s (f >= 1):
///   I   (2,4..4,2)        II  (4,2,4..4,2)
///   III (2,4..4,2,4)      IV  (4,2,4..4,2,4)
inline LemmaShape lemma_shape(const LevelPattern& p) {
  const auto& s = p.sizes();
  if (std::any_of(s.begin(), s.end(), [](int v) { return v != 2 && v != 4; })) {
    return LemmaShape::none;
  }
  const auto twos = std::count(s.begin(), s.end(), 2);
  if (twos != 2 || twos == static_cast<long>(s.size())) return LemmaShape::none;
  std::vector<std::size_t> at;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 2) at.push_back(i);
  }
  const std::size_t first = at[0], second = at[1], last = s.size() - 1;
  if (first == 0 && second == last) return LemmaShape::seq_I;
  if (first == 1 && second == last) return LemmaShape::seq_II;
  if (first == 0 && second + 1 == last) return LemmaShape::seq_III;
  if (first == 1 && second + 1 == last) return LemmaShape::seq_IV;
  return LemmaShape::none;
}

/// Rule precedence: odd level, odd s-sum, all-odd s, {2,4} patterns, unknown.
inline Classification classify(const LevelPattern& p) {
  if (p.empty()) throw InvalidPattern("empty pattern");
  if (p.total() < 2) throw InvalidPattern("pattern must cover at least two alternatives");

  if (std::any_of(p.begin(), p.end(), [](int v) { return v % 2 != 0; })) {
    return {Verdict::in_range, Rule::odd_level};
  }
  const auto d = power_decomposition(p);
  if (d.s_sum % 2 != 0) return {Verdict::not_in_range, Rule::theorem3};
  if (std::all_of(d.s.begin(), d.s.end(), [](int v) { return v % 2 != 0; })) {
    // an even sum of odd numbers needs an even count of terms
    if (p.levels() % 2 != 0) throw Error("internal: odd level count with all-odd s");
    return {Verdict::in_range, Rule::lemma4};
  }
  const auto& s = p.sizes();
  const bool only_2_4 = std::all_of(s.begin(), s.end(), [](int v) { return v == 2 || v == 4; });
  const auto twos = std::count(s.begin(), s.end(), 2);
  const auto fours = std::count(s.begin(), s.end(), 4);
  if (only_2_4 && twos >= 2 && twos % 2 == 0 && fours >= 1) {
    return {Verdict::in_range,
            lemma_shape(p) != LemmaShape::none ? Rule::new_lemma : Rule::new_theorem};
  }
  return {Verdict::unknown, Rule::none};
}

}  // namespace borda_range

#endif  // BORDA_RANGE_CLASSIFIER_HPP

#ifndef BORDA_RANGE_TESTS_REFERENCE_HPP
#define BORDA_RANGE_TESTS_REFERENCE_HPP

// Independent oracle for the tests: scores by linear search for each
// alternative's position and groups levels through an ordered map. Shares no
// code with the library's scoring path.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace reference {

using Ballots = std::vector<std::vector<int>>;

inline std::vector<long> scores(const Ballots& ballots) {
  const int m = ballots.empty() ? 0 : static_cast<int>(ballots.front().size());
  std::vector<long> s(m, 0);
  for (int x = 0; x < m; ++x) {
    for (const auto& b : ballots) {
      s[x] += std::find(b.begin(), b.end(), x) - b.begin() + 1;
    }
  }
  return s;
}

inline std::vector<std::vector<int>> levels(const Ballots& ballots) {
  std::map<long, std::vector<int>> by_score;
  const auto s = scores(ballots);
  for (int x = 0; x < static_cast<int>(s.size()); ++x) by_score[s[x]].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& [score, xs] : by_score) out.push_back(xs);
  return out;
}

inline std::vector<int> pattern(const Ballots& ballots) {
  std::vector<int> out;
  for (const auto& l : levels(ballots)) out.push_back(static_cast<int>(l.size()));
  return out;
}

/// Patterns reached by every 3-voter profile over m alternatives (no
/// symmetry reduction at all).
inline std::set<std::vector<int>> all_patterns_three_voters(int m) {
  std::vector<int> base(m);
  for (int i = 0; i < m; ++i) base[i] = i;
  std::set<std::vector<int>> out;
  auto a = base;
  do {
    auto b = base;
    do {
      auto c = base;
      do {
        out.insert(pattern({a, b, c}));
      } while (std::next_permutation(c.begin(), c.end()));
    } while (std::next_permutation(b.begin(), b.end()));
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

inline Ballots random_ballots(int m, int n, std::mt19937_64& rng) {
  Ballots out(n, std::vector<int>(m));
  for (auto& b : out) {
    for (int i = 0; i < m; ++i) b[i] = i;
    std::shuffle(b.begin(), b.end(), rng);
  }
  return out;
}

}  // namespace reference

#endif  // BORDA_RANGE_TESTS_REFERENCE_HPP

#ifndef BORDA_RANGE_CORE_HPP
#define BORDA_RANGE_CORE_HPP

// Alternatives, strict rankings, profiles and Borda scoring.
//
// Conventions: alternatives are 0-based ids, rank 1 is the top of a ballot,
// and a lower Borda score is better. Levels are listed best first.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace borda_range {

using Alternative = int;
using Score = std::int64_t;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidProfile : public Error {
 public:
  using Error::Error;
};

class InvalidPattern : public Error {
 public:
  using Error::Error;
};

class VoterCountMismatch : public Error {
 public:
  using Error::Error;
};

class ParityError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A strict order over {0,...,m-1}, stored top to bottom together with its
/// inverse (rank lookup).
class Ranking {
 public:
  Ranking() = default;

  explicit Ranking(std::vector<Alternative> order) : order_(std::move(order)) {
    const auto m = order_.size();
    rank_.assign(m, 0);
    std::vector<bool> seen(m, false);
    for (std::size_t pos = 0; pos < m; ++pos) {
      const Alternative x = order_[pos];
      if (x < 0 || static_cast<std::size_t>(x) >= m || seen[x]) {
        throw InvalidProfile("ranking is not a permutation of 0.." +
                             std::to_string(m == 0 ? 0 : m - 1));
      }
      seen[x] = true;
      rank_[x] = static_cast<int>(pos) + 1;
    }
  }

  Ranking(std::initializer_list<Alternative> order)
      : Ranking(std::vector<Alternative>(order)) {}

  static Ranking identity(int m) {
    std::vector<Alternative> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    return Ranking(std::move(order));
  }

  int size() const { return static_cast<int>(order_.size()); }

  /// Alternative at rank k (1-based).
  Alternative at(int k) const { return order_.at(static_cast<std::size_t>(k - 1)); }

  /// Rank (1..m) of alternative x.
  int rank_of(Alternative x) const { return rank_.at(static_cast<std::size_t>(x)); }

  std::span<const Alternative> order() const { return order_; }

  Ranking reversed() const {
    return Ranking(std::vector<Alternative>(order_.rbegin(), order_.rend()));
  }

  friend bool operator==(const Ranking& a, const Ranking& b) {
    return a.order_ == b.order_;
  }
  friend auto operator<=>(const Ranking& a, const Ranking& b) {
    return a.order_ <=> b.order_;
  }

 private:
  std::vector<Alternative> order_;
  std::vector<int> rank_;
};

/// n strict rankings over the same m alternatives. Immutable once built.
class Profile {
 public:
  Profile() = default;

  Profile(int m, std::vector<Ranking> rankings)
      : m_(m), rankings_(std::move(rankings)) {
    if (m_ < 0) throw InvalidProfile("negative alternative count");
    if (rankings_.empty()) throw InvalidProfile("a profile needs at least one voter");
    for (const auto& r : rankings_) {
      if (r.size() != m_) {
        throw InvalidProfile("ranking of length " + std::to_string(r.size()) +
                             " in a profile over " + std::to_string(m_) +
                             " alternatives");
      }
    }
  }

  /// Builds a profile from raw orders; m is taken from the first ballot.
  static Profile from_orders(const std::vector<std::vector<Alternative>>& orders) {
    if (orders.empty()) throw InvalidProfile("a profile needs at least one voter");
    std::vector<Ranking> rs;
    rs.reserve(orders.size());
    for (const auto& o : orders) rs.emplace_back(o);
    return Profile(static_cast<int>(orders.front().size()), std::move(rs));
  }

  /// n voters over zero alternatives; the neutral element of catenate.
  static Profile empty(int n) {
    return Profile(0, std::vector<Ranking>(static_cast<std::size_t>(n)));
  }

  int m() const { return m_; }
  int n() const { return static_cast<int>(rankings_.size()); }
  const Ranking& voter(int i) const { return rankings_.at(static_cast<std::size_t>(i)); }
  std::span<const Ranking> rankings() const { return rankings_; }

  friend bool operator==(const Profile& a, const Profile& b) {
    return a.m_ == b.m_ && a.rankings_ == b.rankings_;
  }
  friend auto operator<=>(const Profile& a, const Profile& b) {
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    return a.rankings_ <=> b.rankings_;
  }

 private:
  int m_ = 0;
  std::vector<Ranking> rankings_;
};

/// Level cardinalities (m_1,...,m_T), best level first.
class LevelPattern {
 public:
  LevelPattern() = default;

  explicit LevelPattern(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    for (int s : sizes_) {
      if (s < 1) throw InvalidPattern("level sizes must be positive");
    }
  }
  LevelPattern(std::initializer_list<int> sizes)
      : LevelPattern(std::vector<int>(sizes)) {}

  int levels() const { return static_cast<int>(sizes_.size()); }
  int total() const { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }
  bool empty() const { return sizes_.empty(); }
  int operator[](std::size_t i) const { return sizes_[i]; }
  const std::vector<int>& sizes() const { return sizes_; }
  auto begin() const { return sizes_.begin(); }
  auto end() const { return sizes_.end(); }

  LevelPattern reversed() const {
    return LevelPattern(std::vector<int>(sizes_.rbegin(), sizes_.rend()));
  }

  friend LevelPattern operator+(const LevelPattern& a, const LevelPattern& b) {
    std::vector<int> s = a.sizes_;
    s.insert(s.end(), b.sizes_.begin(), b.sizes_.end());
    return LevelPattern(std::move(s));
  }

  friend bool operator==(const LevelPattern&, const LevelPattern&) = default;
  friend auto operator<=>(const LevelPattern&, const LevelPattern&) = default;

 private:
  std::vector<int> sizes_;
};

/// Borda scores indexed by alternative id.
struct ScoreVector {
  std::vector<Score> scores;

  Score operator[](Alternative x) const { return scores[static_cast<std::size_t>(x)]; }
  std::size_t size() const { return scores.size(); }
  Score total() const { return std::accumulate(scores.begin(), scores.end(), Score{0}); }
  friend bool operator==(const ScoreVector&, const ScoreVector&) = default;
};

/// Alternatives grouped by equal score; level_scores strictly increasing.
struct WeakOrder {
  std::vector<std::vector<Alternative>> levels;
  std::vector<Score> level_scores;

  LevelPattern pattern() const {
    std::vector<int> sizes;
    sizes.reserve(levels.size());
    for (const auto& l : levels) sizes.push_back(static_cast<int>(l.size()));
    return LevelPattern(std::move(sizes));
  }
  friend bool operator==(const WeakOrder&, const WeakOrder&) = default;
};

inline ScoreVector borda_scores(const Profile& u) {
  ScoreVector s;
  s.scores.assign(static_cast<std::size_t>(u.m()), 0);
  for (const auto& r : u.rankings()) {
    const auto order = r.order();
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      s.scores[static_cast<std::size_t>(order[pos])] += static_cast<Score>(pos + 1);
    }
  }
  return s;
}

inline WeakOrder weak_order_of(const ScoreVector& s) {
  std::vector<Alternative> ids(s.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::stable_sort(ids.begin(), ids.end(),
                   [&](Alternative a, Alternative b) { return s[a] < s[b]; });
  WeakOrder w;
  for (Alternative x : ids) {
    if (w.level_scores.empty() || w.level_scores.back() != s[x]) {
      w.level_scores.push_back(s[x]);
      w.levels.emplace_back();
    }
    w.levels.back().push_back(x);
  }
  return w;
}

inline WeakOrder weak_order_of(const Profile& u) { return weak_order_of(borda_scores(u)); }

inline LevelPattern pattern_of(const Profile& u) { return weak_order_of(u).pattern(); }

/// Reverses every ballot. Scores map to n(m+1) - S and the pattern reverses.
inline Profile invert_profile(const Profile& u) {
  std::vector<Ranking> rs;
  rs.reserve(static_cast<std::size_t>(u.n()));
  for (const auto& r : u.rankings()) rs.push_back(r.reversed());
  return Profile(u.m(), std::move(rs));
}

/// Every voter ranks all of `top` (ids kept) above all of `bottom` (ids
/// shifted by top.m()). The bottom block's scores rise by n*top.m(), which
/// exceeds every top score, so the patterns concatenate.
inline Profile catenate(const Profile& top, const Profile& bottom) {
  if (top.n() != bottom.n()) {
    throw VoterCountMismatch("cannot catenate profiles with " + std::to_string(top.n()) +
                             " and " + std::to_string(bottom.n()) + " voters");
  }
  const int offset = top.m();
  std::vector<Ranking> rs;
  rs.reserve(static_cast<std::size_t>(top.n()));
  for (int i = 0; i < top.n(); ++i) {
    const auto a = top.voter(i).order();
    const auto b = bottom.voter(i).order();
    std::vector<Alternative> order(a.begin(), a.end());
    order.reserve(a.size() + b.size());
    for (Alternative x : b) order.push_back(x + offset);
    rs.emplace_back(std::move(order));
  }
  return Profile(top.m() + bottom.m(), std::move(rs));
}

/// Pads an odd-n profile to target_n voters with pairs {r, reverse(r)}.
/// Each pair adds m+1 to every score, so the level sets are unchanged.
inline Profile extend_to_odd_n(const Profile& u, int target_n) {
  if (target_n % 2 == 0) {
    throw ParityError("target voter count " + std::to_string(target_n) + " is even");
  }
  if (u.n() % 2 == 0) {
    throw ParityError("profile has an even number of voters (" + std::to_string(u.n()) + ")");
  }
  if (target_n < u.n()) {
    throw ParityError("target voter count " + std::to_string(target_n) +
                      " is below the current " + std::to_string(u.n()));
  }
  std::vector<Ranking> rs(u.rankings().begin(), u.rankings().end());
  const Ranking pad = Ranking::identity(u.m());
  const Ranking pad_rev = pad.reversed();
  while (static_cast<int>(rs.size()) < target_n) {
    rs.push_back(pad);
    rs.push_back(pad_rev);
  }
  Profile out(u.m(), std::move(rs));

  const auto before = weak_order_of(u);
  const auto after = weak_order_of(out);
  const Score shift = static_cast<Score>(u.m() + 1) * (target_n - u.n()) / 2;
  bool ok = before.levels == after.levels;
  for (std::size_t i = 0; ok && i < before.level_scores.size(); ++i) {
    ok = after.level_scores[i] == before.level_scores[i] + shift;
  }
  if (!ok) throw Error("odd-n extension changed the weak order");
  return out;
}

}  // namespace borda_range

#endif  // BORDA_RANGE_CORE_HPP

#ifndef BORDA_RANGE_ORACLE_HPP
#define BORDA_RANGE_ORACLE_HPP

// Brute-force ground truth at desk scale.
//
// Borda's rule is neutral, so relabeling alternatives maps any profile to one
// where voter 1 ranks 0..m-1 in order, with the same pattern. Enumeration and
// exhaustive search therefore fix voter 1 and walk the remaining (m!)^(n-1)
// ballot tuples; for n > 3 the remaining voters are also taken in
// nondecreasing order (anonymity). Every profile handed out re-verifies.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "borda_range/classifier.hpp"
#include "borda_range/core.hpp"
#include "borda_range/io.hpp"

namespace borda_range {

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

inline constexpr double kDefaultExhaustiveLimit = 1e9;
inline constexpr std::int64_t kDefaultRestarts = 1'000'000;

/// (m!)^(n-1), saturating at 1e300.
inline double reduced_candidate_count(int m, int n) {
  double f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return std::min(std::pow(f, n - 1), 1e300);
}

/// Every composition of m (ordered sequences of positive parts summing to m).
inline std::vector<LevelPattern> compositions(int m) {
  std::vector<LevelPattern> out;
  if (m < 1) return out;
  // bit i of mask set = cut after position i
  const std::uint64_t cuts = std::uint64_t{1} << (m - 1);
  for (std::uint64_t mask = 0; mask < cuts; ++mask) {
    std::vector<int> sizes;
    int run = 1;
    for (int i = 0; i < m - 1; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        sizes.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    sizes.push_back(run);
    out.emplace_back(std::move(sizes));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Necessary condition: integers S_1 < ... < S_T in [n, n*m] with
/// sum m_i * S_i = n*m*(m+1)/2.
inline bool score_levels_feasible(const LevelPattern& p, int n) {
  const int m = p.total();
  const int T = p.levels();
  if (T == 0) return false;
  const std::int64_t target = std::int64_t{n} * m * (m + 1) / 2;
  // S_i = n + (i-1) + e_i with 0 <= e_1 <= ... <= e_T <= E
  const std::int64_t E = std::int64_t{n} * m - n - (T - 1);
  if (E < 0) return false;
  std::int64_t base = 0;
  for (int i = 0; i < T; ++i) base += std::int64_t{p[static_cast<std::size_t>(i)]} * (n + i);
  const std::int64_t rest = target - base;
  if (rest < 0) return false;
  // e nondecreasing => sum m_i e_i = sum_j f_j * suffix_j with f_j >= 0 and
  // sum f_j <= E. Minimum coin count by DP over the remainder.
  std::vector<std::int64_t> suffix(static_cast<std::size_t>(T));
  std::int64_t acc = 0;
  for (int j = T - 1; j >= 0; --j) {
    acc += p[static_cast<std::size_t>(j)];
    suffix[static_cast<std::size_t>(j)] = acc;
  }
  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> coins(static_cast<std::size_t>(rest + 1), inf);
  coins[0] = 0;
  for (std::int64_t r = 1; r <= rest; ++r) {
    for (std::int64_t c : suffix) {
      if (c <= r && coins[static_cast<std::size_t>(r - c)] + 1 < coins[static_cast<std::size_t>(r)]) {
        coins[static_cast<std::size_t>(r)] = coins[static_cast<std::size_t>(r - c)] + 1;
      }
    }
  }
  return coins[static_cast<std::size_t>(rest)] <= E;
}

namespace detail {

// All permutations of 0..m-1 in lexicographic order, with rank lookups.
struct PermutationTable {
  int m = 0;
  std::vector<std::vector<Alternative>> orders;
  std::vector<std::vector<int>> ranks;  // ranks[i][x] = 1-based rank of x

  explicit PermutationTable(int m_) : m(m_) {
    std::vector<Alternative> p(static_cast<std::size_t>(m));
    std::iota(p.begin(), p.end(), 0);
    do {
      orders.push_back(p);
      std::vector<int> r(static_cast<std::size_t>(m));
      for (int pos = 0; pos < m; ++pos) r[static_cast<std::size_t>(p[static_cast<std::size_t>(pos)])] = pos + 1;
      ranks.push_back(std::move(r));
    } while (std::next_permutation(p.begin(), p.end()));
  }
  std::size_t size() const { return orders.size(); }
};

// Pattern of a score vector packed 4 bits per level (m <= 15).
inline std::uint64_t pattern_key(std::vector<Score>& scratch) {
  std::sort(scratch.begin(), scratch.end());
  std::uint64_t key = 0;
  int run = 0, shift = 0;
  for (std::size_t i = 0; i < scratch.size(); ++i) {
    ++run;
    if (i + 1 == scratch.size() || scratch[i + 1] != scratch[i]) {
      key |= static_cast<std::uint64_t>(run) << shift;
      shift += 4;
      run = 0;
    }
  }
  return key;
}

inline std::uint64_t pattern_key(const LevelPattern& p) {
  std::uint64_t key = 0;
  int shift = 0;
  for (int s : p) {
    key |= static_cast<std::uint64_t>(s) << shift;
    shift += 4;
  }
  return key;
}

inline LevelPattern pattern_from_key(std::uint64_t key) {
  std::vector<int> sizes;
  while (key) {
    sizes.push_back(static_cast<int>(key & 0xF));
    key >>= 4;
  }
  return LevelPattern(std::move(sizes));
}

struct Tally {
  std::int64_t count = 0;
  std::vector<std::size_t> first;  // permutation indices of the lex-min witness
};

// Walks every ballot tuple for the free voters whose first free index lies in
// [lo, hi). Calls visit(indices, key) and stops early when it returns false.
template <class Visit>
void walk_tuples(const PermutationTable& perms, int n, bool fix_first, bool sorted_tail,
                 std::size_t lo, std::size_t hi, Visit&& visit) {
  const int m = perms.m;
  const int free_voters = fix_first ? n - 1 : n;
  std::vector<Score> base(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) base[static_cast<std::size_t>(x)] = fix_first ? x + 1 : 0;
  if (free_voters == 0) {
    auto s = base;
    std::vector<std::size_t> none;
    visit(none, pattern_key(s));
    return;
  }
  std::vector<std::size_t> idx(static_cast<std::size_t>(free_voters));
  // partial[d] = scores after voters 0..d-1 of the free tuple
  std::vector<std::vector<Score>> partial(static_cast<std::size_t>(free_voters + 1), base);
  std::vector<Score> scratch(static_cast<std::size_t>(m));

  auto fill_from = [&](int d) {
    for (int e = d; e < free_voters; ++e) {
      const auto& r = perms.ranks[idx[static_cast<std::size_t>(e)]];
      auto& dst = partial[static_cast<std::size_t>(e + 1)];
      const auto& src = partial[static_cast<std::size_t>(e)];
      for (int x = 0; x < m; ++x) dst[static_cast<std::size_t>(x)] = src[static_cast<std::size_t>(x)] + r[static_cast<std::size_t>(x)];
    }
  };

  for (std::size_t head = lo; head < hi; ++head) {
    idx[0] = head;
    for (int e = 1; e < free_voters; ++e) idx[static_cast<std::size_t>(e)] = sorted_tail ? head : 0;
    fill_from(0);
    while (true) {
      scratch = partial[static_cast<std::size_t>(free_voters)];
      if (!visit(idx, pattern_key(scratch))) return;
      // advance odometer over positions 1..free_voters-1
      int d = free_voters - 1;
      while (d >= 1 && idx[static_cast<std::size_t>(d)] + 1 == perms.size()) --d;
      if (d < 1) break;
      ++idx[static_cast<std::size_t>(d)];
      for (int e = d + 1; e < free_voters; ++e) {
        idx[static_cast<std::size_t>(e)] = sorted_tail ? idx[static_cast<std::size_t>(d)] : 0;
      }
      fill_from(d);
    }
  }
}

inline Profile profile_from_indices(const PermutationTable& perms, int n, bool fix_first,
                                    const std::vector<std::size_t>& idx) {
  std::vector<Ranking> rs;
  if (fix_first) rs.push_back(Ranking::identity(perms.m));
  for (std::size_t i : idx) rs.emplace_back(perms.orders[i]);
  (void)n;
  return Profile(perms.m, std::move(rs));
}

}  // namespace detail

enum class EnumerationMode { exhaustive, sampled };

struct EnumerationOptions {
  EnumerationMode mode = EnumerationMode::exhaustive;
  std::int64_t trials = 100'000;  // sampled mode
  std::uint64_t seed = 1;         // sampled mode
  double budget = kDefaultExhaustiveLimit;
  unsigned threads = 0;           // 0 = hardware concurrency
  bool fix_first_voter = true;    // false only for checking the reduction
};

struct AtlasEntry {
  std::int64_t count = 0;
  Profile witness;
};

/// Achieved patterns for fixed (m, n), each with its lexicographically
/// smallest witness among the profiles visited.
struct RangeAtlas {
  int m = 0;
  int n = 0;
  EnumerationMode mode = EnumerationMode::exhaustive;
  std::int64_t trials = 0;
  std::map<LevelPattern, AtlasEntry> achieved;

  bool contains(const LevelPattern& p) const { return achieved.count(p) != 0; }
};

inline RangeAtlas enumerate_range(int m, int n, const EnumerationOptions& opt = {}) {
  if (m < 1) throw PreconditionError("enumeration needs m >= 1");
  if (n < 1 || n % 2 == 0) throw ParityError("enumeration needs an odd voter count");
  RangeAtlas atlas;
  atlas.m = m;
  atlas.n = n;
  atlas.mode = opt.mode;

  if (opt.mode == EnumerationMode::sampled) {
    atlas.trials = opt.trials;
    std::mt19937_64 rng(opt.seed);
    for (std::int64_t t = 0; t < opt.trials; ++t) {
      std::vector<Ranking> rs;
      rs.push_back(Ranking::identity(m));
      for (int v = 1; v < n; ++v) {
        std::vector<Alternative> o(static_cast<std::size_t>(m));
        std::iota(o.begin(), o.end(), 0);
        std::shuffle(o.begin(), o.end(), rng);
        rs.emplace_back(std::move(o));
      }
      Profile u(m, std::move(rs));
      auto& e = atlas.achieved[pattern_of(u)];
      if (e.count == 0 || u < e.witness) e.witness = u;
      ++e.count;
    }
    return atlas;
  }

  const int free_voters = opt.fix_first_voter ? n - 1 : n;
  const double candidates = reduced_candidate_count(m, free_voters + 1);
  if (m > 15 || candidates > opt.budget) {
    std::ostringstream msg;
    msg << "exhaustive enumeration of m=" << m << ", n=" << n << " needs " << candidates
        << " candidates, budget is " << opt.budget;
    throw BudgetExceeded(msg.str());
  }

  const detail::PermutationTable perms(m);
  const bool sorted_tail = n > 3;
  const std::size_t heads = free_voters == 0 ? 1 : perms.size();
  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, heads));

  std::vector<std::unordered_map<std::uint64_t, detail::Tally>> partials(threads);
  auto work = [&](unsigned t) {
    const std::size_t lo = heads * t / threads, hi = heads * (t + 1) / threads;
    auto& tally = partials[t];
    detail::walk_tuples(perms, n, opt.fix_first_voter, sorted_tail, lo, hi,
                        [&](const std::vector<std::size_t>& idx, std::uint64_t key) {
                          auto& e = tally[key];
                          if (e.count++ == 0) e.first = idx;
                          return true;
                        });
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  // Partitions cover increasing head ranges, so the first partition holding a
  // pattern also holds its lex-min witness.
  std::map<std::uint64_t, detail::Tally> merged;
  for (auto& part : partials) {
    for (auto& [key, tally] : part) {
      auto [it, inserted] = merged.try_emplace(key, tally);
      if (!inserted) {
        it->second.count += tally.count;
        if (tally.first < it->second.first) it->second.first = tally.first;
      }
    }
  }
  for (const auto& [key, tally] : merged) {
    auto witness = detail::profile_from_indices(perms, n, opt.fix_first_voter, tally.first);
    const auto p = detail::pattern_from_key(key);
    if (pattern_of(witness) != p) throw Error("internal: enumeration witness failed to verify");
    atlas.achieved.emplace(p, AtlasEntry{tally.count, std::move(witness)});
  }
  return atlas;
}

// ---------------------------------------------------------------------------
// witness search

struct SearchBudget {
  double exhaustive_limit = kDefaultExhaustiveLimit;
  std::int64_t restarts = kDefaultRestarts;
  std::int64_t steps_per_restart = 0;  // 0 = 200 * m * m
};

enum class SearchStrategy { prefilter, exhaustive, local };

struct SearchResult {
  std::optional<Profile> witness;
  /// True when a miss proves that no witness exists at this n.
  bool exhaustive = false;
  SearchStrategy strategy = SearchStrategy::exhaustive;
  std::int64_t restarts_used = 0;

  bool found() const { return witness.has_value(); }
};

namespace detail {

// Zero exactly when the sorted scores split into blocks of the pattern's sizes,
// each block constant and consecutive blocks distinct.
inline std::int64_t pattern_distance(const std::vector<Score>& sorted, const LevelPattern& p) {
  std::int64_t obj = 0;
  std::size_t pos = 0;
  Score prev_last = std::numeric_limits<Score>::min();
  for (int size : p) {
    std::int64_t sum = 0, sq = 0;
    for (int i = 0; i < size; ++i) {
      const Score v = sorted[pos + static_cast<std::size_t>(i)];
      sum += v;
      sq += v * v;
    }
    obj += size * sq - sum * sum;
    if (sorted[pos] == prev_last) obj += 1;
    prev_last = sorted[pos + static_cast<std::size_t>(size) - 1];
    pos += static_cast<std::size_t>(size);
  }
  return obj;
}

}  // namespace detail

inline SearchResult search_witness(const LevelPattern& p, int n, const SearchBudget& budget = {},
                                   std::uint64_t seed = 1) {
  if (p.empty()) throw InvalidPattern("empty pattern");
  if (n < 1 || n % 2 == 0) throw ParityError("search needs an odd voter count");
  const int m = p.total();
  SearchResult result;

  if (!score_levels_feasible(p, n)) {
    result.exhaustive = true;
    result.strategy = SearchStrategy::prefilter;
    return result;
  }

  if (m <= 15 && reduced_candidate_count(m, n) <= budget.exhaustive_limit) {
    result.strategy = SearchStrategy::exhaustive;
    result.exhaustive = true;
    const detail::PermutationTable perms(m);
    const auto want = detail::pattern_key(p);
    std::optional<std::vector<std::size_t>> hit;
    detail::walk_tuples(perms, n, true, n > 3, 0, n == 1 ? 1 : perms.size(),
                        [&](const std::vector<std::size_t>& idx, std::uint64_t key) {
                          if (key != want) return true;
                          hit = idx;
                          return false;
                        });
    if (hit) result.witness = detail::profile_from_indices(perms, n, true, *hit);
  } else {
    result.strategy = SearchStrategy::local;
    std::mt19937_64 rng(seed);
    const std::int64_t steps =
        budget.steps_per_restart > 0 ? budget.steps_per_restart : std::int64_t{200} * m * m;
    std::uniform_int_distribution<int> pick_voter(1, std::max(1, n - 1));
    std::uniform_int_distribution<int> pick_pos(0, std::max(0, m - 2));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Score> scores(static_cast<std::size_t>(m)), sorted;
    auto objective = [&] {
      sorted = scores;
      std::sort(sorted.begin(), sorted.end());
      return detail::pattern_distance(sorted, p);
    };
    for (std::int64_t r = 0; r < budget.restarts && !result.witness && n > 1 && m > 1; ++r) {
      ++result.restarts_used;
      std::vector<std::vector<Alternative>> orders(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) {
        auto& o = orders[static_cast<std::size_t>(v)];
        o.resize(static_cast<std::size_t>(m));
        std::iota(o.begin(), o.end(), 0);
        if (v > 0) std::shuffle(o.begin(), o.end(), rng);
      }
      std::fill(scores.begin(), scores.end(), 0);
      for (const auto& o : orders) {
        for (int pos = 0; pos < m; ++pos) scores[static_cast<std::size_t>(o[static_cast<std::size_t>(pos)])] += pos + 1;
      }
      std::int64_t cur = objective();
      for (std::int64_t s = 0; s < steps && cur != 0; ++s) {
        auto& o = orders[static_cast<std::size_t>(pick_voter(rng))];
        const auto j = static_cast<std::size_t>(pick_pos(rng));
        const Alternative a = o[j], b = o[j + 1];
        std::swap(o[j], o[j + 1]);
        ++scores[static_cast<std::size_t>(a)];
        --scores[static_cast<std::size_t>(b)];
        const std::int64_t next = objective();
        if (next <= cur || coin(rng) < std::exp(static_cast<double>(cur - next))) {
          cur = next;
        } else {
          std::swap(o[j], o[j + 1]);
          --scores[static_cast<std::size_t>(a)];
          ++scores[static_cast<std::size_t>(b)];
        }
      }
      if (cur == 0) result.witness = Profile::from_orders(orders);
    }
  }

  if (result.witness && pattern_of(*result.witness) != p) {
    throw Error("internal: search produced an unverified witness");
  }
  if (result.witness) result.exhaustive = false;
  return result;
}

// ---------------------------------------------------------------------------
// cross-check

struct CrossCheckEntry {
  LevelPattern pattern;
  Classification classification;
  bool achieved = false;
};

struct CrossCheckReport {
  int max_m = 0;
  int n = 0;
  std::vector<CrossCheckEntry> entries;         // every pattern with 2 <= total <= max_m
  std::vector<CrossCheckEntry> contradictions;  // must stay empty
  std::vector<CrossCheckEntry> unknowns;        // no rule applies; empirical status only
};

/// Compares classify() with exhaustive atlases for every m in 2..max_m.
inline CrossCheckReport cross_check(int max_m, int n, const EnumerationOptions& opt = {}) {
  if (max_m < 2) throw PreconditionError("cross-check needs max_m >= 2");
  if (n < 3 || n % 2 == 0) throw ParityError("cross-check needs an odd n >= 3");
  EnumerationOptions ex = opt;
  ex.mode = EnumerationMode::exhaustive;
  CrossCheckReport report;
  report.max_m = max_m;
  report.n = n;
  for (int m = 2; m <= max_m; ++m) {
    const auto atlas = enumerate_range(m, n, ex);
    for (const auto& p : compositions(m)) {
      CrossCheckEntry e{p, classify(p), atlas.contains(p)};
      report.entries.push_back(e);
      const bool wrong = (e.classification.verdict == Verdict::not_in_range && e.achieved) ||
                         (e.classification.verdict == Verdict::in_range && !e.achieved);
      if (wrong) report.contradictions.push_back(e);
      if (e.classification.verdict == Verdict::unknown) report.unknowns.push_back(e);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// export

inline const char* to_string(EnumerationMode mode) {
  return mode == EnumerationMode::exhaustive ? "exhaustive" : "sampled";
}

inline nlohmann::json atlas_to_json(const RangeAtlas& atlas) {
  nlohmann::json achieved = nlohmann::json::array();
  for (const auto& [p, e] : atlas.achieved) {
    achieved.push_back({{"count", e.count}, {"pattern", to_string(p)}, {"witness", to_json(e.witness)}});
  }
  nlohmann::json j{{"achieved", achieved}, {"m", atlas.m}, {"mode", to_string(atlas.mode)}, {"n", atlas.n}};
  if (atlas.mode == EnumerationMode::sampled) j["trials"] = atlas.trials;
  return j;
}

namespace detail {
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}
}  // namespace detail

inline std::string atlas_to_csv(const RangeAtlas& atlas) {
  std::string out = "pattern,count_of_witnesses,min_witness_json\n";
  for (const auto& [p, e] : atlas.achieved) {
    out += detail::csv_field(to_string(p)) + "," + std::to_string(e.count) + "," +
           detail::csv_field(serialize_profile(e.witness)) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// witness cache

enum class Provenance { constructed, searched, fixture };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::constructed: return "constructed";
    case Provenance::searched: return "searched";
    case Provenance::fixture: return "fixture";
  }
  return "?";
}

inline std::optional<Provenance> provenance_from_string(const std::string& s) {
  if (s == "constructed") return Provenance::constructed;
  if (s == "searched") return Provenance::searched;
  if (s == "fixture") return Provenance::fixture;
  return std::nullopt;
}

/// Environment variable naming the witness cache file.
inline constexpr const char* kCacheEnvVar = "BORDA_RANGE_CACHE";

/// $BORDA_RANGE_CACHE, else $XDG_CACHE_HOME/borda-range/witnesses.json, else
/// ~/.cache/borda-range/witnesses.json; empty when none is set.
inline std::filesystem::path default_cache_path() {
  if (const char* p = std::getenv(kCacheEnvVar); p && *p) return p;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) {
    return std::filesystem::path(x) / "borda-range" / "witnesses.json";
  }
  if (const char* h = std::getenv("HOME"); h && *h) {
    return std::filesystem::path(h) / ".cache" / "borda-range" / "witnesses.json";
  }
  return {};
}

/// Verified witnesses keyed by (pattern, n), optionally persisted as JSON.
/// Entries are checked on load; bad ones are dropped and reported through
/// warnings(). Each store rewrites the file through a rename.
class WitnessCache {
 public:
  struct Entry {
    Profile profile;
    Provenance provenance = Provenance::searched;
  };

  WitnessCache() = default;

  explicit WitnessCache(std::filesystem::path file) : path_(std::move(file)) { load(); }

  std::optional<Entry> find(const LevelPattern& p, int n) const {
    std::lock_guard lock(mu_);
    auto it = entries_.find({p, n});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void store(const LevelPattern& p, const Profile& u, Provenance prov) {
    if (pattern_of(u) != p) {
      throw Error("refusing to cache a profile that does not realize " + to_string(p));
    }
    std::lock_guard lock(mu_);
    entries_[{p, u.n()}] = Entry{u, prov};
    persist_locked();
  }

  /// Cached witness, or a fresh search result that is then cached. Throws
  /// BudgetExceeded when the search finds nothing.
  Profile get_or_search(const LevelPattern& p, int n, const SearchBudget& budget = {},
                        std::uint64_t seed = 1) {
    if (auto hit = find(p, n)) return hit->profile;
    std::lock_guard search_lock(search_mu_);
    if (auto hit = find(p, n)) return hit->profile;
    auto r = search_witness(p, n, budget, seed);
    if (!r.found()) {
      throw BudgetExceeded("no witness found for " + to_string(p) + " at n=" + std::to_string(n) +
                           (r.exhaustive ? " (none exists)" : " within budget"));
    }
    store(p, *r.witness, Provenance::searched);
    return *r.witness;
  }

  std::size_t size() const {
    std::lock_guard lock(mu_);
    return entries_.size();
  }

  const std::filesystem::path& path() const { return path_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  nlohmann::json to_json_document() const {
    std::lock_guard lock(mu_);
    return document_locked();
  }

 private:
  nlohmann::json document_locked() const {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& [key, e] : entries_) {
      list.push_back({{"n", key.second},
                      {"pattern", to_string(key.first)},
                      {"profile", to_json(e.profile)},
                      {"provenance", to_string(e.provenance)}});
    }
    return nlohmann::json{{"entries", list}, {"version", 1}};
  }

  void load() {
    if (path_.empty() || !std::filesystem::exists(path_)) return;
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(read_file(path_.string()));
    } catch (const std::exception& e) {
      warnings_.push_back("ignoring unreadable witness cache " + path_.string() + ": " + e.what());
      return;
    }
    if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) {
      warnings_.push_back("ignoring witness cache " + path_.string() + ": no entries array");
      return;
    }
    for (const auto& item : doc["entries"]) {
      try {
        const auto p = parse_pattern(item.at("pattern").get<std::string>());
        const auto u = profile_from_json(item.at("profile"));
        const auto prov = provenance_from_string(item.at("provenance").get<std::string>());
        if (!prov) throw Error("unknown provenance");
        if (item.at("n").get<int>() != u.n()) throw Error("voter count mismatch");
        if (pattern_of(u) != p) throw Error("profile does not realize its pattern");
        entries_[{p, u.n()}] = Entry{u, *prov};
      } catch (const std::exception& e) {
        warnings_.push_back("dropping cache entry " + item.dump() + ": " + e.what());
      }
    }
  }

  void persist_locked() {
    if (path_.empty()) return;
    std::error_code ec;
    if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path(), ec);
    auto tmp = path_;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw Error("cannot write witness cache " + tmp.string());
      out << document_locked().dump(2) << "\n";
    }
    std::filesystem::rename(tmp, path_, ec);
    if (ec) throw Error("cannot replace witness cache " + path_.string() + ": " + ec.message());
  }

  std::filesystem::path path_;
  mutable std::mutex mu_;
  std::mutex search_mu_;
  std::map<std::pair<LevelPattern, int>, Entry> entries_;
  std::vector<std::string> warnings_;
};

}  // namespace borda_range

#endif  // BORDA_RANGE_ORACLE_HPP

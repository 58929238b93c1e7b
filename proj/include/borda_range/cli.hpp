#ifndef BORDA_RANGE_CLI_HPP
#define BORDA_RANGE_CLI_HPP

// Command-line front end. Exit codes:
//   0  success / affirmative verdict
//   1  negative outcome (not in range, verification failed, nothing found)
//   2  usage or I/O error
//   3  internal construction failure

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "borda_range/borda_range.hpp"

namespace borda_range::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kInternal = 3 };

namespace detail {

inline std::string join_scores(const ScoreVector& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.scores[i]);
  }
  return out;
}

inline std::string format_levels(const WeakOrder& w) {
  std::string out;
  for (std::size_t i = 0; i < w.levels.size(); ++i) {
    if (i) out += ' ';
    out += '{';
    for (std::size_t j = 0; j < w.levels[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(w.levels[i][j]);
    }
    out += '}';
  }
  return out;
}

inline std::string profile_text(const Profile& u) {
  std::ostringstream os;
  os << "pattern=" << to_string(pattern_of(u)) << " m=" << u.m() << " n=" << u.n() << "\n";
  for (int i = 0; i < u.n(); ++i) {
    os << "voter " << i + 1 << ":";
    for (Alternative x : u.voter(i).order()) os << ' ' << x;
    os << "\n";
  }
  os << "scores=" << join_scores(borda_scores(u)) << "\n";
  return os.str();
}

inline bool write_output(const std::string& path, const std::string& payload, std::ostream& out,
                         std::ostream& err) {
  if (path.empty()) {
    out << payload;
    return true;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f || !(f << payload)) {
    err << "error: cannot write '" << path << "'\n";
    return false;
  }
  return true;
}

inline std::unique_ptr<WitnessCache> open_cache(const std::string& flag, std::ostream& err) {
  const std::filesystem::path path = flag.empty() ? default_cache_path() : std::filesystem::path(flag);
  auto cache = path.empty() ? std::make_unique<WitnessCache>() : std::make_unique<WitnessCache>(path);
  for (const auto& w : cache->warnings()) err << "warning: " << w << "\n";
  return cache;
}

inline bool odd_n_at_least(int n, int lo) { return n >= lo && n % 2 == 1; }

}  // namespace detail

/// Runs one command. args[0] is the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               std::istream& in = std::cin) {
  CLI::App app{"Borda range: classify, construct, verify and enumerate level patterns"};
  app.require_subcommand(1);

  std::string pattern_text, format = "text", out_file, cache_file, profile_file, expect_text,
                            export_file, mode = "exhaustive";
  int n = 3, m = 0, max_m = 0;
  std::int64_t trials = 100'000, budget = kDefaultRestarts;
  std::uint64_t seed = 1;
  unsigned threads = 0;

  auto* classify_cmd = app.add_subcommand("classify", "Decide membership of a pattern in the Borda range");
  classify_cmd->add_option("pattern", pattern_text, "Comma-separated level sizes")->required();
  classify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string construct_format = "json";
  auto* construct_cmd = app.add_subcommand("construct", "Build a verified witness profile");
  construct_cmd->add_option("pattern", pattern_text)->required();
  construct_cmd->add_option("--n", n, "Odd number of voters (>= 3)")->required();
  construct_cmd->add_option("--format", construct_format)->check(CLI::IsMember({"text", "json"}));
  construct_cmd->add_option("--out", out_file, "Write the profile here instead of stdout");
  construct_cmd->add_option("--cache", cache_file,
                            std::string("Witness cache file (default: $") + kCacheEnvVar + ")");

  auto* verify_cmd = app.add_subcommand("verify", "Score a profile file and check its pattern");
  verify_cmd->add_option("profile", profile_file, "Profile JSON file, or - for stdin")->required();
  verify_cmd->add_option("--expect", expect_text, "Pattern the profile must realize");
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every pattern reached for fixed m and n");
  enumerate_cmd->add_option("--m", m)->required()->check(CLI::Range(1, 15));
  enumerate_cmd->add_option("--n", n)->required();
  enumerate_cmd->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
  enumerate_cmd->add_option("--trials", trials, "Profiles drawn in sampled mode");
  enumerate_cmd->add_option("--seed", seed);
  enumerate_cmd->add_option("--threads", threads);
  enumerate_cmd->add_option("--export", export_file, "Write the atlas as CSV, or JSON for *.json");

  auto* cross_cmd = app.add_subcommand("cross-check", "Compare the classifier against enumeration");
  cross_cmd->add_option("--max-m", max_m)->required()->check(CLI::Range(2, 15));
  cross_cmd->add_option("--n", n)->required();
  cross_cmd->add_option("--threads", threads);

  auto* search_cmd = app.add_subcommand("search", "Look for a witness by brute force or local search");
  search_cmd->add_option("pattern", pattern_text)->required();
  search_cmd->add_option("--n", n)->required();
  search_cmd->add_option("--budget", budget, "Restarts for the randomized search");
  search_cmd->add_option("--seed", seed);
  search_cmd->add_option("--cache", cache_file, "Also store the witness in this cache file");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*classify_cmd) {
      const auto p = parse_pattern(pattern_text);
      const auto c = classify(p);
      if (format == "json") {
        out << nlohmann::json{{"n", c.applicable_n()},
                              {"pattern", to_string(p)},
                              {"rule", to_string(c.rule)},
                              {"verdict", to_string(c.verdict)}}
                   .dump()
            << "\n";
      } else {
        out << to_string(c.verdict) << " rule=" << to_string(c.rule) << " n=" << c.applicable_n() << "\n";
      }
      return c.verdict == Verdict::not_in_range ? kNegative : kOk;
    }

    if (*construct_cmd) {
      const auto p = parse_pattern(pattern_text);
      if (!detail::odd_n_at_least(n, 3)) {
        err << "error: --n must be an odd integer >= 3\n";
        return kUsage;
      }
      auto cache = detail::open_cache(cache_file, err);
      Profile u;
      try {
        u = realize(p, n, *cache);
      } catch (const NotInRangeError&) {
        err << "NOT_IN_RANGE (Theorem 3)\n";
        return kNegative;
      } catch (const UnsupportedConstruction& e) {
        err << "UNSUPPORTED " << e.what() << "\n";
        return kNegative;
      }
      // re-verify what is about to be emitted
      const auto text = serialize_profile(u);
      const auto back = parse_profile(text);
      if (back != u || pattern_of(back) != p || back.n() != n) {
        err << "internal error: constructed profile failed re-verification\n";
        return kInternal;
      }
      const auto payload = construct_format == "json" ? text + "\n" : detail::profile_text(u);
      return detail::write_output(out_file, payload, out, err) ? kOk : kUsage;
    }

    if (*verify_cmd) {
      Profile u;
      try {
        if (profile_file == "-") {
          std::ostringstream ss;
          ss << in.rdbuf();
          u = parse_profile(ss.str());
        } else {
          u = parse_profile(read_file(profile_file));
        }
      } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
      }
      const auto s = borda_scores(u);
      const auto w = weak_order_of(s);
      const auto got = w.pattern();
      std::optional<LevelPattern> expected;
      if (!expect_text.empty()) expected = parse_pattern(expect_text);
      const bool ok = !expected || *expected == got;
      if (format == "json") {
        nlohmann::json j{{"levels", w.levels},
                         {"m", u.m()},
                         {"n", u.n()},
                         {"pattern", to_string(got)},
                         {"scores", s.scores}};
        if (expected) {
          j["expected"] = to_string(*expected);
          j["ok"] = ok;
        }
        out << j.dump() << "\n";
      } else {
        out << "m=" << u.m() << " n=" << u.n() << "\n";
        out << "scores=" << detail::join_scores(s) << "\n";
        out << "levels=" << detail::format_levels(w) << "\n";
        out << "pattern=" << to_string(got) << "\n";
        if (expected) {
          out << (ok ? "OK" : "MISMATCH") << " expected=" << to_string(*expected) << "\n";
        }
      }
      return ok ? kOk : kNegative;
    }

    if (*enumerate_cmd) {
      if (!detail::odd_n_at_least(n, 1)) {
        err << "error: --n must be odd\n";
        return kUsage;
      }
      EnumerationOptions opt;
      opt.mode = mode == "sampled" ? EnumerationMode::sampled : EnumerationMode::exhaustive;
      opt.trials = trials;
      opt.seed = seed;
      opt.threads = threads;
      RangeAtlas atlas;
      try {
        atlas = enumerate_range(m, n, opt);
      } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
      }
      out << "m=" << m << " n=" << n << " mode=" << to_string(atlas.mode)
          << " patterns=" << atlas.achieved.size() << "\n";
      for (const auto& [p, e] : atlas.achieved) out << to_string(p) << " " << e.count << "\n";
      if (!export_file.empty()) {
        const bool as_json = std::filesystem::path(export_file).extension() == ".json";
        const auto payload = as_json ? atlas_to_json(atlas).dump(2) + "\n" : atlas_to_csv(atlas);
        if (!detail::write_output(export_file, payload, out, err)) return kUsage;
      }
      return kOk;
    }

    if (*cross_cmd) {
      if (!detail::odd_n_at_least(n, 3)) {
        err << "error: --n must be an odd integer >= 3\n";
        return kUsage;
      }
      EnumerationOptions opt;
      opt.threads = threads;
      CrossCheckReport report;
      try {
        report = cross_check(max_m, n, opt);
      } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
      }
      out << "max_m=" << max_m << " n=" << n << " patterns=" << report.entries.size()
          << " contradictions=" << report.contradictions.size()
          << " unknown=" << report.unknowns.size() << "\n";
      for (const auto& e : report.entries) {
        out << to_string(e.pattern) << " " << to_string(e.classification.verdict)
            << " rule=" << to_string(e.classification.rule)
            << (e.achieved ? " achieved" : " absent") << "\n";
      }
      for (const auto& e : report.contradictions) {
        out << "CONTRADICTION " << to_string(e.pattern) << "\n";
      }
      return report.contradictions.empty() ? kOk : kNegative;
    }

    if (*search_cmd) {
      const auto p = parse_pattern(pattern_text);
      if (!detail::odd_n_at_least(n, 1)) {
        err << "error: --n must be odd\n";
        return kUsage;
      }
      SearchBudget b;
      b.restarts = budget;
      const auto r = search_witness(p, n, b, seed);
      if (!r.found()) {
        err << "NOT_FOUND exhaustive=" << (r.exhaustive ? "true" : "false") << "\n";
        return kNegative;
      }
      if (!cache_file.empty()) {
        auto cache = detail::open_cache(cache_file, err);
        cache->store(p, *r.witness, Provenance::searched);
      }
      out << serialize_profile(*r.witness) << "\n";
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidPattern& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace borda_range::cli

#endif  // BORDA_RANGE_CLI_HPP

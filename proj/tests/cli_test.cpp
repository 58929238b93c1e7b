#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "borda_range/cli.hpp"

using namespace borda_range;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "borda-range");
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  const int code = cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "borda_range_cli_tests";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

TEST(Cli, ClassifyText) {
  auto r = run({"classify", "2,4,4,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "IN_RANGE rule=NewLemma n=all odd ≥ 3\n");

  r = run({"classify", "2,4"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "NOT_IN_RANGE rule=Theorem3 n=no odd n\n");

  r = run({"classify", "8,4,4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "UNKNOWN rule=None n=unknown\n");
}

TEST(Cli, ClassifyJsonIsCanonical) {
  const auto r = run({"classify", "12,20", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, R"({"n":"all odd ≥ 3","pattern":"12,20","rule":"Lemma4","verdict":"IN_RANGE"})"
                   "\n");
}

TEST(Cli, ConstructNotInRange) {
  const auto r = run({"construct", "2,4", "--n", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err, "NOT_IN_RANGE (Theorem 3)\n");
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, ConstructUnsupported) {
  const auto r = run({"construct", "3,5", "--n", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("UNSUPPORTED", 0), 0u);
}

TEST(Cli, VerifyFile) {
  const auto path = temp_path("w.json");
  std::ofstream(path) << R"({"rankings":[[0,1,2,3],[2,3,0,1],[1,3,0,2]]})";
  auto r = run({"verify", path, "--expect", "2,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("scores=7,7,8,8"), std::string::npos);
  EXPECT_NE(r.out.find("OK expected=2,2"), std::string::npos);

  r = run({"verify", path, "--expect", "1,3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("MISMATCH"), std::string::npos);

  r = run({"verify", path, "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("scores"), nlohmann::json({7, 7, 8, 8}));
  EXPECT_EQ(j.at("pattern"), "2,2");
}

TEST(Cli, VerifyBadInput) {
  EXPECT_EQ(run({"verify", temp_path("does-not-exist.json")}).code, 2);
  EXPECT_EQ(run({"verify", "-"}, "{\"rankings\":[[0,0]]}").code, 2);
  EXPECT_EQ(run({"verify", "-"}, "[").code, 2);
}

TEST(Cli, ConstructPipesIntoVerify) {
  const auto cache = temp_path("pipe-cache.json");
  for (const std::string p : {"2,4,4,2", "4,2,2", "2,2,2,2", "4,4,2,4,2,4,4,4", "2,6,10,2"}) {
    for (const std::string n : {"3", "5", "7"}) {
      const auto c = run({"construct", p, "--n", n, "--cache", cache});
      ASSERT_EQ(c.code, 0) << p << " " << c.err;
      const auto v = run({"verify", "-", "--expect", p}, c.out);
      ASSERT_EQ(v.code, 0) << p << "\n" << v.out;
      ASSERT_NE(v.out.find("n=" + n), std::string::npos);
    }
  }
}

TEST(Cli, ConstructWritesFileAndText) {
  const auto file = temp_path("out.json");
  auto r = run({"construct", "2,2", "--n", "3", "--out", file});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(run({"verify", file, "--expect", "2,2"}).code, 0);

  r = run({"construct", "2,2", "--n", "3", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("pattern=2,2"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"classify"}).code, 2);
  EXPECT_EQ(run({"classify", "2,,4"}).code, 2);
  EXPECT_EQ(run({"classify", "0,2"}).code, 2);
  EXPECT_EQ(run({"classify", "1"}).code, 2);
  EXPECT_EQ(run({"construct", "2,2", "--n", "4"}).code, 2);
  EXPECT_EQ(run({"construct", "2,2"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--m", "9", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"classify", "--help"}).code, 0);
}

TEST(Cli, EnumerateAndExport) {
  const auto csv = temp_path("atlas.csv");
  const auto json = temp_path("atlas.json");
  auto r = run({"enumerate", "--m", "3", "--n", "3", "--export", csv});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "m=3 n=3 mode=exhaustive patterns=4");
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "pattern,count_of_witnesses,min_witness_json");

  r = run({"enumerate", "--m", "4", "--n", "3", "--mode", "sampled", "--trials", "2000", "--export", json});
  EXPECT_EQ(r.code, 0);
  std::ifstream jin(json);
  const auto j = nlohmann::json::parse(jin);
  EXPECT_EQ(j.at("mode"), "sampled");
  EXPECT_EQ(j.at("trials"), 2000);
}

TEST(Cli, CrossCheck) {
  const auto r = run({"cross-check", "--max-m", "4", "--n", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("max_m=4 n=3 patterns=14 contradictions=0", 0), 0u);
  EXPECT_EQ(r.out.find("CONTRADICTION"), std::string::npos);
}

TEST(Cli, Search) {
  auto r = run({"search", "2,4", "--n", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err, "NOT_FOUND exhaustive=true\n");

  const auto cache = temp_path("search-cache.json");
  std::filesystem::remove(cache);
  r = run({"search", "4,4", "--n", "3", "--seed", "44", "--cache", cache});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(pattern_of(parse_profile(r.out)), (LevelPattern{4, 4}));
  EXPECT_TRUE(WitnessCache(cache).find({4, 4}, 3));
  EXPECT_EQ(run({"search", "4,4", "--n", "3", "--seed", "44"}).out, r.out);
}

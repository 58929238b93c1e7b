#ifndef BORDA_RANGE_IO_HPP
#define BORDA_RANGE_IO_HPP

// Text and JSON forms of patterns and profiles.
//
//   pattern:  "2,4,4,2"  (strictly positive integers, whitespace tolerated)
//   profile:  {"m":4,"n":3,"rankings":[[0,1,2,3],[2,3,0,1],[1,3,0,2]]}
//
// Serialization is canonical (sorted keys, compact), so parse/serialize
// round-trips byte for byte.

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "borda_range/core.hpp"
#include "json.hpp"

namespace borda_range {

class ParseError : public Error {
 public:
  using Error::Error;
};

inline std::string to_string(const LevelPattern& p) {
  std::string out;
  for (std::size_t i = 0; i < p.sizes().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

inline LevelPattern parse_pattern(std::string_view text) {
  std::vector<int> sizes;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  while (true) {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("expected a positive integer in pattern '" + std::string(text) + "'");
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec != std::errc{} || value < 1) {
      throw ParseError("level sizes must be positive integers: '" + std::string(text) + "'");
    }
    sizes.push_back(value);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("unexpected character in pattern '" + std::string(text) + "'");
    ++pos;
  }
  return LevelPattern(std::move(sizes));
}

inline nlohmann::json to_json(const Profile& u) {
  nlohmann::json rankings = nlohmann::json::array();
  for (const auto& r : u.rankings()) {
    rankings.push_back(std::vector<Alternative>(r.order().begin(), r.order().end()));
  }
  return nlohmann::json{{"m", u.m()}, {"n", u.n()}, {"rankings", rankings}};
}

inline Profile profile_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw ParseError("profile must be a JSON object");
    if (!j.contains("rankings")) throw ParseError("profile is missing \"rankings\"");
    const auto& rj = j.at("rankings");
    if (!rj.is_array() || rj.empty()) throw ParseError("\"rankings\" must be a non-empty array");
    // m and n are optional; when given they must agree with the rankings
    for (const char* key : {"m", "n"}) {
      if (j.contains(key) && !j.at(key).is_number_integer()) {
        throw ParseError(std::string("\"") + key + "\" must be an integer");
      }
    }
    const int n = j.contains("n") ? j.at("n").get<int>() : static_cast<int>(rj.size());
    if (static_cast<int>(rj.size()) != n) {
      throw ParseError("\"n\" is " + std::to_string(n) + " but " + std::to_string(rj.size()) +
                       " rankings are listed");
    }
    int m = rj.front().is_array() ? static_cast<int>(rj.front().size()) : 0;
    if (j.contains("m")) m = j.at("m").get<int>();
    std::vector<Ranking> rs;
    rs.reserve(rj.size());
    for (const auto& r : rj) {
      if (!r.is_array()) throw ParseError("each ranking must be an array of ids");
      std::vector<Alternative> order;
      for (const auto& x : r) {
        if (!x.is_number_integer()) throw ParseError("alternative ids must be integers");
        order.push_back(x.get<Alternative>());
      }
      rs.emplace_back(std::move(order));
    }
    return Profile(m, std::move(rs));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

inline std::string serialize_profile(const Profile& u) { return to_json(u).dump(); }

inline Profile parse_profile(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed profile JSON: ") + e.what());
  }
  return profile_from_json(j);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace borda_range

#endif  // BORDA_RANGE_IO_HPP

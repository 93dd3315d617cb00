#pragma once

// Text forms of weights and exponents, and JSON conversions for CLI output.

#include <cctype>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "modrep/arith.hpp"
#include "modrep/errors.hpp"
#include "modrep/parabolic.hpp"
#include "modrep/rootsys.hpp"

namespace modrep {

using json = nlohmann::ordered_json;

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline long long parse_integer(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw InputError("bad " + what + " '" + s + "'");
  }
  if (pos != s.size()) throw InputError("bad " + what + " '" + s + "'");
  return v;
}

/// "0001" (one digit per coordinate) or "0,0,0,1".
inline Weight parse_weight(const std::string& s, std::size_t rank) {
  if (s.empty()) throw InputError("empty weight");
  std::vector<long long> c;
  if (s.find(',') != std::string::npos || rank == 1) {
    for (const auto& part : split(s, ',')) c.push_back(parse_integer(part, "weight coordinate"));
  } else {
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw InputError("weight '" + s + "' is neither digits nor comma separated");
      c.push_back(ch - '0');
    }
  }
  if (c.size() != rank)
    throw InputError("weight '" + s + "' has " + std::to_string(c.size()) + " coordinates, rank is " +
                     std::to_string(rank));
  return Weight(std::move(c));
}

/// Digit form when every coordinate is 0..9 and rank > 1, else comma form.
inline std::string format_weight(const Weight& w) {
  bool digits = w.rank() > 1;
  for (auto x : w.coords()) digits = digits && x >= 0 && x <= 9;
  if (!digits) return w.to_string();
  std::string s;
  for (auto x : w.coords()) s += static_cast<char>('0' + x);
  return s;
}

/// Comma separated members of N u {inf}, one per simple root.
inline std::vector<ExtNat> parse_exponents(const std::string& s, std::size_t rank) {
  std::vector<ExtNat> out;
  for (const auto& part : split(s, ',')) out.push_back(ExtNat::parse(part));
  if (out.size() != rank) throw InputError("expected " + std::to_string(rank) + " exponents in '" + s + "'");
  return out;
}

inline std::string format_exponents(const std::vector<ExtNat>& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + e[i].to_string();
  return s;
}

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline json to_json(const Int& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

inline json to_json(const ExtNat& e) {
  if (e.is_finite()) return e.value();
  return "inf";
}

inline json to_json(const Weight& w) { return w.coords(); }

inline json to_json(const std::vector<ExtNat>& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(to_json(e));
  return a;
}

inline ExtNat extnat_from_json(const json& j) {
  if (j.is_string()) return ExtNat::parse(j.get<std::string>());
  return ExtNat(j.get<unsigned>());
}

}  // namespace modrep

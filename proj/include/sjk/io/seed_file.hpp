#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "sjk/io/json.hpp"
#include "sjk/join/join.hpp"

namespace sjk::io {

inline BigRational rational_from_json(const Json& v, const std::string& key) {
  if (v.is_number_integer()) return BigRational(v.get<Int>());
  if (v.is_string()) return BigRational::parse(v.get<std::string>());
  throw ValidationError("seed key '" + key + "' must be an integer or a \"p/q\" string");
}

inline join::SasakiSeed seed_from_json(const Json& j) {
  static const std::set<std::string> known = {"d_N",      "A_N",     "fano_index",       "order", "pi2_rank",
                                              "b3_zero",  "sphere",  "simply_connected", "label"};
  if (!j.is_object()) throw ValidationError("seed document must be a JSON object");
  for (const auto& [k, v] : j.items()) {
    if (!known.count(k)) throw ValidationError("unknown seed key '" + k + "'");
  }
  auto integer = [&](const char* key) -> std::optional<Int> {
    if (!j.contains(key)) return std::nullopt;
    if (!j.at(key).is_number_integer()) throw ValidationError(std::string("seed key '") + key + "' must be an integer");
    return j.at(key).get<Int>();
  };
  auto boolean = [&](const char* key) -> std::optional<bool> {
    if (!j.contains(key)) return std::nullopt;
    if (!j.at(key).is_boolean()) throw ValidationError(std::string("seed key '") + key + "' must be a boolean");
    return j.at(key).get<bool>();
  };
  join::SasakiSeed s;
  const auto d = integer("d_N");
  if (!d) throw ValidationError("seed is missing d_N");
  s.d = static_cast<int>(*d);
  if (j.contains("A_N")) s.A = rational_from_json(j.at("A_N"), "A_N");
  s.fano_index = integer("fano_index");
  s.order = integer("order").value_or(1);
  s.pi2_rank = integer("pi2_rank");
  s.b3_zero = boolean("b3_zero");
  s.simply_connected = boolean("simply_connected");
  s.sphere = boolean("sphere");
  if (j.contains("label")) s.label = j.at("label").get<std::string>();
  if (!s.A && s.fano_index) s.A = BigRational(*s.fano_index);
  join::validate_seed(s);
  return s;
}

inline join::SasakiSeed load_seed(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open seed file '" + path + "'");
  try {
    return seed_from_json(Json::parse(in));
  } catch (const Json::exception& e) {
    throw ValidationError("seed file '" + path + "': " + e.what());
  }
}

}  // namespace sjk::io

#pragma once

/**
 * @file catalog_file.hpp
 * @brief JSON-lines catalogs with a versioned header line.
 *
 * Line 1 is {"schema":"sjk/1","family":...,"params":{...}}; every later
 * line is one record. SE records are checked against the lattice
 * constraints on load, so a hand-edited file cannot smuggle in a bad row.
 */

#include <fstream>
#include <string>
#include <vector>

#include "sjk/io/json.hpp"

namespace sjk::io {

inline constexpr const char* kCatalogSchema = "sjk/1";

struct Catalog {
  std::string family;
  Json params = Json::object();
  std::vector<Json> records;
  std::vector<std::string> warnings;
};

inline void persist_catalog(const Catalog& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write catalog '" + path + "'");
  Json header;
  header["schema"] = kCatalogSchema;
  header["family"] = c.family;
  header["params"] = c.params;
  out << header.dump() << '\n';
  for (const auto& r : c.records) out << r.dump() << '\n';
  if (!out) throw ValidationError("write failed for catalog '" + path + "'");
}

namespace detail {

inline join::IntPair read_pair(const Json& r, const char* key) {
  const Json& v = r.at(key);
  if (!v.is_array() || v.size() != 2) throw ValidationError(std::string(key) + " must be a pair");
  return {v[0].get<Int>(), v[1].get<Int>()};
}

inline void check_se_record(const Json& r, int d) {
  static const std::vector<std::string> keys = {"k", "w", "v", "l", "smooth", "fano_index", "order"};
  if (r.size() != keys.size()) throw ValidationError("SE record must have exactly the fields k,w,v,l,smooth,fano_index,order");
  for (const auto& k : keys) {
    if (!r.contains(k)) throw ValidationError("SE record missing '" + k + "'");
  }
  const BigRational k = BigRational::parse(r.at("k").get<std::string>());
  const auto w = read_pair(r, "w"), v = read_pair(r, "v"), l = read_pair(r, "l");
  join::check_pair("w", w);
  join::check_pair("v", v);
  join::check_pair("l", l);
  const Int p = to_int(k.num()), q = to_int(k.den());
  if (!(BigRational(w.second, w.first) == BigRational(join::mul(q, v.second), join::mul(p, v.first)))) {
    throw ValidationError("constraint w_inf/w0 = q v_inf/(p v0) fails");
  }
  if (!(se::kappa(d, p, q) == join::ReebLattice{v.first, v.second})) throw ValidationError("v is not kappa(p, q)");
  if (!(se::w_from_k(d, p, q) == w)) throw ValidationError("w does not match k");
}

inline void check_generic_record(const Json& r) {
  for (const char* key : {"l", "w", "v"}) {
    if (r.contains(key)) join::check_pair(key, read_pair(r, key));
  }
}

}  // namespace detail

/// Loads and validates. Params in `expected` that differ from the header
/// produce warnings rather than errors.
inline Catalog load_catalog(const std::string& path, const Json& expected = Json::object()) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open catalog '" + path + "'");
  Catalog c;
  std::string line;
  std::size_t index = 0;
  if (!std::getline(in, line)) throw ValidationError("catalog '" + path + "' is empty");
  try {
    const Json header = Json::parse(line);
    if (header.value("schema", "") != kCatalogSchema) {
      throw ValidationError("schema mismatch: expected " + std::string(kCatalogSchema));
    }
    c.family = header.at("family").get<std::string>();
    c.params = header.value("params", Json::object());
  } catch (const Json::exception& e) {
    throw ValidationError("catalog header: " + std::string(e.what()));
  }
  for (const auto& [k, v] : expected.items()) {
    if (!c.params.contains(k) || c.params.at(k) != v) {
      c.warnings.push_back("header parameter '" + k + "' is " + (c.params.contains(k) ? c.params.at(k).dump() : "absent") +
                           ", requested " + v.dump());
    }
  }
  const int d = c.params.contains("d") ? c.params.at("d").get<int>() : 1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      Json r = Json::parse(line);
      if (c.family == "se") detail::check_se_record(r, d);
      else detail::check_generic_record(r);
      c.records.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw ValidationError("catalog record " + std::to_string(index) + ": " + e.what());
    }
    ++index;
  }
  return c;
}

}  // namespace sjk::io

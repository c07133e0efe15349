#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "sjk/catalog/families.hpp"
#include "sjk/csc/csc.hpp"
#include "sjk/io/catalog_file.hpp"
#include "sjk/io/render.hpp"
#include "sjk/io/seed_file.hpp"
#include "sjk/se/se.hpp"

namespace sjk::cli {

using io::Json;
using join::IntPair;

inline const std::vector<std::string> kVerbs = {"info", "csc", "se", "extremal", "search-se", "catalog", "topology"};

struct Options {
  std::string verb;
  std::string seed_file;
  std::optional<int> d;
  std::optional<std::string> A;
  std::optional<Int> index;
  std::optional<Int> order;
  std::optional<std::string> label;
  std::optional<std::string> l, w, v;
  Int height = 10;
  unsigned threads = 0;
  std::string out;
  std::string load;
  bool smooth_only = false;
  bool find_witness = false;
  std::string family;
  std::optional<Int> max;
  std::optional<std::string> precision;
  std::string format = "json";
};

inline IntPair parse_pair(const std::string& text, const char* name) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ValidationError(std::string("--") + name + " expects a,b");
  try {
    std::size_t used = 0;
    const Int a = std::stoll(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(text);
    const std::string rest = text.substr(comma + 1);
    const Int b = std::stoll(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw ValidationError(std::string("--") + name + " expects two integers a,b; got '" + text + "'");
  }
}

inline BigRational precision_of(const Options& o) {
  std::string text = "1/1000000000000";
  if (const char* env = std::getenv("SJK_PRECISION"); env != nullptr && *env != '\0') text = env;
  if (o.precision) text = *o.precision;
  const BigRational p = BigRational::parse(text);
  if (p.sign() <= 0) throw ValidationError("precision must be a positive rational");
  return p;
}

inline bool has_seed(const Options& o) { return !o.seed_file.empty() || o.d.has_value(); }

inline join::SasakiSeed seed_of(const Options& o) {
  join::SasakiSeed s;
  if (!o.seed_file.empty()) {
    s = io::load_seed(o.seed_file);
  } else if (!o.d) {
    throw ValidationError("a seed is required: pass --seed-file or --d with --A/--index");
  }
  if (o.d) s.d = *o.d;
  if (o.index) {
    s.fano_index = *o.index;
    if (!o.A) s.A = BigRational(*o.index);
  }
  if (o.A) s.A = BigRational::parse(*o.A);
  if (o.order) s.order = *o.order;
  if (o.label) s.label = *o.label;
  join::validate_seed(s);
  return s;
}

inline IntPair need_pair(const std::optional<std::string>& text, const char* name) {
  if (!text) throw ValidationError(std::string("--") + name + " is required");
  return parse_pair(*text, name);
}

struct Resolved {
  join::SasakiSeed seed;
  join::JoinSpec j;
  std::optional<join::ReebLattice> v;
};

/// Seed, normalized join and v (swapped along with w under the involution).
inline Resolved resolve(const Options& o) {
  Resolved r;
  r.seed = seed_of(o);
  r.j = join::validate_join(r.seed, need_pair(o.l, "l"), need_pair(o.w, "w"));
  if (o.v) {
    join::ReebLattice v = join::make_v(parse_pair(*o.v, "v"));
    if (r.j.perp_applied) std::swap(v.v0, v.v_inf);
    r.v = v;
  }
  return r;
}

inline Json info_json(const Resolved& r) {
  const auto& [seed, j, v] = r;
  Json out;
  if (!seed.label.empty()) out["seed"] = seed.label;
  out["l"] = io::pair_json(j.l());
  out["w"] = io::pair_json(j.w());
  out["perp_applied"] = j.perp_applied;
  out["smooth"] = join::is_smooth(seed, j);
  if (v) {
    const auto q = join::quotient_data(seed, j, *v);
    out["v"] = io::pair_json(*v);
    out["s"] = q.s;
    out["m"] = q.m;
    out["n"] = q.n;
    out["m0"] = q.m0;
    out["m_inf"] = q.m_inf;
    out["order"] = q.order;
    out["reducible"] = q.reducible;
    if (!q.reducible) {
      out["r"] = join::admissible_params(seed, j, *v).r.str();
      const auto c = join::kahler_class(seed, j, *v);
      Json k;
      k["k1"] = c.k1;
      k["k2"] = c.k2;
      k["denom"] = c.denom;
      k["admissible_scale"] = c.admissible_scale_num.str();
      k["admissible_scale_has_4pi"] = c.admissible_scale_has_4pi;
      k["transverse_factor"] = c.transverse_factor;
      out["kahler_class"] = k;
    }
  }
  if (seed.fano_index) {
    out["c1"] = join::c1_contact(seed, j);
    const bool gor = join::is_gorenstein(seed, j);
    out["gorenstein"] = gor;
    if (gor && v && !join::quotient_data(seed, j, *v).reducible) {
      out["fano_index_quotient"] = join::fano_index_quotient(seed, j, *v);
    }
    out["relative_fano_l"] = io::pair_json(join::relative_fano(seed, j.w()).l());
  }
  const auto reg = join::regular_reeb_check(seed, j);
  out["regular_reeb"] = Json{{"exists", reg.exists}, {"certificate", reg.certificate}};
  return out;
}

inline Json csc_json(const Resolved& r, const BigRational& precision) {
  Json out;
  out["f"] = io::poly_json(csc::csc_polynomial(r.seed, r.j));
  Json rays = Json::array();
  for (const auto& ray : csc::csc_rays(r.seed, r.j, precision)) rays.push_back(io::csc_ray_json(ray));
  out["rays"] = rays;
  return out;
}

inline Json extremal_json(const Resolved& r) {
  if (!r.v) throw ValidationError("--v is required for extremal");
  const auto p = join::admissible_params(r.seed, r.j, *r.v);
  const auto q = join::quotient_data(r.seed, r.j, *r.v);
  const auto sol = csc::extremal_polynomial(p);
  const auto bc = csc::csc_beta_c(p);
  const auto lift = csc::lift_profile(sol, *r.v, q.m);
  Json out;
  out["r"] = p.r.str();
  out["n"] = p.n;
  out["m0"] = p.m0;
  out["m_inf"] = p.m_inf;
  out["d"] = p.d;
  out["A"] = p.A.str();
  out["F"] = io::poly_json(sol.F);
  out["alpha"] = sol.alpha.str();
  out["beta"] = sol.beta.str();
  out["boundary_conditions"] = csc::boundary_conditions_hold(sol);
  out["scal"] = io::poly_json(csc::scal_profile(sol));
  out["positive"] = csc::check_positivity(sol);
  out["csc"] = Json{{"beta", bc.beta.str()}, {"c", bc.c.str()}, {"condition_holds", bc.csc_condition_holds}};
  out["lift"] = Json{{"vanishes_at_endpoints", lift.vanishes_at_endpoints},
                     {"derivative_at_minus_one", lift.derivative_at_minus_one},
                     {"derivative_at_one", lift.derivative_at_one}};
  return out;
}

inline Json se_json(const Options& o, const BigRational& precision) {
  std::optional<join::SasakiSeed> seed;
  if (!o.seed_file.empty() || o.index) {
    Options so = o;
    if (!so.d && o.seed_file.empty()) throw ValidationError("--d is required for se");
    seed = seed_of(so);
  }
  const int d = seed ? seed->d : o.d.value_or(0);
  if (d < 1) throw ValidationError("--d (>= 1) is required for se");
  IntPair w = need_pair(o.w, "w");
  join::check_pair("w", w);
  const bool perp = w.first < w.second;
  if (perp) std::swap(w.first, w.second);
  const se::SeRay ray = se::se_ray(d, w, precision);
  Json out = io::se_ray_json(ray);
  if (perp) out["perp_applied"] = true;
  if (seed && seed->fano_index) {
    const auto j = join::relative_fano(*seed, w);
    out["l"] = io::pair_json(j.l());
    if (ray.v) out["ke"] = csc::ke_check(*seed, j, *ray.v);
  }
  return out;
}

inline unsigned threads_of(const Options& o) { return o.threads == 0 ? default_threads() : o.threads; }

inline const std::vector<std::string> kSeColumns = {"k", "w", "v", "l", "smooth", "fano_index", "order"};

inline Json se_params(const join::SasakiSeed& seed, const Options& o) {
  return Json{{"d", seed.d},
              {"fano_index", *seed.fano_index},
              {"order", seed.order},
              {"height", o.height},
              {"smooth_only", o.smooth_only}};
}

inline std::string usage() {
  return "usage: sjk <info|csc|se|extremal|search-se|catalog|topology> [options]\n"
         "  seed:    --seed-file PATH | --d N [--A p/q] [--index I] [--order U] [--label TEXT]\n"
         "  join:    --l a,b --w a,b [--v a,b]\n"
         "  search:  --height H [--threads T] [--smooth-only] [--out PATH]\n"
         "  catalog: --family ypq|brieskorn_pq|brieskorn_kp --max N [--w a,b] [--l a,b] [--out PATH]\n"
         "           --load PATH\n"
         "  csc:     --find-witness [--max L]\n"
         "  output:  --format json|csv|table  --precision p/q (env SJK_PRECISION)\n";
}

inline int dispatch(const Options& o, std::ostream& out, std::ostream& err) {
  const io::Format fmt = io::parse_format(o.format);
  const BigRational precision = precision_of(o);
  std::vector<Json> records;
  std::vector<std::string> columns;

  if (o.verb == "info") {
    records.push_back(info_json(resolve(o)));
  } else if (o.verb == "csc") {
    if (o.find_witness) {
      const auto seed = seed_of(o);
      const auto hit = csc::find_multi_ray_witness(seed, need_pair(o.w, "w"), 3, o.max.value_or(50));
      Json r;
      r["w"] = io::pair_json(need_pair(o.w, "w"));
      r["witness_l"] = hit ? io::pair_json(hit->l()) : Json(nullptr);
      if (hit) r["rays"] = csc_json(Resolved{seed, *hit, std::nullopt}, precision)["rays"];
      records.push_back(r);
    } else {
      records.push_back(csc_json(resolve(o), precision));
    }
  } else if (o.verb == "se") {
    records.push_back(se_json(o, precision));
  } else if (o.verb == "extremal") {
    records.push_back(extremal_json(resolve(o)));
  } else if (o.verb == "topology") {
    const Resolved r = resolve(o);
    Json t;
    t["l"] = io::pair_json(r.j.l());
    t["w"] = io::pair_json(r.j.w());
    t.update(io::topology_json(catalog::topology_summary(r.seed, r.j)));
    records.push_back(t);
  } else if (o.verb == "search-se") {
    const auto seed = seed_of(o);
    join::seed_index(seed);
    const auto found = se::enumerate_quasiregular_se(seed, {o.height, o.smooth_only, threads_of(o)});
    for (const auto& r : found) records.push_back(io::se_record_json(r));
    columns = kSeColumns;
    if (!o.out.empty()) {
      io::persist_catalog({"se", se_params(seed, o), records, {}}, o.out);
      records = {Json{{"records", found.size()}, {"out", o.out}}};
      columns.clear();
    }
  } else if (o.verb == "catalog") {
    if (!o.load.empty()) {
      Json expected = Json::object();
      if (o.max) expected["max"] = *o.max;
      const io::Catalog c = io::load_catalog(o.load, expected);
      for (const auto& w : c.warnings) err << "warning: " << w << '\n';
      if (!o.family.empty() && o.family != c.family) {
        err << "warning: catalog family is " << c.family << ", requested " << o.family << '\n';
      }
      records = c.records;
      if (c.family == "se") columns = kSeColumns;
    } else {
      if (!o.max) throw ValidationError("--max is required for catalog");
      catalog::JoinChoice choice;
      if (o.w) choice.w = parse_pair(*o.w, "w");
      if (o.l) choice.l = parse_pair(*o.l, "l");
      Json params{{"max", *o.max}};
      if (choice.w) params["w"] = io::pair_json(*choice.w);
      if (choice.l) params["l"] = io::pair_json(*choice.l);
      if (o.family == "ypq") {
        for (const auto& r : catalog::ypq_catalog(*o.max, precision, threads_of(o))) records.push_back(io::ypq_json(r));
      } else if (o.family == "brieskorn_pq") {
        for (const auto& r : catalog::brieskorn_pq_catalog(*o.max, choice, threads_of(o)))
          records.push_back(io::brieskorn_pq_json(r));
      } else if (o.family == "brieskorn_kp") {
        for (const auto& r : catalog::brieskorn_kp_catalog(*o.max, choice, threads_of(o)))
          records.push_back(io::brieskorn_kp_json(r));
      } else {
        throw ValidationError("--family must be ypq, brieskorn_pq or brieskorn_kp");
      }
      if (!o.out.empty()) {
        io::persist_catalog({o.family, params, records, {}}, o.out);
        records = {Json{{"records", records.size()}, {"out", o.out}}};
      }
    }
  }
  out << io::render(records, fmt, columns);
  return 0;
}

/// Full CLI; args exclude the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact invariants of Sasaki joins with weighted 3-spheres", "sjk"};
  app.add_option("verb", o.verb)->required();
  app.add_option("--seed-file", o.seed_file);
  app.add_option("--d", o.d);
  app.add_option("--A", o.A);
  app.add_option("--index", o.index);
  app.add_option("--order", o.order);
  app.add_option("--label", o.label);
  app.add_option("--l", o.l);
  app.add_option("--w", o.w);
  app.add_option("--v", o.v);
  app.add_option("--height", o.height);
  app.add_option("--threads", o.threads);
  app.add_option("--out", o.out);
  app.add_option("--load", o.load);
  app.add_flag("--smooth-only", o.smooth_only);
  app.add_flag("--find-witness", o.find_witness);
  app.add_option("--family", o.family);
  app.add_option("--max", o.max);
  app.add_option("--precision", o.precision);
  app.add_option("--format", o.format);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << usage();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << usage();
    return 1;
  }
  if (std::find(kVerbs.begin(), kVerbs.end(), o.verb) == kVerbs.end()) {
    err << "error: unknown verb '" << o.verb << "'\n" << usage();
    return 1;
  }
  try {
    return dispatch(o, out, err);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ConsistencyError& e) {
    err << "internal consistency error: " << e.what() << '\n';
    return 3;
  } catch (const io::Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace sjk::cli

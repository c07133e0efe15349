#pragma once

// Record -> ordered JSON. Key order here is the wire schema.

#include <json.hpp>

#include "sjk/catalog/families.hpp"
#include "sjk/csc/csc.hpp"
#include "sjk/se/se.hpp"

namespace sjk::io {

using Json = nlohmann::ordered_json;

inline Json pair_json(Int a, Int b) { return Json::array({a, b}); }
inline Json pair_json(const join::IntPair& p) { return pair_json(p.first, p.second); }
inline Json pair_json(const join::ReebLattice& v) { return pair_json(v.v0, v.v_inf); }

inline Json poly_json(const IntPolynomial& p) { return Json(p.coefficient_strings()); }

template <typename T>
void put(Json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

inline Json se_ray_json(const se::SeRay& r) {
  Json j;
  j["k"] = r.k.str();
  if (!r.quasi_regular) j["b"] = r.b.str();
  if (r.v) j["v"] = pair_json(*r.v);
  j["quasi_regular"] = r.quasi_regular;
  return j;
}

inline Json csc_ray_json(const csc::CscRay& r) {
  Json j;
  j["b"] = r.b.str();
  if (r.v) j["v"] = pair_json(*r.v);
  j["quasi_regular"] = r.quasi_regular;
  if (r.extremal_positive) {
    j["extremal_positive"] = *r.extremal_positive;
    if (!*r.extremal_positive) j["flag"] = "extremal-polynomial not positive";
  }
  return j;
}

inline Json se_record_json(const se::SeSearchRecord& r) {
  Json j;
  j["k"] = BigRational(r.k.first, r.k.second).str();
  j["w"] = pair_json(r.w);
  j["v"] = pair_json(r.v);
  j["l"] = pair_json(r.l.l());
  j["smooth"] = r.smooth;
  j["fano_index"] = r.fano_index;
  j["order"] = r.order;
  return j;
}

inline Json topology_json(const catalog::TopologySummary& t) {
  Json j = Json::object();
  put(j, "simply_connected", t.simply_connected);
  put(j, "pi2_rank", t.pi2_rank);
  put(j, "h4_torsion_order", t.h4_torsion_order);
  put(j, "cohomology_ring", t.cohomology_ring);
  put(j, "spin", t.spin);
  Json f = Json::object();
  put(f, "k_semistable", t.stability_flags.k_semistable);
  put(f, "T_equivariant_K_stable", t.stability_flags.T_equivariant_K_stable);
  j["stability_flags"] = f;
  return j;
}

inline Json orbifold_json(const catalog::OrbifoldDescriptor& o) {
  Json j;
  j["ambient"] = o.ambient;
  put(j, "equation", o.equation);
  put(j, "hypersurface_degree", o.hypersurface_degree);
  Json b = Json::array(), s = Json::array();
  for (const auto& [label, m] : o.branch_divisors) b.push_back(Json::array({label, m}));
  for (const auto& [label, m] : o.singular_points) s.push_back(Json::array({label, m}));
  j["branch_divisors"] = b;
  j["singular_points"] = s;
  return j;
}

inline Json brieskorn_join_json(const catalog::BrieskornJoinReport& r) {
  Json j;
  j["l"] = pair_json(r.join.l());
  j["w"] = pair_json(r.join.w());
  j["perp_applied"] = r.join.perp_applied;
  j["smooth"] = r.smooth;
  j["c1"] = r.c1;
  j["w2"] = r.w2;
  put(j, "spin", r.spin);
  if (r.se_join) j["se_l"] = pair_json(r.se_join->l());
  j["se_status"] = r.se_status;
  j["topology"] = topology_json(r.topology);
  return j;
}

inline Json weights_json(const std::array<Int, 4>& w) { return Json::array({w[0], w[1], w[2], w[3]}); }

inline Json brieskorn_pq_json(const catalog::BrieskornPQRecord& r) {
  const auto& b = r.link;
  Json j;
  j["family"] = "brieskorn_pq";
  j["p"] = b.p;
  j["q"] = b.q;
  j["k"] = b.k;
  j["degree"] = b.degree;
  j["weights"] = weights_json(b.weights);
  j["fano_index"] = b.fano_index;
  j["csc_exists"] = b.csc_exists;
  j["cone_halfwidth_ratio"] = b.cone_halfwidth_ratio.str();
  j["quotient"] = orbifold_json(b.quotient);
  if (r.join) j["join"] = brieskorn_join_json(*r.join);
  return j;
}

inline Json brieskorn_kp_json(const catalog::BrieskornKPRecord& r) {
  const auto& b = r.link;
  Json j;
  j["family"] = "brieskorn_kp";
  j["k"] = b.k;
  j["p"] = b.p;
  j["weights"] = weights_json(b.weights);
  j["degree"] = b.degree;
  j["fano_index"] = b.fano_index;
  j["sign"] = b.positive ? "positive" : "negative";
  j["link_order"] = b.link_order;
  j["quotient"] = orbifold_json(b.quotient);
  if (r.join) j["join"] = brieskorn_join_json(*r.join);
  return j;
}

inline Json ypq_json(const catalog::YpqRecord& r) {
  Json j;
  j["family"] = "ypq";
  j["p"] = r.p;
  j["q"] = r.q;
  j["l"] = pair_json(r.join.l());
  j["w"] = pair_json(r.join.w());
  j["perp_applied"] = r.join.perp_applied;
  j["smooth"] = r.smooth;
  if (r.se) j["se"] = se_ray_json(*r.se);
  put(j, "fano_index", r.fano_index);
  put(j, "order", r.order);
  j["topology"] = topology_json(r.topology);
  return j;
}

}  // namespace sjk::io

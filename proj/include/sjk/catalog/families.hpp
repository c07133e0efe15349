#pragma once

/**
 * @file families.hpp
 * @brief Example families: Y^{p,q} and the Brieskorn links L_{p,q}, L_{k,p}.
 */

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sjk/catalog/topology.hpp"
#include "sjk/parallel.hpp"
#include "sjk/se/se.hpp"

namespace sjk::catalog {

using join::IntPair;
using join::ReebLattice;

// ---------------------------------------------------------------- Y^{p,q}

inline void check_ypq(Int p, Int q) {
  const bool ok = p > 0 && -p < q && q < p && (q != 0 ? join::gcd(p, q) == 1 : p == 1);
  if (!ok) {
    throw ValidationError("Y^{p,q} needs p > 0, -p < q < p, gcd(p,|q|)=1 when q != 0 and p=1 if q=0; got (" +
                          std::to_string(p) + "," + std::to_string(q) + ")");
  }
}

/// l = (g, p), w = (p+q, p-q)/g with g = gcd(p+q, p-q), w left unnormalized.
inline JoinSpec ypq_raw_join(Int p, Int q) {
  check_ypq(p, q);
  const Int g = join::gcd(p + q, p - q);
  return JoinSpec{g, p, (p + q) / g, (p - q) / g, false};
}

inline JoinSpec ypq_to_join(Int p, Int q) {
  const JoinSpec raw = ypq_raw_join(p, q);
  return join::validate_join(join::SasakiSeed::sphere_seed(1), raw.l(), raw.w());
}

/// Inverse of ypq_raw_join; w0 < w_inf means q < 0.
inline std::optional<IntPair> join_to_ypq(const IntPair& l, const IntPair& w) {
  if (l.first < 1 || l.second < 1 || w.first < 1 || w.second < 1) return std::nullopt;
  const Int sum = join::mul(l.first, w.first + w.second);
  if (sum % 2 != 0) return std::nullopt;
  const Int p = sum / 2;
  const Int q = join::mul(l.first, w.first - w.second) / 2;
  if (p != l.second) return std::nullopt;
  const bool valid = -p < q && q < p && (q != 0 ? join::gcd(p, q) == 1 : p == 1);
  if (!valid || join::gcd(p + q, p - q) != l.first) return std::nullopt;
  return IntPair{p, q};
}

inline std::optional<IntPair> join_to_ypq(const JoinSpec& j) {
  return j.perp_applied ? join_to_ypq(j.l(), {j.w_inf, j.w0}) : join_to_ypq(j.l(), j.w());
}

struct HirzebruchRecord {
  Int s = 1;
  Int m = 1;
  Int m0 = 1;
  Int m_inf = 1;
  Int n = 0;
};

/// Quotient of Y^{p,q} along v, with n cross-checked against the closed form.
inline HirzebruchRecord ypq_quotient(Int p, Int q, const ReebLattice& v) {
  const JoinSpec j = ypq_raw_join(p, q);
  join::check_pair("v", v.pair());
  const join::QuotientData qd = join::quotient_data(join::SasakiSeed::sphere_seed(1), j, v);
  const Int num = join::mul(p, qd.m_inf - qd.m0) + join::mul(q, qd.m0 + qd.m_inf);
  if (num % p != 0 || num / p != qd.n) {
    throw ConsistencyError("Y^{p,q} quotient n disagrees: " + std::to_string(qd.n) + " vs " + std::to_string(num) + "/" +
                           std::to_string(p));
  }
  return {qd.s, qd.m, qd.m0, qd.m_inf, qd.n};
}

struct YpqRecord {
  Int p = 1;
  Int q = 0;
  JoinSpec join;
  bool smooth = false;
  std::optional<se::SeRay> se;
  std::optional<Int> fano_index;
  std::optional<Int> order;
  TopologySummary topology;
};

inline YpqRecord ypq_record(Int p, Int q, const BigRational& precision) {
  const join::SasakiSeed s3 = join::SasakiSeed::sphere_seed(1);
  YpqRecord r;
  r.p = p;
  r.q = q;
  r.join = ypq_to_join(p, q);
  r.smooth = join::is_smooth(s3, r.join);
  if (r.join.w0 > r.join.w_inf) {
    r.se = se::se_ray(s3.d, r.join.w(), precision);
    if (r.se->v) {
      r.fano_index = join::fano_index_quotient(s3, r.join, *r.se->v);
      r.order = join::quotient_data(s3, r.join, *r.se->v).order;
    }
  }
  r.topology = topology_summary(s3, r.join);
  return r;
}

inline std::vector<YpqRecord> ypq_catalog(Int max_p, const BigRational& precision, unsigned threads) {
  std::vector<std::pair<Int, Int>> grid;
  for (Int p = 1; p <= max_p; ++p) {
    for (Int q = -p + 1; q < p; ++q) {
      if (q != 0 ? join::gcd(p, q) == 1 : p == 1) grid.emplace_back(p, q);
    }
  }
  return parallel_map(grid, [&](const std::pair<Int, Int>& pq) { return ypq_record(pq.first, pq.second, precision); },
                      threads);
}

// ---------------------------------------------------------------- Brieskorn

struct OrbifoldDescriptor {
  std::string ambient;
  std::optional<std::string> equation;
  std::optional<Int> hypersurface_degree;
  std::vector<std::pair<std::string, Int>> branch_divisors;
  std::vector<std::pair<std::string, Int>> singular_points;
};

struct BrieskornPQ {
  Int p = 1;
  Int q = 1;
  Int k = 0;
  Int degree = 2;
  std::array<Int, 4> weights{};
  Int fano_index = 0;
  bool csc_exists = false;
  BigRational cone_halfwidth_ratio;
  OrbifoldDescriptor quotient;
};

struct BrieskornKP {
  Int k = 3;
  Int p = 2;
  std::array<Int, 4> weights{};
  Int degree = 1;
  Int fano_index = 0;
  bool positive = false;
  Int link_order = 1;
  OrbifoldDescriptor quotient;
};

struct BrieskornJoinReport {
  JoinSpec join;
  bool smooth = false;
  Int c1 = 0;
  Int w2 = 0;
  std::optional<bool> spin;
  std::optional<JoinSpec> se_join;
  std::string se_status = "unknown";
  TopologySummary topology;
};

inline Int weight_sum(const std::array<Int, 4>& w) { return join::add(join::add(w[0], w[1]), join::add(w[2], w[3])); }

inline BrieskornPQ brieskorn_pq_link(Int p, Int q) {
  if (p < 1 || q < 1) throw ValidationError("L_{p,q} needs p, q >= 1");
  BrieskornPQ b;
  b.p = p;
  b.q = q;
  b.k = join::gcd(p, q) - 1;
  b.degree = join::mul(2 * p, q);
  b.weights = {2 * q, 2 * p, join::mul(p, q), join::mul(p, q)};
  b.fano_index = 2 * (p + q);
  b.csc_exists = 2 * p > q && 2 * q > p && !(p == 2 && q == 2);
  b.cone_halfwidth_ratio = BigRational(b.degree, 2);
  const Int k1 = b.k + 1;
  auto& o = b.quotient;
  o.ambient = "CP^3[2,2," + std::to_string(k1) + "," + std::to_string(k1) + "]";
  o.equation = "z0^" + std::to_string(k1) + "+z1^" + std::to_string(k1) + "+z2^2+z3^2";
  o.hypersurface_degree = 2 * k1;
  if (p >= 2) o.branch_divisors.emplace_back("z0=0", p);
  if (q >= 2) o.branch_divisors.emplace_back("z1=0", q);
  if (k1 >= 2) {
    o.singular_points.emplace_back("[0,0,1,i]", k1);
    o.singular_points.emplace_back("[0,0,1,-i]", k1);
  }
  for (Int m = 0; m < k1; ++m) {
    o.singular_points.emplace_back("[1,exp(i*pi*" + std::to_string(2 * m + 1) + "/" + std::to_string(k1) + "),0,0]", 2);
  }
  return b;
}

inline join::SasakiSeed brieskorn_pq_seed(const BrieskornPQ& b) {
  join::SasakiSeed s = join::SasakiSeed::ke(2, b.fano_index, join::lcm(join::lcm(2, b.p), b.q),
                                            "L" + std::to_string(b.p) + "," + std::to_string(b.q));
  s.simply_connected = true;
  s.pi2_rank = b.k;
  s.b3_zero = b.k == 0;
  s.sphere = b.k == 0;
  return s;
}

inline BrieskornJoinReport brieskorn_pq_join(const BrieskornPQ& b, const IntPair& l, const IntPair& w) {
  const join::SasakiSeed seed = brieskorn_pq_seed(b);
  BrieskornJoinReport r;
  r.join = join::validate_join(seed, l, w);
  const JoinSpec& j = r.join;
  r.smooth = join::gcd(join::mul(join::mul(2 * j.l_inf, b.p), b.q), join::mul(join::mul(j.l0, j.w0), j.w_inf)) == 1;
  r.c1 = join::c1_contact(seed, j);
  r.w2 = join::mul(j.l0, j.w_sum()) % 2;
  if (r.smooth) r.spin = r.w2 == 0;
  if (j.w0 != j.w_inf) {
    r.se_join = join::relative_fano(seed, w);
    r.se_status = b.csc_exists ? "exists" : "unknown";
  }
  r.topology = topology_summary(seed, j);
  return r;
}

inline void check_kp(Int k, Int p) {
  if (k < 3) throw ValidationError("L_{k,p} needs k >= 3 (k = 2 belongs to the L_{p,q} family)");
  if (p < 2) throw ValidationError("L_{k,p} needs p >= 2");
  if (join::gcd(k, p) != 1 || join::gcd(k + 1, p) != 1) throw ValidationError("L_{k,p} needs gcd(k,p) = gcd(k+1,p) = 1");
}

inline bool kp_negative(Int k, Int p) {
  return (k > 3 && p > 3) || (k == 3 && p > 12) || (k >= 6 && (p == 2 || p == 3)) || (k == 5 && p == 3);
}

inline BrieskornKP brieskorn_kp_link(Int k, Int p) {
  check_kp(k, p);
  BrieskornKP b;
  b.k = k;
  b.p = p;
  b.weights = {join::mul(k + 1, p), join::mul(k + 1, p), join::mul(k, p), join::mul(k, k + 1)};
  b.degree = join::mul(join::mul(p, k), k + 1);
  b.fano_index = 2 * p * k + 2 * p + k - join::mul(p - 1, join::mul(k, k));
  b.positive = !kp_negative(k, p);
  b.link_order = join::lcm(join::lcm(k, k + 1), p);
  auto& o = b.quotient;
  o.ambient = "CP^2[" + std::to_string(k) + ",1,1]";
  o.branch_divisors.emplace_back("z2=0", k + 1);
  o.branch_divisors.emplace_back("z3=0", p);
  for (Int m = 0; m < k; ++m) {
    o.singular_points.emplace_back("[1,exp(i*pi*" + std::to_string(2 * m + 1) + "/" + std::to_string(k) + "),0,0]", k);
  }
  return b;
}

inline join::SasakiSeed brieskorn_kp_seed(const BrieskornKP& b) {
  join::SasakiSeed s;
  s.d = 2;
  s.A = BigRational(b.fano_index);
  if (b.fano_index > 0) s.fano_index = b.fano_index;
  s.order = b.link_order;
  s.simply_connected = true;
  s.pi2_rank = 0;
  s.b3_zero = true;
  s.sphere = true;
  s.label = "L" + std::to_string(b.k) + "," + std::to_string(b.p);
  return s;
}

inline BrieskornJoinReport brieskorn_kp_join(const BrieskornKP& b, const IntPair& l, const IntPair& w) {
  const join::SasakiSeed seed = brieskorn_kp_seed(b);
  BrieskornJoinReport r;
  r.join = join::validate_join(seed, l, w);
  const JoinSpec& j = r.join;
  r.smooth = join::gcd(join::mul(b.link_order, j.l_inf), join::mul(join::mul(j.w0, j.w_inf), j.l0)) == 1;
  r.c1 = join::mul(j.l_inf, b.fano_index) - join::mul(j.l0, j.w_sum());
  r.w2 = ((r.c1 % 2) + 2) % 2;
  if (r.smooth) r.spin = r.w2 == 0;
  if (b.positive && b.fano_index > 0 && j.w0 != j.w_inf) {
    r.se_join = join::relative_fano(seed, w);
    r.se_status = "exists";
  }
  r.topology = topology_summary(seed, j);
  return r;
}

struct BrieskornPQRecord {
  BrieskornPQ link;
  std::optional<BrieskornJoinReport> join;
};

struct BrieskornKPRecord {
  BrieskornKP link;
  std::optional<BrieskornJoinReport> join;
};

struct JoinChoice {
  std::optional<IntPair> w;
  // Defaults to the relative Fano pair for w when absent.
  std::optional<IntPair> l;
};

inline IntPair choose_l(const join::SasakiSeed& seed, const JoinChoice& c) {
  if (c.l) return *c.l;
  if (seed.fano_index) return join::relative_fano(seed, *c.w).l();
  return {1, 1};
}

inline std::vector<BrieskornPQRecord> brieskorn_pq_catalog(Int max, const JoinChoice& choice, unsigned threads) {
  std::vector<std::pair<Int, Int>> grid;
  for (Int p = 1; p <= max; ++p) {
    for (Int q = 1; q <= max; ++q) grid.emplace_back(p, q);
  }
  return parallel_map(
      grid,
      [&](const std::pair<Int, Int>& pq) {
        BrieskornPQRecord r{brieskorn_pq_link(pq.first, pq.second), std::nullopt};
        if (choice.w) r.join = brieskorn_pq_join(r.link, choose_l(brieskorn_pq_seed(r.link), choice), *choice.w);
        return r;
      },
      threads);
}

inline std::vector<BrieskornKPRecord> brieskorn_kp_catalog(Int max, const JoinChoice& choice, unsigned threads) {
  std::vector<std::pair<Int, Int>> grid;
  for (Int k = 3; k <= max; ++k) {
    for (Int p = 2; p <= max; ++p) {
      if (join::gcd(k, p) == 1 && join::gcd(k + 1, p) == 1) grid.emplace_back(k, p);
    }
  }
  return parallel_map(
      grid,
      [&](const std::pair<Int, Int>& kp) {
        BrieskornKPRecord r{brieskorn_kp_link(kp.first, kp.second), std::nullopt};
        if (choice.w) r.join = brieskorn_kp_join(r.link, choose_l(brieskorn_kp_seed(r.link), choice), *choice.w);
        return r;
      },
      threads);
}

}  // namespace sjk::catalog

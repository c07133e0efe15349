#pragma once

#include <string>

#include "sjk/errors.hpp"
#include "sjk/join/types.hpp"

namespace sjk::join {

inline void validate_seed(const SasakiSeed& seed) {
  if (seed.d < 1) throw ValidationError("seed d_N must be >= 1");
  if (seed.order < 1) throw ValidationError("seed order must be >= 1");
  if (seed.fano_index) {
    if (*seed.fano_index < 1) throw ValidationError("seed fano_index must be positive");
    if (seed.A && *seed.A != BigRational(*seed.fano_index)) {
      throw ValidationError("seed A_N must equal fano_index for a KE base");
    }
  }
  if (seed.pi2_rank && *seed.pi2_rank < 0) throw ValidationError("seed pi2_rank must be nonnegative");
}

inline BigRational seed_A(const SasakiSeed& seed) {
  if (seed.A) return *seed.A;
  if (seed.fano_index) return BigRational(*seed.fano_index);
  throw ValidationError("seed A_N unknown: supply A_N or fano_index");
}

inline Int seed_index(const SasakiSeed& seed) {
  if (!seed.fano_index) throw ValidationError("base not Fano/KE: fano_index missing");
  return *seed.fano_index;
}

inline void check_pair(const char* name, const IntPair& p) {
  if (p.first <= 0 || p.second <= 0) throw ValidationError(std::string(name) + " entries must be positive");
  if (gcd(p.first, p.second) != 1) throw ValidationError(std::string(name) + " not coprime: " + p.str());
}

inline ReebLattice make_v(const IntPair& v) {
  check_pair("v", v);
  return {v.first, v.second};
}

inline JoinSpec validate_join(const SasakiSeed& seed, const IntPair& l, const IntPair& w) {
  validate_seed(seed);
  check_pair("l", l);
  check_pair("w", w);
  JoinSpec j{l.first, l.second, w.first, w.second, false};
  if (j.w0 < j.w_inf) {
    std::swap(j.w0, j.w_inf);
    j.perp_applied = true;
  }
  return j;
}

inline bool is_smooth(const SasakiSeed& seed, const JoinSpec& j) {
  return gcd(mul(j.l_inf, seed.order), mul(mul(j.l0, j.w0), j.w_inf)) == 1;
}

inline QuotientData quotient_data(const SasakiSeed& seed, const JoinSpec& j, const ReebLattice& v) {
  const Int delta = mul(j.w0, v.v_inf) - mul(j.w_inf, v.v0);
  QuotientData q;
  q.s = gcd(j.l_inf, delta);
  q.m = j.l_inf / q.s;
  q.n = mul(j.l0, delta / q.s);
  q.m0 = mul(q.m, v.v0);
  q.m_inf = mul(q.m, v.v_inf);
  q.order = mul(mul(mul(q.m, v.v0), v.v_inf), seed.order);
  q.reducible = delta == 0;
  if (q.n != 0 && gcd(q.m, q.n) != 1) {
    throw ConsistencyError("gcd(m, n) != 1 for m=" + std::to_string(q.m) + ", n=" + std::to_string(q.n));
  }
  if (j.l_inf % q.m != 0 || j.l_inf % q.s != 0) throw ConsistencyError("m or s does not divide l_inf");
  return q;
}

inline AdmissibleParams admissible_params(const SasakiSeed& seed, const JoinSpec& j, const ReebLattice& v) {
  const QuotientData q = quotient_data(seed, j, v);
  if (q.reducible) throw ValidationError("product case: r undefined (r=0)");
  const Int delta = mul(j.w0, v.v_inf) - mul(j.w_inf, v.v0);
  AdmissibleParams p;
  p.r = BigRational(delta, add(mul(j.w0, v.v_inf), mul(j.w_inf, v.v0)));
  p.n = q.n;
  p.m0 = q.m0;
  p.m_inf = q.m_inf;
  p.d = seed.d;
  p.A = seed_A(seed);
  if (!(p.r.abs() < BigRational(1)) || p.r.sign() != (p.n > 0 ? 1 : -1)) {
    throw ConsistencyError("admissible r out of range or sign(r) != sign(n)");
  }
  return p;
}

inline ClassCoefficients kahler_class(const SasakiSeed& seed, const JoinSpec& j, const ReebLattice& v) {
  const QuotientData q = quotient_data(seed, j, v);
  if (q.reducible) throw ValidationError("product case: Kaehler class undefined (r=0)");
  const Int sy = mul(q.s, seed.order);
  const Int wl = mul(mul(j.w0, v.v_inf), j.l0);
  const Int g = gcd(sy, wl);
  ClassCoefficients c;
  c.k1 = wl / g;
  c.k2 = sy / g;
  c.normalization_factor = gcd(c.k1, c.k2);
  c.k1 /= c.normalization_factor;
  c.k2 /= c.normalization_factor;
  c.denom = mul(mul(mul(mul(g, q.m), v.v0), v.v_inf), seed.order);
  c.admissible_scale_num = BigRational(q.s, mul(mul(mul(g, q.m), v.v0), v.v_inf));
  c.admissible_scale_has_4pi = true;
  c.transverse_factor = mul(q.m, g);
  return c;
}

inline Int c1_contact(const SasakiSeed& seed, const JoinSpec& j) {
  return mul(j.l_inf, seed_index(seed)) - mul(j.l0, j.w_sum());
}

inline bool is_gorenstein(const SasakiSeed& seed, const JoinSpec& j) {
  return seed.fano_index.has_value() && c1_contact(seed, j) == 0;
}

inline JoinSpec relative_fano(const SasakiSeed& seed, const IntPair& w) {
  const Int index = seed_index(seed);
  check_pair("w", w);
  const Int ws = add(w.first, w.second);
  const Int g = gcd(ws, index);
  return validate_join(seed, {index / g, ws / g}, w);
}

inline Int fano_index_quotient(const SasakiSeed& seed, const JoinSpec& j, const ReebLattice& v) {
  if (c1_contact(seed, j) != 0) throw ValidationError("join is not Gorenstein (c1(D) != 0)");
  const QuotientData q = quotient_data(seed, j, v);
  if (q.reducible) throw ValidationError("product case: quotient index undefined (r=0)");
  const Int vs = add(v.v0, v.v_inf);
  if (vs % q.s != 0) throw ConsistencyError("s does not divide v0 + v_inf in the Gorenstein case");
  return mul(vs / q.s, gcd(mul(mul(j.l0, j.w0), v.v_inf), seed.order));
}

inline RegularReebReport regular_reeb_check(const SasakiSeed& seed, const JoinSpec& j) {
  RegularReebReport r;
  if (seed.fano_index && c1_contact(seed, j) == 0 && j.l_inf > 2) {
    r.exists = false;
    r.certificate = "Gorenstein join with l_inf = " + std::to_string(j.l_inf) + " > 2: no regular Reeb field in the w-cone";
    return r;
  }
  const Int diff = j.w0 - j.w_inf;
  r.exists = diff % j.l_inf == 0;
  r.certificate = "v=(1,1) gives m = l_inf/gcd(l_inf, w0-w_inf) = " + std::to_string(j.l_inf / gcd(j.l_inf, diff));
  r.certificate += r.exists ? "; candidate regular Reeb field" : "; m > 1 so no regular Reeb field";
  if (seed.order > 1) r.certificate += "; order " + std::to_string(seed.order) + " > 1 so this is a candidate check only";
  return r;
}

inline PerpResult perp_involution(const JoinSpec& j, const std::optional<ReebLattice>& v = std::nullopt) {
  PerpResult p;
  p.join = j;
  std::swap(p.join.w0, p.join.w_inf);
  p.join.perp_applied = !j.perp_applied;
  if (v) p.v = ReebLattice{v->v_inf, v->v0};
  p.note = "(n, (m0, m_inf)) -> (-n, (m_inf, m0))";
  return p;
}

/// The quotient of a quasi-regular ray as a new seed one dimension up.
inline SasakiSeed iterate_seed(const SasakiSeed& seed, const JoinSpec& j, const ReebLattice& v, bool ray_is_ke) {
  const QuotientData q = quotient_data(seed, j, v);
  if (q.reducible) throw ValidationError("product case: cannot iterate a reducible ray");
  SasakiSeed out;
  out.d = seed.d + 1;
  out.order = q.order;
  out.label = (seed.label.empty() ? std::string("N") : seed.label) + "*" + j.l().str() + j.w().str();
  if (ray_is_ke && is_gorenstein(seed, j)) {
    out.fano_index = fano_index_quotient(seed, j, v);
    out.A = BigRational(*out.fano_index);
  }
  return out;
}

}  // namespace sjk::join

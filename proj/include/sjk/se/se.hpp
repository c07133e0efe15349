#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "sjk/exact/roots.hpp"
#include "sjk/join/join.hpp"
#include "sjk/parallel.hpp"

namespace sjk::se {

using join::IntPair;
using join::JoinSpec;
using join::ReebLattice;
using join::SasakiSeed;

struct SeRay {
  RayCertificate k;
  RayCertificate b;
  std::optional<ReebLattice> v;
  bool quasi_regular = false;
};

struct SeSearchRecord {
  IntPair k;  // p/q
  IntPair w;
  ReebLattice v;
  JoinSpec l;
  bool smooth = false;
  Int fano_index = 0;
  Int order = 0;
  friend bool operator==(const SeSearchRecord&, const SeSearchRecord&) = default;
};

struct SeSearchBounds {
  Int height = 2;
  bool smooth_only = false;
  unsigned threads = 1;
};

struct SeChecks {
  bool in_kappa_image = false;
  bool constraint_holds = false;
  bool root_of_P = false;
  [[nodiscard]] bool all() const { return in_kappa_image && constraint_holds && root_of_P; }
};

/// (p_minus, p_plus) with the common prefactor dropped.
inline std::pair<BigRational, BigRational> p_pm(int d, const BigRational& k) {
  BigRational minus, plus, kj(1);
  for (int j = 0; j <= d; ++j) {
    minus += BigRational(d + 1 - j) * kj;
    plus += BigRational(j + 1) * kj;
    kj *= k;
  }
  return {minus, plus};
}

inline IntPolynomial se_polynomial(int d, const IntPair& w) {
  if (w.first == w.second) throw ValidationError("degenerate weight: w0 > w_inf is required");
  if (w.first < w.second) throw ValidationError("se_polynomial expects w0 > w_inf");
  std::vector<BigRational> c(static_cast<std::size_t>(d) + 2);
  const Int ws = join::add(w.first, w.second);
  for (int j = 0; j <= d; ++j) c[static_cast<std::size_t>(j)] = BigRational(join::mul(ws, j) - join::mul(w.first, d + 1));
  c[static_cast<std::size_t>(d) + 1] = BigRational(join::mul(w.second, d + 1));
  return IntPolynomial(std::move(c));
}

/// F(a, b) = sum_j (d+1-j) b^{d-j} a^j
inline BigInt F(int d, Int a, Int b) {
  BigInt s = 0, ap = 1, bp;
  for (int j = 0; j <= d; ++j) {
    mpz_pow_ui(bp.get_mpz_t(), big(b).get_mpz_t(), static_cast<unsigned long>(d - j));
    s += BigInt(d + 1 - j) * bp * ap;
    ap *= big(a);
  }
  return s;
}

namespace detail {

inline std::pair<Int, Int> reduce(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return {to_int(a / g), to_int(b / g)};
}

inline void check_pq(Int p, Int q) {
  if (q < 1 || p <= q) throw ValidationError("k = p/q needs p > q >= 1");
  if (join::gcd(p, q) != 1) throw ValidationError("k = p/q must be reduced");
}

}  // namespace detail

inline ReebLattice kappa(int d, Int p, Int q) {
  detail::check_pq(p, q);
  const auto [a, b] = detail::reduce(F(d, q, p), F(d, p, q));
  return {a, b};
}

inline IntPair w_from_k(int d, Int p, Int q) {
  detail::check_pq(p, q);
  const auto [a, b] = detail::reduce(big(p) * F(d, q, p), big(q) * F(d, p, q));
  if (join::gcd(a, b) != 1) throw ConsistencyError("w_from_k produced a non-coprime pair");
  return {a, b};
}

/// The unique root k > 1 of P_w. Throws ConsistencyError if it is not unique.
inline SeRay se_ray(int d, const IntPair& w, const BigRational& precision) {
  join::check_pair("w", w);
  const IntPolynomial P = se_polynomial(d, w);
  const SturmChain chain(P);
  const BigRational one(1), upper = cauchy_bound(chain.square_free());
  const int count = one < upper ? chain.count(one, upper) : 0;
  if (count != 1) {
    throw ConsistencyError("P_w has " + std::to_string(count) + " roots in (1, inf) for w=" + w.str() +
                           ", d=" + std::to_string(d) + "; expected exactly one");
  }
  const auto ivs = isolate_roots(P, one, upper);
  const BigRational t(w.second, w.first);
  SeRay ray;
  if (ivs.front().exact()) {
    const BigRational k = ivs.front().lo;
    ray.k = RayCertificate::exact(k);
    ray.v = kappa(d, to_int(k.num()), to_int(k.den()));
    ray.b = RayCertificate::exact(BigRational(ray.v->v_inf, ray.v->v0));
    ray.quasi_regular = true;
  } else {
    const IsolatingInterval k = refine_interval(ivs.front(), precision);
    ray.k = RayCertificate::from(k);
    ray.b = RayCertificate::interval(k.lo * t, k.hi * t);
  }
  return ray;
}

inline SeChecks se_checks(int d, const IntPair& w, const ReebLattice& v) {
  join::check_pair("w", w);
  join::check_pair("v", v.pair());
  SeChecks c;
  const BigRational k = BigRational(v.v_inf, v.v0) * BigRational(w.first, w.second);
  if (k > BigRational(1)) {
    c.in_kappa_image = kappa(d, to_int(k.num()), to_int(k.den())) == v;
  }
  const SeRay ray = se_ray(d, w, BigRational(BigInt(1), BigInt(1000000)));
  c.root_of_P = ray.k.contains(k) && se_polynomial(d, w)(k).is_zero();
  if (ray.quasi_regular) {
    const BigRational rk = *ray.k.value;
    c.constraint_holds = BigRational(w.second, w.first) ==
                         BigRational(rk.den()) * BigRational(v.v_inf) / (BigRational(rk.num()) * BigRational(v.v0));
  }
  return c;
}

inline bool is_se_ray(int d, const IntPair& w, const ReebLattice& v) { return se_checks(d, w, v).all(); }

/// Integral over [-1,1] of ((1-b)-(1+b)z)((b+t)+(b-t)z)^d, by expansion.
inline BigRational ke_integral(int d, const BigRational& b, const BigRational& t) {
  if (!(t.sign() > 0 && t < BigRational(1))) throw ValidationError("ke_integral needs 0 < t < 1");
  const BigRational one(1);
  const IntPolynomial integrand =
      IntPolynomial::linear(one - b, -(one + b)) * IntPolynomial::linear(b + t, b - t).pow(static_cast<unsigned>(d));
  return integrand.integrate(-one, one);
}

/// b p_plus(b/t) = p_minus(b/t)
inline bool ke_condition_poly(int d, const BigRational& b, const BigRational& t) {
  const auto [minus, plus] = p_pm(d, b / t);
  return b * plus == minus;
}

inline std::optional<SeSearchRecord> se_record(const SasakiSeed& seed, Int p, Int q, bool smooth_only) {
  SeSearchRecord r;
  r.k = {p, q};
  r.w = w_from_k(seed.d, p, q);
  r.v = kappa(seed.d, p, q);
  r.l = join::relative_fano(seed, r.w);
  r.smooth = join::is_smooth(seed, r.l);
  if (smooth_only && !r.smooth) return std::nullopt;
  if (BigRational(r.w.second, r.w.first) !=
      BigRational(join::mul(q, r.v.v_inf), join::mul(p, r.v.v0))) {
    throw ConsistencyError("SE constraint w_inf/w0 = q v_inf/(p v0) fails at k=" + std::to_string(p) + "/" +
                           std::to_string(q));
  }
  r.fano_index = join::fano_index_quotient(seed, r.l, r.v);
  r.order = join::quotient_data(seed, r.l, r.v).order;
  return r;
}

/// Every reduced k = p/q > 1 with p, q <= H, sorted by (p, q).
inline std::vector<SeSearchRecord> enumerate_quasiregular_se(const SasakiSeed& seed, const SeSearchBounds& bounds) {
  join::seed_index(seed);
  if (bounds.height < 2) throw ValidationError("search height must be >= 2");
  std::vector<std::pair<Int, Int>> grid;
  for (Int p = 2; p <= bounds.height; ++p) {
    for (Int q = 1; q < p; ++q) {
      if (join::gcd(p, q) == 1) grid.emplace_back(p, q);
    }
  }
  const auto found = parallel_map(
      grid, [&](const std::pair<Int, Int>& pq) { return se_record(seed, pq.first, pq.second, bounds.smooth_only); },
      bounds.threads);
  std::vector<SeSearchRecord> out;
  for (const auto& r : found) {
    if (r) out.push_back(*r);
  }
  std::sort(out.begin(), out.end(), [](const SeSearchRecord& a, const SeSearchRecord& b) {
    return std::pair(a.k.first, a.k.second) < std::pair(b.k.first, b.k.second);
  });
  return out;
}

}  // namespace sjk::se

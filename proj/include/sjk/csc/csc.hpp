#pragma once

/**
 * @file csc.hpp
 * @brief Admissible extremal metrics on the quotient and CSC rays on the join.
 *
 * Two independent paths are kept on purpose. extremal_polynomial() solves
 * the boundary-value problem for a fixed Reeb vector; csc_polynomial() is
 * the closed-form polynomial in b = v_inf/v0 whose positive roots are the
 * CSC rays. Tests cross-check them against each other.
 */

#include <optional>
#include <vector>

#include "sjk/exact/linear.hpp"
#include "sjk/exact/roots.hpp"
#include "sjk/join/join.hpp"

namespace sjk::csc {

using join::AdmissibleParams;
using join::JoinSpec;
using join::ReebLattice;
using join::SasakiSeed;

struct ExtremalSolution {
  IntPolynomial F;
  BigRational alpha;
  BigRational beta;
  AdmissibleParams params;
};

struct CscRay {
  RayCertificate b;
  std::optional<ReebLattice> v;
  bool quasi_regular = false;
  // Positivity of F_ext on (-1,1) at the ray; only known for rational b.
  std::optional<bool> extremal_positive;
};

struct BetaC {
  BigRational beta;
  BigRational c;
  bool csc_condition_holds = false;
};

struct LiftReport {
  bool vanishes_at_endpoints = false;
  bool derivative_at_minus_one = false;
  bool derivative_at_one = false;
  [[nodiscard]] bool all() const { return vanishes_at_endpoints && derivative_at_minus_one && derivative_at_one; }
};

namespace detail {

inline IntPolynomial one_plus_rz(const BigRational& r, unsigned e) {
  return IntPolynomial::linear(BigRational(1), r).pow(e);
}

inline BigRational ipow(const BigRational& x, int e) { return x.pow(static_cast<unsigned>(e)); }

}  // namespace detail

inline void check_params(const AdmissibleParams& p) {
  if (p.n == 0) throw ValidationError("admissible parameters need n != 0");
  if (p.r.is_zero() || !(p.r.abs() < BigRational(1))) throw ValidationError("admissible parameters need 0 < |r| < 1");
  if (p.d < 1) throw ValidationError("admissible parameters need d >= 1");
  if (p.m0 < 1 || p.m_inf < 1) throw ValidationError("admissible parameters need positive m0, m_inf");
}

inline ExtremalSolution extremal_polynomial(const AdmissibleParams& p) {
  check_params(p);
  const auto d = static_cast<unsigned>(p.d);
  const BigRational one(1), two(2);
  const IntPolynomial base = detail::one_plus_rz(p.r, d - 1);
  const IntPolynomial full = detail::one_plus_rz(p.r, d);
  const IntPolynomial z = IntPolynomial::monomial(one, 1);

  const IntPolynomial g0 = (base * (two * BigRational(p.d) * p.A * p.r / BigRational(p.n))).antiderivative().antiderivative();
  const IntPolynomial ga = (z * full).antiderivative().antiderivative();
  const IntPolynomial gb = full.antiderivative().antiderivative();
  const IntPolynomial g0d = g0.derivative(), gad = ga.derivative(), gbd = gb.derivative();

  // Unknowns (alpha, beta, C1, C2) with F = g0 + alpha*ga + beta*gb + C1*z + C2.
  const BigRational m1(-1);
  Matrix a = {
      {ga(m1), gb(m1), m1, one},
      {ga(one), gb(one), one, one},
      {gad(m1), gbd(m1), one, BigRational()},
      {gad(one), gbd(one), one, BigRational()},
  };
  std::vector<BigRational> rhs = {
      -g0(m1),
      -g0(one),
      two * (one - p.r).pow(d) / BigRational(p.m_inf) - g0d(m1),
      -two * (one + p.r).pow(d) / BigRational(p.m0) - g0d(one),
  };
  const auto x = solve_linear(std::move(a), std::move(rhs));

  ExtremalSolution s;
  s.alpha = x[0];
  s.beta = x[1];
  s.F = g0 + ga * x[0] + gb * x[1] + IntPolynomial::linear(x[3], x[2]);
  s.params = p;
  return s;
}

/// True when all four endpoint conditions hold exactly.
inline bool boundary_conditions_hold(const ExtremalSolution& s) {
  const auto& p = s.params;
  const auto d = static_cast<unsigned>(p.d);
  const BigRational one(1), two(2);
  const IntPolynomial dF = s.F.derivative();
  return s.F(-one).is_zero() && s.F(one).is_zero() &&
         dF(-one) == two * (one - p.r).pow(d) / BigRational(p.m_inf) &&
         dF(one) == -two * (one + p.r).pow(d) / BigRational(p.m0);
}

/// 2dAr(1+rz)^{d-1} - n F'' + n(alpha z + beta)(1+rz)^d, which must vanish.
inline IntPolynomial scal_residual(const ExtremalSolution& s) {
  const auto& p = s.params;
  const auto d = static_cast<unsigned>(p.d);
  const BigRational n(p.n);
  return detail::one_plus_rz(p.r, d - 1) * (BigRational(2 * p.d) * p.A * p.r) - s.F.derivative().derivative() * n +
         IntPolynomial::linear(s.beta, s.alpha) * detail::one_plus_rz(p.r, d) * n;
}

/// -(alpha z + beta), after verifying the cleared scalar-curvature identity.
inline IntPolynomial scal_profile(const ExtremalSolution& s) {
  if (!scal_residual(s).is_zero()) throw ConsistencyError("scalar curvature identity fails for the extremal solution");
  return -IntPolynomial::linear(s.beta, s.alpha);
}

inline bool check_positivity(const IntPolynomial& F) {
  if (F.is_zero()) return false;
  const BigRational one(1);
  return SturmChain(F).count_open(-one, one) == 0 && F(BigRational()).sign() > 0;
}

inline bool check_positivity(const ExtremalSolution& s) { return check_positivity(s.F); }

inline BetaC csc_beta_c(const AdmissibleParams& p) {
  check_params(p);
  const BigRational one(1), two(2), r = p.r, A = p.A, n(p.n), m0(p.m0), mi(p.m_inf), dd(p.d);
  const int d = p.d;
  const BigRational D = detail::ipow(one + r, d + 1) - detail::ipow(one - r, d + 1);
  BetaC out;
  out.beta = -two * (dd + one) * r *
             (mi * detail::ipow(one + r, d) * (n + m0 * A) - m0 * detail::ipow(one - r, d) * (-n + mi * A)) /
             (n * m0 * mi * D);
  out.c = two * detail::ipow(one - r * r, d) * (n * mi * (one - r) + n * m0 * (one + r) - two * m0 * mi * A * r) /
          (n * m0 * mi * D);
  const BigRational lhs = two * A * D / (n * r * (dd + one)) +
                          out.beta * (detail::ipow(one + r, d + 2) - detail::ipow(one - r, d + 2)) /
                              (r * r * (dd + one) * (dd + two)) +
                          two * out.c;
  out.csc_condition_holds = lhs.is_zero();
  return out;
}

/// f(b) exactly as the five-term closed form (no content removed).
inline IntPolynomial csc_polynomial(const SasakiSeed& seed, const JoinSpec& j) {
  const int D = seed.d;
  const auto ud = static_cast<unsigned>(D);
  const BigRational A = join::seed_A(seed);
  const BigRational l0(j.l0), li(j.l_inf), w0(j.w0), wi(j.w_inf), Dp1(D + 1), one(1), two(2);
  const BigRational Dr(D);
  auto b = [](const BigRational& c, unsigned e) { return IntPolynomial::monomial(c, e); };

  IntPolynomial f;
  // w0^{2(D+1)} b^{2D+3} (A l_inf + l0 (D+1) w_inf - b (D+1) l0 w0)
  f += b(w0.pow(2 * ud + 2) * (A * li + l0 * Dp1 * wi), 2 * ud + 3) - b(w0.pow(2 * ud + 2) * Dp1 * l0 * w0, 2 * ud + 4);
  f -= b(w0.pow(ud + 2) * wi.pow(ud) * Dp1 * (A * Dp1 * li - l0 * (Dp1 * w0 + (Dr + two) * wi)), ud + 3);
  f += b(w0.pow(ud + 1) * wi.pow(ud + 1) *
             (two * A * Dr * (Dr + two) * li - Dp1 * (two * Dr + BigRational(3)) * l0 * (w0 + wi)),
         ud + 2);
  f -= b(w0.pow(ud) * wi.pow(ud + 2) * Dp1 * (A * Dp1 * li - l0 * ((Dr + two) * w0 + Dp1 * wi)), ud + 1);
  f += b(wi.pow(2 * ud + 2) * (A * li + l0 * Dp1 * w0), 1) - b(wi.pow(2 * ud + 2) * Dp1 * l0 * wi, 0);
  return f;
}

/// f with every factor (w0 b - w_inf) divided out, in primitive form.
inline IntPolynomial reduced_csc_polynomial(const SasakiSeed& seed, const JoinSpec& j) {
  IntPolynomial f = csc_polynomial(seed, j).primitive();
  const IntPolynomial product_root = IntPolynomial::linear(BigRational(-j.w_inf), BigRational(j.w0));
  while (f.degree() > 0) {
    auto [q, rem] = f.divmod(product_root);
    if (!rem.is_zero()) break;
    f = q.primitive();
  }
  return f;
}

/// Number of CSC rays, by Sturm count alone.
inline int csc_ray_count(const SasakiSeed& seed, const JoinSpec& j) {
  const IntPolynomial f = reduced_csc_polynomial(seed, j);
  if (f.degree() <= 0) return 0;
  const SturmChain chain(f);
  return chain.count_open(BigRational(), cauchy_bound(chain.square_free()));
}

/// Positive roots of f other than the reducible ray b = w_inf/w0.
inline std::vector<CscRay> csc_rays(const SasakiSeed& seed, const JoinSpec& j, const BigRational& precision) {
  const IntPolynomial f = reduced_csc_polynomial(seed, j);
  std::vector<CscRay> out;
  if (f.degree() <= 0) return out;
  const BigRational upper = cauchy_bound(f);
  for (const auto& iv : isolate_roots(f, BigRational(), upper)) {
    CscRay ray;
    if (iv.exact()) {
      ray.b = RayCertificate::exact(iv.lo);
      const ReebLattice v{to_int(iv.lo.den()), to_int(iv.lo.num())};
      ray.v = v;
      ray.quasi_regular = true;
      ray.extremal_positive = check_positivity(extremal_polynomial(join::admissible_params(seed, j, v)));
    } else {
      ray.b = RayCertificate::from(refine_interval(iv, precision));
    }
    out.push_back(ray);
  }
  return out;
}

inline bool ke_check(const SasakiSeed& seed, const JoinSpec& j, const ReebLattice& v) {
  const Int index = join::seed_index(seed);
  const AdmissibleParams p = join::admissible_params(seed, j, v);
  const BigRational one(1), two(2), mi(p.m_inf), m0(p.m0);
  const IntPolynomial integrand = (IntPolynomial::linear(one / mi, -one / mi) - IntPolynomial::linear(one / m0, one / m0)) *
                                  detail::one_plus_rz(p.r, static_cast<unsigned>(p.d));
  const bool integral_zero = integrand.integrate(-one, one).is_zero();
  const bool index_identity = two * p.r * BigRational(index) / BigRational(p.n) == (one + p.r) / mi + (one - p.r) / m0;
  return integral_zero && index_identity;
}

/// Checks the boundary behaviour of m v0 v_inf F/(1+rz)^d.
inline LiftReport lift_profile(const ExtremalSolution& s, const ReebLattice& v, Int m) {
  const auto& p = s.params;
  const BigRational one(1), two(2), scale(join::mul(join::mul(m, v.v0), v.v_inf));
  const IntPolynomial dF = s.F.derivative();
  auto theta = [&](const BigRational& z) { return scale * s.F(z) / (one + p.r * z).pow(static_cast<unsigned>(p.d)); };
  auto dtheta = [&](const BigRational& z) {
    const BigRational w = one + p.r * z;
    return scale * (dF(z) / w.pow(static_cast<unsigned>(p.d)) -
                    BigRational(p.d) * p.r * s.F(z) / w.pow(static_cast<unsigned>(p.d + 1)));
  };
  LiftReport out;
  out.vanishes_at_endpoints = theta(-one).is_zero() && theta(one).is_zero();
  out.derivative_at_minus_one = dtheta(-one) == two * BigRational(v.v0);
  out.derivative_at_one = dtheta(one) == -two * BigRational(v.v_inf);
  return out;
}

/// First l = (1, l_inf), l_inf <= max_l_inf, carrying at least min_rays CSC rays.
inline std::optional<JoinSpec> find_multi_ray_witness(const SasakiSeed& seed, const join::IntPair& w, int min_rays,
                                                      Int max_l_inf) {
  const BigRational width(BigInt(1), BigInt(1000000));
  for (Int li = 1; li <= max_l_inf; ++li) {
    const JoinSpec j = join::validate_join(seed, {1, li}, w);
    if (static_cast<int>(csc_rays(seed, j, width).size()) >= min_rays) return j;
  }
  return std::nullopt;
}

}  // namespace sjk::csc

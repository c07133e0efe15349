#include <gtest/gtest.h>

#include <random>

#include "sjk/csc/csc.hpp"

using namespace sjk;
using namespace sjk::join;
using namespace sjk::csc;

namespace {

BigRational q(Int n, Int d = 1) { return BigRational(n, d); }

AdmissibleParams se_params() { return {q(1, 2), 70, 91, 65, 1, q(2)}; }

struct Draw {
  SasakiSeed seed;
  JoinSpec j;
  ReebLattice v;
};

Draw random_draw(std::mt19937_64& rng) {
  std::uniform_int_distribution<Int> small(1, 12), dd(1, 3), an(-6, 12), ad(1, 4);
  while (true) {
    SasakiSeed s;
    s.d = static_cast<int>(dd(rng));
    s.A = BigRational(an(rng), ad(rng));
    const IntPair l{small(rng), small(rng)}, w{small(rng), small(rng)}, v{small(rng), small(rng)};
    if (gcd(l.first, l.second) != 1 || gcd(w.first, w.second) != 1 || gcd(v.first, v.second) != 1) continue;
    if (w.first * v.second == w.second * v.first) continue;
    return {s, {l.first, l.second, w.first, w.second, false}, {v.first, v.second}};
  }
}

}  // namespace

TEST(Extremal, SeDataIsCsc) {
  const auto s = extremal_polynomial(se_params());
  EXPECT_TRUE(s.alpha.is_zero());
  EXPECT_TRUE(s.F(q(1)).is_zero());
  EXPECT_TRUE(s.F(q(-1)).is_zero());
  EXPECT_TRUE(boundary_conditions_hold(s));
  EXPECT_EQ(scal_profile(s), IntPolynomial::constant(-s.beta));
}

TEST(Extremal, GenericIsExtremalNotCsc) {
  const SasakiSeed s3 = SasakiSeed::sphere_seed(1);
  const JoinSpec j = validate_join(s3, {1, 1}, {21, 5});
  const auto s = extremal_polynomial(admissible_params(s3, j, {7, 5}));
  EXPECT_FALSE(s.alpha.is_zero());
  EXPECT_EQ(s.F.degree(), 4);
  EXPECT_TRUE(boundary_conditions_hold(s));
}

TEST(Extremal, RejectsBadParams) {
  AdmissibleParams p = se_params();
  p.n = 0;
  EXPECT_THROW(extremal_polynomial(p), ValidationError);
  p = se_params();
  p.r = q(1);
  EXPECT_THROW(extremal_polynomial(p), ValidationError);
}

TEST(Scal, ZeroAKillsBaseTerm) {
  AdmissibleParams p = se_params();
  p.A = q(0);
  const auto s = extremal_polynomial(p);
  EXPECT_TRUE(scal_residual(s).is_zero());
  const IntPolynomial f2 = s.F.derivative().derivative();
  EXPECT_EQ(f2, IntPolynomial::linear(s.beta, s.alpha) * IntPolynomial::linear(q(1), p.r));
}

TEST(Positivity, Synthetic) {
  const IntPolynomial one_minus_z2{1, 0, -1};
  EXPECT_TRUE(check_positivity(one_minus_z2 * IntPolynomial{1, 0, 1} * q(1, 7)));
  EXPECT_FALSE(check_positivity(one_minus_z2 * IntPolynomial{q(-1, 2), q(1)} * IntPolynomial{q(1, 2), q(1)}));
  EXPECT_FALSE(check_positivity(-one_minus_z2));
  EXPECT_TRUE(check_positivity(extremal_polynomial(se_params())));
}

TEST(BetaC, Examples) {
  const auto a = csc_beta_c(se_params());
  EXPECT_TRUE(a.csc_condition_holds);
  EXPECT_EQ(a.beta, extremal_polynomial(se_params()).beta);
  AdmissibleParams swapped = se_params();
  std::swap(swapped.m0, swapped.m_inf);
  EXPECT_FALSE(csc_beta_c(swapped).csc_condition_holds);
}

TEST(CscPolynomial, Examples) {
  const SasakiSeed s = SasakiSeed::ke(1, 2);
  const JoinSpec j = validate_join(s, {1, 13}, {21, 5});
  const IntPolynomial f = csc_polynomial(s, j);
  EXPECT_TRUE(f(q(5, 7)).is_zero());
  EXPECT_EQ(f(q(0)), q(-2 * 1 * 3125));
  EXPECT_EQ(f.degree(), 6);
  EXPECT_EQ(f.leading(), q(-2 * 4084101));
  for (int d = 1; d <= 4; ++d) {
    SasakiSeed t = SasakiSeed::ke(d, 3);
    const JoinSpec k = validate_join(t, {2, 5}, {3, 2});
    const IntPolynomial g = csc_polynomial(t, k);
    EXPECT_EQ(g.degree(), 2 * d + 4);
    EXPECT_EQ(g.leading(), q(-(d + 1) * 2) * q(3).pow(static_cast<unsigned>(2 * d + 3)));
    EXPECT_EQ(g(q(0)), q(-(d + 1) * 2) * q(2).pow(static_cast<unsigned>(2 * d + 3)));
    const IntPolynomial cube = IntPolynomial{-2, 3}.pow(3);
    EXPECT_TRUE(g.divmod(cube).second.is_zero());
  }
}

TEST(CscRays, GorensteinExample) {
  const SasakiSeed s = SasakiSeed::ke(1, 2);
  const JoinSpec j = validate_join(s, {1, 13}, {21, 5});
  const auto rays = csc_rays(s, j, q(1, 1000000));
  ASSERT_EQ(rays.size(), 1U);
  EXPECT_TRUE(rays[0].quasi_regular);
  EXPECT_EQ(*rays[0].b.value, q(5, 7));
  EXPECT_EQ(*rays[0].v, (ReebLattice{7, 5}));
  EXPECT_TRUE(*rays[0].extremal_positive);
}

TEST(CscRays, UniqueForRelativeFano) {
  for (Int index = 1; index <= 4; ++index) {
    for (int d = 1; d <= 3; ++d) {
      const SasakiSeed s = SasakiSeed::ke(d, index);
      for (Int w0 = 2; w0 <= 9; ++w0) {
        for (Int wi = 1; wi < w0; ++wi) {
          if (gcd(w0, wi) != 1) continue;
          EXPECT_EQ(csc_rays(s, relative_fano(s, {w0, wi}), q(1, 1000)).size(), 1U)
              << "d=" << d << " I=" << index << " w=(" << w0 << "," << wi << ")";
        }
      }
    }
  }
}

TEST(CscRays, ThreeRayWitness) {
  const SasakiSeed s = SasakiSeed::ke(1, 2);
  const auto j = find_multi_ray_witness(s, {2, 1}, 3, 40);
  ASSERT_TRUE(j.has_value());
  EXPECT_EQ(j->l(), (IntPair{1, 14}));
  EXPECT_GE(csc_rays(s, *j, q(1, 1000)).size(), 3U);
  EXPECT_EQ(csc_ray_count(s, *j), static_cast<int>(csc_rays(s, *j, q(1, 1000)).size()));
}

TEST(CscRays, ScaleInvariance) {
  const SasakiSeed s = SasakiSeed::ke(1, 2);
  const JoinSpec j = validate_join(s, {1, 13}, {21, 5});
  const IntPolynomial f = csc_polynomial(s, j);
  for (Int lambda = 1; lambda <= 5; ++lambda) {
    EXPECT_TRUE(f(BigRational(5 * lambda, 7 * lambda)).is_zero());
  }
}

TEST(KeCheck, Examples) {
  const SasakiSeed s = SasakiSeed::ke(1, 2);
  const JoinSpec j = validate_join(s, {1, 13}, {21, 5});
  EXPECT_TRUE(ke_check(s, j, {7, 5}));
  EXPECT_FALSE(ke_check(s, j, {1, 1}));
  const SasakiSeed t = SasakiSeed::ke(2, 12, 455);
  EXPECT_TRUE(ke_check(t, validate_join(t, {4, 15}, {34, 11}), {17, 11}));
  SasakiSeed bare;
  bare.A = q(1);
  EXPECT_THROW(ke_check(bare, j, {7, 5}), ValidationError);
}

TEST(Lift, Examples) {
  const auto s = extremal_polynomial(se_params());
  EXPECT_TRUE(lift_profile(s, {7, 5}, 13).all());
  const auto bad = lift_profile(s, {7, 5}, 14);
  EXPECT_TRUE(bad.vanishes_at_endpoints);
  EXPECT_FALSE(bad.derivative_at_minus_one);
  const SasakiSeed s3 = SasakiSeed::sphere_seed(1);
  const JoinSpec j = validate_join(s3, {1, 1}, {2, 1});
  EXPECT_TRUE(lift_profile(extremal_polynomial(admissible_params(s3, j, {1, 1})), {1, 1}, 1).all());
}

TEST(Properties, RandomDraws) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 150; ++i) {
    const Draw dr = random_draw(rng);
    const auto p = admissible_params(dr.seed, dr.j, dr.v);
    const auto s = extremal_polynomial(p);
    EXPECT_TRUE(boundary_conditions_hold(s));
    EXPECT_TRUE(scal_residual(s).is_zero());
    EXPECT_EQ(s.alpha.is_zero(), csc_beta_c(p).csc_condition_holds);
    const BigRational b(dr.v.v_inf, dr.v.v0);
    EXPECT_EQ(s.alpha.is_zero(), csc_polynomial(dr.seed, dr.j)(b).is_zero());
    if (p.A.sign() >= 0) {
      EXPECT_TRUE(check_positivity(s));
      EXPECT_GE(csc_ray_count(dr.seed, dr.j), 1);
    }
  }
}

#include <gtest/gtest.h>

#include <random>

#include "sjk/catalog/families.hpp"

using namespace sjk;
using namespace sjk::catalog;
using join::IntPair;
using join::JoinSpec;
using join::ReebLattice;
using join::SasakiSeed;

TEST(Ypq, ToJoin) {
  const JoinSpec a = ypq_to_join(13, 8);
  EXPECT_EQ(a.l(), (IntPair{1, 13}));
  EXPECT_EQ(a.w(), (IntPair{21, 5}));
  const JoinSpec b = ypq_to_join(2, 1);
  EXPECT_EQ(b.l(), (IntPair{1, 2}));
  EXPECT_EQ(b.w(), (IntPair{3, 1}));
  const JoinSpec c = ypq_to_join(1, 0);
  EXPECT_EQ(c.l(), (IntPair{1, 1}));
  EXPECT_EQ(c.w(), (IntPair{1, 1}));
  EXPECT_THROW(ypq_to_join(4, 2), ValidationError);
  EXPECT_THROW(ypq_to_join(2, 0), ValidationError);
  EXPECT_THROW(ypq_to_join(3, 3), ValidationError);
}

TEST(Ypq, NegativeQUsesPerp) {
  const JoinSpec j = ypq_to_join(13, -8);
  EXPECT_TRUE(j.perp_applied);
  EXPECT_EQ(j.w(), (IntPair{21, 5}));
  EXPECT_EQ(join_to_ypq(j), (IntPair{13, -8}));
}

TEST(Ypq, Inverse) {
  EXPECT_EQ(join_to_ypq(IntPair{1, 13}, IntPair{21, 5}), (IntPair{13, 8}));
  EXPECT_FALSE(join_to_ypq(IntPair{3, 13}, IntPair{21, 5}).has_value());
  for (Int p = 1; p <= 40; ++p) {
    for (Int q = -p + 1; q < p; ++q) {
      if (q != 0 ? join::gcd(p, q) != 1 : p != 1) continue;
      const JoinSpec j = ypq_to_join(p, q);
      EXPECT_EQ(join::gcd(j.l0, j.l_inf), 1);
      EXPECT_EQ(join::gcd(j.w0, j.w_inf), 1);
      EXPECT_EQ(join_to_ypq(j), (IntPair{p, q}));
    }
  }
}

TEST(Ypq, Quotient) {
  const HirzebruchRecord a = ypq_quotient(13, 8, {7, 5});
  EXPECT_EQ(a.m0, 91);
  EXPECT_EQ(a.m_inf, 65);
  EXPECT_EQ(a.n, 70);
  const HirzebruchRecord b = ypq_quotient(2, 1, {1, 1});
  EXPECT_EQ(b.s, 2);
  EXPECT_EQ(b.m, 1);
  EXPECT_EQ(b.n, 1);
  const HirzebruchRecord c = ypq_quotient(13, 8, {21, 5});
  EXPECT_EQ(c.n, 0);
}

TEST(Ypq, QuotientSweep) {
  std::mt19937_64 rng(3);
  int checked = 0;
  while (checked < 300) {
    const Int p = static_cast<Int>(rng() % 30) + 2;
    const Int q = static_cast<Int>(rng() % static_cast<std::uint64_t>(2 * p - 1)) - p + 1;
    const Int v0 = static_cast<Int>(rng() % 20) + 1, vi = static_cast<Int>(rng() % 20) + 1;
    if (q == 0 || join::gcd(p, q) != 1 || join::gcd(v0, vi) != 1) continue;
    ++checked;
    EXPECT_NO_THROW(ypq_quotient(p, q, {v0, vi}));
  }
}

TEST(Ypq, Record) {
  const YpqRecord r = ypq_record(13, 8, BigRational(BigInt(1), BigInt(1000000)));
  ASSERT_TRUE(r.se.has_value());
  EXPECT_TRUE(r.se->quasi_regular);
  EXPECT_EQ(*r.se->v, (ReebLattice{7, 5}));
  EXPECT_TRUE(r.smooth);
  EXPECT_FALSE(r.topology.h4_torsion_order.has_value());
  EXPECT_EQ(r.topology.pi2_rank, 1);
}

TEST(BrieskornPQ, Link) {
  const BrieskornPQ b = brieskorn_pq_link(13, 8);
  EXPECT_EQ(b.k, 0);
  EXPECT_EQ(b.fano_index, 42);
  EXPECT_TRUE(b.csc_exists);
  EXPECT_FALSE(brieskorn_pq_link(2, 2).csc_exists);
  EXPECT_FALSE(brieskorn_pq_link(1, 5).csc_exists);
  EXPECT_EQ(brieskorn_pq_link(4, 6).k, 1);
  EXPECT_THROW(brieskorn_pq_link(0, 3), ValidationError);
}

TEST(BrieskornPQ, IndexIdentity) {
  for (Int p = 1; p <= 60; ++p) {
    for (Int q = 1; q <= 60; ++q) {
      const BrieskornPQ b = brieskorn_pq_link(p, q);
      EXPECT_EQ(b.fano_index, weight_sum(b.weights) - b.degree);
    }
  }
}

TEST(BrieskornPQ, SmoothJoinsAreSpin) {
  for (Int p = 1; p <= 12; ++p) {
    for (Int q = 1; q <= 12; ++q) {
      const BrieskornPQ b = brieskorn_pq_link(p, q);
      for (const IntPair w : {IntPair{3, 1}, IntPair{5, 3}, IntPair{7, 2}, IntPair{1, 1}}) {
        const SasakiSeed s = brieskorn_pq_seed(b);
        const BrieskornJoinReport r = brieskorn_pq_join(b, join::relative_fano(s, w).l(), w);
        if (r.smooth) {
          ASSERT_TRUE(r.spin.has_value());
          EXPECT_TRUE(*r.spin);
        } else {
          EXPECT_FALSE(r.spin.has_value());
        }
      }
    }
  }
}

TEST(BrieskornPQ, SeStatusNeverFalse) {
  const BrieskornPQ b = brieskorn_pq_link(1, 5);
  const BrieskornJoinReport r = brieskorn_pq_join(b, {1, 1}, {3, 1});
  EXPECT_EQ(r.se_status, "unknown");
  const BrieskornJoinReport e = brieskorn_pq_join(brieskorn_pq_link(3, 4), {1, 1}, {3, 1});
  EXPECT_EQ(e.se_status, "exists");
}

TEST(BrieskornKP, Link) {
  const BrieskornKP b = brieskorn_kp_link(3, 5);
  EXPECT_EQ(b.weights, (std::array<Int, 4>{20, 20, 15, 12}));
  EXPECT_EQ(b.degree, 60);
  EXPECT_EQ(b.fano_index, 7);
  EXPECT_TRUE(b.positive);
  EXPECT_FALSE(brieskorn_kp_link(4, 7).positive);
  EXPECT_THROW(brieskorn_kp_link(4, 5), ValidationError);
  EXPECT_THROW(brieskorn_kp_link(2, 5), ValidationError);
  EXPECT_THROW(brieskorn_kp_link(3, 4), ValidationError);
}

TEST(BrieskornKP, PositiveSetAndIndex) {
  std::set<std::pair<Int, Int>> positive;
  for (Int k = 3; k <= 40; ++k) {
    for (Int p = 2; p <= 40; ++p) {
      if (join::gcd(k, p) != 1 || join::gcd(k + 1, p) != 1) continue;
      const BrieskornKP b = brieskorn_kp_link(k, p);
      EXPECT_EQ(b.fano_index, weight_sum(b.weights) - b.degree);
      EXPECT_EQ(b.positive, b.fano_index > 0);
      if (b.positive) positive.emplace(k, p);
    }
  }
  EXPECT_EQ(positive, (std::set<std::pair<Int, Int>>{{3, 5}, {3, 7}, {3, 11}, {4, 3}}));
}

TEST(Topology, SphereExample) {
  const SasakiSeed s5 = SasakiSeed::sphere_seed(2);
  const JoinSpec j = join::validate_join(s5, {1, 13}, {21, 5});
  const TopologySummary t = topology_summary(s5, j);
  EXPECT_EQ(t.h4_torsion_order, 105);
  EXPECT_EQ(t.cohomology_ring, "Z[x,y]/(105x², x³, x²y, y²)");
  EXPECT_EQ(t.pi2_rank, 1);
  EXPECT_EQ(t.simply_connected, true);
}

TEST(Topology, Pi2AndTorsion) {
  SasakiSeed s = SasakiSeed::ke(2, 3);
  s.simply_connected = true;
  s.pi2_rank = 4;
  const TopologySummary t = topology_summary(s, join::validate_join(s, {1, 1}, {2, 1}));
  EXPECT_EQ(t.pi2_rank, 5);
  EXPECT_FALSE(t.h4_torsion_order.has_value());
  EXPECT_EQ(h4_torsion(JoinSpec{2, 1, 3, 1, false}), 12);

  const SasakiSeed bare = SasakiSeed::ke(2, 3);
  const TopologySummary u = topology_summary(bare, join::validate_join(bare, {1, 1}, {2, 1}));
  EXPECT_FALSE(u.pi2_rank.has_value());
  EXPECT_FALSE(u.cohomology_ring.has_value());
}

TEST(Topology, TorsionPerpInvariant) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const JoinSpec j{static_cast<Int>(rng() % 9) + 1, static_cast<Int>(rng() % 9) + 1, static_cast<Int>(rng() % 30) + 1,
                     static_cast<Int>(rng() % 30) + 1, false};
    EXPECT_EQ(h4_torsion(j), h4_torsion(join::perp_involution(j).join));
  }
}

TEST(Catalogs, DeterministicAcrossThreads) {
  const BigRational prec(BigInt(1), BigInt(1000000));
  const auto a = ypq_catalog(15, prec, 1);
  const auto b = ypq_catalog(15, prec, 6);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].p, b[i].p);
    EXPECT_EQ(a[i].q, b[i].q);
    EXPECT_EQ(a[i].fano_index, b[i].fano_index);
  }
  const auto kp = brieskorn_kp_catalog(12, JoinChoice{IntPair{3, 1}, std::nullopt}, 4);
  for (const auto& r : kp) {
    ASSERT_TRUE(r.join.has_value());
    if (r.link.fano_index <= 0) EXPECT_EQ(r.join->se_status, "unknown");
  }
}

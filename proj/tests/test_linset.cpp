#include <gtest/gtest.h>

#include <algorithm>

#include "linsets/families.hpp"
#include "linsets/linset.hpp"
#include "linsets/verify.hpp"
#include "oracles.hpp"

using namespace linsets;

TEST(ProjPoint, NormalFormAndIndex) {
  const GaloisField F(5);
  EXPECT_EQ(ProjPoint::normalize(F, 2, 4), ProjPoint::at(2));
  EXPECT_EQ(ProjPoint::normalize(F, 0, 3), ProjPoint::inf());
  EXPECT_THROW(ProjPoint::normalize(F, 0, 0), PreconditionError);
  for (std::uint64_t i = 0; i <= 5; ++i) EXPECT_EQ(ProjPoint::from_index(F, i).index(F), i);
  EXPECT_EQ(ProjPoint::inf().to_string(), "(0,1)");
  EXPECT_EQ(ProjPoint::at(3).to_string(), "(1,3)");
}

TEST(WeightEnumerator, TextAndIdentity) {
  WeightEnumerator e;
  e.add(2, 2);
  e.add(1, 9);
  e.add(3, 0);
  EXPECT_EQ(e.to_string(), "2X^2 + 9X");
  EXPECT_EQ(e.size(), 11u);
  EXPECT_TRUE(e.identity_holds(2, 4));
  EXPECT_FALSE(e.identity_holds(2, 5));
  EXPECT_EQ(WeightEnumerator().to_string(), "0");
}

TEST(LinearSet, RankWeightsAgreeWithTwoBruteForceOracles) {
  for (auto [p, t] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}}) {
    const FieldTower T = FieldTower::make(p, 1, t);
    const GaloisField& top = T.field(Level::qn);
    Sampler rnd(100 + p + t);
    for (unsigned d = 1; d <= 2 * T.n(); d += 2) {
      const LinearSet L(rnd.subspace(top, T.field(Level::q), d, 2));
      const auto w = point_weights(L, Exec::serial);
      const auto byMembers = oracle::weights_by_members(L);
      for (std::uint64_t i = 0; i < w.size(); ++i) {
        ASSERT_EQ(w[i], byMembers[i]) << i;
        ASSERT_EQ(w[i], weight_oracle(L, ProjPoint::from_index(top, i))) << i;
      }
      EXPECT_TRUE(enumerator_from_weights(w).identity_holds(T.q(), d));
    }
  }
}

TEST(LinearSet, ParallelScanEqualsSerialScan) {
  const FieldTower T = FieldTower::make(3, 1, 3);
  Sampler rnd(8);
  const LinearSet L(rnd.subspace(T.field(Level::qn), T.field(Level::q), 6, 2));
  EXPECT_EQ(point_weights(L, Exec::serial), point_weights(L, Exec::parallel));
}

TEST(LinearSet, ScanBound) {
  const FieldTower T = FieldTower::make(2, 1, 3);
  const LinearSet L = LinearSet::product(FqSubspace::whole(T.field(Level::qn), T.field(Level::q)),
                                         FqSubspace::whole(T.field(Level::qn), T.field(Level::q)));
  EXPECT_THROW(point_weights(L, Exec::serial, 64), BoundExceeded);
  EXPECT_NO_THROW(point_weights(L, Exec::serial, 65));
}

TEST(XiBasis, SplitJoinRoundTrip) {
  const FieldTower T = FieldTower::make(3, 1, 2);
  const GaloisField& top = T.field(Level::qn);
  const XiBasis X(T, 10);
  for (Elem z = 0; z < top.size(); ++z) {
    const auto [c0, c1] = X.split(z);
    ASSERT_LT(c0, 9u);
    ASSERT_LT(c1, 9u);
    ASSERT_EQ(X.join(c0, c1), z);
  }
  EXPECT_EQ(top.mul(10, 10), top.add(top.mul(X.A(), 10), X.B()));
  EXPECT_THROW(XiBasis(T, 4), PreconditionError);
}

TEST(WeightCriteria, KernelAndIntersectionFormulasMatchTheOracle) {
  const FieldTower T = FieldTower::make(2, 1, 3);
  const GaloisField& top = T.field(Level::qn);
  const GaloisField& mid = T.field(Level::qt);
  Sampler rnd(21);
  for (int k = 0; k < 8; ++k) {
    const LinPoly f = rnd.linpoly(mid, T.field(Level::q)), g = rnd.linpoly(mid, T.field(Level::q));
    const Elem xi = rnd.outside(top, 8), eta = k % 2 ? xi : rnd.outside(top, 8);
    const FqSubspace S = make_S_f(T, f, xi), Tt = make_S_f(T, g, eta);
    const LinearSet L = LinearSet::product(S, Tt);
    for (Elem a = 1; a < top.size(); ++a) {
      const unsigned o = weight_oracle(L, ProjPoint::at(a));
      ASSERT_EQ(weight_via_kernel(T, f, xi, g, eta, a), o);
      ASSERT_EQ(weight_via_alpha(S, Tt, a), o);
    }
  }
}

TEST(HeavyPoints, SubspaceMethodMatchesScanIncludingSwappedBlocks) {
  const FieldTower T = FieldTower::make(2, 1, 3);
  const GaloisField& top = T.field(Level::qn);
  Sampler rnd(31);
  for (auto [ds, dt] : {std::pair{4u, 2u}, {2u, 4u}, {3u, 3u}, {2u, 2u}}) {
    const FqSubspace S = rnd.subspace(top, T.field(Level::q), ds), Tt = rnd.subspace(top, T.field(Level::q), dt);
    const LinearSet L = LinearSet::product(S, Tt);
    const auto w = point_weights(L, Exec::serial);
    const std::uint64_t excluded = dt <= ds ? 0 : top.size();
    for (unsigned i = 1; i <= std::min(ds, dt); ++i) {
      std::vector<std::uint64_t> want, got;
      for (std::uint64_t k = 0; k < w.size(); ++k)
        if (k != excluded && w[k] >= i) want.push_back(k);
      for (const auto& P : points_weight_at_least(S, Tt, i)) got.push_back(P.index(top));
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, want) << ds << "," << dt << " i=" << i;
    }
  }
}

TEST(HeavyPoints, TwoHeavyPointsCheckMatchesScan) {
  const FieldTower T = FieldTower::make(2, 1, 4);
  const GaloisField& top = T.field(Level::qn);
  Sampler rnd(41);
  int yes = 0;
  for (int k = 0; k < 12; ++k) {
    const FqSubspace S = rnd.subspace(top, T.field(Level::q), 2 + rnd.below(3));
    const FqSubspace Tt = rnd.subspace(top, T.field(Level::q), 2 + rnd.below(2));
    const auto w = point_weights(LinearSet::product(S, Tt), Exec::serial);
    const bool direct = std::count_if(w.begin(), w.end(), [](auto x) { return x > 1; }) == 2;
    yes += direct;
    EXPECT_EQ(two_heavy_points_check(S, Tt), direct);
  }
  EXPECT_GT(yes, 0);
}

TEST(RankWeight, PointRouteEqualsEntrySpan) {
  const FieldTower T = FieldTower::make(3, 1, 2);
  const GaloisField& top = T.field(Level::qn);
  Sampler rnd(51);
  const FqSubspace S = rnd.subspace(top, T.field(Level::q), 3), Tt = rnd.subspace(top, T.field(Level::q), 2);
  for (Elem x0 = 0; x0 < top.size(); x0 += 5)
    for (Elem x1 = 0; x1 < top.size(); x1 += 7) {
      if (x0 == 0 && x1 == 0) continue;
      ASSERT_EQ(rank_weight(S, Tt, x0, x1), rank_weight_direct(S, Tt, x0, x1));
    }
}

#include <gtest/gtest.h>

#include <set>

#include "linsets/subspace.hpp"
#include "linsets/verify.hpp"
#include "oracles.hpp"

using namespace linsets;

TEST(GaussianBinomial, MatchesOrderedBasisCount) {
  for (std::uint64_t b : {2, 3, 4, 5})
    for (unsigned d = 0; d <= 6; ++d)
      for (unsigned i = 0; i <= d + 1; ++i) EXPECT_EQ(gaussian_binomial(d, i, b), oracle::gaussian(d, i, b));
}

TEST(SubspaceEnumerator, VisitsEverySubspaceOnce) {
  const FieldTower T = FieldTower::make(2, 1, 2);
  const GaloisField& top = T.field(Level::qn);
  const FqSubspace W = FqSubspace::whole(top, T.field(Level::q));
  for (unsigned i = 0; i <= 4; ++i) {
    SubspaceEnumerator it(W, i);
    std::set<std::string> seen;
    while (auto V = it.next()) {
      EXPECT_EQ(V->dim(), i);
      EXPECT_TRUE(seen.insert(V->to_string()).second);
    }
    EXPECT_EQ(seen.size(), oracle::gaussian(4, i, 2)) << i;
  }
}

TEST(SubspaceEnumerator, StaysInsideAProperSubspaceOverF3) {
  const FieldTower T = FieldTower::make(3, 1, 2);
  const GaloisField& top = T.field(Level::qn);
  Sampler rnd(5);
  const FqSubspace U = rnd.subspace(top, T.field(Level::q), 3);
  SubspaceEnumerator it(U, 2);
  std::uint64_t n = 0;
  while (auto V = it.next()) {
    ++n;
    for (Elem x : V->basis_elements()) ASSERT_TRUE(U.member(x));
  }
  EXPECT_EQ(n, oracle::gaussian(3, 2, 3));
}

TEST(SubspaceEnumerator, BudgetAndRange) {
  const FieldTower T = FieldTower::make(2, 1, 3);
  const FqSubspace W = FqSubspace::whole(T.field(Level::qn), T.field(Level::q));
  EXPECT_THROW(SubspaceEnumerator(W, 7), PreconditionError);
  EXPECT_THROW(SubspaceEnumerator(W, 3, 10), BoundExceeded);
  EXPECT_NO_THROW(SubspaceEnumerator(W, 3, 1395));
}

TEST(FqSubspace, IntersectionAndSumAgreeWithMembership) {
  const FieldTower T = FieldTower::make(3, 1, 2);
  const GaloisField& top = T.field(Level::qn);
  const GaloisField& Fq = T.field(Level::q);
  Sampler rnd(11);
  for (int k = 0; k < 20; ++k) {
    const FqSubspace A = rnd.subspace(top, Fq, 1 + rnd.below(4)), B = rnd.subspace(top, Fq, 1 + rnd.below(4));
    const FqSubspace I = A.intersect(B), S = A.sum(B);
    std::uint64_t both = 0;
    for (Elem x = 0; x < top.size(); ++x) {
      const bool in = A.member(x) && B.member(x);
      both += in;
      ASSERT_EQ(I.member(x), in);
      if (A.member(x) || B.member(x)) ASSERT_TRUE(S.member(x));
    }
    EXPECT_EQ(both, I.cardinality());
    EXPECT_EQ(S.dim() + I.dim(), A.dim() + B.dim());
  }
}

TEST(FqSubspace, ScalarCosetIsTheImageUnderMultiplication) {
  const FieldTower T = FieldTower::make(2, 1, 3);
  const GaloisField& top = T.field(Level::qn);
  Sampler rnd(3);
  const FqSubspace A = rnd.subspace(top, T.field(Level::q), 3);
  const Elem a = 19;
  const FqSubspace aA = A.scalar_coset(a);
  A.for_each_member([&](const Vector& v) { EXPECT_TRUE(aA.member(top.mul(a, v[0]))); });
  EXPECT_EQ(aA.dim(), A.dim());
  EXPECT_THROW(A.scalar_coset(0), PreconditionError);
}

TEST(FqSubspace, TextRoundTripIncludingZeroSpace) {
  const FieldTower T = FieldTower::make(3, 1, 2);
  const GaloisField& top = T.field(Level::qn);
  Sampler rnd(1);
  for (unsigned d = 0; d <= 4; ++d) {
    const FqSubspace A = rnd.subspace(top, T.field(Level::q), d, 2);
    const FqSubspace B = FqSubspace::parse(top, T.field(Level::q), 2, A.to_string());
    EXPECT_EQ(A, B);
  }
  EXPECT_THROW(FqSubspace::parse(top, T.field(Level::q), 1, "1,2,x"), ParseError);
}

TEST(FqSubspace, MixedLevelsRejected) {
  const FieldTower T = FieldTower::make(2, 1, 2);
  const FqSubspace A = FqSubspace::whole(T.field(Level::qn), T.field(Level::q));
  const FqSubspace B = FqSubspace::whole(T.field(Level::qt), T.field(Level::q));
  EXPECT_THROW(A.intersect(B), LevelMismatch);
}

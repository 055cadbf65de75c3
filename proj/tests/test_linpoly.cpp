#include <gtest/gtest.h>

#include <numeric>

#include "linsets/linpoly.hpp"
#include "linsets/verify.hpp"
#include "oracles.hpp"

using namespace linsets;

namespace {

Elem eval_naive(const LinPoly& f, Elem x) {
  const auto& F = f.level();
  Elem acc = 0;
  std::uint64_t e = 1;
  for (unsigned i = 0; i < f.degree(); ++i, e *= f.base().size()) acc = F.add(acc, F.mul(f.coeff(i), F.pow(x, e)));
  return acc;
}

}  // namespace

TEST(LinPoly, EvaluationMatchesPowerSum) {
  for (auto [p, t] : {std::pair{2u, 3u}, {3u, 2u}, {2u, 4u}}) {
    const FieldTower T = FieldTower::make(p, 1, t);
    const GaloisField& mid = T.field(Level::qt);
    Sampler rnd(p * 10 + t);
    for (int k = 0; k < 10; ++k) {
      const LinPoly f = rnd.linpoly(mid, T.field(Level::q));
      for (Elem x = 0; x < mid.size(); ++x) ASSERT_EQ(f(x), eval_naive(f, x));
    }
  }
}

TEST(LinPoly, KernelDimensionMatchesRootCount) {
  const FieldTower T = FieldTower::make(3, 1, 3);
  const GaloisField& mid = T.field(Level::qt);
  Sampler rnd(7);
  for (int k = 0; k < 30; ++k) {
    const LinPoly f = rnd.linpoly(mid, T.field(Level::q));
    const auto roots = oracle::root_count(f);
    EXPECT_EQ(oracle::log_b(roots, 3), f.kernel_dim());
    EXPECT_EQ(f.kernel_dim() + f.image_dim(), 3u);
    EXPECT_EQ(f.kernel().cardinality(), roots);
    EXPECT_EQ(f.is_invertible(), roots == 1);
  }
}

TEST(LinPoly, CompositionAndScaling) {
  const FieldTower T = FieldTower::make(2, 1, 4);
  const GaloisField& F = T.field(Level::qt);
  Sampler rnd(9);
  const LinPoly f = rnd.linpoly(F, T.field(Level::q)), g = rnd.linpoly(F, T.field(Level::q));
  const Elem c = 7;
  const LinPoly fg = f.compose(g), pre = f.pre_scale(c), post = f.post_scale(c), sum = f + g, diff = f - g;
  for (Elem x = 0; x < F.size(); ++x) {
    EXPECT_EQ(fg(x), f(g(x)));
    EXPECT_EQ(pre(x), f(F.mul(c, x)));
    EXPECT_EQ(post(x), F.mul(c, f(x)));
    EXPECT_EQ(sum(x), F.add(f(x), g(x)));
    EXPECT_EQ(diff(x), F.sub(f(x), g(x)));
  }
}

TEST(LinPoly, FromMapInterpolatesAnyLinearMap) {
  const FieldTower T = FieldTower::make(3, 1, 2);
  const GaloisField& F = T.field(Level::qt);
  Sampler rnd(4);
  const LinPoly f = rnd.linpoly(F, T.field(Level::q));
  // A non-standard basis and its images.
  const std::vector<Elem> basis{5, 4};
  const std::vector<Elem> images{f(5), f(4)};
  EXPECT_EQ(LinPoly::from_map(F, T.field(Level::q), basis, images), f);
}

TEST(LinPoly, TraceMatchesTheTraceMap) {
  const FieldTower T = FieldTower::make(2, 2, 3);
  const LinPoly tr = LinPoly::trace(T.field(Level::qt), T.field(Level::q));
  for (Elem x = 0; x < 64; ++x) EXPECT_EQ(tr(x), T.trace_qt(x));
}

TEST(LinPoly, TextRoundTrip) {
  const FieldTower T = FieldTower::make(3, 1, 3);
  const GaloisField& F = T.field(Level::qt);
  const GaloisField& Fq = T.field(Level::q);
  Sampler rnd(2);
  for (int k = 0; k < 20; ++k) {
    const LinPoly f = rnd.linpoly(F, Fq);
    EXPECT_EQ(LinPoly::parse(F, Fq, f.to_string()), f) << f.to_string();
  }
  EXPECT_EQ(LinPoly::zero(F, Fq).to_string(), "0");
  EXPECT_EQ(LinPoly::parse(F, Fq, "X^q"), LinPoly::monomial(F, Fq, 1));
  EXPECT_EQ(LinPoly::parse(F, Fq, "X^q2 + 2*X"), LinPoly::monomial(F, Fq, 2) + LinPoly::monomial(F, Fq, 0, 2));
  EXPECT_THROW(LinPoly::parse(F, Fq, "X^^q"), ParseError);
  EXPECT_THROW(LinPoly::parse(F, Fq, "99*X"), ParseError);
}

TEST(LinPoly, LevelMismatchRejected) {
  const FieldTower T = FieldTower::make(2, 1, 3);
  const LinPoly f = LinPoly::identity(T.field(Level::qt), T.field(Level::q));
  const LinPoly g = LinPoly::identity(T.field(Level::qn), T.field(Level::q));
  EXPECT_THROW(f + g, LevelMismatch);
  EXPECT_THROW(f.compose(g), LevelMismatch);
  EXPECT_THROW(f.eval(T.element(Level::qn, 3)), LevelMismatch);
}

TEST(SubspacePolynomial, RootsAreExactlyTheSubspace) {
  for (auto [p, t, s] : {std::tuple{2u, 3u, 1u}, {2u, 3u, 2u}, {3u, 2u, 1u}, {2u, 5u, 3u}}) {
    const FieldTower T = FieldTower::make(p, 1, t);
    const GaloisField& F = T.field(Level::qt);
    Sampler rnd(p + t + s);
    for (unsigned k = 1; k <= std::min(3u, t); ++k) {
      const FqSubspace W = rnd.subspace(F, T.field(Level::q), k);
      const auto c = subspace_polynomial_coeffs(W, s);
      ASSERT_EQ(c.size(), k + 1);
      EXPECT_EQ(c.back(), 1u);
      const LinPoly P = subspace_polynomial(W, s);
      for (Elem x = 0; x < F.size(); ++x) ASSERT_EQ(P(x) == 0, W.member(x)) << x;
    }
  }
}

TEST(SubspacePolynomial, NormConditionHoldsForSplittingPolynomials) {
  for (auto [p, t] : {std::pair{2u, 3u}, {3u, 3u}, {2u, 4u}, {3u, 2u}}) {
    const FieldTower T = FieldTower::make(p, 1, t);
    const GaloisField& F = T.field(Level::qt);
    Sampler rnd(p * t);
    for (unsigned s = 1; s < t; ++s) {
      if (std::gcd(s, t) != 1) continue;
      for (unsigned k = 1; k < t; ++k) {
        auto c = subspace_polynomial_coeffs(rnd.subspace(F, T.field(Level::q), k), s);
        for (auto& x : c) x = F.neg(x);
        EXPECT_TRUE(normcond_check(F, T.field(Level::q), c, s)) << p << " " << t << " " << s << " " << k;
      }
    }
  }
}

TEST(SubspacePolynomial, NormConditionDetectsNonSplitting) {
  // a0 X - X^q over F_9: needs N(a0) = (-1)^(t(k+1)) = 1.
  const FieldTower T = FieldTower::make(3, 1, 2);
  const GaloisField& F = T.field(Level::qt);
  for (Elem a0 = 1; a0 < F.size(); ++a0) {
    const std::vector<Elem> c{a0, F.neg(1)};
    EXPECT_EQ(normcond_check(F, T.field(Level::q), c, 1), T.norm_qt(a0) == 1) << a0;
  }
  EXPECT_THROW(normcond_check(F, T.field(Level::q), std::vector<Elem>{1, 1}, 1), PreconditionError);
}

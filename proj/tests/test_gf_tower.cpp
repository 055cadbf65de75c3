#include <gtest/gtest.h>

#include <set>
#include <tuple>

#include "linsets/gf_tower.hpp"

using namespace linsets;

namespace {

struct Shape {
  std::uint32_t p;
  unsigned e, t;
};

class TowerAxioms : public ::testing::TestWithParam<Shape> {};

}  // namespace

TEST_P(TowerAxioms, TableProductMatchesSchoolbookOnEveryLevel) {
  const auto [p, e, t] = GetParam();
  const FieldTower T = FieldTower::make(p, e, t);
  for (Level lv : {Level::q, Level::qt, Level::qn}) {
    const GaloisField& F = T.field(lv);
    if (F.size() > 256) continue;
    for (Elem a = 0; a < F.size(); ++a)
      for (Elem b = 0; b < F.size(); ++b) ASSERT_EQ(F.mul(a, b), F.mul_schoolbook(a, b)) << a << "*" << b;
  }
}

TEST_P(TowerAxioms, NoZeroDivisorsSoEveryModulusIsIrreducible) {
  const auto [p, e, t] = GetParam();
  const FieldTower T = FieldTower::make(p, e, t);
  const GaloisField& F = T.field(Level::qn);
  if (F.size() > 1024) GTEST_SKIP();
  for (Elem a = 1; a < F.size(); ++a)
    for (Elem b = 1; b < F.size(); ++b) ASSERT_NE(F.mul_schoolbook(a, b), 0u);
}

TEST_P(TowerAxioms, FieldLaws) {
  const auto [p, e, t] = GetParam();
  const FieldTower T = FieldTower::make(p, e, t);
  const GaloisField& F = T.field(Level::qn);
  const Elem step = F.size() > 200 ? F.size() / 97 : 1;
  for (Elem a = 0; a < F.size(); a += step) {
    EXPECT_EQ(F.add(a, F.neg(a)), 0u);
    if (a) EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
    for (Elem b = 0; b < F.size(); b += step) {
      EXPECT_EQ(F.add(a, b), F.add(b, a));
      const Elem c = (a + 3 * b + 1) % F.size();
      EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
      EXPECT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
    }
  }
}

TEST_P(TowerAxioms, SubfieldsAreIndexPrefixes) {
  const auto [p, e, t] = GetParam();
  const FieldTower T = FieldTower::make(p, e, t);
  const GaloisField& top = T.field(Level::qn);
  for (Level lv : {Level::prime, Level::q, Level::qt}) {
    const GaloisField& S = T.field(lv);
    // Closed under the top-level operations, and agrees with the subfield's own.
    for (Elem a = 0; a < S.size() && a < 64; ++a)
      for (Elem b = 0; b < S.size() && b < 64; ++b) {
        ASSERT_EQ(top.mul(a, b), S.mul(a, b));
        ASSERT_EQ(top.add(a, b), S.add(a, b));
      }
    // x is in the subfield iff x^|S| = x.
    for (Elem x = 0; x < top.size(); x += top.size() > 4096 ? 37 : 1)
      ASSERT_EQ(top.pow(x, S.size()) == x, x < S.size()) << x;
  }
}

TEST_P(TowerAxioms, TraceAndNormLandInTheSubfieldAndAreAdditiveAndMultiplicative) {
  const auto [p, e, t] = GetParam();
  const FieldTower T = FieldTower::make(p, e, t);
  const GaloisField& mid = T.field(Level::qt);
  const GaloisField& top = T.field(Level::qn);
  for (Elem x = 0; x < mid.size(); ++x) {
    ASSERT_LT(T.trace_qt(x), T.q());
    ASSERT_LT(T.norm_qt(x), T.q());
    const Elem y = (x * 7 + 3) % mid.size();
    ASSERT_EQ(T.trace_qt(mid.add(x, y)), mid.add(T.trace_qt(x), T.trace_qt(y)));
    ASSERT_EQ(T.norm_qt(mid.mul(x, y)), mid.mul(T.norm_qt(x), T.norm_qt(y)));
  }
  for (Elem x = 0; x < top.size(); x += top.size() > 4096 ? 17 : 1) {
    ASSERT_LT(T.trace_qn(x), mid.size());
    ASSERT_LT(T.norm_qn(x), mid.size());
  }
  // The relative trace is onto F_q.
  std::set<Elem> image;
  for (Elem x = 0; x < mid.size(); ++x) image.insert(T.trace_qt(x));
  EXPECT_EQ(image.size(), T.q());
}

TEST_P(TowerAxioms, XiSatisfiesItsQuadraticAndLiesOutsideTheMiddle) {
  const auto [p, e, t] = GetParam();
  const FieldTower T = FieldTower::make(p, e, t);
  const GaloisField& top = T.field(Level::qn);
  const Elem xi = T.xi().value();
  EXPECT_GE(xi, T.field(Level::qt).size());
  EXPECT_EQ(top.mul(xi, xi), top.add(top.mul(T.xi_A().value(), xi), T.xi_B().value()));
}

TEST_P(TowerAxioms, SerializeRoundTrip) {
  const auto [p, e, t] = GetParam();
  const FieldTower T = FieldTower::make(p, e, t);
  const FieldTower U = FieldTower::parse(T.serialize());
  EXPECT_EQ(U.serialize(), T.serialize());
  EXPECT_EQ(U.q(), T.q());
}

INSTANTIATE_TEST_SUITE_P(SmallTowers, TowerAxioms,
                         ::testing::Values(Shape{2, 1, 2}, Shape{2, 1, 3}, Shape{3, 1, 2}, Shape{2, 2, 2},
                                           Shape{3, 1, 3}, Shape{5, 1, 2}, Shape{2, 1, 5}, Shape{2, 3, 1}),
                         [](const auto& info) {
                           return "p" + std::to_string(info.param.p) + "e" + std::to_string(info.param.e) + "t" +
                                  std::to_string(info.param.t);
                         });

TEST(FieldTower, CoordinatesAreBaseDigits) {
  const FieldTower T = FieldTower::make(3, 1, 2);
  const GaloisField& top = T.field(Level::qn);
  for (Elem x = 0; x < top.size(); ++x) {
    const auto c = top.coords(x);
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c[0] + 9 * c[1], x);
    EXPECT_EQ(top.from_coords(c), x);
  }
}

TEST(FieldTower, FrobeniusFixesExactlyTheSubfield) {
  const FieldTower T = FieldTower::make(2, 2, 3);
  const GaloisField& mid = T.field(Level::qt);
  for (Elem x = 0; x < mid.size(); ++x) EXPECT_EQ(mid.frobenius(x, 4, 1) == x, x < 4);
  for (Elem x = 0; x < mid.size(); ++x) EXPECT_EQ(mid.frobenius(x, 4, 3), x);
}

TEST(FieldTower, LevelCheckedElementOps) {
  const FieldTower T = FieldTower::make(2, 1, 3);
  const auto a = T.element(Level::qt, 5), b = T.element(Level::qn, 5);
  EXPECT_THROW(a + b, LevelMismatch);
  EXPECT_EQ(T.embed(a, Level::qn), b);
  EXPECT_EQ(T.project(b, Level::qt).value(), a);
  EXPECT_FALSE(T.project(T.element(Level::qn, 9), Level::qt).has_value());
  EXPECT_THROW(T.element(Level::qt, 8), LevelMismatch);
  EXPECT_THROW(T.rel_trace(b), LevelMismatch);
}

TEST(FieldTower, ErrorsAndBounds) {
  EXPECT_THROW(FieldTower::make(4, 1, 2), PreconditionError);
  EXPECT_THROW(FieldTower::make(2, 1, 13), BoundExceeded);
  EXPECT_THROW(FieldTower::parse("2,1"), ParseError);
  EXPECT_THROW(FieldTower::parse("x,1,2;0,1;1,1,1;1,1,1"), ParseError);
  const FieldTower T = FieldTower::make(2, 1, 6);
  EXPECT_THROW(T.enumerate(Level::qn, 100), BoundExceeded);
  EXPECT_EQ(T.enumerate(Level::qt).size(), 64u);
}

TEST(FieldTower, ReducibleOverrideRejected) {
  // X^2 + 1 = (X + 1)^2 over F_2.
  std::array<std::vector<Elem>, 3> ov{std::vector<Elem>{0, 1}, std::vector<Elem>{1, 0, 1}, std::vector<Elem>{}};
  EXPECT_THROW(FieldTower::make(2, 1, 2, ov), PreconditionError);
}

TEST(Polynomials, IrreducibilityMatchesRootTestForLowDegree) {
  const GaloisField F(3);
  // Degree 2 and 3 polynomials are irreducible iff they have no root.
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b)
      for (Elem c = 0; c < 3; ++c) {
        const poly::Poly f{c, b, a, 1};
        bool root = false;
        for (Elem x = 0; x < 3; ++x) root |= (x * x * x + a * x * x + b * x + c) % 3 == 0;
        EXPECT_EQ(poly::is_irreducible(F, f), !root) << a << b << c;
      }
}

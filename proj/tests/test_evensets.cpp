#include <gtest/gtest.h>

#include <set>

#include "linsets/evensets.hpp"
#include "linsets/families.hpp"
#include "linsets/verify.hpp"
#include "oracles.hpp"

using namespace linsets;

namespace {

// F_{2^s} as the base level of a degree-1 tower.
FieldTower binary(unsigned s) { return FieldTower::make(2, s, 1); }

// Incidence by the dot product, independent of points_on_line.
bool incident(const GaloisField& F, const PlanePoint& l, const PlanePoint& P) {
  return F.add(F.add(F.mul(l.x, P.x), F.mul(l.y, P.y)), F.mul(l.z, P.z)) == 0;
}

void check_plane(unsigned s) {
  const FieldTower T = binary(s);
  const GaloisField& F = T.field(Level::q);
  const std::uint32_t Q = F.size();
  const auto L = lines(F);
  ASSERT_EQ(L.size(), plane_size(Q));
  std::vector<std::uint64_t> on(plane_size(Q), 0);
  for (const auto& l : L) {
    const auto pts = points_on_line(F, l);
    ASSERT_EQ(pts.size(), Q + 1);
    std::set<std::uint64_t> uniq(pts.begin(), pts.end());
    ASSERT_EQ(uniq.size(), pts.size());
    for (auto i : pts) {
      ASSERT_TRUE(incident(F, l, PlanePoint::from_index(Q, i)));
      ++on[i];
    }
  }
  for (auto c : on) EXPECT_EQ(c, Q + 1u);
}

}  // namespace

TEST(Plane, PointIndexRoundTrip) {
  const FieldTower T = binary(2);
  const GaloisField& F = T.field(Level::q);
  for (std::uint64_t i = 0; i < plane_size(4); ++i) EXPECT_EQ(PlanePoint::from_index(4, i).index(4), i);
  EXPECT_EQ(PlanePoint::normalize(F, 0, 2, 3).y, 1u);
  EXPECT_THROW(PlanePoint::normalize(F, 0, 0, 0), PreconditionError);
}

TEST(Plane, FanoPlane) { check_plane(1); }
TEST(Plane, PlaneOfOrderFour) { check_plane(2); }
TEST(Plane, PlaneOfOrderEight) { check_plane(3); }

TEST(Plane, OddOrderAndBound) {
  EXPECT_THROW(lines(GaloisField(3)), PreconditionError);
  const FieldTower T = binary(4);
  EXPECT_THROW(lines(T.field(Level::q), 100), BoundExceeded);
}

TEST(Plane, LineIntersectionsSerialEqualsParallel) {
  const FieldTower T = binary(4);
  const GaloisField& F = T.field(Level::q);
  std::vector<bool> member(plane_size(16));
  Sampler rnd(12);
  for (std::size_t i = 0; i < member.size(); ++i) member[i] = rnd.below(3) == 0;
  const auto a = line_intersections(F, member, Exec::serial), b = line_intersections(F, member, Exec::parallel);
  EXPECT_EQ(a, b);
  const auto L = lines(F);
  for (std::size_t k = 0; k < L.size(); k += 11) {
    std::uint32_t n = 0;
    for (std::uint64_t i = 0; i < member.size(); ++i) n += member[i] && incident(F, L[k], PlanePoint::from_index(16, i));
    EXPECT_EQ(a[k], n);
  }
}

TEST(EvenSets, ZeroMapGivesTwoFullLineHalves) {
  // g = 0: the affine points of Z = 0 plus the non-direction points of X = 0.
  const FieldTower T = FieldTower::make(2, 1, 2);
  const auto rep = translation_even_set(LinPoly::zero(T.field(Level::qt), T.field(Level::prime)));
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.size, 8u);
  EXPECT_EQ(rep.spectrum_sizes(), (std::set<std::uint32_t>{0, 2, 4}));
}

TEST(EvenSets, RandomLinearMapsOnF32AreEven) {
  const FieldTower T = FieldTower::make(2, 1, 5);
  const GaloisField& F = T.field(Level::qt);
  Sampler rnd(32);
  for (int k = 0; k < 5; ++k) {
    const LinPoly g = rnd.linpoly(F, T.field(Level::prime));
    const auto rep = translation_even_set(g);
    EXPECT_TRUE(rep.ok()) << g.to_string();
    EXPECT_EQ(rep.line_count(), plane_size(32));
    for (const auto& [k2, n] : rep.spectrum) EXPECT_EQ(k2 % 2, 0u);
  }
}

TEST(EvenSets, NonBinaryBaseRejected) {
  const FieldTower T = FieldTower::make(2, 2, 2);
  EXPECT_THROW(translation_even_set(LinPoly::identity(T.field(Level::qt), T.field(Level::q))), PreconditionError);
}

TEST(EvenSets, GraphMapPreservesTheEnumerator) {
  const FieldTower T = FieldTower::make(2, 1, 2);
  const GaloisField& top = T.field(Level::qn);
  Sampler rnd(8);
  for (int k = 0; k < 8; ++k) {
    const LinearSet L(rnd.subspace(top, T.field(Level::q), 4, 2));
    const auto w = point_weights(L, Exec::serial);
    if (std::all_of(w.begin(), w.end(), [](unsigned x) { return x > 0; })) continue;
    const LinPoly g = graph_map(L);
    EXPECT_EQ(enumerator_from_weights(point_weights(graph_set(g), Exec::serial)).to_string(),
              enumerator_from_weights(w).to_string());
  }
}

TEST(EvenSets, IteratedSublineAtSixteen) {
  const auto c = verify_cor_evenset(2);
  EXPECT_TRUE(c.pass());
  EXPECT_EQ(c.report.size, 22u);
  EXPECT_EQ(c.report.spectrum_sizes(), (std::set<std::uint32_t>{0, 2, 4, 6}));
}

TEST(EvenSets, ScatteredProducts) {
  const auto a = scattered_even_set(2), b = scattered_even_set(3);
  EXPECT_TRUE(a.pass());
  EXPECT_TRUE(b.pass());
  EXPECT_EQ(b.report.size, 78u);
  EXPECT_EQ(b.report.spectrum_sizes(), (std::set<std::uint32_t>{0, 2, 8, 14}));
  EXPECT_EQ(a.report.spectrum, verify_cor_evenset(2).report.spectrum);
}

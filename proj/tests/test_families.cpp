#include <gtest/gtest.h>

#include "linsets/families.hpp"
#include "linsets/verify.hpp"
#include "oracles.hpp"

using namespace linsets;

namespace {

WeightEnumerator scan(const LinearSet& L) { return enumerator_from_weights(oracle::weights_by_members(L)); }

}  // namespace

struct PinnedCase {
  std::uint32_t p;
  unsigned t;
  const char* family;
  const char* xi;
  const char* enumerator;
};

class PinnedFamilies : public ::testing::TestWithParam<PinnedCase> {};

TEST_P(PinnedFamilies, EnumeratorAndRulesHold) {
  const auto c = GetParam();
  const FieldTower T = FieldTower::make(c.p, 1, c.t);
  const Family fam = parse_family(T, c.family, XiChoice::parse(c.xi));
  const FamilyReport rep = verify_family(fam, Exec::serial);
  EXPECT_EQ(rep.enumerator.to_string(), c.enumerator);
  EXPECT_EQ(scan(fam.linear_set()).to_string(), c.enumerator);
  EXPECT_TRUE(rep.identity_ok);
  for (const auto& r : rep.rules) EXPECT_EQ(r.violations, 0u) << r.text;
  EXPECT_TRUE(rep.pass());
}

INSTANTIATE_TEST_SUITE_P(Known, PinnedFamilies,
                         ::testing::Values(PinnedCase{3, 3, "trace-trace", "tower", "4X^3 + 312X"},
                                           PinnedCase{3, 3, "monomial:s=1", "auto", "4X^3 + 312X"},
                                           PinnedCase{3, 3, "xq-trace", "tower", "2X^3 + 6X^2 + 314X"},
                                           PinnedCase{3, 3, "f-f:f=X^q", "tower", "4X^3 + 24X^2 + 216X"},
                                           PinnedCase{3, 3, "psi-product:f=X^q", "tower", "2X^3 + 338X"},
                                           PinnedCase{2, 5, "lp:s=1", "tower", "3X^5 + 150X^2 + 480X"}));

TEST(Families, RealizedRegionCountsMatchTheScan) {
  const FieldTower T = FieldTower::make(3, 1, 3);
  const Family fam = parse_family(T, "xq-trace");
  const auto rep = verify_family(fam, Exec::parallel);
  const auto w = oracle::weights_by_members(fam.linear_set());
  std::map<Region, std::map<unsigned, std::uint64_t>> want;
  for (std::uint64_t i = 0; i < w.size(); ++i)
    ++want[region_of(T, i)][w[i]];
  EXPECT_EQ(rep.realized, want);
}

TEST(Families, RegionsPartitionTheLine) {
  const FieldTower T = FieldTower::make(2, 1, 2);
  std::map<Region, std::uint64_t> n;
  for (std::uint64_t i = 0; i <= 16; ++i) ++n[region_of(T, i)];
  EXPECT_EQ(n[Region::one_zero], 1u);
  EXPECT_EQ(n[Region::zero_one], 1u);
  EXPECT_EQ(n[Region::base_star], 1u);
  EXPECT_EQ(n[Region::middle], 2u);
  EXPECT_EQ(n[Region::outside], 12u);
}

TEST(Families, HypothesesAreEnforced) {
  const FieldTower T4 = FieldTower::make(2, 1, 4);
  EXPECT_THROW(parse_family(T4, "monomial:s=2"), PreconditionError);
  EXPECT_THROW(parse_family(T4, "lp:s=1"), PreconditionError);
  const FieldTower T3 = FieldTower::make(2, 1, 3);
  EXPECT_THROW(parse_family(T3, "psi-product:f=X^q + X"), PreconditionError);
  EXPECT_THROW(parse_family(T3, "no-such-family"), ParseError);
  EXPECT_THROW(parse_family(T3, "monomial:s"), ParseError);
  const FieldTower T5 = FieldTower::make(3, 1, 5);
  EXPECT_THROW(parse_family(T5, "lp:s=1,delta=1"), PreconditionError);  // N(1)^2 = 1
}

TEST(Families, CanonicalTextRoundTrips) {
  const FieldTower T = FieldTower::make(2, 1, 5);
  for (const char* spec : {"trace-trace", "monomial:s=2", "lp:s=2", "f-f:f=X^q", "xq-trace"}) {
    const Family a = parse_family(T, spec);
    const Family b = parse_family(T, a.text);
    EXPECT_EQ(a.text, b.text);
    EXPECT_EQ(a.S(), b.S());
    EXPECT_EQ(a.T(), b.T());
  }
  EXPECT_EQ(XiChoice::parse("auto").mode, XiChoice::Mode::automatic);
  EXPECT_EQ(XiChoice::parse("17").value, 17u);
  EXPECT_THROW(XiChoice::parse("x17"), ParseError);
}

TEST(Relation, AgreesWithDirectCountOfHeavyPoints) {
  int yes = 0, no = 0;
  for (auto [p, t] : {std::pair{2u, 3u}, {3u, 2u}, {3u, 3u}}) {
    const FieldTower T = FieldTower::make(p, 1, t);
    const GaloisField& top = T.field(Level::qn);
    const GaloisField& mid = T.field(Level::qt);
    const GaloisField& Fq = T.field(Level::q);
    const Elem xi = T.xi().value();
    Sampler rnd(77 + p + t);
    for (int k = 0; k < 8; ++k) {
      LinPoly f = LinPoly::monomial(mid, Fq, 1), g = f;
      Elem eta = xi;
      if (k % 4 == 1) f = LinPoly::trace(mid, Fq);
      if (k % 4 == 2) eta = rnd.outside(top, mid.size());
      if (k % 4 == 3) {
        f = rnd.linpoly(mid, Fq);
        g = rnd.linpoly(mid, Fq);
        eta = rnd.outside(top, mid.size());
      }
      const auto w = oracle::weights_by_members(LinearSet::product(make_S_f(T, g, eta), make_S_f(T, f, xi)));
      const bool direct = std::count_if(w.begin(), w.end(), [](auto x) { return x > 1; }) == 2;
      (direct ? yes : no)++;
      EXPECT_EQ(check_relation_fg(T, f, g, xi, eta, Exec::serial), direct) << p << "," << t << " #" << k;
      EXPECT_EQ(check_relation_fg(T, f, g, xi, eta, Exec::parallel), direct) << p << "," << t << " #" << k;
    }
  }
  EXPECT_GT(yes, 0);
  EXPECT_GT(no, 0);
}

TEST(AvoidingT, MeetsOnlyTheAxisPointsHeavily) {
  const FieldTower T = FieldTower::make(2, 1, 3);
  const GaloisField& top = T.field(Level::qn);
  Sampler rnd(5);
  for (int k = 0; k < 6; ++k) {
    const FqSubspace S = rnd.subspace(top, T.field(Level::q), 3);
    const Elem x = find_disjoint_scalar(S);
    ASSERT_NE(x, 0u);
    EXPECT_EQ(S.intersect(S.scalar_coset(x)).dim(), 0u);
    const FqSubspace Tt = build_avoiding_T(S, 3);
    EXPECT_EQ(Tt.dim(), 3u);
    EXPECT_TRUE(Tt.member(1));
    EXPECT_TRUE(Tt.member(x));
  }
}

TEST(FieldIsomorphism, IsARingIsomorphism) {
  const FieldTower A = FieldTower::make(2, 1, 4), B = FieldTower::make(2, 2, 2);
  const GaloisField& F = A.field(Level::qt);
  const GaloisField& G = B.field(Level::qt);
  ASSERT_EQ(F.size(), G.size());
  const auto phi = field_isomorphism(F, G);
  std::vector<bool> hit(G.size(), false);
  for (Elem a = 0; a < F.size(); ++a) {
    hit[phi[a]] = true;
    for (Elem b = 0; b < F.size(); ++b) {
      ASSERT_EQ(phi[F.add(a, b)], G.add(phi[a], phi[b]));
      ASSERT_EQ(phi[F.mul(a, b)], G.mul(phi[a], phi[b]));
    }
  }
  EXPECT_EQ(std::count(hit.begin(), hit.end(), true), static_cast<long>(G.size()));
}

TEST(PsiProduct, EnumeratorFollowsTheBaseGraph) {
  const FieldTower T = FieldTower::make(3, 1, 2);
  const GaloisField& mid = T.field(Level::qt);
  Sampler rnd(3);
  int tried = 0;
  while (tried < 6) {
    const LinPoly f = rnd.linpoly(mid, T.field(Level::q));
    if (!f.is_invertible()) continue;
    ++tried;
    const PsiProduct P = psi_product(T, f, T.xi().value());
    EXPECT_EQ(scan(graph_set(f)).to_string(), P.base.to_string());
    EXPECT_EQ(scan(P.set).to_string(), P.predicted.to_string());
  }
}

TEST(PsiIterate, SublineIteratesMatchTheClosedForms) {
  const char* want[] = {"3X", "2X^2 + 9X", "2X^4 + 30X^2 + 135X"};
  for (unsigned m = 1; m <= 3; ++m) {
    const PsiIterate it = psi_iterate(2, 1, m);
    const WeightEnumerator got = enumerator_from_weights(point_weights(it.set, Exec::parallel));
    EXPECT_EQ(got.to_string(), want[m - 1]) << m;
    EXPECT_EQ(it.predicted.to_string(), want[m - 1]);
    EXPECT_EQ(subline_iterate_counts(m).to_string(), want[m - 1]);
    EXPECT_EQ(iterated_size(2, m, 3), got.size());
  }
  EXPECT_EQ(iterated_size(2, 3, 3), 167u);
}

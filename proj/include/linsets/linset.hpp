#pragma once

// Linear sets L_U = { <u> : u in U \ {0} } on PG(1, F) for an F_b-subspace U of
// F^2, and their point weights w(<v>) = dim_{F_b}(<v>_F cap U).
//
// Points of PG(1, F) are numbered 0..|F|: index a < |F| is <(1, a)> and index
// |F| is <(0, 1)>. Weight scans produce one byte per index in that order.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linsets/gf_tower.hpp"
#include "linsets/linpoly.hpp"
#include "linsets/subspace.hpp"

namespace linsets {

enum class Exec { serial, parallel };

/// A point of PG(1, F) in normal form: (1, alpha) or (0, 1).
struct ProjPoint {
  bool infinity = false;  // true for (0, 1)
  Elem alpha = 0;

  static ProjPoint at(Elem a) { return {false, a}; }
  static ProjPoint inf() { return {true, 0}; }
  /// Normal form of <(x0, x1)>, (x0, x1) != (0, 0).
  static ProjPoint normalize(const GaloisField& F, Elem x0, Elem x1);
  static ProjPoint from_index(const GaloisField& F, std::uint64_t i) {
    return i == F.size() ? inf() : at(static_cast<Elem>(i));
  }
  std::uint64_t index(const GaloisField& F) const { return infinity ? F.size() : alpha; }
  std::string to_string() const;

  auto operator<=>(const ProjPoint&) const = default;
};

/// Counts A_w of points by weight w >= 1.
class WeightEnumerator {
 public:
  WeightEnumerator() = default;
  explicit WeightEnumerator(std::map<unsigned, std::uint64_t> counts);

  void add(unsigned w, std::uint64_t count = 1);
  std::uint64_t count(unsigned w) const;
  const std::map<unsigned, std::uint64_t>& counts() const { return counts_; }
  /// Number of points, sum_w A_w.
  std::uint64_t size() const;
  unsigned max_weight() const { return counts_.empty() ? 0 : counts_.rbegin()->first; }
  /// sum_w A_w (b^w - 1) == b^rank - 1.
  bool identity_holds(std::uint64_t b, unsigned rank) const;

  WeightEnumerator scaled(std::uint64_t c) const;
  WeightEnumerator operator+(const WeightEnumerator& o) const;
  bool operator==(const WeightEnumerator& o) const { return counts_ == o.counts_; }

  /// Highest weight first, e.g. "2X^2 + 9X"; "0" when empty.
  std::string to_string() const;

 private:
  std::map<unsigned, std::uint64_t> counts_;
};

/// L_U for an F_b-subspace U of F^2, optionally tagged as S x T.
class LinearSet {
 public:
  explicit LinearSet(FqSubspace U);
  /// U = S x T, keeping S and T.
  static LinearSet product(const FqSubspace& S, const FqSubspace& T);

  const FqSubspace& subspace() const { return U_; }
  const GaloisField& field() const { return U_.level(); }
  const GaloisField& base() const { return U_.base(); }
  unsigned rank() const { return U_.dim(); }
  bool is_product() const { return S_.has_value(); }
  const FqSubspace& S() const;
  const FqSubspace& T() const;

  /// Exact weight of one point: rank - rank_{F_b}{ y_i - alpha x_i } over the
  /// basis rows (x_i, y_i) of U, or rank - rank{x_i} for (0, 1).
  unsigned weight(const ProjPoint& P) const;
  unsigned weight_at_index(std::uint64_t i) const;

 private:
  FqSubspace U_;
  std::optional<FqSubspace> S_;
  std::optional<FqSubspace> T_;
  std::vector<Elem> xs_, ys_;
};

/// Brute-force weight: counts the lambda in F with lambda P in U. Test oracle.
unsigned weight_oracle(const LinearSet& L, const ProjPoint& P);

/// One weight per point index (see the header comment). Throws BoundExceeded
/// when |F| + 1 > bound.
std::vector<std::uint8_t> point_weights(const LinearSet& L, Exec exec = Exec::parallel,
                                        std::uint64_t bound = kDefaultEnumerationBound);
WeightEnumerator enumerator_from_weights(const std::vector<std::uint8_t>& weights);
WeightEnumerator weight_enumerator(const LinearSet& L, Exec exec = Exec::parallel,
                                   std::uint64_t bound = kDefaultEnumerationBound);

/// dim(S cap alpha^{-1} T): the weight of (1, alpha) in L_{S x T}, alpha != 0.
unsigned weight_via_alpha(const FqSubspace& S, const FqSubspace& T, Elem alpha);

/// Coordinates over {1, xi} for an element xi of F_{q^n} outside F_{q^t}.
class XiBasis {
 public:
  XiBasis(const FieldTower& tower, Elem xi);

  Elem xi() const { return xi_; }
  /// xi^2 = A xi + B.
  Elem A() const { return A_; }
  Elem B() const { return B_; }
  /// z = c0 + c1 xi with c0, c1 in F_{q^t}.
  std::pair<Elem, Elem> split(Elem z) const;
  Elem join(Elem c0, Elem c1) const;

 private:
  FieldTower tower_;
  Elem xi_, A_, B_;
  Elem inv_diff_;  // 1 / (xi - xi^(q^t))
};

/// S_{f,xi} = { u + xi f(u) : u in F_{q^t} } inside F_{q^n}; xi must lie
/// outside F_{q^t}.
FqSubspace make_S_f(const FieldTower& tower, const LinPoly& f, Elem xi);

/// The linearized polynomial whose kernel dimension is the weight of (1, alpha)
/// in L_{S_{f,xi} x S_{g,eta}}: with xi^2 = A xi + B, eta = a xi + b and
/// alpha^{-1} = a0 + a1 xi,
///   G = f o (a0 X + (a0 b + a a1 B) g) - a1 X - (a a0 + a a1 A + b a1) g,
/// which for eta = xi is f(a0 X + a1 B g(X)) - (a0 + a1 A) g(X) - a1 X.
LinPoly weight_polynomial(const FieldTower& tower, const LinPoly& f, Elem xi, const LinPoly& g, Elem eta,
                          Elem alpha);
unsigned weight_via_kernel(const FieldTower& tower, const LinPoly& f, Elem xi, const LinPoly& g, Elem eta,
                           Elem alpha);

/// Points of weight >= i (resp. exactly i) in L_{S x T}, other than the axis
/// point carrying the larger block, computed from the i-dimensional subspaces
/// of the smaller block: for dim T <= dim S these are the points <(x, 1)>,
/// x in the union over i-subspaces <a_1..a_i> of T of a_1^{-1}S cap ... cap
/// a_i^{-1}S, and (1, 0) is excluded. When dim T > dim S the roles swap and
/// (0, 1) is the excluded point. 1 <= i <= min(dim S, dim T).
std::vector<ProjPoint> points_weight_at_least(const FqSubspace& S, const FqSubspace& T, unsigned i,
                                              std::uint64_t budget = kDefaultEnumerationBound);
std::vector<ProjPoint> points_weight_exactly(const FqSubspace& S, const FqSubspace& T, unsigned i,
                                             std::uint64_t budget = kDefaultEnumerationBound);

/// Whether L_{S x T} has no points of weight >= 2 besides the two axis points:
/// dim(a_1 S cap a_2 S) = 0 for every independent a_1, a_2 of the smaller
/// block (S and T swap when dim T > dim S). Both dims must be >= 2.
bool two_heavy_points_check(const FqSubspace& S, const FqSubspace& T,
                            std::uint64_t budget = kDefaultEnumerationBound);

/// Rank weight over F_b of the codeword (x0, x1) G, G = [S-basis 0; 0 T-basis]:
/// k - w(<(-x1, x0)>) in L_{S x T}.
unsigned rank_weight(const FqSubspace& S, const FqSubspace& T, Elem x0, Elem x1);
/// The same, as the F_b-rank of the codeword's entries.
unsigned rank_weight_direct(const FqSubspace& S, const FqSubspace& T, Elem x0, Elem x1);

}  // namespace linsets

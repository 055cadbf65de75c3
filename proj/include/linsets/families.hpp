#pragma once

// Named linear sets L_{S_{f,xi} x S_{g,eta}} in PG(1, q^n), n = 2t, with the
// weight behaviour each one is known to have, plus the product construction
// Psi(L_f) = L_{F_{q^t} x S_{f,xi}} and its iterates.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linsets/gf_tower.hpp"
#include "linsets/linpoly.hpp"
#include "linsets/linset.hpp"
#include "linsets/subspace.hpp"

namespace linsets {

enum class FamilyKind { trace_trace, f_trace, monomial_s, lp_binomial, f_f, psi_product, custom };

std::string to_string(FamilyKind kind);

/// How to pick xi: the tower's canonical root, the first element (in index
/// order) outside F_{q^t} meeting the family's optional hypotheses, or a given
/// index.
struct XiChoice {
  enum class Mode { tower, automatic, given } mode = Mode::tower;
  Elem value = 0;

  static XiChoice parse(std::string_view text);
  std::string to_string() const;
};

struct FamilyParams {
  unsigned s = 1;
  std::optional<Elem> delta;        // lp_binomial; nullopt = first admissible
  std::optional<std::string> f;     // f_trace, f_f, psi_product, custom
  std::optional<std::string> g;     // custom
  std::optional<Elem> eta;          // custom; defaults to xi
};

/// A family instance: U = S_{f,xi} x S_{g,eta} over one tower. psi_product is
/// stored as f = 0 (so S = F_{q^t}) and g = the input polynomial.
struct Family {
  FamilyKind kind;
  FieldTower tower;
  LinPoly f, g;
  Elem xi, eta;
  unsigned s = 1;
  Elem delta = 0;
  std::string text;  // canonical family string

  FqSubspace S() const { return make_S_f(tower, f, xi); }
  FqSubspace T() const { return make_S_f(tower, g, eta); }
  LinearSet linear_set() const { return LinearSet::product(S(), T()); }
};

/// Checks the family's standing hypotheses (gcd(s,t) = 1, t >= 5 and
/// N(delta)^2 != 1 for the binomial, kernel-free f for the product) and throws
/// PreconditionError naming the one that fails.
Family make_family(const FieldTower& tower, FamilyKind kind, const FamilyParams& params = {},
                   const XiChoice& xi = {});
/// `trace-trace`, `f-trace:f=<poly>`, `xq-trace`, `monomial:s=2`,
/// `lp:s=1,delta=auto`, `f-f:f=<poly>`, `psi-product:f=<poly>`,
/// `custom:f=<poly>,g=<poly>,eta=<index>`.
Family parse_family(const FieldTower& tower, std::string_view text, const XiChoice& xi = {});

// ---------------------------------------------------------------------------

/// Points of PG(1, q^n) split by where alpha lies for <(1, alpha)>.
enum class Region { one_zero, zero_one, base_star, middle, outside };
std::string to_string(Region r);
Region region_of(const FieldTower& tower, std::uint64_t point_index);

enum class RuleKind {
  exact,         // every point of the region has this weight
  at_most,       // weight <= value
  exact_on_set,  // every point of the region lying in L_U has this weight
};

struct WeightRule {
  std::vector<Region> regions;
  RuleKind kind;
  /// Expected value or bound at a point index; nullopt = rule silent there.
  std::function<std::optional<unsigned>(std::uint64_t)> value;
  std::string text;
};

struct WeightPrediction {
  std::vector<WeightRule> rules;
  std::vector<std::string> notes;  // hypotheses that failed, weakening the prediction
  std::optional<WeightEnumerator> enumerator;
};

WeightPrediction predict(const Family& family);

struct RuleOutcome {
  std::string text;
  RuleKind kind;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> examples;  // first few violations
};

struct FamilyReport {
  std::string family;
  std::string tower;
  std::string xi;
  unsigned rank = 0;
  WeightEnumerator enumerator;
  std::map<Region, std::map<unsigned, std::uint64_t>> realized;
  std::vector<RuleOutcome> rules;
  std::vector<std::string> notes;
  std::optional<WeightEnumerator> predicted_enumerator;
  bool identity_ok = false;

  bool pass() const;
};

FamilyReport verify_family(const Family& family, Exec exec = Exec::parallel,
                           std::uint64_t bound = kDefaultEnumerationBound);

// ---------------------------------------------------------------------------

/// First x != 0 (index order) with S cap xS = {0}; needs 2 dim S <= n.
Elem find_disjoint_scalar(const FqSubspace& S);
/// T = <1, x, a_3, ..., a_r> with x from find_disjoint_scalar and a_j the
/// first standard basis elements extending the span.
FqSubspace build_avoiding_T(const FqSubspace& S, unsigned r);

/// Whether, for every (a0, a1) != (0, 0) in F_{q^t}^2, the polynomial
///   f(a0 v + a1 A b g(v) + a0 B g(v)) - a1 v - a0 A g(v) - a1 A a g(v) - a1 B g(v)
/// has at most q roots, where xi^2 = a xi + b and eta = A xi + B. This is the
/// condition for T_{g,eta} x S_{f,xi} to have only its two axis points of
/// weight > 1. Pairs are taken up to F_q^* scaling. Needs q^t <= 2^8.
bool check_relation_fg(const FieldTower& tower, const LinPoly& f, const LinPoly& g, Elem xi, Elem eta,
                       Exec exec = Exec::parallel);

// ---------------------------------------------------------------------------

/// The linear set { <(x, f(x))> } in PG(1, q^t) (the level of f).
LinearSet graph_set(const LinPoly& f);

struct PsiProduct {
  LinearSet set;          // F_{q^t} x S_{f,xi} in PG(1, q^{2t})
  WeightEnumerator base;  // W_{L_f}
  WeightEnumerator predicted;  // 2X^t + (q^t - 1) W_{L_f}
};

/// Requires ker f = 0, i.e. <(1,0)> not in L_f; <(0,1)> is never in a graph.
PsiProduct psi_product(const FieldTower& tower, const LinPoly& f, Elem xi);
/// F_{q^t} x { u0 + xi u1 : (u0, u1) in U } for any F_q-subspace U of
/// F_{q^t}^2 given over the tower's middle level.
LinearSet psi_of_subspace(const FieldTower& tower, const FqSubspace& U, Elem xi);

struct PsiIterate {
  std::vector<FieldTower> towers;  // towers[j] = tower(p, e, 2^j)
  LinearSet set;                   // Psi^{m-1}(L_f) in PG(1, q^{2^m})
  WeightEnumerator base;           // W_{L_f}
  WeightEnumerator predicted;      // closed form
};

/// Psi^{m-1} applied to the subline L_f, f = X^q over F_{q^2}. Each step moves
/// the subspace from the top level of tower(q, 2^{j-1}) to the middle level of
/// tower(q, 2^j) through an explicit field isomorphism.
PsiIterate psi_iterate(std::uint32_t p, unsigned e, unsigned m);

/// W_{2^m} from W_2 by the closed form
///   2X^{2^{m-1}} + 2(q^{2^{m-1}}-1)X^{2^{m-2}} + ... + prod_{i=1}^{m-1}(q^{2^i}-1) W_2.
WeightEnumerator iterated_enumerator(std::uint64_t q, unsigned m, const WeightEnumerator& w2);
/// |L_f| prod_{i=1}^{m-1}(q^{2^i}-1) + 2 sum_{k=1}^{m-1} prod_{i=k+1}^{m-1}(q^{2^i}-1).
std::uint64_t iterated_size(std::uint64_t q, unsigned m, std::uint64_t base_size);
/// Point counts by weight for the q = 2 subline iterate: weight 1 ->
/// 3 prod_{i=1}^{m-1}(2^{2^i}-1), weight 2^k -> 2 prod_{i=k+1}^{m-1}(2^{2^i}-1).
WeightEnumerator subline_iterate_counts(unsigned m);

/// A field isomorphism from `from` to `to` (same size, same characteristic),
/// as a lookup table indexed by element of `from`.
std::vector<Elem> field_isomorphism(const GaloisField& from, const GaloisField& to);

}  // namespace linsets

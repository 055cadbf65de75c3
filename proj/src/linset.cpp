#include "linsets/linset.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "linsets/echelon.hpp"

namespace linsets {

ProjPoint ProjPoint::normalize(const GaloisField& F, Elem x0, Elem x1) {
  if (x0 == 0) {
    if (x1 == 0) throw PreconditionError("the zero vector is not a projective point");
    return inf();
  }
  return at(F.div(x1, x0));
}

std::string ProjPoint::to_string() const {
  return infinity ? std::string("(0,1)") : "(1," + std::to_string(alpha) + ")";
}

// ---------------------------------------------------------------------------

WeightEnumerator::WeightEnumerator(std::map<unsigned, std::uint64_t> counts) {
  for (auto [w, c] : counts) add(w, c);
}

void WeightEnumerator::add(unsigned w, std::uint64_t count) {
  if (w == 0 || count == 0) return;
  counts_[w] += count;
}

std::uint64_t WeightEnumerator::count(unsigned w) const {
  auto it = counts_.find(w);
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t WeightEnumerator::size() const {
  std::uint64_t s = 0;
  for (auto [w, c] : counts_) s += c;
  return s;
}

bool WeightEnumerator::identity_holds(std::uint64_t b, unsigned rank) const {
  auto pw = [b](unsigned e) {
    unsigned __int128 r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
  };
  unsigned __int128 lhs = 0;
  for (auto [w, c] : counts_) lhs += static_cast<unsigned __int128>(c) * (pw(w) - 1);
  return lhs == pw(rank) - 1;
}

WeightEnumerator WeightEnumerator::scaled(std::uint64_t c) const {
  WeightEnumerator out;
  for (auto [w, n] : counts_) out.add(w, n * c);
  return out;
}

WeightEnumerator WeightEnumerator::operator+(const WeightEnumerator& o) const {
  WeightEnumerator out = *this;
  for (auto [w, n] : o.counts_) out.add(w, n);
  return out;
}

std::string WeightEnumerator::to_string() const {
  if (counts_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = counts_.rbegin(); it != counts_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    if (it->second != 1) os << it->second;
    os << 'X';
    if (it->first != 1) os << '^' << it->first;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

LinearSet::LinearSet(FqSubspace U) : U_(std::move(U)) {
  if (U_.arity() != 2) throw LevelMismatch("a linear set needs a subspace of F^2");
  for (const auto& v : U_.basis()) {
    xs_.push_back(v[0]);
    ys_.push_back(v[1]);
  }
}

LinearSet LinearSet::product(const FqSubspace& S, const FqSubspace& T) {
  if (S.arity() != 1 || T.arity() != 1) throw LevelMismatch("S and T must be subspaces of the field");
  if (&S.level() != &T.level() || &S.base() != &T.base()) throw LevelMismatch("S and T live in different fields");
  FqSubspace U(S.level(), S.base(), 2);
  for (Elem s : S.basis_elements()) U.insert(std::vector<Elem>{s, 0});
  for (Elem t : T.basis_elements()) U.insert(std::vector<Elem>{0, t});
  LinearSet L(std::move(U));
  L.S_ = S;
  L.T_ = T;
  return L;
}

const FqSubspace& LinearSet::S() const {
  if (!S_) throw PreconditionError("linear set is not tagged as a product S x T");
  return *S_;
}

const FqSubspace& LinearSet::T() const {
  if (!T_) throw PreconditionError("linear set is not tagged as a product S x T");
  return *T_;
}

unsigned LinearSet::weight(const ProjPoint& P) const {
  const GaloisField& F = field();
  const unsigned k = rank();
  Elem buf[64];
  std::vector<Elem> heap;
  Elem* v = buf;
  if (k > 64) {
    heap.resize(k);
    v = heap.data();
  }
  if (P.infinity) {
    for (unsigned i = 0; i < k; ++i) v[i] = xs_[i];
  } else {
    for (unsigned i = 0; i < k; ++i) v[i] = F.sub(ys_[i], F.mul(P.alpha, xs_[i]));
  }
  return k - rank_over(base(), U_.degree(), std::span<const Elem>(v, k));
}

unsigned LinearSet::weight_at_index(std::uint64_t i) const { return weight(ProjPoint::from_index(field(), i)); }

unsigned weight_oracle(const LinearSet& L, const ProjPoint& P) {
  // Count lambda in F with lambda v in U; that count is b^weight.
  const GaloisField& F = L.field();
  const Elem v0 = P.infinity ? 0 : 1, v1 = P.infinity ? 1 : P.alpha;
  std::uint64_t hits = 0;
  for (Elem lam = 0; lam < F.size(); ++lam) {
    const std::array<Elem, 2> u{F.mul(lam, v0), F.mul(lam, v1)};
    hits += L.subspace().member(u);
  }
  unsigned w = 0;
  for (std::uint64_t c = 1; c < hits; c *= L.base().size()) ++w;
  return w;
}

std::vector<std::uint8_t> point_weights(const LinearSet& L, Exec exec, std::uint64_t bound) {
  const std::uint64_t npts = std::uint64_t{L.field().size()} + 1;
  if (npts > bound)
    throw BoundExceeded("scan of " + std::to_string(npts) + " points exceeds the enumeration bound " +
                        std::to_string(bound));
  std::vector<std::uint8_t> w(npts);
  const auto n = static_cast<std::int64_t>(npts);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) w[i] = static_cast<std::uint8_t>(L.weight_at_index(i));
  } else {
    for (std::int64_t i = 0; i < n; ++i) w[i] = static_cast<std::uint8_t>(L.weight_at_index(i));
  }
  return w;
}

WeightEnumerator enumerator_from_weights(const std::vector<std::uint8_t>& weights) {
  std::array<std::uint64_t, 256> counts{};
  for (auto w : weights) ++counts[w];
  WeightEnumerator e;
  for (unsigned w = 1; w < 256; ++w) e.add(w, counts[w]);
  return e;
}

WeightEnumerator weight_enumerator(const LinearSet& L, Exec exec, std::uint64_t bound) {
  return enumerator_from_weights(point_weights(L, exec, bound));
}

unsigned weight_via_alpha(const FqSubspace& S, const FqSubspace& T, Elem alpha) {
  if (alpha == 0) throw PreconditionError("weight_via_alpha needs alpha != 0; (1,0) has weight dim S");
  return S.intersect(T.scalar_coset(S.level().inv(alpha))).dim();
}

// ---------------------------------------------------------------------------

XiBasis::XiBasis(const FieldTower& tower, Elem xi) : tower_(tower), xi_(xi) {
  const GaloisField& top = tower.field(Level::qn);
  const std::uint32_t qt = tower.field(Level::qt).size();
  if (!top.contains(xi) || xi < qt) throw PreconditionError("xi must lie in F_{q^n} outside F_{q^t}");
  const Elem bar = top.frobenius(xi, qt, 1);
  A_ = top.add(xi, bar);
  B_ = top.neg(top.mul(xi, bar));
  inv_diff_ = top.inv(top.sub(xi, bar));
}

std::pair<Elem, Elem> XiBasis::split(Elem z) const {
  const GaloisField& top = tower_.field(Level::qn);
  const Elem bar = top.frobenius(z, tower_.field(Level::qt).size(), 1);
  const Elem c1 = top.mul(top.sub(z, bar), inv_diff_);
  const Elem c0 = top.sub(z, top.mul(c1, xi_));
  return {c0, c1};
}

Elem XiBasis::join(Elem c0, Elem c1) const {
  const GaloisField& top = tower_.field(Level::qn);
  return top.add(c0, top.mul(c1, xi_));
}

FqSubspace make_S_f(const FieldTower& tower, const LinPoly& f, Elem xi) {
  const GaloisField& top = tower.field(Level::qn);
  const GaloisField& mid = tower.field(Level::qt);
  if (&f.level() != &mid || &f.base() != &tower.field(Level::q))
    throw LevelMismatch("S_{f,xi} needs f over F_{q^t} with base F_q");
  if (!top.contains(xi) || mid.contains(xi)) throw PreconditionError("S_{f,xi} needs xi outside F_{q^t}");
  FqSubspace S(top, tower.field(Level::q), 1);
  Elem e = 1;
  for (unsigned j = 0; j < f.degree(); ++j, e *= tower.q()) {
    const Elem v = top.add(e, top.mul(xi, f(e)));
    S.insert(std::span<const Elem>(&v, 1));
  }
  return S;
}

LinPoly weight_polynomial(const FieldTower& tower, const LinPoly& f, Elem xi, const LinPoly& g, Elem eta,
                          Elem alpha) {
  if (alpha == 0) throw PreconditionError("weight polynomial needs alpha != 0");
  const GaloisField& top = tower.field(Level::qn);
  const GaloisField& mid = tower.field(Level::qt);
  const GaloisField& Fq = tower.field(Level::q);
  const XiBasis X(tower, xi);
  const Elem A = X.A(), B = X.B();
  const LinPoly id = LinPoly::identity(mid, Fq);
  const auto [a0, a1] = X.split(top.inv(alpha));
  if (eta == xi) {
    const LinPoly inner = id.post_scale(a0) + g.post_scale(mid.mul(a1, B));
    return f.compose(inner) - g.post_scale(mid.add(a0, mid.mul(a1, A))) - id.post_scale(a1);
  }
  const auto [b, a] = X.split(eta);
  const Elem c_in = mid.add(mid.mul(a0, b), mid.mul(a, mid.mul(a1, B)));
  const Elem c_out = mid.add(mid.add(mid.mul(a, a0), mid.mul(a, mid.mul(a1, A))), mid.mul(b, a1));
  const LinPoly inner = id.post_scale(a0) + g.post_scale(c_in);
  return f.compose(inner) - id.post_scale(a1) - g.post_scale(c_out);
}

unsigned weight_via_kernel(const FieldTower& tower, const LinPoly& f, Elem xi, const LinPoly& g, Elem eta,
                           Elem alpha) {
  return weight_polynomial(tower, f, xi, g, eta, alpha).kernel_dim();
}

// ---------------------------------------------------------------------------

namespace {

// The union over i-subspaces W of T of { x : xW subset S }, as a sorted list.
std::vector<Elem> heavy_scalars(const FqSubspace& S, const FqSubspace& T, unsigned i, std::uint64_t budget) {
  const GaloisField& F = S.level();
  std::set<Elem> out;
  SubspaceEnumerator it(T, i, budget);
  while (auto W = it.next()) {
    std::optional<FqSubspace> I;
    for (Elem a : W->basis_elements()) {
      FqSubspace c = S.scalar_coset(F.inv(a));
      I = I ? I->intersect(c) : std::move(c);
      if (I->dim() == 0) break;
    }
    I->for_each_member([&](const Vector& v) { out.insert(v[0]); });
  }
  return {out.begin(), out.end()};
}

void check_layer(const FqSubspace& S, const FqSubspace& T, unsigned i) {
  if (S.arity() != 1 || T.arity() != 1 || &S.level() != &T.level() || &S.base() != &T.base())
    throw LevelMismatch("S and T must be subspaces of the same field over the same base");
  const unsigned r = std::min(S.dim(), T.dim());
  if (i < 1 || i > r)
    throw PreconditionError("weight layer " + std::to_string(i) + " outside 1.." + std::to_string(r));
}

}  // namespace

std::vector<ProjPoint> points_weight_at_least(const FqSubspace& S, const FqSubspace& T, unsigned i,
                                              std::uint64_t budget) {
  check_layer(S, T, i);
  const GaloisField& F = S.level();
  const bool swap = T.dim() > S.dim();
  const auto xs = swap ? heavy_scalars(T, S, i, budget) : heavy_scalars(S, T, i, budget);
  std::vector<ProjPoint> pts;
  pts.reserve(xs.size());
  for (Elem x : xs) pts.push_back(swap ? ProjPoint::normalize(F, 1, x) : ProjPoint::normalize(F, x, 1));
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<ProjPoint> points_weight_exactly(const FqSubspace& S, const FqSubspace& T, unsigned i,
                                             std::uint64_t budget) {
  check_layer(S, T, i);
  auto layer = points_weight_at_least(S, T, i, budget);
  if (i == std::min(S.dim(), T.dim())) return layer;
  const auto above = points_weight_at_least(S, T, i + 1, budget);
  std::vector<ProjPoint> out;
  std::set_difference(layer.begin(), layer.end(), above.begin(), above.end(), std::back_inserter(out));
  return out;
}

bool two_heavy_points_check(const FqSubspace& S, const FqSubspace& T, std::uint64_t budget) {
  if (S.dim() < 2 || T.dim() < 2) throw PreconditionError("two-heavy-points criterion needs dim S, dim T >= 2");
  const FqSubspace& big = T.dim() > S.dim() ? T : S;
  const FqSubspace& small = T.dim() > S.dim() ? S : T;
  SubspaceEnumerator it(small, 2, budget);
  while (auto W = it.next()) {
    const auto a = W->basis_elements();
    if (big.scalar_coset(a[0]).intersect(big.scalar_coset(a[1])).dim() != 0) return false;
  }
  return true;
}

unsigned rank_weight(const FqSubspace& S, const FqSubspace& T, Elem x0, Elem x1) {
  if (x0 == 0 && x1 == 0) throw PreconditionError("rank weight of the zero codeword");
  const LinearSet L = LinearSet::product(S, T);
  return L.rank() - L.weight(ProjPoint::normalize(S.level(), S.level().neg(x1), x0));
}

unsigned rank_weight_direct(const FqSubspace& S, const FqSubspace& T, Elem x0, Elem x1) {
  if (x0 == 0 && x1 == 0) throw PreconditionError("rank weight of the zero codeword");
  const GaloisField& F = S.level();
  std::vector<Elem> entries;
  for (Elem s : S.basis_elements()) entries.push_back(F.mul(x0, s));
  for (Elem t : T.basis_elements()) entries.push_back(F.mul(x1, t));
  return rank_over(S.base(), S.degree(), entries);
}

}  // namespace linsets

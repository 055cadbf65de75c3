#include "linsets/evensets.hpp"

#include <numeric>
#include <sstream>

#include "linsets/families.hpp"

namespace linsets {

PlanePoint PlanePoint::normalize(const GaloisField& F, Elem x, Elem y, Elem z) {
  const Elem lead = x != 0 ? x : y != 0 ? y : z;
  if (lead == 0) throw PreconditionError("the zero vector is not a point");
  const Elem s = F.inv(lead);
  return {F.mul(s, x), F.mul(s, y), F.mul(s, z)};
}

PlanePoint PlanePoint::from_index(std::uint64_t Q, std::uint64_t i) {
  if (i < Q * Q) return {1, static_cast<Elem>(i / Q), static_cast<Elem>(i % Q)};
  if (i < Q * Q + Q) return {0, 1, static_cast<Elem>(i - Q * Q)};
  return {0, 0, 1};
}

std::uint64_t PlanePoint::index(std::uint64_t Q) const {
  if (x != 0) return std::uint64_t{y} * Q + z;
  if (y != 0) return Q * Q + z;
  return Q * Q + Q;
}

std::string PlanePoint::to_string() const {
  std::ostringstream os;
  os << '(' << x << ',' << y << ',' << z << ')';
  return os.str();
}

namespace {

void require_even_plane(const GaloisField& F, std::uint64_t bound) {
  if (F.characteristic() != 2)
    throw PreconditionError("sets of even type need even order; q = " + std::to_string(F.size()) + " is odd");
  if (plane_size(F.size()) > bound)
    throw BoundExceeded("PG(2," + std::to_string(F.size()) + ") has " + std::to_string(plane_size(F.size())) +
                        " points, over the bound " + std::to_string(bound));
}

}  // namespace

std::vector<PlanePoint> lines(const GaloisField& F, std::uint64_t bound) {
  require_even_plane(F, bound);
  const std::uint64_t Q = F.size();
  std::vector<PlanePoint> out;
  out.reserve(plane_size(Q));
  for (std::uint64_t i = 0; i < plane_size(Q); ++i) out.push_back(PlanePoint::from_index(Q, i));
  return out;
}

std::vector<std::uint64_t> points_on_line(const GaloisField& F, const PlanePoint& l) {
  const std::uint64_t Q = F.size();
  // Two points spanning the line a X + b Y + c Z = 0.
  PlanePoint P1, P2;
  if (l.x != 0) {
    P1 = {F.neg(l.y), 1, 0};
    P2 = {F.neg(l.z), 0, 1};
  } else if (l.y != 0) {
    P1 = {1, 0, 0};
    P2 = {0, F.neg(l.z), 1};
  } else {
    P1 = {1, 0, 0};
    P2 = {0, 1, 0};
  }
  std::vector<std::uint64_t> out;
  out.reserve(Q + 1);
  for (Elem lam = 0; lam < Q; ++lam)
    out.push_back(PlanePoint::normalize(F, F.add(P1.x, F.mul(lam, P2.x)), F.add(P1.y, F.mul(lam, P2.y)),
                                        F.add(P1.z, F.mul(lam, P2.z)))
                      .index(Q));
  out.push_back(PlanePoint::normalize(F, P2.x, P2.y, P2.z).index(Q));
  return out;
}

std::vector<std::uint32_t> line_intersections(const GaloisField& F, const std::vector<bool>& member, Exec exec) {
  const std::uint64_t Q = F.size();
  const auto n = static_cast<std::int64_t>(plane_size(Q));
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n), 0);
  auto one = [&](std::int64_t i) {
    std::uint32_t c = 0;
    for (auto p : points_on_line(F, PlanePoint::from_index(Q, static_cast<std::uint64_t>(i)))) c += member[p];
    out[static_cast<std::size_t>(i)] = c;
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < n; ++i) one(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) one(i);
  }
  return out;
}

std::uint64_t EvenSetReport::line_count() const {
  std::uint64_t n = 0;
  for (const auto& [k, c] : spectrum) n += c;
  return n;
}

std::set<std::uint32_t> EvenSetReport::spectrum_sizes() const {
  std::set<std::uint32_t> out;
  for (const auto& [k, c] : spectrum) out.insert(k);
  return out;
}

EvenSetReport translation_even_set(const LinPoly& g, Exec exec, std::uint64_t bound) {
  const GaloisField& F = g.level();
  require_even_plane(F, bound);
  if (g.base().size() != 2) throw PreconditionError("g must be given as an F_2-linear map");
  const std::uint64_t Q = F.size();

  const auto lg_weights = point_weights(graph_set(g), exec, bound);
  EvenSetReport rep;
  rep.q = Q;
  rep.lg_enumerator = enumerator_from_weights(lg_weights);
  rep.lg_size = rep.lg_enumerator.size();

  std::vector<bool> member(plane_size(Q), false);
  for (Elem x = 0; x < Q; ++x) {
    const auto i = PlanePoint::normalize(F, 1, x, g(x)).index(Q);
    if (!member[i]) ++rep.translation_size;
    member[i] = true;
  }
  // Direction <(1, a)> of L_g is the plane point (0, 1, a); <(0, 1)> is (0, 0, 1).
  for (std::uint64_t a = 0; a <= Q; ++a)
    if (lg_weights[a] == 0) member[Q * Q + a] = true;
  for (std::uint64_t i = 0; i < member.size(); ++i)
    if (member[i]) rep.points.push_back(i);
  rep.size = rep.points.size();
  rep.size_formula_ok = rep.size == 2 * Q + 1 - rep.lg_size;

  const auto inter = line_intersections(F, member, exec);
  rep.even = true;
  rep.direction_rule_ok = true;
  for (std::uint64_t l = 0; l < inter.size(); ++l) {
    ++rep.spectrum[inter[l]];
    if (inter[l] % 2 != 0) rep.even = false;
    if (l == 0) continue;  // the line X = 0
    const PlanePoint L = PlanePoint::from_index(Q, l);
    const auto d = PlanePoint::normalize(F, 0, L.z, F.neg(L.y)).index(Q) - Q * Q;
    const unsigned w = lg_weights[d];
    if (w > 0 && inter[l] != 0 && inter[l] != (std::uint32_t{1} << w)) rep.direction_rule_ok = false;
  }
  rep.axis_line_ok = inter[0] == Q + 1 - rep.lg_size;
  return rep;
}

LinPoly graph_map(const LinearSet& L) {
  const GaloisField& F = L.field();
  const GaloisField& b = L.base();
  if (L.rank() != digits_per_element(F.size(), b.size()))
    throw PreconditionError("graph_map needs rank equal to the degree of the field over the base");
  std::optional<Elem> c;
  for (Elem a = 0; a < F.size() && !c; ++a)
    if (L.weight(ProjPoint::at(a)) == 0) c = a;
  if (!c) throw PreconditionError("graph_map needs a point (1,c) outside the linear set");
  // (x, y) -> (y - c x, x) sends <(1, c)> to <(0, 1)>, so the first coordinate
  // is injective on the image.
  std::vector<Elem> basis, images;
  for (const auto& v : L.subspace().basis()) {
    basis.push_back(F.sub(v[1], F.mul(*c, v[0])));
    images.push_back(v[0]);
  }
  return LinPoly::from_map(F, b, basis, images);
}

EvenSetCheck verify_cor_evenset(unsigned m, Exec exec, std::uint64_t bound) {
  if (m < 1) throw PreconditionError("m must be >= 1");
  if (m > 4 || plane_size(std::uint64_t{1} << (1u << m)) > bound)
    throw BoundExceeded("q = 2^(2^" + std::to_string(m) + ") is beyond the plane enumeration bound");
  const PsiIterate P = psi_iterate(2, 1, m);
  EvenSetCheck chk;
  chk.name = "iterated-subline m=" + std::to_string(m);
  chk.report = translation_even_set(graph_map(P.set), exec, bound);
  const std::uint64_t Q = chk.report.q;
  const std::uint64_t L = iterated_size(2, m, 3);
  chk.expected_size = 2 * Q + 1 - L;
  chk.expected_spectrum = {0, static_cast<std::uint32_t>(Q + 1 - L)};
  for (unsigned k = 0; k < m; ++k) chk.expected_spectrum.insert(std::uint32_t{1} << (1u << k));
  return chk;
}

EvenSetCheck scattered_even_set(unsigned t, Exec exec, std::uint64_t bound) {
  if (t < 2) throw PreconditionError("t must be >= 2");
  if (2 * t > 24 || plane_size(std::uint64_t{1} << (2 * t)) > bound)
    throw BoundExceeded("q = 2^" + std::to_string(2 * t) + " is beyond the plane enumeration bound");
  const FieldTower T = FieldTower::make(2, 1, t);
  const GaloisField& mid = T.field(Level::qt);
  const GaloisField& F2 = T.field(Level::q);
  std::optional<LinPoly> f;
  for (unsigned s = 1; s < t && !f; ++s) {
    if (std::gcd(s, t) != 1) continue;
    LinPoly cand = LinPoly::monomial(mid, F2, s);
    if (weight_enumerator(graph_set(cand)).max_weight() == 1) f = cand;
  }
  if (!f) throw std::logic_error("no scattered monomial found");
  EvenSetCheck chk;
  chk.name = "scattered-product t=" + std::to_string(t);
  chk.report = translation_even_set(graph_map(psi_product(T, *f, T.xi().value()).set), exec, bound);
  const std::uint64_t Q = chk.report.q;
  const std::uint32_t r = 1u << t;
  chk.expected_size = Q + 2 * r - 2;
  chk.expected_spectrum = {0, 2, r, 2 * (r - 1)};
  return chk;
}

}  // namespace linsets

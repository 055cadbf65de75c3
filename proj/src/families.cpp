#include "linsets/families.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <numeric>
#include <sstream>

#include "linsets/echelon.hpp"

namespace linsets {

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::trace_trace: return "trace-trace";
    case FamilyKind::f_trace: return "f-trace";
    case FamilyKind::monomial_s: return "monomial";
    case FamilyKind::lp_binomial: return "lp";
    case FamilyKind::f_f: return "f-f";
    case FamilyKind::psi_product: return "psi-product";
    case FamilyKind::custom: return "custom";
  }
  return "?";
}

std::string to_string(Region r) {
  switch (r) {
    case Region::one_zero: return "(1,0)";
    case Region::zero_one: return "(0,1)";
    case Region::base_star: return "alpha in F_q*";
    case Region::middle: return "alpha in F_q^t minus F_q";
    case Region::outside: return "alpha outside F_q^t";
  }
  return "?";
}

namespace {

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

const GaloisField& mid_of(const FieldTower& T) { return T.field(Level::qt); }
const GaloisField& fq_of(const FieldTower& T) { return T.field(Level::q); }

Elem minus_two(const GaloisField& F) { return F.neg(F.add(1, 1)); }

Elem minus_one_pow(const GaloisField& F, std::uint64_t e) { return e % 2 == 0 ? 1 : F.neg(1); }

bool tr_hypothesis(const FieldTower& T, Elem xi) {
  const XiBasis X(T, xi);
  return T.trace_qt(X.A()) != minus_two(fq_of(T));
}

bool norm_hypothesis(const FieldTower& T, Elem xi) {
  const XiBasis X(T, xi);
  return T.norm_qt(X.B()) != minus_one_pow(fq_of(T), T.t());
}

Elem choose_xi(const FieldTower& T, const XiChoice& choice, const std::function<bool(Elem)>& wanted) {
  const GaloisField& top = T.field(Level::qn);
  const Elem first = mid_of(T).size();
  switch (choice.mode) {
    case XiChoice::Mode::tower: return T.xi().value();
    case XiChoice::Mode::given:
      if (!top.contains(choice.value) || choice.value < first)
        throw PreconditionError("xi = " + std::to_string(choice.value) + " does not lie outside F_{q^t}");
      return choice.value;
    case XiChoice::Mode::automatic:
      for (Elem x = first; x < top.size(); ++x)
        if (!wanted || wanted(x)) return x;
      return T.xi().value();
  }
  return T.xi().value();
}

}  // namespace

XiChoice XiChoice::parse(std::string_view text) {
  if (text == "tower") return {Mode::tower, 0};
  if (text == "auto") return {Mode::automatic, 0};
  return {Mode::given, static_cast<Elem>(parse_u64(text, "xi"))};
}

std::string XiChoice::to_string() const {
  switch (mode) {
    case Mode::tower: return "tower";
    case Mode::automatic: return "auto";
    case Mode::given: return std::to_string(value);
  }
  return "?";
}

Family make_family(const FieldTower& tower, FamilyKind kind, const FamilyParams& params, const XiChoice& xi_choice) {
  const GaloisField& mid = mid_of(tower);
  const GaloisField& Fq = fq_of(tower);
  const unsigned t = tower.t();
  auto poly = [&](const std::optional<std::string>& text, const char* name) {
    if (!text) throw PreconditionError(std::string("family ") + to_string(kind) + " needs " + name + "=<poly>");
    return LinPoly::parse(mid, Fq, *text);
  };

  LinPoly f = LinPoly::zero(mid, Fq);
  LinPoly g = f;
  std::function<bool(Elem)> wanted;
  std::ostringstream text;
  text << to_string(kind);
  unsigned s = params.s;
  Elem delta = 0;

  switch (kind) {
    case FamilyKind::trace_trace:
      f = g = LinPoly::trace(mid, Fq);
      wanted = [&](Elem x) { return tr_hypothesis(tower, x); };
      break;
    case FamilyKind::f_trace:
      f = poly(params.f, "f");
      g = LinPoly::trace(mid, Fq);
      text << ":f=" << f.to_string();
      break;
    case FamilyKind::monomial_s:
      if (std::gcd(s, t) != 1) throw PreconditionError("monomial family needs gcd(s, t) = 1");
      f = g = LinPoly::monomial(mid, Fq, s);
      wanted = [&](Elem x) { return norm_hypothesis(tower, x); };
      text << ":s=" << s;
      break;
    case FamilyKind::lp_binomial: {
      if (t < 5) throw PreconditionError("binomial family needs t >= 5");
      if (std::gcd(s, t) != 1) throw PreconditionError("binomial family needs gcd(s, t) = 1");
      auto admissible = [&](Elem d) {
        const Elem n = tower.norm_qt(d);
        return Fq.mul(n, n) != 1;
      };
      if (params.delta) {
        delta = *params.delta;
        if (!mid.contains(delta)) throw PreconditionError("delta must lie in F_{q^t}");
        if (!admissible(delta)) throw PreconditionError("binomial family needs N(delta)^2 != 1");
      } else {
        // Prefer delta != 0; for q <= 3 only delta = 0 qualifies.
        delta = 0;
        for (Elem d = 1; d < mid.size(); ++d)
          if (admissible(d)) {
            delta = d;
            break;
          }
      }
      std::vector<Elem> co(t, 0);
      co[s % t] = mid.add(co[s % t], 1);
      co[(s * (t - 1)) % t] = mid.add(co[(s * (t - 1)) % t], delta);
      f = g = LinPoly(mid, Fq, co);
      text << ":s=" << s << ",delta=" << delta;
      break;
    }
    case FamilyKind::f_f:
      f = g = poly(params.f, "f");
      text << ":f=" << f.to_string();
      break;
    case FamilyKind::psi_product:
      g = poly(params.f, "f");
      if (g.kernel_dim() != 0) throw PreconditionError("product construction needs ker f = 0, i.e. (1,0) not in L_f");
      text << ":f=" << g.to_string();
      break;
    case FamilyKind::custom:
      f = poly(params.f, "f");
      g = poly(params.g, "g");
      text << ":f=" << f.to_string() << ",g=" << g.to_string();
      break;
  }
  const Elem xi = choose_xi(tower, xi_choice, wanted);
  Elem eta = xi;
  if (kind == FamilyKind::custom && params.eta) {
    eta = *params.eta;
    if (!tower.field(Level::qn).contains(eta) || mid.contains(eta))
      throw PreconditionError("eta must lie outside F_{q^t}");
    text << ",eta=" << eta;
  }
  return Family{kind, tower, std::move(f), std::move(g), xi, eta, s, delta, text.str()};
}

Family parse_family(const FieldTower& tower, std::string_view text, const XiChoice& xi) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  FamilyParams params;
  std::map<std::string, std::string> kv;
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
      auto end = rest.find(',', start);
      if (end == std::string_view::npos) end = rest.size();
      const auto item = rest.substr(start, end - start);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos || eq == 0) throw ParseError("family parameter must be key=value, got '" + std::string(item) + "'");
      kv[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
      start = end + 1;
    }
  }
  auto take = [&](const std::string& key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  FamilyKind kind;
  if (name == "trace-trace") {
    kind = FamilyKind::trace_trace;
  } else if (name == "f-trace") {
    kind = FamilyKind::f_trace;
    params.f = take("f");
  } else if (name == "xq-trace") {
    kind = FamilyKind::f_trace;
    params.f = "X^q";
  } else if (name == "monomial") {
    kind = FamilyKind::monomial_s;
    if (auto v = take("s")) params.s = static_cast<unsigned>(parse_u64(*v, "s"));
  } else if (name == "lp") {
    kind = FamilyKind::lp_binomial;
    if (auto v = take("s")) params.s = static_cast<unsigned>(parse_u64(*v, "s"));
    if (auto v = take("delta"); v && *v != "auto") params.delta = static_cast<Elem>(parse_u64(*v, "delta"));
  } else if (name == "f-f") {
    kind = FamilyKind::f_f;
    params.f = take("f");
  } else if (name == "psi-product") {
    kind = FamilyKind::psi_product;
    params.f = take("f");
  } else if (name == "custom") {
    kind = FamilyKind::custom;
    params.f = take("f");
    params.g = take("g");
    if (auto v = take("eta")) params.eta = static_cast<Elem>(parse_u64(*v, "eta"));
  } else {
    throw ParseError("unknown family '" + std::string(name) + "'");
  }
  if (!kv.empty()) throw ParseError("unknown parameter '" + kv.begin()->first + "' for family " + std::string(name));
  return make_family(tower, kind, params, xi);
}

// ---------------------------------------------------------------------------

Region region_of(const FieldTower& tower, std::uint64_t i) {
  if (i == tower.field(Level::qn).size()) return Region::zero_one;
  if (i == 0) return Region::one_zero;
  if (i < tower.q()) return Region::base_star;
  if (i < tower.field(Level::qt).size()) return Region::middle;
  return Region::outside;
}

WeightPrediction predict(const Family& fam) {
  const FieldTower& T = fam.tower;
  const GaloisField& top = T.field(Level::qn);
  const GaloisField& mid = mid_of(T);
  const GaloisField& Fq = fq_of(T);
  const unsigned t = T.t();
  const XiBasis X(T, fam.xi);
  WeightPrediction pred;
  auto add = [&](std::vector<Region> regions, RuleKind kind, std::function<std::optional<unsigned>(std::uint64_t)> v,
                 std::string text) { pred.rules.push_back({std::move(regions), kind, std::move(v), std::move(text)}); };
  auto constant = [](unsigned c) { return [c](std::uint64_t) -> std::optional<unsigned> { return c; }; };
  const std::vector<Region> nonzero{Region::base_star, Region::middle, Region::outside};
  const std::vector<Region> qt_star{Region::base_star, Region::middle};

  add({Region::one_zero}, RuleKind::exact, constant(t), "axis point (1,0) has weight dim S = t");
  add({Region::zero_one}, RuleKind::exact, constant(t), "axis point (0,1) has weight dim T = t");
  {
    const LinPoly f = fam.f, g = fam.g;
    const Elem xi = fam.xi, eta = fam.eta;
    const FieldTower tw = T;
    add(nonzero, RuleKind::exact,
        [=](std::uint64_t a) -> std::optional<unsigned> {
          return weight_via_kernel(tw, f, xi, g, eta, static_cast<Elem>(a));
        },
        "weight = dim ker of the kernel-criterion polynomial");
  }

  // f x Tr: bound dim Im(f) + 1 off F_{q^t}, exact kernel formula on F_{q^t}^*,
  // and weight <= 1 wherever f(a0 X) - a1 X is invertible.
  auto f_trace_rules = [&](const LinPoly& f) {
    const unsigned im = f.image_dim();
    add({Region::outside}, RuleKind::at_most, constant(im + 1), "weight <= dim Im(f) + 1 = " + std::to_string(im + 1));
    const LinPoly tr = LinPoly::trace(mid, Fq);
    add(qt_star, RuleKind::exact,
        [f, tr, &mid](std::uint64_t a) -> std::optional<unsigned> {
          const Elem ia = mid.inv(static_cast<Elem>(a));
          return (f.pre_scale(ia) - tr.post_scale(ia)).kernel_dim();
        },
        "weight = dim ker(f(X/alpha) - Tr(X)/alpha)");
    add({Region::outside}, RuleKind::at_most,
        [f, X, &top, &mid, &Fq](std::uint64_t a) -> std::optional<unsigned> {
          const auto [a0, a1] = X.split(top.inv(static_cast<Elem>(a)));
          const LinPoly psi = f.pre_scale(a0) - LinPoly::identity(mid, Fq).post_scale(a1);
          if (!psi.is_invertible()) return std::nullopt;
          return 1u;
        },
        "weight <= 1 where f(a0 X) - a1 X is invertible");
  };

  switch (fam.kind) {
    case FamilyKind::trace_trace: {
      f_trace_rules(fam.f);
      const bool odd = T.p() != 2;
      const bool tr_ok = tr_hypothesis(T, fam.xi);
      if (odd && tr_ok) {
        add({Region::outside}, RuleKind::exact_on_set, constant(1), "points of the set off F_q^t have weight 1");
        add({Region::middle}, RuleKind::exact, constant(t >= 2 ? t - 2 : 0), "weight t - 2 on F_q^t minus F_q");
        add({Region::base_star}, RuleKind::exact, constant(t), "weight t on F_q*");
      } else {
        if (!odd) pred.notes.push_back("q is even: exact trace table not asserted, only the f x Tr bounds");
        if (!tr_ok) pred.notes.push_back("Tr(A) = -2: exact trace table not asserted, only the f x Tr bounds");
      }
      break;
    }
    case FamilyKind::f_trace: {
      f_trace_rules(fam.f);
      if (fam.f == LinPoly::monomial(mid, Fq, 1)) {
        add(qt_star, RuleKind::at_most, constant(1), "f = X^q: weight <= 1 on F_q^t*");
        add({Region::outside}, RuleKind::at_most, constant(2), "f = X^q: weight <= 2");
      }
      break;
    }
    case FamilyKind::monomial_s: {
      add({Region::outside}, RuleKind::at_most, constant(2), "weight <= 2 off F_q^t");
      add({Region::middle}, RuleKind::exact, constant(0), "weight 0 on F_q^t minus F_q");
      add({Region::base_star}, RuleKind::exact, constant(t), "weight t on F_q*");
      if (norm_hypothesis(T, fam.xi))
        add({Region::outside}, RuleKind::exact_on_set, constant(1), "N(B) != (-1)^t: points off F_q^t have weight 1");
      else
        pred.notes.push_back("N(B) = (-1)^t: only the bound 2 is asserted off F_q^t");
      break;
    }
    case FamilyKind::lp_binomial: {
      add({Region::outside}, RuleKind::at_most, constant(3), "weight <= 3 off F_q^t");
      add({Region::middle}, RuleKind::at_most, constant(2), "weight <= 2 on F_q^t minus F_q");
      add({Region::base_star}, RuleKind::exact, constant(t), "weight t exactly on F_q*");
      if (fam.delta == 0) pred.notes.push_back("delta = 0: the binomial is the monomial X^(q^s)");
      break;
    }
    case FamilyKind::f_f: {
      const LinPoly f = fam.f;
      const unsigned im = f.image_dim();
      add({Region::outside}, RuleKind::at_most, constant(3 * im), "weight <= 3 dim Im(f) = " + std::to_string(3 * im));
      add({Region::middle}, RuleKind::exact,
          [f, &mid](std::uint64_t a) -> std::optional<unsigned> {
            const Elem ia = mid.inv(static_cast<Elem>(a));
            return (f.pre_scale(ia) - f.post_scale(ia)).kernel_dim();
          },
          "weight = dim ker(f(X/alpha) - f(X)/alpha)");
      add({Region::base_star}, RuleKind::exact, constant(t), "weight t on F_q*");
      break;
    }
    case FamilyKind::psi_product: {
      const LinearSet Lf = graph_set(fam.g);
      add(nonzero, RuleKind::exact,
          [Lf, X, &mid](std::uint64_t a) -> std::optional<unsigned> {
            const auto [m0, m1] = X.split(static_cast<Elem>(a));
            return Lf.weight(ProjPoint::normalize(mid, m0, m1));
          },
          "w((1,m)) = w_{L_f}((m0,m1)) for m = m0 + m1 xi");
      const WeightEnumerator wf = weight_enumerator(Lf);
      WeightEnumerator e;
      e.add(t, 2);
      pred.enumerator = e + wf.scaled(mid.size() - 1);
      break;
    }
    case FamilyKind::custom: break;
  }
  return pred;
}

bool FamilyReport::pass() const {
  if (!identity_ok) return false;
  for (const auto& r : rules)
    if (r.violations != 0) return false;
  if (predicted_enumerator && !(*predicted_enumerator == enumerator)) return false;
  return true;
}

FamilyReport verify_family(const Family& fam, Exec exec, std::uint64_t bound) {
  const FieldTower& T = fam.tower;
  const LinearSet L = fam.linear_set();
  const auto weights = point_weights(L, exec, bound);
  const WeightPrediction pred = predict(fam);

  FamilyReport rep;
  rep.family = fam.text;
  rep.tower = T.serialize();
  rep.xi = std::to_string(fam.xi);
  rep.rank = L.rank();
  rep.enumerator = enumerator_from_weights(weights);
  rep.identity_ok = rep.enumerator.identity_holds(T.q(), L.rank());
  rep.notes = pred.notes;
  rep.predicted_enumerator = pred.enumerator;
  for (std::uint64_t i = 0; i < weights.size(); ++i) ++rep.realized[region_of(T, i)][weights[i]];

  const auto n = static_cast<std::int64_t>(weights.size());
  for (const auto& rule : pred.rules) {
    RuleOutcome out;
    out.text = rule.text;
    out.kind = rule.kind;
    std::uint64_t checked = 0, violations = 0;
    std::vector<std::int64_t> bad;
    auto visit = [&](std::int64_t i, std::uint64_t& chk, std::uint64_t& vio, bool& is_bad) {
      const Region r = region_of(T, static_cast<std::uint64_t>(i));
      if (std::find(rule.regions.begin(), rule.regions.end(), r) == rule.regions.end()) return;
      if (rule.kind == RuleKind::exact_on_set && weights[i] == 0) return;
      const auto v = rule.value(static_cast<std::uint64_t>(i));
      if (!v) return;
      ++chk;
      const bool ok = rule.kind == RuleKind::at_most ? weights[i] <= *v : weights[i] == *v;
      if (!ok) {
        ++vio;
        is_bad = true;
      }
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : checked, violations)
      for (std::int64_t i = 0; i < n; ++i) {
        bool is_bad = false;
        visit(i, checked, violations, is_bad);
        if (is_bad) {
#pragma omp critical
          bad.push_back(i);
        }
      }
    } else {
      for (std::int64_t i = 0; i < n; ++i) {
        bool is_bad = false;
        visit(i, checked, violations, is_bad);
        if (is_bad) bad.push_back(i);
      }
    }
    std::sort(bad.begin(), bad.end());
    for (std::size_t k = 0; k < bad.size() && k < 5; ++k) {
      const auto P = ProjPoint::from_index(T.field(Level::qn), static_cast<std::uint64_t>(bad[k]));
      out.examples.push_back(P.to_string() + " weight " + std::to_string(weights[bad[k]]) + " expected " +
                             (rule.kind == RuleKind::at_most ? "<= " : "") +
                             std::to_string(*rule.value(static_cast<std::uint64_t>(bad[k]))));
    }
    out.checked = checked;
    out.violations = violations;
    rep.rules.push_back(std::move(out));
  }
  return rep;
}

// ---------------------------------------------------------------------------

Elem find_disjoint_scalar(const FqSubspace& S) {
  if (S.arity() != 1) throw PreconditionError("find_disjoint_scalar needs a subspace of the field");
  if (2 * S.dim() > S.degree()) throw PreconditionError("find_disjoint_scalar needs 2 dim S <= n");
  const GaloisField& F = S.level();
  for (Elem x = 1; x < F.size(); ++x)
    if (S.intersect(S.scalar_coset(x)).dim() == 0) return x;
  throw std::logic_error("no x with S cap xS = 0 although 2 dim S <= n");
}

FqSubspace build_avoiding_T(const FqSubspace& S, unsigned r) {
  if (r < 2) throw PreconditionError("build_avoiding_T needs r >= 2");
  if (r > S.degree()) throw PreconditionError("build_avoiding_T needs r <= n");
  const Elem x = find_disjoint_scalar(S);
  FqSubspace T(S.level(), S.base(), 1);
  const Elem one = 1;
  T.insert(std::span<const Elem>(&one, 1));
  T.insert(std::span<const Elem>(&x, 1));
  Elem e = 1;
  for (unsigned j = 0; j < S.degree() && T.dim() < r; ++j, e *= S.base().size()) T.insert(std::span<const Elem>(&e, 1));
  return T;
}

bool check_relation_fg(const FieldTower& tower, const LinPoly& f, const LinPoly& g, Elem xi, Elem eta, Exec exec) {
  const GaloisField& mid = mid_of(tower);
  const GaloisField& Fq = fq_of(tower);
  if (mid.size() > 256) throw BoundExceeded("relation check needs q^t <= 2^8");
  // Lettering: xi^2 = a xi + b, eta = A xi + B.
  const XiBasis X(tower, xi);
  const Elem a = X.A(), b = X.B();
  const auto [B, A] = X.split(eta);
  const LinPoly id = LinPoly::identity(mid, Fq);
  const std::uint32_t q = tower.q();
  auto canonical = [&](Elem c) {
    for (Elem l = 2; l < q; ++l)
      if (mid.mul(l, c) < c) return false;
    return true;
  };
  auto ok_pair = [&](Elem a0, Elem a1) {
    const Elem in = mid.add(mid.mul(a1, mid.mul(A, b)), mid.mul(a0, B));
    const Elem out = mid.add(mid.add(mid.mul(a0, A), mid.mul(a1, mid.mul(A, a))), mid.mul(a1, B));
    const LinPoly G = f.compose(id.post_scale(a0) + g.post_scale(in)) - id.post_scale(a1) - g.post_scale(out);
    return G.kernel_dim() <= 1;
  };
  const auto n = static_cast<std::int64_t>(mid.size());
  std::atomic<bool> good{true};
  auto row = [&](std::int64_t i) {
    const Elem a0 = static_cast<Elem>(i);
    for (Elem a1 = 0; a1 < mid.size() && good.load(std::memory_order_relaxed); ++a1) {
      if (a0 == 0 && a1 == 0) continue;
      if (!canonical(a0 != 0 ? a0 : a1)) continue;
      if (!ok_pair(a0, a1)) good = false;
    }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i)
      if (good.load(std::memory_order_relaxed)) row(i);
  } else {
    for (std::int64_t i = 0; i < n && good; ++i) row(i);
  }
  return good;
}

// ---------------------------------------------------------------------------

LinearSet graph_set(const LinPoly& f) {
  FqSubspace U(f.level(), f.base(), 2);
  Elem e = 1;
  for (unsigned j = 0; j < f.degree(); ++j, e *= f.base().size()) U.insert(std::vector<Elem>{e, f(e)});
  return LinearSet(std::move(U));
}

PsiProduct psi_product(const FieldTower& tower, const LinPoly& f, Elem xi) {
  if (f.kernel_dim() != 0) throw PreconditionError("product construction needs ker f = 0, i.e. (1,0) not in L_f");
  const GaloisField& mid = mid_of(tower);
  const FqSubspace S = make_S_f(tower, LinPoly::zero(mid, fq_of(tower)), xi);
  const FqSubspace T = make_S_f(tower, f, xi);
  WeightEnumerator base = weight_enumerator(graph_set(f));
  WeightEnumerator pred;
  pred.add(tower.t(), 2);
  pred = pred + base.scaled(mid.size() - 1);
  return {LinearSet::product(S, T), std::move(base), std::move(pred)};
}

LinearSet psi_of_subspace(const FieldTower& tower, const FqSubspace& U, Elem xi) {
  const GaloisField& top = tower.field(Level::qn);
  const GaloisField& mid = mid_of(tower);
  if (&U.level() != &mid || &U.base() != &fq_of(tower) || U.arity() != 2)
    throw LevelMismatch("psi_of_subspace needs a subspace of F_{q^t}^2 over F_q from the same tower");
  if (!top.contains(xi) || mid.contains(xi)) throw PreconditionError("psi needs xi outside F_{q^t}");
  FqSubspace S(top, fq_of(tower), 1), T(top, fq_of(tower), 1);
  Elem e = 1;
  for (unsigned j = 0; j < mid.degree() / fq_of(tower).degree(); ++j, e *= tower.q())
    S.insert(std::span<const Elem>(&e, 1));
  for (const auto& v : U.basis()) {
    const Elem w = top.add(v[0], top.mul(xi, v[1]));
    T.insert(std::span<const Elem>(&w, 1));
  }
  return LinearSet::product(S, T);
}

std::vector<Elem> field_isomorphism(const GaloisField& from, const GaloisField& to) {
  if (from.size() != to.size() || from.characteristic() != to.characteristic())
    throw PreconditionError("isomorphism needs fields of the same size");
  const std::uint32_t p = from.characteristic();
  const Elem gamma = from.primitive();
  // Minimal polynomial of gamma over F_p: product of (X - gamma^(p^i)).
  poly::Poly mp{1};
  for (unsigned i = 0; i < from.degree(); ++i)
    mp = poly::mul(from, mp, poly::Poly{from.neg(from.frobenius(gamma, p, i)), 1});
  for (Elem c : mp)
    if (c >= p) throw std::logic_error("minimal polynomial coefficient outside the prime field");
  Elem root = 0;
  for (Elem r = 1; r < to.size() && root == 0; ++r) {
    Elem acc = 0;
    for (std::size_t k = mp.size(); k-- > 0;) acc = to.add(to.mul(acc, r), mp[k]);
    if (acc == 0) root = r;
  }
  if (root == 0) throw std::logic_error("no root of the minimal polynomial in the target field");
  std::vector<Elem> table(from.size(), 0);
  const std::uint64_t lr = to.log(root);
  for (Elem x = 1; x < from.size(); ++x) table[x] = to.exp(static_cast<std::uint64_t>(from.log(x)) * lr);
  return table;
}

PsiIterate psi_iterate(std::uint32_t p, unsigned e, unsigned m) {
  if (m < 1) throw PreconditionError("psi_iterate needs m >= 1");
  std::vector<FieldTower> towers;
  towers.push_back(FieldTower::make(p, e, 1));
  const FieldTower& T0 = towers.front();
  const GaloisField& top0 = T0.field(Level::qn);
  const LinPoly f = LinPoly::monomial(top0, fq_of(T0), 1);
  const LinearSet L0 = graph_set(f);
  WeightEnumerator base = weight_enumerator(L0);
  FqSubspace U = L0.subspace();
  for (unsigned j = 1; j < m; ++j) {
    towers.push_back(FieldTower::make(p, e, 1u << j));
    const FieldTower& prev = towers[j - 1];
    const FieldTower& cur = towers[j];
    const auto iso = field_isomorphism(prev.field(Level::qn), mid_of(cur));
    FqSubspace V(mid_of(cur), fq_of(cur), 2);
    for (const auto& v : U.basis()) V.insert(std::vector<Elem>{iso[v[0]], iso[v[1]]});
    U = psi_of_subspace(cur, V, cur.xi().value()).subspace();
  }
  const std::uint64_t q = ipow(p, e);
  WeightEnumerator pred = iterated_enumerator(q, m, base);
  return {std::move(towers), LinearSet(std::move(U)), std::move(base), std::move(pred)};
}

WeightEnumerator iterated_enumerator(std::uint64_t q, unsigned m, const WeightEnumerator& w2) {
  auto prod = [q](unsigned from, unsigned to) {
    std::uint64_t r = 1;
    for (unsigned i = from; i <= to; ++i) r *= ipow(q, 1u << i) - 1;
    return r;
  };
  WeightEnumerator out = w2.scaled(m >= 2 ? prod(1, m - 1) : 1);
  for (unsigned k = 1; k + 1 <= m; ++k) out.add(1u << k, 2 * (k + 1 <= m - 1 ? prod(k + 1, m - 1) : 1));
  return out;
}

std::uint64_t iterated_size(std::uint64_t q, unsigned m, std::uint64_t base_size) {
  auto prod = [q](unsigned from, unsigned to) {
    std::uint64_t r = 1;
    for (unsigned i = from; i <= to; ++i) r *= ipow(q, 1u << i) - 1;
    return r;
  };
  std::uint64_t total = base_size * (m >= 2 ? prod(1, m - 1) : 1);
  for (unsigned k = 1; k + 1 <= m; ++k) total += 2 * (k + 1 <= m - 1 ? prod(k + 1, m - 1) : 1);
  return total;
}

WeightEnumerator subline_iterate_counts(unsigned m) {
  auto prod = [](unsigned from, unsigned to) {
    std::uint64_t r = 1;
    for (unsigned i = from; i <= to; ++i) r *= ipow(2, 1u << i) - 1;
    return r;
  };
  WeightEnumerator out;
  out.add(1, 3 * (m >= 2 ? prod(1, m - 1) : 1));
  for (unsigned k = 1; k <= m - 1; ++k) out.add(1u << k, 2 * (k + 1 <= m - 1 ? prod(k + 1, m - 1) : 1));
  return out;
}

}  // namespace linsets

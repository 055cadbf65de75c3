#include "linsets/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "linsets/evensets.hpp"
#include "linsets/families.hpp"

namespace linsets {

LinPoly Sampler::linpoly(const GaloisField& level, const GaloisField& base) {
  const unsigned m = digits_per_element(level.size(), base.size());
  std::vector<Elem> c(m);
  for (auto& x : c) x = element(level);
  return LinPoly(level, base, std::move(c));
}

FqSubspace Sampler::subspace(const GaloisField& level, const GaloisField& base, unsigned d, unsigned arity) {
  const unsigned m = digits_per_element(level.size(), base.size());
  if (d > m * arity) throw PreconditionError("subspace dimension exceeds the ambient dimension");
  FqSubspace W(level, base, arity);
  Vector v(arity);
  while (W.dim() < d) {
    for (auto& x : v) x = element(level);
    W.insert(v);
  }
  return W;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Ctx {
  const VerifyOptions& opts;
  IdentityTally& tally;
  std::uint64_t bound() const { return opts.max_field + 1; }
};

std::string tag(const FieldTower& T) {
  return "q=" + std::to_string(T.q()) + " t=" + std::to_string(T.t());
}

std::uint64_t field_size(std::uint32_t q, unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < n; ++i) r *= q;
  return r;
}

/// Towers (q prime) from the list whose q^n fits, or just the override.
std::vector<FieldTower> towers(const Ctx& c, std::initializer_list<std::pair<std::uint32_t, unsigned>> list) {
  std::vector<FieldTower> out;
  if (c.opts.tower) {
    out.push_back(*c.opts.tower);
    return out;
  }
  for (auto [q, t] : list)
    if (field_size(q, 2 * t) <= c.opts.max_field) out.push_back(FieldTower::make(q, 1, t));
  return out;
}

FieldTower tower_or(const Ctx& c, std::uint32_t p, unsigned e, unsigned t) {
  return c.opts.tower ? *c.opts.tower : FieldTower::make(p, e, t);
}

// Drops the separator left after the last item of a "; "-joined list.
std::string trimmed(const std::ostringstream& os) {
  std::string s = os.str();
  while (s.size() >= 2 && s.compare(s.size() - 2, 2, "; ") == 0) s.resize(s.size() - 2);
  return s;
}

std::string failed_rules(const FamilyReport& rep) {
  std::ostringstream os;
  for (const auto& r : rep.rules)
    if (r.violations != 0) {
      os << "; " << r.text << ": " << r.violations << " violations";
      if (!r.examples.empty()) os << " e.g. " << r.examples.front();
    }
  if (rep.predicted_enumerator && !(*rep.predicted_enumerator == rep.enumerator))
    os << "; predicted " << rep.predicted_enumerator->to_string();
  if (!rep.identity_ok) os << "; counting identity fails";
  return os.str();
}

FamilyReport run_family(const Ctx& c, const FieldTower& T, const std::string& spec, XiChoice xi = {}) {
  const Family fam = parse_family(T, spec, xi);
  FamilyReport rep = verify_family(fam, c.opts.exec, c.bound());
  c.tally.record(rep.enumerator, T.q(), rep.rank);
  return rep;
}

std::set<unsigned> weights_in(const FamilyReport& rep, Region r) {
  std::set<unsigned> out;
  auto it = rep.realized.find(r);
  if (it != rep.realized.end())
    for (auto [w, n] : it->second)
      if (n) out.insert(w);
  return out;
}

// ---------------------------------------------------------------------------

CheckResult criteria_oracle(const Ctx& c) {
  CheckResult res;
  std::uint64_t instances = 0, points = 0, bad_kernel = 0, bad_alpha = 0;
  std::ostringstream params;
  for (const auto& T : towers(c, {{2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 3}})) {
    if (T.field(Level::qn).size() > c.opts.max_field) throw BoundExceeded("field " + tag(T) + " exceeds --max-field");
    params << tag(T) << "; ";
    const GaloisField& top = T.field(Level::qn);
    const GaloisField& mid = T.field(Level::qt);
    const GaloisField& Fq = T.field(Level::q);
    Sampler rnd(c.opts.seed + T.q() * 100 + T.t());
    for (int i = 0; i < 20; ++i) {
      const LinPoly f = i == 0 ? LinPoly::trace(mid, Fq) : i == 1 ? LinPoly::monomial(mid, Fq, 1) : rnd.linpoly(mid, Fq);
      const LinPoly g = i == 0 ? LinPoly::trace(mid, Fq) : i == 1 ? LinPoly::monomial(mid, Fq, 1) : rnd.linpoly(mid, Fq);
      const Elem xi = i < 2 ? T.xi().value() : rnd.outside(top, mid.size());
      const Elem eta = i % 3 == 0 ? xi : rnd.outside(top, mid.size());
      const FqSubspace S = make_S_f(T, f, xi), Tt = make_S_f(T, g, eta);
      const LinearSet L = LinearSet::product(S, Tt);
      const auto n = static_cast<std::int64_t>(top.size()) + 1;
      std::vector<std::uint8_t> oracle(static_cast<std::size_t>(n));
      std::uint64_t bk = 0, ba = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : bk, ba) if (c.opts.exec == Exec::parallel)
      for (std::int64_t k = 0; k < n; ++k) {
        const auto P = ProjPoint::from_index(top, static_cast<std::uint64_t>(k));
        const unsigned o = weight_oracle(L, P);
        oracle[k] = static_cast<std::uint8_t>(o);
        unsigned wk, wa;
        if (P.infinity) {
          wk = wa = Tt.dim();
        } else if (P.alpha == 0) {
          wk = wa = S.dim();
        } else {
          wk = weight_via_kernel(T, f, xi, g, eta, P.alpha);
          wa = weight_via_alpha(S, Tt, P.alpha);
        }
        bk += wk != o;
        ba += wa != o;
      }
      c.tally.record(enumerator_from_weights(oracle), T.q(), L.rank());
      bad_kernel += bk;
      bad_alpha += ba;
      points += static_cast<std::uint64_t>(n);
      ++instances;
    }
  }
  res.params = params.str() + "20 instances each";
  res.pass = instances > 0 && bad_kernel == 0 && bad_alpha == 0;
  res.detail = std::to_string(instances) + " instances, " + std::to_string(points) + " points; kernel mismatches " +
               std::to_string(bad_kernel) + ", intersection mismatches " + std::to_string(bad_alpha);
  return res;
}

CheckResult heavy_points(const Ctx& c) {
  CheckResult res;
  const auto ts = towers(c, {{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}});
  if (ts.empty()) throw BoundExceeded("no tower fits --max-field");
  Sampler rnd(c.opts.seed + 7);
  std::uint64_t instances = 0, queries = 0, bad = 0;
  std::string first_bad;
  const int total = std::max<int>(50, 12 * static_cast<int>(ts.size()));
  for (int it = 0; it < total; ++it) {
    const FieldTower& T = ts[it % ts.size()];
    const GaloisField& top = T.field(Level::qn);
    const GaloisField& Fq = T.field(Level::q);
    const unsigned cap = std::min(4u, T.n());
    const unsigned ds = 1 + rnd.below(cap), dt = 1 + rnd.below(cap);
    const FqSubspace S = rnd.subspace(top, Fq, ds), Tt = rnd.subspace(top, Fq, dt);
    const LinearSet L = LinearSet::product(S, Tt);
    const auto n = static_cast<std::int64_t>(top.size()) + 1;
    std::vector<std::uint8_t> w(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 16) if (c.opts.exec == Exec::parallel)
    for (std::int64_t k = 0; k < n; ++k)
      w[k] = static_cast<std::uint8_t>(weight_oracle(L, ProjPoint::from_index(top, static_cast<std::uint64_t>(k))));
    c.tally.record(enumerator_from_weights(w), T.q(), L.rank());
    const std::uint64_t excluded = dt <= ds ? 0 : top.size();
    for (unsigned i = 1; i <= std::min(ds, dt); ++i) {
      for (bool exact : {false, true}) {
        std::vector<std::uint64_t> want, got;
        for (std::int64_t k = 0; k < n; ++k)
          if (static_cast<std::uint64_t>(k) != excluded && (exact ? w[k] == i : w[k] >= i))
            want.push_back(static_cast<std::uint64_t>(k));
        for (const auto& P : exact ? points_weight_exactly(S, Tt, i) : points_weight_at_least(S, Tt, i))
          got.push_back(P.index(top));
        std::sort(got.begin(), got.end());
        ++queries;
        if (got != want) {
          ++bad;
          if (first_bad.empty())
            first_bad = "; first mismatch " + tag(T) + " dims " + std::to_string(ds) + "," + std::to_string(dt) +
                        (exact ? " exactly " : " at least ") + std::to_string(i);
        }
      }
    }
    ++instances;
  }
  res.params = std::to_string(instances) + " random S x T, dims <= 4";
  res.pass = bad == 0;
  res.detail = std::to_string(queries) + " queries, " + std::to_string(bad) + " mismatches" + first_bad;
  return res;
}

CheckResult trace_trace_weights(const Ctx& c) {
  CheckResult res;
  std::vector<FieldTower> runs{tower_or(c, 3, 1, 3)};
  std::string skipped;
  if (!c.opts.tower) {
    if (field_size(3, 8) <= c.opts.max_field)
      runs.push_back(FieldTower::make(3, 1, 4));
    else
      skipped = "; q=3 t=4 skipped (6561 > max-field)";
  }
  res.pass = true;
  std::ostringstream detail, params;
  for (const auto& T : runs) {
    const auto rep = run_family(c, T, "trace-trace", XiChoice{XiChoice::Mode::automatic, 0});
    const unsigned t = T.t();
    const auto out = weights_in(rep, Region::outside);
    const bool table = rep.notes.empty() && weights_in(rep, Region::middle) == std::set<unsigned>{t - 2} &&
                       weights_in(rep, Region::base_star) == std::set<unsigned>{t} &&
                       std::includes(std::set<unsigned>{0, 1}.begin(), std::set<unsigned>{0, 1}.end(), out.begin(),
                                     out.end());
    const bool ok = rep.pass() && table;
    res.pass = res.pass && ok;
    params << tag(T) << " xi=" << rep.xi << "; ";
    detail << tag(T) << ": " << rep.enumerator.to_string() << (ok ? "" : " MISMATCH") << failed_rules(rep);
    for (const auto& n : rep.notes) detail << " (" << n << ")";
    detail << "; ";
  }
  res.params = trimmed(params);
  res.detail = trimmed(detail) + skipped;
  return res;
}

CheckResult monomial_weights(const Ctx& c) {
  CheckResult res;
  const FieldTower T = tower_or(c, 3, 1, 3);
  const auto rep = run_family(c, T, "monomial:s=1", XiChoice{XiChoice::Mode::automatic, 0});
  const unsigned t = T.t();
  const auto out = weights_in(rep, Region::outside);
  const bool table = rep.notes.empty() && weights_in(rep, Region::middle) == std::set<unsigned>{0} &&
                     weights_in(rep, Region::base_star) == std::set<unsigned>{t} &&
                     std::includes(std::set<unsigned>{0, 1}.begin(), std::set<unsigned>{0, 1}.end(), out.begin(),
                                   out.end());
  res.params = tag(T) + " s=1 xi=" + rep.xi;
  res.pass = rep.pass() && table;
  res.detail = rep.enumerator.to_string() + failed_rules(rep);
  for (const auto& n : rep.notes) res.detail += " (" + n + ")";
  return res;
}

CheckResult binomial_bounds(const Ctx& c) {
  CheckResult res;
  const FieldTower T = tower_or(c, 2, 1, 5);
  const Family fam = parse_family(T, "lp:s=1");
  FamilyReport rep = verify_family(fam, c.opts.exec, c.bound());
  c.tally.record(rep.enumerator, T.q(), rep.rank);
  // Weight t among alpha != 0 occurs exactly on F_q^*.
  const unsigned t = T.t();
  bool top_only_base = true;
  for (Region r : {Region::middle, Region::outside})
    if (weights_in(rep, r).count(t)) top_only_base = false;
  const bool base_all_t = weights_in(rep, Region::base_star) == std::set<unsigned>{t};
  res.params = tag(T) + " s=1 delta=" + std::to_string(fam.delta);
  res.pass = rep.pass() && top_only_base && base_all_t;
  res.detail = rep.enumerator.to_string() + failed_rules(rep);
  for (const auto& n : rep.notes) res.detail += " (" + n + ")";
  return res;
}

CheckResult bound_suite(const Ctx& c, const std::string& kind) {
  CheckResult res;
  res.pass = true;
  std::uint64_t runs = 0;
  std::ostringstream detail, params;
  for (const auto& T : towers(c, {{2, 3}, {3, 2}})) {
    params << tag(T) << "; ";
    const GaloisField& mid = T.field(Level::qt);
    const GaloisField& Fq = T.field(Level::q);
    std::vector<std::string> specs;
    if (kind == "xq-trace") {
      specs.push_back("xq-trace");
    } else {
      Sampler rnd(c.opts.seed + 11 * T.q() + T.t());
      std::vector<LinPoly> fs{LinPoly::monomial(mid, Fq, 1), LinPoly::trace(mid, Fq)};
      for (int i = 0; i < 6; ++i) fs.push_back(rnd.linpoly(mid, Fq));
      for (const auto& f : fs) specs.push_back(kind + ":f=" + f.to_string());
    }
    for (const auto& s : specs) {
      const auto rep = run_family(c, T, s);
      ++runs;
      if (!rep.pass()) {
        res.pass = false;
        detail << tag(T) << " " << s << failed_rules(rep) << "; ";
      }
    }
  }
  res.params = trimmed(params);
  if (runs == 0) throw BoundExceeded("no tower fits --max-field");
  res.detail = std::to_string(runs) + " families scanned" + (res.pass ? "" : ": " + trimmed(detail));
  return res;
}

CheckResult product_enumerator(const Ctx& c) {
  CheckResult res;
  res.pass = true;
  std::ostringstream detail;
  std::vector<FieldTower> runs;
  if (c.opts.tower)
    runs.push_back(*c.opts.tower);
  else
    runs = {FieldTower::make(2, 1, 2), FieldTower::make(3, 1, 2)};
  for (const auto& T : runs) {
    const GaloisField& mid = T.field(Level::qt);
    const LinPoly f = LinPoly::monomial(mid, T.field(Level::q), 1);
    const PsiProduct P = psi_product(T, f, T.xi().value());
    const WeightEnumerator e = weight_enumerator(P.set, c.opts.exec, c.bound());
    c.tally.record(e, T.q(), P.set.rank());
    c.tally.record(P.base, T.q(), 2);
    bool ok = e == P.predicted;
    const std::uint64_t q = T.q();
    if (T.t() == 2) ok = ok && e.size() == q * q * q + q * q - q + 1;
    if (!c.opts.tower) {
      const std::string want = q == 2 ? "2X^2 + 9X" : "2X^2 + 32X";
      ok = ok && e.to_string() == want;
    }
    const auto rep = run_family(c, T, "psi-product:f=X^q");
    ok = ok && rep.pass();
    res.pass = res.pass && ok;
    detail << tag(T) << ": " << e.to_string() << ", size " << e.size() << (ok ? "" : " MISMATCH (predicted " + P.predicted.to_string() + ")") << "; ";
  }
  res.params = "subline base set";
  res.detail = trimmed(detail);
  return res;
}

CheckResult iterated_product(const Ctx& c) {
  CheckResult res;
  res.pass = true;
  std::vector<unsigned> ms = c.opts.m ? std::vector<unsigned>{*c.opts.m} : std::vector<unsigned>{2, 3};
  const std::uint32_t p = c.opts.tower ? c.opts.tower->p() : 2;
  const unsigned e = c.opts.tower ? c.opts.tower->e() : 1;
  std::ostringstream detail;
  for (unsigned m : ms) {
    const std::uint64_t q = field_size(p, e);
    if (m > 5 || field_size(static_cast<std::uint32_t>(q), 1u << m) > std::max<std::uint64_t>(c.opts.max_field, 1u << 16))
      throw BoundExceeded("iterate m=" + std::to_string(m) + " is beyond the scan bound");
    const PsiIterate P = psi_iterate(p, e, m);
    const WeightEnumerator got = weight_enumerator(P.set, c.opts.exec, kMaxFieldSize + 1);
    c.tally.record(got, q, P.set.rank());
    bool ok = got == P.predicted && got.size() == iterated_size(q, m, P.base.size());
    if (q == 2) ok = ok && got == subline_iterate_counts(m);
    res.pass = res.pass && ok;
    detail << "m=" << m << ": " << got.to_string() << ", size " << got.size() << (ok ? "" : " MISMATCH (closed form " + P.predicted.to_string() + ")") << "; ";
  }
  res.params = "q=" + std::to_string(field_size(p, e)) + " subline";
  res.detail = trimmed(detail);
  return res;
}

std::string spectrum_text(const EvenSetReport& r) {
  std::ostringstream os;
  bool first = true;
  for (auto [k, n] : r.spectrum) {
    os << (first ? "" : ",") << k << ":" << n;
    first = false;
  }
  return os.str();
}

CheckResult even_set(const Ctx& c) {
  CheckResult res;
  const unsigned m = c.opts.m.value_or(2);
  const EvenSetCheck iter = verify_cor_evenset(m, c.opts.exec);
  const unsigned s = digits_per_element(static_cast<std::uint32_t>(iter.report.q), 2);
  c.tally.record(iter.report.lg_enumerator, 2, s);
  res.pass = iter.pass() && iter.report.line_count() == plane_size(iter.report.q);
  res.params = "q=" + std::to_string(iter.report.q) + " m=" + std::to_string(m);
  res.detail = "iterate: size " + std::to_string(iter.report.size) + " spectrum {" + spectrum_text(iter.report) + "} over " +
               std::to_string(iter.report.line_count()) + " lines" + (iter.pass() ? "" : " MISMATCH");
  if (m == 2) {
    const EvenSetCheck sc = scattered_even_set(2, c.opts.exec);
    c.tally.record(sc.report.lg_enumerator, 2, s);
    const bool agree = sc.report.size == iter.report.size && sc.report.spectrum == iter.report.spectrum;
    std::set<std::uint32_t> allowed{0, 2, 4, 6};
    const auto sizes = iter.report.spectrum_sizes();
    const bool within = std::includes(allowed.begin(), allowed.end(), sizes.begin(), sizes.end());
    res.pass = res.pass && sc.pass() && agree && within && iter.report.line_count() == 273;
    res.detail += "; scattered product: size " + std::to_string(sc.report.size) + (agree ? ", agrees" : ", DISAGREES");
  }
  return res;
}

CheckResult subspace_polynomial_norm(const Ctx& c) {
  CheckResult res;
  Sampler rnd(c.opts.seed + 13);
  std::map<std::pair<std::uint32_t, unsigned>, FieldTower> cache;
  std::uint64_t good = 0, bad = 0, bad_roots = 0;
  for (int i = 0; i < 100; ++i) {
    const std::uint32_t q = i % 2 ? 3 : 2;
    const unsigned t = 2 + (i / 2) % 2;
    auto it = cache.find({q, t});
    if (it == cache.end()) it = cache.emplace(std::pair{q, t}, FieldTower::make(q, 1, t)).first;
    const FieldTower& T = it->second;
    const GaloisField& mid = T.field(Level::qt);
    const GaloisField& Fq = T.field(Level::q);
    const unsigned k = 1 + static_cast<unsigned>(rnd.below(std::min(3u, t)));
    std::vector<unsigned> ss;
    for (unsigned s = 1; s < t; ++s)
      if (std::gcd(s, t) == 1) ss.push_back(s);
    const unsigned s = ss[rnd.below(ss.size())];
    const FqSubspace W = rnd.subspace(mid, Fq, k);
    auto coeffs = subspace_polynomial_coeffs(W, s);
    // The root set must be exactly W.
    const LinPoly P = subspace_polynomial(W, s);
    std::uint64_t roots = 0;
    bool inside = true;
    for (Elem x = 0; x < mid.size(); ++x)
      if (P(x) == 0) {
        ++roots;
        inside = inside && W.member(x);
      }
    if (!inside || roots != W.cardinality()) ++bad_roots;
    // Shape c_0 X + ... + c_{k-1} X^(q^(s(k-1))) - X^(q^(sk)).
    for (auto& x : coeffs) x = mid.neg(x);
    (normcond_check(mid, Fq, coeffs, s) ? good : bad) += 1;
  }
  res.params = "100 random subspaces, dims 1-3, q in {2,3}, t in {2,3}";
  res.pass = bad == 0 && bad_roots == 0;
  res.detail = std::to_string(good) + " satisfy the norm condition, " + std::to_string(bad) + " fail; " +
               std::to_string(bad_roots) + " root-set mismatches";
  return res;
}

CheckResult two_heavy_points(const Ctx& c) {
  CheckResult res;
  std::vector<FieldTower> ts;
  if (c.opts.tower) {
    ts.push_back(*c.opts.tower);
  } else {
    for (auto [p, e, t] : {std::tuple{2u, 1u, 2u}, {2u, 1u, 3u}, {2u, 1u, 4u}, {3u, 1u, 2u}, {3u, 1u, 3u}, {2u, 2u, 2u}})
      if (field_size(field_size(p, e), 2 * t) <= c.opts.max_field) ts.push_back(FieldTower::make(p, e, t));
  }
  Sampler rnd(c.opts.seed + 17);
  std::uint64_t instances = 0, yes = 0, bad = 0;
  std::string first_bad;
  for (const auto& T : ts) {
    if (T.field(Level::qt).size() > 256) throw BoundExceeded("relation check needs q^t <= 256");
    const GaloisField& top = T.field(Level::qn);
    const GaloisField& mid = T.field(Level::qt);
    const GaloisField& Fq = T.field(Level::q);
    const Elem xi = T.xi().value();
    for (int i = 0; i < 4; ++i) {
      LinPoly f = LinPoly::monomial(mid, Fq, 1), g = f;
      Elem eta = xi;
      if (i == 1) f = LinPoly::trace(mid, Fq);
      if (i == 2) eta = rnd.outside(top, mid.size());
      if (i == 3) {
        f = rnd.linpoly(mid, Fq);
        g = rnd.linpoly(mid, Fq);
        eta = rnd.outside(top, mid.size());
      }
      const bool rel = check_relation_fg(T, f, g, xi, eta, c.opts.exec);
      const FqSubspace Sg = make_S_f(T, g, eta), Sf = make_S_f(T, f, xi);
      const LinearSet L = LinearSet::product(Sg, Sf);
      const auto w = point_weights(L, c.opts.exec, c.bound());
      c.tally.record(enumerator_from_weights(w), T.q(), L.rank());
      const bool direct = std::count_if(w.begin(), w.end(), [](auto x) { return x > 1; }) == 2;
      const bool block = T.t() >= 2 ? two_heavy_points_check(Sg, Sf) : direct;
      ++instances;
      yes += direct;
      if (rel != direct || block != direct) {
        ++bad;
        if (first_bad.empty()) first_bad = "; first disagreement at " + tag(T) + " instance " + std::to_string(i);
      }
    }
  }
  res.params = std::to_string(instances) + " instances, q^t <= 256";
  res.pass = instances >= (c.opts.tower ? 1u : 10u) && bad == 0;
  res.detail = std::to_string(yes) + " with exactly two heavy points, " + std::to_string(instances - yes) +
               " without; " + std::to_string(bad) + " disagreements" + first_bad;
  return res;
}

CheckResult rank_weight_duality(const Ctx& c) {
  CheckResult res;
  std::uint64_t n = 0, bad = 0;
  Sampler rnd(c.opts.seed + 19);
  for (const auto& T : towers(c, {{2, 2}, {2, 3}, {3, 2}})) {
    const GaloisField& top = T.field(Level::qn);
    const GaloisField& Fq = T.field(Level::q);
    for (int i = 0; i < 10; ++i) {
      const FqSubspace S = rnd.subspace(top, Fq, 1 + rnd.below(T.n()));
      const FqSubspace Tt = rnd.subspace(top, Fq, 1 + rnd.below(T.n()));
      for (int j = 0; j < 20; ++j) {
        Elem x0 = rnd.element(top), x1 = rnd.element(top);
        if (x0 == 0 && x1 == 0) x1 = 1;
        ++n;
        bad += rank_weight(S, Tt, x0, x1) != rank_weight_direct(S, Tt, x0, x1);
      }
    }
  }
  res.params = "random S x T codes";
  res.pass = n > 0 && bad == 0;
  res.detail = std::to_string(n) + " codewords, " + std::to_string(bad) + " mismatches";
  return res;
}

CheckResult serial_parallel(const Ctx& c) {
  CheckResult res;
  std::uint64_t compared = 0, bad = 0;
  for (const auto& T : towers(c, {{2, 3}, {3, 2}, {3, 3}})) {
    for (const char* spec : {"trace-trace", "xq-trace", "f-f:f=X^q"}) {
      const Family fam = parse_family(T, spec);
      const LinearSet L = fam.linear_set();
      ++compared;
      bad += point_weights(L, Exec::serial, c.bound()) != point_weights(L, Exec::parallel, c.bound());
    }
  }
  const auto a = verify_cor_evenset(1, Exec::serial), b = verify_cor_evenset(1, Exec::parallel);
  ++compared;
  bad += a.report.spectrum != b.report.spectrum;
  res.params = "point scans and line scans";
  res.pass = bad == 0;
  res.detail = std::to_string(compared) + " scans compared, " + std::to_string(bad) + " differ";
  return res;
}

CheckResult counting_identity(const Ctx& c) {
  CheckResult res;
  Sampler rnd(c.opts.seed + 23);
  std::uint64_t own = 0;
  for (const auto& T : towers(c, {{2, 2}, {2, 3}, {3, 2}, {3, 3}})) {
    const GaloisField& top = T.field(Level::qn);
    const GaloisField& Fq = T.field(Level::q);
    for (unsigned d = 1; d <= 2 * T.n(); ++d) {
      const LinearSet L(rnd.subspace(top, Fq, d, 2));
      c.tally.record(weight_enumerator(L, c.opts.exec, c.bound()), T.q(), L.rank());
      ++own;
    }
  }
  res.params = "every linear set built by the checks run so far";
  res.pass = c.tally.checked > 0 && c.tally.failed == 0;
  res.detail = std::to_string(c.tally.checked.load()) + " linear sets (" + std::to_string(own) +
               " random, any rank), " + std::to_string(c.tally.failed.load()) + " violate the identity";
  return res;
}

using CheckFn = CheckResult (*)(const Ctx&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> r{
      {"criteria-oracle", criteria_oracle},
      {"heavy-points", heavy_points},
      {"trace-trace-weights", trace_trace_weights},
      {"monomial-weights", monomial_weights},
      {"binomial-bounds", binomial_bounds},
      {"f-trace-bounds", [](const Ctx& c) { return bound_suite(c, "f-trace"); }},
      {"xq-trace-bounds", [](const Ctx& c) { return bound_suite(c, "xq-trace"); }},
      {"f-f-bounds", [](const Ctx& c) { return bound_suite(c, "f-f"); }},
      {"product-enumerator", product_enumerator},
      {"iterated-product", iterated_product},
      {"even-set", even_set},
      {"subspace-polynomial-norm", subspace_polynomial_norm},
      {"two-heavy-points", two_heavy_points},
      {"rank-weight-duality", rank_weight_duality},
      {"serial-parallel", serial_parallel},
      {"counting-identity", counting_identity},
  };
  return r;
}

CheckResult timed(const std::string& name, CheckFn fn, const Ctx& c) {
  const auto t0 = Clock::now();
  CheckResult r = fn(c);
  r.name = name;
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

CheckResult run_check(const std::string& name, const VerifyOptions& opts) {
  IdentityTally local;
  const Ctx c{opts, opts.tally ? *opts.tally : local};
  for (const auto& [n, fn] : registry())
    if (n == name) return timed(n, fn, c);
  throw ParseError("unknown check '" + name + "'");
}

std::vector<CheckResult> run_all(const VerifyOptions& opts, const std::function<void(const CheckResult&)>& on_result) {
  IdentityTally local;
  const Ctx c{opts, opts.tally ? *opts.tally : local};
  std::vector<CheckResult> out;
  for (const auto& [n, fn] : registry()) {
    out.push_back(timed(n, fn, c));
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace linsets

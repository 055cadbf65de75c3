#include "linsets/cli.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "linsets/evensets.hpp"
#include "linsets/families.hpp"
#include "linsets/verify.hpp"

namespace linsets {

using Json = nlohmann::ordered_json;

namespace {

template <class T>
T parse_num(std::string_view s, std::string_view what) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto end = s.find(sep, start);
    out.emplace_back(s.substr(start, end == std::string_view::npos ? s.npos : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string join(const std::vector<std::string>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? std::string(1, sep) : "") + v[i];
  return out;
}

}  // namespace

std::pair<std::uint32_t, unsigned> parse_q(std::string_view text) {
  const auto caret = text.find('^');
  if (caret != std::string_view::npos) {
    const auto p = parse_num<std::uint32_t>(text.substr(0, caret), "characteristic");
    const auto e = parse_num<unsigned>(text.substr(caret + 1), "exponent");
    if (!is_prime(p) || e == 0) throw ParseError("q must be p^e with p prime and e >= 1");
    return {p, e};
  }
  const std::uint64_t q = parse_num<std::uint64_t>(text, "q");
  for (std::uint32_t p = 2; std::uint64_t{p} * p <= q || p == q; ++p) {
    if (q % p) continue;
    std::uint64_t r = q;
    unsigned e = 0;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    if (r != 1) break;
    return {p, e};
  }
  if (q >= 2 && is_prime(q)) return {static_cast<std::uint32_t>(q), 1};
  throw ParseError("q = " + std::string(text) + " is not a prime power");
}

// ---------------------------------------------------------------------------

std::string RunConfig::canonical() const {
  std::vector<std::string> kv;
  auto put = [&](const char* k, const std::string& v) { kv.push_back(std::string(k) + "=" + v); };
  put("cmd", command);
  if (p) put("p", std::to_string(*p));
  if (e) put("e", std::to_string(*e));
  if (t) put("t", std::to_string(*t));
  if (!family.empty()) put("family", family);
  if (!S.empty()) put("S", S);
  if (!T.empty()) put("T", T);
  put("xi", xi);
  put("format", format);
  if (!output.empty()) put("output", output);
  if (bound) put("bound", std::to_string(bound));
  if (threads) put("threads", std::to_string(threads));
  if (dry_run) put("dry-run", "1");
  if (m) put("m", std::to_string(*m));
  if (!g.empty()) put("g", g);
  if (scattered_t) put("scattered-t", std::to_string(*scattered_t));
  if (!only.empty()) put("only", join(only, ','));
  if (all) put("all", "1");
  put("max-field", std::to_string(max_field));
  if (weight) put("weight", std::to_string(*weight));
  if (exact) put("exact", "1");
  if (x0) put("x0", std::to_string(*x0));
  if (x1) put("x1", std::to_string(*x1));
  if (list_points) put("list-points", "1");
  return join(kv, ';');
}

RunConfig RunConfig::parse_canonical(std::string_view text) {
  RunConfig c;
  c.max_field = 4096;
  for (const auto& item : split(text, ';')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("config entry without '=': " + item);
    const std::string k = item.substr(0, eq), v = item.substr(eq + 1);
    if (k == "cmd") c.command = v;
    else if (k == "p") c.p = parse_num<std::uint32_t>(v, k);
    else if (k == "e") c.e = parse_num<unsigned>(v, k);
    else if (k == "t") c.t = parse_num<unsigned>(v, k);
    else if (k == "family") c.family = v;
    else if (k == "S") c.S = v;
    else if (k == "T") c.T = v;
    else if (k == "xi") c.xi = v;
    else if (k == "format") c.format = v;
    else if (k == "output") c.output = v;
    else if (k == "bound") c.bound = parse_num<std::uint64_t>(v, k);
    else if (k == "threads") c.threads = parse_num<unsigned>(v, k);
    else if (k == "dry-run") c.dry_run = v == "1";
    else if (k == "m") c.m = parse_num<unsigned>(v, k);
    else if (k == "g") c.g = v;
    else if (k == "scattered-t") c.scattered_t = parse_num<unsigned>(v, k);
    else if (k == "only") c.only = split(v, ',');
    else if (k == "all") c.all = v == "1";
    else if (k == "max-field") c.max_field = parse_num<std::uint64_t>(v, k);
    else if (k == "weight") c.weight = parse_num<unsigned>(v, k);
    else if (k == "exact") c.exact = v == "1";
    else if (k == "x0") c.x0 = parse_num<std::uint64_t>(v, k);
    else if (k == "x1") c.x1 = parse_num<std::uint64_t>(v, k);
    else if (k == "list-points") c.list_points = v == "1";
    else throw ParseError("unknown config key '" + k + "'");
  }
  return c;
}

// ---------------------------------------------------------------------------

namespace {

class Printer {
 public:
  Printer(std::ostream& os, bool records) : os_(os), records_(records) {}
  bool records() const { return records_; }
  void record(const Json& j) {
    if (records_) os_ << j.dump() << '\n';
  }
  std::ostream& table() { return records_ ? sink_ : os_; }

 private:
  std::ostream& os_;
  bool records_;
  std::ostringstream sink_;
};

Json enumerator_json(const WeightEnumerator& e) {
  Json j = Json::object();
  for (auto it = e.counts().rbegin(); it != e.counts().rend(); ++it) j[std::to_string(it->first)] = it->second;
  return j;
}

std::string enumerator_terms(const WeightEnumerator& e) {
  std::string s;
  for (auto it = e.counts().rbegin(); it != e.counts().rend(); ++it)
    s += (s.empty() ? "" : " ") + ("A_" + std::to_string(it->first) + "=" + std::to_string(it->second));
  return s;
}

FieldTower need_tower(const RunConfig& c) {
  if (!c.p) throw ParseError("field not given: use --p/--e/--t or --q p^e --t t");
  if (!c.t) throw ParseError("--t is required");
  return FieldTower::make(*c.p, c.e.value_or(1), *c.t);
}

std::uint64_t bound_of(const RunConfig& c) { return c.bound ? c.bound : kDefaultEnumerationBound; }

std::vector<Elem> element_list(const GaloisField& F, const std::string& text) {
  std::vector<Elem> out;
  for (const auto& s : split(text, ',')) {
    const auto v = parse_num<std::uint64_t>(s, "element index");
    if (v >= F.size()) throw ParseError("element " + s + " is not in a field of size " + std::to_string(F.size()));
    out.push_back(static_cast<Elem>(v));
  }
  return out;
}

struct Blocks {
  std::optional<Family> family;
  std::optional<FqSubspace> S, T;
};

Blocks blocks(const RunConfig& c, const FieldTower& tower) {
  Blocks b;
  if (!c.family.empty()) {
    b.family = parse_family(tower, c.family, XiChoice::parse(c.xi));
    b.S = b.family->S();
    b.T = b.family->T();
  } else if (!c.S.empty() && !c.T.empty()) {
    const GaloisField& top = tower.field(Level::qn);
    const GaloisField& Fq = tower.field(Level::q);
    b.S = FqSubspace::span_elements(top, Fq, element_list(top, c.S));
    b.T = FqSubspace::span_elements(top, Fq, element_list(top, c.T));
  } else {
    throw ParseError("give --family or both --S and --T");
  }
  return b;
}

// ---------------------------------------------------------------------------

int cmd_field_info(const RunConfig& c, Printer& pr) {
  const FieldTower T = need_tower(c);
  Json j;
  j["kind"] = "field";
  j["tower"] = T.serialize();
  j["p"] = T.p();
  j["q"] = T.q();
  j["t"] = T.t();
  j["qt"] = T.field(Level::qt).size();
  j["qn"] = T.field(Level::qn).size();
  j["xi"] = T.xi().value();
  j["xi_A"] = T.xi_A().value();
  j["xi_B"] = T.xi_B().value();
  pr.record(j);
  auto& os = pr.table();
  os << "tower   " << T.serialize() << '\n'
     << "sizes   p=" << T.p() << " q=" << T.q() << " q^t=" << T.field(Level::qt).size()
     << " q^n=" << T.field(Level::qn).size() << '\n'
     << "xi      " << T.xi().value() << "  (xi^2 = " << T.xi_A().value() << " xi + " << T.xi_B().value() << ")\n";
  return kExitPass;
}

int psi_weights(const RunConfig& c, Printer& pr) {
  unsigned m = 0;
  const auto colon = c.family.find(':');
  for (const auto& item : split(colon == std::string::npos ? "" : c.family.substr(colon + 1), ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("family parameter must be key=value, got '" + item + "'");
    const std::string k = item.substr(0, eq), v = item.substr(eq + 1);
    if (k == "m") m = parse_num<unsigned>(v, "m");
    else if (k == "base") {
      if (v != "subline") throw ParseError("only base=subline is supported");
    } else throw ParseError("unknown psi parameter '" + k + "'");
  }
  if (m == 0) throw ParseError("psi family needs m >= 1");
  if (!c.p) throw ParseError("field not given");
  if (c.t && *c.t != (1u << (m - 1)))
    throw PreconditionError("psi:m=" + std::to_string(m) + " lives over t = " + std::to_string(1u << (m - 1)));
  const PsiIterate P = psi_iterate(*c.p, c.e.value_or(1), m);
  const WeightEnumerator e = weight_enumerator(P.set, Exec::parallel, bound_of(c));
  const std::uint64_t q = P.towers.front().q();
  const bool id = e.identity_holds(q, P.set.rank());
  const bool pass = id && e == P.predicted;
  Json j;
  j["kind"] = "summary";
  j["family"] = c.family;
  j["tower"] = P.towers.back().serialize();
  j["rank"] = P.set.rank();
  j["enumerator"] = enumerator_json(e);
  j["predicted"] = enumerator_json(P.predicted);
  j["identity"] = id;
  j["pass"] = pass;
  pr.record(j);
  pr.table() << "family     " << c.family << '\n'
             << "rank       " << P.set.rank() << '\n'
             << "enumerator " << e.to_string() << "  (" << enumerator_terms(e) << ", size " << e.size() << ")\n"
             << "predicted  " << P.predicted.to_string() << '\n'
             << "identity   " << (id ? "ok" : "FAILS") << '\n'
             << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? kExitPass : kExitMismatch;
}

int cmd_weights(const RunConfig& c, Printer& pr) {
  if (c.family.rfind("psi:", 0) == 0) return psi_weights(c, pr);
  const FieldTower T = need_tower(c);
  const Blocks b = blocks(c, T);
  if (!b.family) {
    const LinearSet L = LinearSet::product(*b.S, *b.T);
    const WeightEnumerator e = weight_enumerator(L, Exec::parallel, bound_of(c));
    const bool id = e.identity_holds(T.q(), L.rank());
    Json j;
    j["kind"] = "summary";
    j["tower"] = T.serialize();
    j["S"] = b.S->to_string();
    j["T"] = b.T->to_string();
    j["rank"] = L.rank();
    j["enumerator"] = enumerator_json(e);
    j["identity"] = id;
    j["pass"] = id;
    pr.record(j);
    pr.table() << "rank       " << L.rank() << '\n'
               << "enumerator " << e.to_string() << "  (" << enumerator_terms(e) << ")\n"
               << "identity   " << (id ? "ok" : "FAILS") << '\n'
               << (id ? "PASS" : "FAIL") << '\n';
    return id ? kExitPass : kExitMismatch;
  }
  const FamilyReport rep = verify_family(*b.family, Exec::parallel, bound_of(c));
  Json j;
  j["kind"] = "summary";
  j["family"] = rep.family;
  j["tower"] = rep.tower;
  j["xi"] = rep.xi;
  j["rank"] = rep.rank;
  j["enumerator"] = enumerator_json(rep.enumerator);
  j["identity"] = rep.identity_ok;
  pr.record(j);
  auto& os = pr.table();
  os << "family     " << rep.family << "  xi=" << rep.xi << '\n'
     << "tower      " << rep.tower << '\n'
     << "rank       " << rep.rank << '\n'
     << "enumerator " << rep.enumerator.to_string() << "  (" << enumerator_terms(rep.enumerator) << ")\n"
     << "identity   " << (rep.identity_ok ? "ok" : "FAILS") << '\n';
  for (const auto& [region, ws] : rep.realized) {
    Json r;
    r["kind"] = "region";
    r["region"] = to_string(region);
    Json w = Json::object();
    os << "  " << to_string(region) << ':';
    for (auto [wt, n] : ws) {
      w[std::to_string(wt)] = n;
      os << " w" << wt << "=" << n;
    }
    os << '\n';
    r["weights"] = w;
    pr.record(r);
  }
  for (const auto& o : rep.rules) {
    Json r;
    r["kind"] = "rule";
    r["rule"] = o.text;
    r["checked"] = o.checked;
    r["violations"] = o.violations;
    r["examples"] = o.examples;
    pr.record(r);
    os << "  rule: " << o.text << "  checked " << o.checked << ", violations " << o.violations << '\n';
    for (const auto& ex : o.examples) os << "    " << ex << '\n';
  }
  for (const auto& n : rep.notes) {
    pr.record(Json{{"kind", "note"}, {"note", n}});
    os << "  note: " << n << '\n';
  }
  if (rep.predicted_enumerator) {
    pr.record(Json{{"kind", "prediction"}, {"enumerator", enumerator_json(*rep.predicted_enumerator)}});
    os << "  predicted enumerator " << rep.predicted_enumerator->to_string() << '\n';
  }
  const bool pass = rep.pass();
  pr.record(Json{{"kind", "result"}, {"pass", pass}});
  os << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? kExitPass : kExitMismatch;
}

int cmd_points(const RunConfig& c, Printer& pr) {
  if (!c.weight || *c.weight == 0) throw ParseError("points needs --weight i >= 1");
  const FieldTower T = need_tower(c);
  const Blocks b = blocks(c, T);
  const unsigned i = *c.weight;
  const GaloisField& top = T.field(Level::qn);
  if (i > std::min(b.S->dim(), b.T->dim())) throw PreconditionError("weight must be <= min(dim S, dim T)");
  const LinearSet L = LinearSet::product(*b.S, *b.T);
  std::vector<ProjPoint> pts = c.exact ? points_weight_exactly(*b.S, *b.T, i, bound_of(c))
                                       : points_weight_at_least(*b.S, *b.T, i, bound_of(c));
  // The axis point carrying the larger block is left out by the subspace method.
  const bool swap = b.T->dim() > b.S->dim();
  const ProjPoint axis = swap ? ProjPoint::inf() : ProjPoint::at(0);
  const unsigned axis_w = swap ? b.T->dim() : b.S->dim();
  if (c.exact ? axis_w == i : axis_w >= i) pts.push_back(axis);
  std::sort(pts.begin(), pts.end(), [&](const ProjPoint& a, const ProjPoint& z) { return a.index(top) < z.index(top); });
  // Cross-check against a full scan.
  const auto w = point_weights(L, Exec::parallel, bound_of(c));
  std::vector<std::uint64_t> want, got;
  for (std::uint64_t k = 0; k < w.size(); ++k)
    if (c.exact ? w[k] == i : w[k] >= i) want.push_back(k);
  for (const auto& P : pts) got.push_back(P.index(top));
  const bool pass = want == got;
  auto& os = pr.table();
  os << "points of weight " << (c.exact ? "= " : ">= ") << i << ": " << pts.size() << '\n';
  for (const auto& P : pts) {
    pr.record(Json{{"kind", "point"}, {"point", P.to_string()}, {"weight", w[P.index(top)]}});
    os << "  " << P.to_string() << "  weight " << unsigned{w[P.index(top)]} << '\n';
  }
  pr.record(Json{{"kind", "result"}, {"count", pts.size()}, {"scan_agrees", pass}, {"pass", pass}});
  os << (pass ? "PASS" : "FAIL (scan disagrees)") << '\n';
  return pass ? kExitPass : kExitMismatch;
}

void print_evenset(const EvenSetReport& r, Printer& pr, bool list, std::optional<std::uint64_t> expected_size) {
  Json j;
  j["kind"] = "evenset";
  j["q"] = r.q;
  j["size"] = r.size;
  Json sp = Json::object();
  for (auto [k, n] : r.spectrum) sp[std::to_string(k)] = n;
  j["spectrum"] = sp;
  j["lines"] = r.line_count();
  j["even"] = r.even;
  j["lg_size"] = r.lg_size;
  j["lg_enumerator"] = r.lg_enumerator.to_string();
  j["size_formula"] = r.size_formula_ok;
  j["direction_rule"] = r.direction_rule_ok;
  j["axis_line"] = r.axis_line_ok;
  if (expected_size) j["expected_size"] = *expected_size;
  pr.record(j);
  auto& os = pr.table();
  os << "q          " << r.q << '\n'
     << "size       " << r.size << "  (2q + 1 - |L_g| = " << 2 * r.q + 1 - r.lg_size << ")\n"
     << "L_g        " << r.lg_enumerator.to_string() << ", " << r.lg_size << " points\n"
     << "spectrum   ";
  for (auto [k, n] : r.spectrum) os << k << ':' << n << ' ';
  os << "(" << r.line_count() << " lines)\n"
     << "even       " << (r.even ? "yes" : "NO") << '\n'
     << "directions " << (r.direction_rule_ok ? "ok" : "FAIL") << ", line X=0 " << (r.axis_line_ok ? "ok" : "FAIL")
     << '\n';
  if (list) {
    Json pts = Json::array();
    os << "points    ";
    for (auto i : r.points) {
      const auto P = PlanePoint::from_index(r.q, i).to_string();
      pts.push_back(P);
      os << ' ' << P;
    }
    os << '\n';
    pr.record(Json{{"kind", "points"}, {"points", pts}});
  }
}

int cmd_evenset(const RunConfig& c, Printer& pr) {
  bool pass;
  if (c.m || c.scattered_t) {
    if (c.p && *c.p != 2) throw PreconditionError("sets of even type need even order");
    const EvenSetCheck chk = c.m ? verify_cor_evenset(*c.m, Exec::parallel, bound_of(c))
                                 : scattered_even_set(*c.scattered_t, Exec::parallel, bound_of(c));
    print_evenset(chk.report, pr, c.list_points, chk.expected_size);
    std::string sizes;
    for (auto s : chk.expected_spectrum) sizes += (sizes.empty() ? "" : ",") + std::to_string(s);
    pr.table() << "expected   size " << chk.expected_size << ", spectrum sizes {" << sizes << "}\n";
    pass = chk.pass();
  } else {
    if (!c.p) throw ParseError("evenset needs --q, --m or --scattered-t");
    if (*c.p != 2) throw PreconditionError("sets of even type need even order; q = " + std::to_string(*c.p) + "^" + std::to_string(c.e.value_or(1)) + " is odd");
    const FieldTower T = FieldTower::make(2, c.e.value_or(1), 1);
    const LinPoly g = LinPoly::parse(T.field(Level::q), T.field(Level::prime), c.g.empty() ? "0" : c.g);
    const EvenSetReport r = translation_even_set(g, Exec::parallel, bound_of(c));
    print_evenset(r, pr, c.list_points, std::nullopt);
    pass = r.ok();
  }
  pr.record(Json{{"kind", "result"}, {"pass", pass}});
  pr.table() << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? kExitPass : kExitMismatch;
}

int cmd_verify(const RunConfig& c, Printer& pr) {
  if (!c.all && c.only.empty()) throw ParseError("verify needs --all or --only <check>[,<check>...]");
  VerifyOptions o;
  o.max_field = c.max_field;
  o.m = c.m;
  if (c.p && c.t) o.tower = FieldTower::make(*c.p, c.e.value_or(1), *c.t);
  IdentityTally tally;
  o.tally = &tally;
  const std::vector<std::string> names = c.all ? check_names() : c.only;
  for (const auto& n : names)
    if (std::find(check_names().begin(), check_names().end(), n) == check_names().end())
      throw ParseError("unknown check '" + n + "'; known: " + join(check_names(), ','));
  bool all_pass = true;
  for (const auto& n : names) {
    const CheckResult r = run_check(n, o);
    all_pass = all_pass && r.pass;
    pr.record(Json{{"check", r.name}, {"params", r.params}, {"pass", r.pass}, {"detail", r.detail}});
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
    pr.table() << (r.pass ? "PASS " : "FAIL ") << r.name << "  [" << r.params << "]  " << r.detail << "  (" << secs
               << ")\n";
  }
  return all_pass ? kExitPass : kExitMismatch;
}

int cmd_rank_weights(const RunConfig& c, Printer& pr) {
  const FieldTower T = need_tower(c);
  const Blocks b = blocks(c, T);
  const GaloisField& top = T.field(Level::qn);
  const unsigned k = b.S->dim() + b.T->dim();
  if (c.x0 || c.x1) {
    const Elem x0 = static_cast<Elem>(c.x0.value_or(0)), x1 = static_cast<Elem>(c.x1.value_or(0));
    if (!top.contains(x0) || !top.contains(x1) || (x0 == 0 && x1 == 0))
      throw ParseError("codeword coefficients must be field elements, not both zero");
    const unsigned via = rank_weight(*b.S, *b.T, x0, x1), direct = rank_weight_direct(*b.S, *b.T, x0, x1);
    const bool pass = via == direct;
    pr.record(Json{{"kind", "codeword"}, {"x0", x0}, {"x1", x1}, {"rank_weight", via}, {"direct", direct}, {"pass", pass}});
    pr.table() << "codeword (" << x0 << ',' << x1 << ")G: rank weight " << via << " (entries span " << direct
               << ")\n"
               << (pass ? "PASS" : "FAIL") << '\n';
    return pass ? kExitPass : kExitMismatch;
  }
  // Every point of weight w accounts for q^n - 1 codewords of rank weight k - w.
  const LinearSet L = LinearSet::product(*b.S, *b.T);
  const auto w = point_weights(L, Exec::parallel, bound_of(c));
  std::map<unsigned, std::uint64_t> dist;
  for (auto x : w) dist[k - x] += top.size() - 1;
  std::uint64_t total = 0;
  Json d = Json::object();
  auto& os = pr.table();
  os << "code length " << k << " over F_" << T.q() << ", " << top.size() << "^2 - 1 nonzero codewords\n";
  for (auto [r, n] : dist) {
    d[std::to_string(r)] = n;
    total += n;
    os << "  rank " << r << ": " << n << '\n';
  }
  const bool pass = total == std::uint64_t{top.size()} * top.size() - 1;
  pr.record(Json{{"kind", "rank_distribution"}, {"length", k}, {"distribution", d}, {"pass", pass}});
  os << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? kExitPass : kExitMismatch;
}

int dry_run(const RunConfig& c, std::ostream& os) {
  os << "config " << c.canonical() << '\n';
  if (c.command == "evenset") {
    std::uint64_t Q = 0;
    if (c.m) Q = std::uint64_t{1} << (1u << *c.m);
    else if (c.scattered_t) Q = std::uint64_t{1} << (2 * *c.scattered_t);
    else if (c.p) Q = static_cast<std::uint64_t>(std::pow(*c.p, c.e.value_or(1)));
    os << "cost: " << plane_size(Q) << " lines x " << Q + 1 << " points = " << plane_size(Q) * (Q + 1)
       << " incidence tests\n";
  } else if (c.command == "verify") {
    os << "cost: " << (c.all ? check_names().size() : c.only.size()) << " checks, fields up to " << c.max_field
       << " elements\n";
  } else if (c.p && c.t) {
    const double qn = std::pow(std::pow(*c.p, c.e.value_or(1)), 2.0 * *c.t);
    os << "cost: " << static_cast<std::uint64_t>(qn) + 1 << " points, one rank computation each\n";
  }
  return kExitPass;
}

}  // namespace

// ---------------------------------------------------------------------------

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear sets with complementary weights: weights, points, even sets, checks"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string qtext;
  unsigned p = 0, e = 0, t = 0, m = 0, st = 0, weight = 0;
  std::uint64_t x0 = 0, x1 = 0;
  std::string only;
  bool print_config = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--p", p, "characteristic");
    sub->add_option("--e", e, "q = p^e");
    sub->add_option("--q", qtext, "q as p^e or a prime power");
    sub->add_option("--t", t, "n = 2t");
    sub->add_option("--format", cfg.format, "table | records")->check(CLI::IsMember({"table", "records"}));
    sub->add_option("--output", cfg.output, "write to this file");
    sub->add_option("--bound", cfg.bound, "enumeration bound");
    sub->add_option("--threads", cfg.threads, "OpenMP threads");
    sub->add_flag("--dry-run", cfg.dry_run, "print the cost estimate and stop");
    sub->add_flag("--print-config", print_config, "print the canonical config and stop");
  };
  auto set_blocks = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "family spec, e.g. trace-trace or monomial:s=1");
    sub->add_option("--S", cfg.S, "S as comma-separated element indices of F_{q^n}");
    sub->add_option("--T", cfg.T, "T as comma-separated element indices of F_{q^n}");
    sub->add_option("--xi", cfg.xi, "tower | auto | <index>");
  };

  auto* fi = app.add_subcommand("field-info", "tower parameters");
  common(fi);
  auto* we = app.add_subcommand("weights", "weight enumerator and family predictions");
  common(we);
  set_blocks(we);
  auto* pt = app.add_subcommand("points", "points of weight >= i (or = i) from the subspace method");
  common(pt);
  set_blocks(pt);
  pt->add_option("--weight,-i", weight, "i")->required();
  pt->add_flag("--exact", cfg.exact, "weight exactly i");
  auto* ev = app.add_subcommand("evenset", "translation set of even type in PG(2,q)");
  common(ev);
  ev->add_option("--g", cfg.g, "F_2-linear map on F_q, e.g. X^2 + X");
  ev->add_option("--m", m, "use the iterated subline at q = 2^(2^m)");
  ev->add_option("--scattered-t", st, "use the scattered product at q = 2^(2t)");
  ev->add_flag("--list-points", cfg.list_points, "print the points");
  auto* vf = app.add_subcommand("verify", "named checks, one PASS/FAIL line each");
  common(vf);
  vf->add_flag("--all", cfg.all, "every check");
  vf->add_option("--only", only, "comma-separated check names");
  vf->add_option("--m", m, "iterate depth for iterated-product / even-set");
  vf->add_option("--max-field", cfg.max_field, "largest q^n to scan");
  auto* rw = app.add_subcommand("rank-weights", "rank weights of the code with generator diag(S, T)");
  common(rw);
  set_blocks(rw);
  rw->add_option("--x0", x0, "codeword coefficient");
  rw->add_option("--x1", x1, "codeword coefficient");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp& ex) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    if (!qtext.empty()) {
      if (sub->count("--p") || sub->count("--e")) throw ParseError("give either --q or --p/--e");
      auto [pp, ee] = parse_q(qtext);
      cfg.p = pp;
      cfg.e = ee;
    } else if (sub->count("--p")) {
      cfg.p = p;
      cfg.e = sub->count("--e") ? e : 1;
    }
    if (sub->count("--t")) cfg.t = t;
    if (sub->get_option_no_throw("--m") && sub->count("--m")) cfg.m = m;
    if (sub->get_option_no_throw("--scattered-t") && sub->count("--scattered-t")) cfg.scattered_t = st;
    if (sub->get_option_no_throw("--weight") && sub->count("--weight")) cfg.weight = weight;
    if (sub->get_option_no_throw("--x0") && sub->count("--x0")) cfg.x0 = x0;
    if (sub->get_option_no_throw("--x1") && sub->count("--x1")) cfg.x1 = x1;
    if (!only.empty()) cfg.only = split(only, ',');
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  }

  if (print_config) {
    out << cfg.canonical() << '\n';
    return kExitPass;
  }
  if (cfg.dry_run) return dry_run(cfg, out);
  if (cfg.threads) omp_set_num_threads(static_cast<int>(cfg.threads));

  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      err << "error: cannot write " << cfg.output << '\n';
      return kExitUsage;
    }
  }
  Printer pr(cfg.output.empty() ? out : file, cfg.format == "records");
  try {
    if (cfg.command == "field-info") return cmd_field_info(cfg, pr);
    if (cfg.command == "weights") return cmd_weights(cfg, pr);
    if (cfg.command == "points") return cmd_points(cfg, pr);
    if (cfg.command == "evenset") return cmd_evenset(cfg, pr);
    if (cfg.command == "verify") return cmd_verify(cfg, pr);
    if (cfg.command == "rank-weights") return cmd_rank_weights(cfg, pr);
  } catch (const BoundExceeded& ex) {
    err << "bound exceeded: " << ex.what() << '\n';
    return kExitBound;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace linsets

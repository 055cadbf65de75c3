#include "linsets/gf_tower.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace linsets {

std::string to_string(Level level) {
  switch (level) {
    case Level::prime: return "p";
    case Level::q: return "q";
    case Level::qt: return "q^t";
    case Level::qn: return "q^n";
  }
  return "?";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// GaloisField

GaloisField::GaloisField(std::uint32_t p)
    : p_(p), size_(p), degree_(1), rel_degree_(1), modulus_{0, 1} {
  if (!is_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
  if (p > kMaxFieldSize) throw BoundExceeded("prime field too large for table arithmetic");
  build_tables();
}

GaloisField::GaloisField(const GaloisField& sub, std::vector<Elem> modulus)
    : p_(sub.p_), sub_(&sub), modulus_(std::move(modulus)) {
  if (modulus_.size() < 2 || modulus_.back() != 1)
    throw PreconditionError("defining polynomial must be monic of degree >= 1");
  for (Elem c : modulus_)
    if (!sub.contains(c)) throw PreconditionError("defining polynomial coefficient outside the subfield");
  rel_degree_ = static_cast<unsigned>(modulus_.size() - 1);
  degree_ = sub.degree_ * rel_degree_;
  std::uint64_t size = 1;
  for (unsigned i = 0; i < rel_degree_; ++i) {
    size *= sub.size_;
    if (size > kMaxFieldSize) throw BoundExceeded("extension field too large for table arithmetic");
  }
  size_ = static_cast<std::uint32_t>(size);
  if (!poly::is_irreducible(sub, modulus_)) throw PreconditionError("defining polynomial is reducible");
  build_tables();
}

bool GaloisField::is_subfield_of(const GaloisField& other) const {
  for (const GaloisField* f = &other; f != nullptr; f = f->sub_)
    if (f == this) return true;
  return false;
}

Elem GaloisField::neg(Elem a) const {
  if (p_ == 2) return a;
  if (degree_ == 1) return a == 0 ? 0 : p_ - a;
  Elem r = 0, mult = 1;
  while (a) {
    const Elem d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * mult;
    a /= p_;
    mult *= p_;
  }
  return r;
}

Elem GaloisField::add_digits(Elem a, Elem b) const {
  Elem r = 0, mult = 1;
  while (a | b) {
    r += ((a % p_ + b % p_) % p_) * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw PreconditionError("inverse of zero");
  const std::uint32_t ord = order();
  return exp_[(ord - log_[a]) % ord];
}

Elem GaloisField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t ord = order();
  return exp_[(std::uint64_t{log_[a]} * (e % ord)) % ord];
}

Elem GaloisField::frobenius(Elem x, std::uint32_t b, unsigned k) const {
  if (x == 0) return 0;
  const std::uint64_t ord = order();
  const std::uint64_t e = powmod(b, k, ord);
  return exp_[(std::uint64_t{log_[x]} * e) % ord];
}

std::vector<Elem> GaloisField::coords(Elem x) const {
  std::vector<Elem> c(rel_degree_);
  if (sub_ == nullptr) {
    c[0] = x;
    return c;
  }
  const Elem s = sub_->size_;
  for (auto& ci : c) {
    ci = x % s;
    x /= s;
  }
  return c;
}

Elem GaloisField::from_coords(std::span<const Elem> c) const {
  if (c.size() != rel_degree_) throw LevelMismatch("coordinate vector has the wrong length");
  if (sub_ == nullptr) return c[0] % p_;
  Elem r = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (!sub_->contains(c[i])) throw LevelMismatch("coordinate outside the subfield");
    r = r * sub_->size_ + c[i];
  }
  return r;
}

Elem GaloisField::mul_schoolbook(Elem a, Elem b) const {
  if (sub_ == nullptr) return static_cast<Elem>(std::uint64_t{a} * b % p_);
  const auto ca = coords(a);
  const auto cb = coords(b);
  poly::Poly prod(2 * rel_degree_ - 1, 0);
  for (unsigned i = 0; i < rel_degree_; ++i)
    for (unsigned j = 0; j < rel_degree_; ++j)
      prod[i + j] = sub_->add(prod[i + j], sub_->mul(ca[i], cb[j]));
  // Reduce with the monic modulus from the top down.
  for (std::size_t deg = prod.size(); deg-- > rel_degree_;) {
    const Elem lead = prod[deg];
    if (lead == 0) continue;
    for (unsigned i = 0; i <= rel_degree_; ++i) {
      const std::size_t idx = deg - rel_degree_ + i;
      prod[idx] = sub_->sub(prod[idx], sub_->mul(lead, modulus_[i]));
    }
  }
  prod.resize(rel_degree_);
  return from_coords(prod);
}

void GaloisField::build_tables() {
  const std::uint32_t ord = order();
  auto slow_pow = [this](Elem g, std::uint64_t e) {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul_schoolbook(r, g);
      g = mul_schoolbook(g, g);
      e >>= 1;
    }
    return r;
  };
  Elem gen = 1;
  if (ord > 1) {
    const auto factors = prime_factors(ord);
    for (Elem g = 2; g < size_; ++g) {
      bool primitive = true;
      for (auto r : factors)
        if (slow_pow(g, ord / r) == 1) {
          primitive = false;
          break;
        }
      if (primitive) {
        gen = g;
        break;
      }
    }
  }
  exp_.assign(2 * std::size_t{ord}, 0);
  log_.assign(size_, 0);
  Elem x = 1;
  for (std::uint32_t i = 0; i < ord; ++i) {
    exp_[i] = x;
    exp_[i + ord] = x;
    log_[x] = i;
    x = mul_schoolbook(x, gen);
  }
}

Elem trace_over(const GaloisField& field, Elem x, std::uint32_t b, unsigned m) {
  Elem acc = 0;
  for (unsigned i = 0; i < m; ++i) acc = field.add(acc, field.frobenius(x, b, i));
  return acc;
}

Elem norm_over(const GaloisField& field, Elem x, std::uint32_t b, unsigned m) {
  Elem acc = 1;
  for (unsigned i = 0; i < m; ++i) acc = field.mul(acc, field.frobenius(x, b, i));
  return acc;
}

unsigned digits_per_element(std::uint32_t field_size, std::uint32_t b) {
  unsigned m = 0;
  std::uint64_t s = 1;
  while (s < field_size) {
    s *= b;
    ++m;
  }
  if (s != field_size) throw LevelMismatch("field size is not a power of the base size");
  return m;
}

// ---------------------------------------------------------------------------
// Polynomials over a level (tower construction only)

namespace poly {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly mul(const GaloisField& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  trim(r);
  return r;
}

Poly mod(const GaloisField& F, Poly a, const Poly& m) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const Elem lead_inv = F.inv(m.back());
  while (a.size() > dm) {
    const Elem c = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, m[i]));
    trim(a);
  }
  return a;
}

Poly gcd(const GaloisField& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Elem li = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, li);
  }
  return a;
}

namespace {
Poly powmod(const GaloisField& F, Poly base, std::uint64_t e, const Poly& m) {
  Poly r{1};
  base = mod(F, base, m);
  while (e) {
    if (e & 1) r = mod(F, mul(F, r, base), m);
    base = mod(F, mul(F, base, base), m);
    e >>= 1;
  }
  return r;
}
}  // namespace

bool is_irreducible(const GaloisField& F, const Poly& f) {
  Poly g = f;
  trim(g);
  if (g.size() < 2) return false;
  const std::size_t d = g.size() - 1;
  if (d == 1) return true;
  Poly h{0, 1};
  for (std::size_t i = 1; i <= d / 2; ++i) {
    h = powmod(F, h, F.size(), g);
    Poly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = F.sub(diff[1], 1);
    trim(diff);
    if (diff.empty()) return false;
    if (gcd(F, g, diff).size() > 1) return false;
  }
  return true;
}

Poly smallest_irreducible(const GaloisField& F, unsigned degree) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < degree; ++i) count *= F.size();
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(degree + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < degree; ++i) {
      f[i] = static_cast<Elem>(c % F.size());
      c /= F.size();
    }
    f[degree] = 1;
    if (is_irreducible(F, f)) return f;
  }
  throw PreconditionError("no irreducible polynomial found");
}

}  // namespace poly

// ---------------------------------------------------------------------------
// FieldTower

struct FieldTower::Data {
  std::uint32_t p;
  unsigned e;
  unsigned t;
  std::array<std::unique_ptr<GaloisField>, 4> fields;
};

FieldTower FieldTower::make(std::uint32_t p, unsigned e, unsigned t,
                            const std::optional<std::array<std::vector<Elem>, 3>>& overrides) {
  if (!is_prime(p)) throw PreconditionError("p = " + std::to_string(p) + " is not prime");
  if (e < 1 || t < 1) throw PreconditionError("e and t must be positive");
  long double top = 1;
  for (unsigned i = 0; i < 2 * e * t; ++i) top *= p;
  if (top > static_cast<long double>(kMaxFieldSize))
    throw BoundExceeded("tower top level exceeds the table arithmetic limit of 2^24 elements");

  auto data = std::make_shared<Data>();
  data->p = p;
  data->e = e;
  data->t = t;
  data->fields[0] = std::make_unique<GaloisField>(p);
  const std::array<unsigned, 3> degrees{e, t, 2};
  for (int i = 0; i < 3; ++i) {
    const GaloisField& below = *data->fields[i];
    std::vector<Elem> modulus;
    if (overrides) {
      modulus = (*overrides)[i];
      if (modulus.size() != degrees[i] + 1)
        throw PreconditionError("override polynomial " + std::to_string(i + 1) + " must have degree " +
                                std::to_string(degrees[i]));
    } else {
      modulus = poly::smallest_irreducible(below, degrees[i]);
    }
    data->fields[i + 1] = std::make_unique<GaloisField>(below, std::move(modulus));
  }
  return FieldTower(std::move(data));
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view s) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) throw ParseError("expected a decimal integer, got '" + std::string(s) + "'");
  return v;
}

}  // namespace

FieldTower FieldTower::parse(std::string_view text) {
  const auto parts = split(text, ';');
  if (parts.size() != 4) throw ParseError("tower string must have the form p,e,t;poly1;poly2;poly3");
  const auto head = split(parts[0], ',');
  if (head.size() != 3) throw ParseError("tower header must be p,e,t");
  std::array<std::vector<Elem>, 3> polys;
  for (int i = 0; i < 3; ++i)
    for (auto c : split(parts[i + 1], ',')) polys[i].push_back(static_cast<Elem>(parse_uint(c)));
  return make(static_cast<std::uint32_t>(parse_uint(head[0])), static_cast<unsigned>(parse_uint(head[1])),
              static_cast<unsigned>(parse_uint(head[2])), polys);
}

std::string FieldTower::serialize() const {
  std::ostringstream os;
  os << data_->p << ',' << data_->e << ',' << data_->t;
  for (int i = 1; i <= 3; ++i) {
    os << ';';
    const auto& m = data_->fields[i]->modulus();
    for (std::size_t j = 0; j < m.size(); ++j) os << (j ? "," : "") << m[j];
  }
  return os.str();
}

std::uint32_t FieldTower::p() const { return data_->p; }
unsigned FieldTower::e() const { return data_->e; }
unsigned FieldTower::t() const { return data_->t; }

const GaloisField& FieldTower::field(Level level) const { return *data_->fields[static_cast<int>(level)]; }

FieldElement FieldTower::element(Level level, Elem value) const {
  const auto& f = field(level);
  if (!f.contains(value)) throw LevelMismatch("value " + std::to_string(value) + " is not in level " + to_string(level));
  return {f, value};
}

FieldElement FieldTower::zero(Level level) const { return {field(level), 0}; }
FieldElement FieldTower::one(Level level) const { return {field(level), 1}; }

FieldElement FieldTower::xi() const { return {field(Level::qn), field(Level::qt).size()}; }

FieldElement FieldTower::xi_A() const {
  const auto& mid = field(Level::qt);
  return {mid, mid.neg(field(Level::qn).modulus()[1])};
}

FieldElement FieldTower::xi_B() const {
  const auto& mid = field(Level::qt);
  return {mid, mid.neg(field(Level::qn).modulus()[0])};
}

Elem FieldTower::trace_qt(Elem x) const { return trace_over(field(Level::qt), x, q(), t()); }
Elem FieldTower::norm_qt(Elem x) const { return norm_over(field(Level::qt), x, q(), t()); }
Elem FieldTower::trace_qn(Elem x) const { return trace_over(field(Level::qn), x, field(Level::qt).size(), 2); }
Elem FieldTower::norm_qn(Elem x) const { return norm_over(field(Level::qn), x, field(Level::qt).size(), 2); }

namespace {
void require_level(const FieldTower& tower, const FieldElement& x, Level level, const char* what) {
  if (&x.field() != &tower.field(level))
    throw LevelMismatch(std::string(what) + " expects an element of level " + to_string(level));
}
}  // namespace

FieldElement FieldTower::rel_trace(const FieldElement& x) const {
  require_level(*this, x, Level::qt, "rel_trace");
  return {field(Level::q), trace_qt(x.value())};
}

FieldElement FieldTower::rel_norm(const FieldElement& x) const {
  require_level(*this, x, Level::qt, "rel_norm");
  return {field(Level::q), norm_qt(x.value())};
}

FieldElement FieldTower::top_trace(const FieldElement& x) const {
  require_level(*this, x, Level::qn, "top_trace");
  return {field(Level::qt), trace_qn(x.value())};
}

FieldElement FieldTower::top_norm(const FieldElement& x) const {
  require_level(*this, x, Level::qn, "top_norm");
  return {field(Level::qt), norm_qn(x.value())};
}

FieldElement FieldTower::embed(const FieldElement& x, Level to) const {
  const auto& target = field(to);
  if (!x.field().is_subfield_of(target)) throw LevelMismatch("embed target is not above the element's level");
  return {target, x.value()};
}

std::optional<FieldElement> FieldTower::project(const FieldElement& x, Level to) const {
  const auto& target = field(to);
  if (!target.is_subfield_of(x.field())) throw LevelMismatch("project target is not below the element's level");
  if (!target.contains(x.value())) return std::nullopt;
  return FieldElement(target, x.value());
}

ElementRange FieldTower::enumerate(Level level, std::uint64_t bound) const {
  const auto& f = field(level);
  if (f.size() > bound)
    throw BoundExceeded("level " + to_string(level) + " has " + std::to_string(f.size()) +
                        " elements, above the enumeration bound " + std::to_string(bound));
  return ElementRange(f);
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(const GaloisField& field, Elem value) : field_(&field), value_(value) {
  if (!field.contains(value)) throw LevelMismatch("value outside the field");
}

void FieldElement::check_same(const FieldElement& o) const {
  if (field_ != o.field_) throw LevelMismatch("operands belong to different levels");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {*field_, field_->add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {*field_, field_->sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {*field_, field_->mul(value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {*field_, field_->div(value_, o.value_)};
}

FieldElement FieldElement::inv() const { return {*field_, field_->inv(value_)}; }

FieldElement FieldElement::frobenius(const GaloisField& base, unsigned k) const {
  if (!base.is_subfield_of(*field_)) throw LevelMismatch("frobenius base is not a subfield");
  return {*field_, field_->frobenius(value_, base.size(), k)};
}

}  // namespace linsets

#include "linsets/linpoly.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

#include "linsets/echelon.hpp"

namespace linsets {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

unsigned parse_unsigned(std::string_view s, std::string_view what) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

}  // namespace

LinPoly::LinPoly(const GaloisField& level, const GaloisField& base, std::vector<Elem> coeffs)
    : level_(&level), base_(&base), m_(digits_per_element(level.size(), base.size())), coeffs_(m_, 0) {
  if (!base.is_subfield_of(level)) throw LevelMismatch("linearized polynomial base is not a subfield of its level");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!level.contains(coeffs[i])) throw LevelMismatch("coefficient outside the polynomial's level");
    coeffs_[i % m_] = level.add(coeffs_[i % m_], coeffs[i]);
  }
  frob_exp_.resize(m_);
  const std::uint64_t order = level.order();
  std::uint64_t e = 1 % order;
  for (unsigned i = 0; i < m_; ++i) {
    frob_exp_[i] = e;
    e = e * base.size() % order;
  }
}

LinPoly LinPoly::zero(const GaloisField& level, const GaloisField& base) { return {level, base, {}}; }

LinPoly LinPoly::identity(const GaloisField& level, const GaloisField& base) { return {level, base, {1}}; }

LinPoly LinPoly::monomial(const GaloisField& level, const GaloisField& base, unsigned k, Elem c) {
  std::vector<Elem> co(k + 1, 0);
  co[k] = c;
  return {level, base, std::move(co)};
}

LinPoly LinPoly::trace(const GaloisField& level, const GaloisField& base) {
  const unsigned m = digits_per_element(level.size(), base.size());
  return {level, base, std::vector<Elem>(m, 1)};
}

LinPoly LinPoly::from_map(const GaloisField& level, const GaloisField& base, std::span<const Elem> basis,
                          std::span<const Elem> images) {
  const unsigned m = digits_per_element(level.size(), base.size());
  if (basis.size() != m || images.size() != m) throw PreconditionError("from_map needs exactly one image per basis element");
  if (rank_over(base, m, basis) != m) throw PreconditionError("from_map basis is not a basis over the base field");
  const GaloisField& F = level;
  // Moore system: sum_i a_i basis[j]^(b^i) = images[j].
  std::vector<std::vector<Elem>> M(m, std::vector<Elem>(m + 1));
  for (unsigned j = 0; j < m; ++j) {
    for (unsigned i = 0; i < m; ++i) M[j][i] = F.frobenius(basis[j], base.size(), i);
    M[j][m] = images[j];
  }
  for (unsigned col = 0; col < m; ++col) {
    unsigned piv = col;
    while (M[piv][col] == 0) ++piv;  // Moore matrix of a basis is invertible
    std::swap(M[piv], M[col]);
    const Elem inv = F.inv(M[col][col]);
    for (auto& x : M[col]) x = F.mul(x, inv);
    for (unsigned r = 0; r < m; ++r) {
      if (r == col || M[r][col] == 0) continue;
      const Elem c = M[r][col];
      for (unsigned k = col; k <= m; ++k) M[r][k] = F.sub(M[r][k], F.mul(c, M[col][k]));
    }
  }
  std::vector<Elem> a(m);
  for (unsigned i = 0; i < m; ++i) a[i] = M[i][m];
  return {level, base, std::move(a)};
}

bool LinPoly::is_zero() const {
  for (Elem c : coeffs_)
    if (c != 0) return false;
  return true;
}

Elem LinPoly::eval(Elem x) const {
  if (x == 0) return 0;
  const GaloisField& F = *level_;
  const std::uint64_t lx = F.log(x);
  Elem r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    if (coeffs_[i] == 0) continue;
    r = F.add(r, F.exp(F.log(coeffs_[i]) + lx * frob_exp_[i]));
  }
  return r;
}

FieldElement LinPoly::eval(const FieldElement& x) const {
  if (&x.field() != level_) throw LevelMismatch("evaluation point is not at the polynomial's level");
  return {*level_, eval(x.value())};
}

std::vector<std::vector<Elem>> LinPoly::as_matrix() const {
  std::vector<std::vector<Elem>> rows(m_);
  Elem e = 1;
  for (unsigned j = 0; j < m_; ++j, e *= base_->size()) append_digits(eval(e), base_->size(), m_, rows[j]);
  return rows;
}

unsigned LinPoly::image_dim() const {
  std::vector<Elem> imgs(m_);
  Elem e = 1;
  for (unsigned j = 0; j < m_; ++j, e *= base_->size()) imgs[j] = eval(e);
  return rank_over(*base_, m_, imgs);
}

FqSubspace LinPoly::kernel() const {
  FqSubspace K(*level_, *base_, 1);
  for (const auto& v : kernel_basis(*base_, m_, as_matrix())) {
    const Elem x = from_digits(v, base_->size());
    K.insert(std::span<const Elem>(&x, 1));
  }
  return K;
}

FqSubspace LinPoly::image() const {
  std::vector<Elem> imgs(m_);
  Elem e = 1;
  for (unsigned j = 0; j < m_; ++j, e *= base_->size()) imgs[j] = eval(e);
  return FqSubspace::span_elements(*level_, *base_, imgs);
}

void LinPoly::check_same(const LinPoly& g) const {
  if (level_ != g.level_ || base_ != g.base_) throw LevelMismatch("linearized polynomials over different fields");
}

LinPoly LinPoly::compose(const LinPoly& g) const {
  check_same(g);
  const GaloisField& F = *level_;
  std::vector<Elem> out(m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j) {
      if (g.coeffs_[j] == 0) continue;
      const Elem term = F.mul(coeffs_[i], F.frobenius(g.coeffs_[j], base_->size(), i));
      out[(i + j) % m_] = F.add(out[(i + j) % m_], term);
    }
  }
  return {F, *base_, std::move(out)};
}

LinPoly LinPoly::operator+(const LinPoly& g) const {
  check_same(g);
  std::vector<Elem> out(m_);
  for (unsigned i = 0; i < m_; ++i) out[i] = level_->add(coeffs_[i], g.coeffs_[i]);
  return {*level_, *base_, std::move(out)};
}

LinPoly LinPoly::operator-(const LinPoly& g) const { return *this + (-g); }

LinPoly LinPoly::operator-() const {
  std::vector<Elem> out(m_);
  for (unsigned i = 0; i < m_; ++i) out[i] = level_->neg(coeffs_[i]);
  return {*level_, *base_, std::move(out)};
}

LinPoly LinPoly::pre_scale(Elem c) const {
  std::vector<Elem> out(m_);
  for (unsigned i = 0; i < m_; ++i) out[i] = level_->mul(coeffs_[i], level_->frobenius(c, base_->size(), i));
  return {*level_, *base_, std::move(out)};
}

LinPoly LinPoly::post_scale(Elem c) const {
  std::vector<Elem> out(m_);
  for (unsigned i = 0; i < m_; ++i) out[i] = level_->mul(c, coeffs_[i]);
  return {*level_, *base_, std::move(out)};
}

bool LinPoly::operator==(const LinPoly& g) const {
  return level_ == g.level_ && base_ == g.base_ && coeffs_ == g.coeffs_;
}

std::string LinPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned i = 0; i < m_; ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (coeffs_[i] != 1) os << coeffs_[i] << '*';
    os << 'X';
    if (i == 1) os << "^q";
    if (i > 1) os << "^q" << i;
  }
  return first ? "0" : os.str();
}

LinPoly LinPoly::parse(const GaloisField& level, const GaloisField& base, std::string_view text) {
  const unsigned m = digits_per_element(level.size(), base.size());
  std::vector<Elem> co(m, 0);
  text = trim(text);
  if (text == "0") return {level, base, co};
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('+', start);
    if (end == std::string_view::npos) end = text.size();
    auto term = trim(text.substr(start, end - start));
    Elem c = 1;
    if (const auto star = term.find('*'); star != std::string_view::npos) {
      c = parse_unsigned(trim(term.substr(0, star)), "coefficient");
      if (!level.contains(c)) throw ParseError("coefficient " + std::to_string(c) + " outside the field");
      term = trim(term.substr(star + 1));
    }
    if (term.empty() || term.front() != 'X') throw ParseError("expected a term of the form c*X^qk, got '" + std::string(term) + "'");
    term.remove_prefix(1);
    unsigned k = 0;
    if (!term.empty()) {
      if (term.substr(0, 2) != "^q") throw ParseError("bad exponent '" + std::string(term) + "'");
      term.remove_prefix(2);
      k = term.empty() ? 1 : parse_unsigned(term, "exponent");
    }
    co[k % m] = level.add(co[k % m], c);
    start = end + 1;
  }
  return {level, base, std::move(co)};
}

// ---------------------------------------------------------------------------

std::vector<Elem> subspace_polynomial_coeffs(const FqSubspace& W, unsigned s) {
  if (W.arity() != 1) throw PreconditionError("subspace polynomial needs a subspace of the field itself");
  const GaloisField& F = W.level();
  const std::uint32_t bs = [&] {
    std::uint32_t r = 1;
    for (unsigned i = 0; i < s; ++i) r *= W.base().size();
    return r;
  }();
  std::vector<Elem> c{1};
  auto eval = [&](Elem x) {
    Elem r = 0, xp = x;
    for (Elem cj : c) {
      r = F.add(r, F.mul(cj, xp));
      xp = F.pow(xp, bs);
    }
    return r;
  };
  for (Elem w : W.basis_elements()) {
    const Elem v = eval(w);
    // P <- P^(sigma) - v^(sigma - 1) P, which kills w and keeps the old roots.
    const Elem lam = F.pow(v, bs - 1);
    std::vector<Elem> next(c.size() + 1, 0);
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j + 1] = F.add(next[j + 1], F.pow(c[j], bs));
      next[j] = F.sub(next[j], F.mul(lam, c[j]));
    }
    c = std::move(next);
  }
  return c;
}

LinPoly subspace_polynomial(const FqSubspace& W, unsigned s) {
  const auto c = subspace_polynomial_coeffs(W, s);
  const unsigned m = W.degree();
  std::vector<Elem> co(m, 0);
  for (std::size_t j = 0; j < c.size(); ++j) co[(j * s) % m] = W.level().add(co[(j * s) % m], c[j]);
  return {W.level(), W.base(), std::move(co)};
}

bool normcond_check(const GaloisField& level, const GaloisField& base, std::span<const Elem> c, unsigned s) {
  const unsigned m = digits_per_element(level.size(), base.size());
  if (c.size() < 2) throw PreconditionError("norm condition needs q^s-degree k >= 1");
  if (std::gcd(s, m) != 1) throw PreconditionError("norm condition needs gcd(s, m) = 1");
  if (c.back() != level.neg(1)) throw PreconditionError("norm condition needs leading coefficient -1");
  const unsigned k = static_cast<unsigned>(c.size()) - 1;
  const Elem n = norm_over(level, c[0], base.size(), m);
  const Elem sign = (static_cast<std::uint64_t>(m) * (k + 1)) % 2 == 0 ? 1 : level.neg(1);
  return n == sign;
}

bool normcond_check(const LinPoly& f, unsigned s, unsigned k) {
  const unsigned m = f.degree();
  if (k == 0 || k >= m) throw PreconditionError("norm condition on a folded polynomial needs 1 <= k < m");
  if (std::gcd(s, m) != 1) throw PreconditionError("norm condition needs gcd(s, m) = 1");
  std::vector<Elem> c(k + 1);
  std::vector<bool> used(m, false);
  for (unsigned j = 0; j <= k; ++j) {
    c[j] = f.coeff(j * s);
    used[(j * s) % m] = true;
  }
  for (unsigned i = 0; i < m; ++i)
    if (!used[i] && f.coeff(i) != 0) throw PreconditionError("polynomial is not in q^s-spaced shape");
  return normcond_check(f.level(), f.base(), c, s);
}

}  // namespace linsets

#include "linsets/subspace.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace linsets {

FqSubspace::FqSubspace(const GaloisField& level, const GaloisField& base, unsigned arity)
    : level_(&level),
      base_(&base),
      arity_(arity),
      m_(digits_per_element(level.size(), base.size())),
      ech_(base, arity * m_) {
  if (!base.is_subfield_of(level)) throw LevelMismatch("subspace base is not a subfield of the level");
  if (arity != 1 && arity != 2) throw PreconditionError("subspace arity must be 1 or 2");
}

FqSubspace FqSubspace::span(const GaloisField& level, const GaloisField& base, unsigned arity,
                            const std::vector<Vector>& vectors) {
  FqSubspace S(level, base, arity);
  for (const auto& v : vectors) S.insert(v);
  return S;
}

FqSubspace FqSubspace::span_elements(const GaloisField& level, const GaloisField& base, std::span<const Elem> elems) {
  FqSubspace S(level, base, 1);
  for (Elem x : elems) S.insert(std::span<const Elem>(&x, 1));
  return S;
}

FqSubspace FqSubspace::whole(const GaloisField& level, const GaloisField& base, unsigned arity) {
  FqSubspace S(level, base, arity);
  std::vector<Elem> digits(S.ech_.width(), 0);
  for (unsigned j = 0; j < S.ech_.width(); ++j) {
    std::fill(digits.begin(), digits.end(), 0);
    digits[j] = 1;
    S.ech_.insert(digits);
  }
  return S;
}

std::vector<Elem> FqSubspace::to_digits(std::span<const Elem> v) const {
  if (v.size() != arity_) throw LevelMismatch("vector arity does not match the subspace ambient");
  std::vector<Elem> d;
  d.reserve(ech_.width());
  for (Elem x : v) {
    if (!level_->contains(x)) throw LevelMismatch("vector entry outside the ambient level");
    append_digits(x, base_->size(), m_, d);
  }
  return d;
}

Vector FqSubspace::from_digits_row(std::span<const Elem> digits) const {
  Vector v(arity_);
  for (unsigned a = 0; a < arity_; ++a) v[a] = from_digits(digits.subspan(std::size_t{a} * m_, m_), base_->size());
  return v;
}

std::vector<Vector> FqSubspace::basis() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (unsigned r = 0; r < dim(); ++r) out.push_back(from_digits_row(ech_.row(r)));
  return out;
}

std::vector<Elem> FqSubspace::basis_elements() const {
  if (arity_ != 1) throw LevelMismatch("basis_elements needs an arity-1 subspace");
  std::vector<Elem> out;
  for (unsigned r = 0; r < dim(); ++r) out.push_back(from_digits(ech_.row(r), base_->size()));
  return out;
}

bool FqSubspace::member(std::span<const Elem> v) const { return ech_.contains(to_digits(v)); }

bool FqSubspace::member(Elem x) const { return member(std::span<const Elem>(&x, 1)); }

bool FqSubspace::insert(std::span<const Elem> v) { return ech_.insert(to_digits(v)); }

void FqSubspace::check_compatible(const FqSubspace& other) const {
  if (level_ != other.level_ || base_ != other.base_ || arity_ != other.arity_)
    throw LevelMismatch("subspaces live in different ambients");
}

FqSubspace FqSubspace::intersect(const FqSubspace& other) const {
  check_compatible(other);
  const unsigned w = ech_.width();
  // Zassenhaus: rows (u|u) and (v|0); rows with a zero left half span the intersection.
  Echelon z(*base_, 2 * w);
  std::vector<Elem> row(2 * w);
  for (unsigned r = 0; r < dim(); ++r) {
    auto u = ech_.row(r);
    std::copy(u.begin(), u.end(), row.begin());
    std::copy(u.begin(), u.end(), row.begin() + w);
    z.insert(row);
  }
  for (unsigned r = 0; r < other.dim(); ++r) {
    auto v = other.ech_.row(r);
    std::copy(v.begin(), v.end(), row.begin());
    std::fill(row.begin() + w, row.end(), 0);
    z.insert(row);
  }
  FqSubspace out(*level_, *base_, arity_);
  for (unsigned r = 0; r < z.rank(); ++r) {
    if (z.pivots()[r] < w) continue;
    auto zr = z.row(r);
    out.ech_.insert(std::span<const Elem>(zr.data() + w, w));
  }
  return out;
}

FqSubspace FqSubspace::sum(const FqSubspace& other) const {
  check_compatible(other);
  FqSubspace out = *this;
  for (unsigned r = 0; r < other.dim(); ++r) out.ech_.insert(other.ech_.row(r));
  return out;
}

FqSubspace FqSubspace::scalar_coset(Elem a) const {
  if (a == 0) throw PreconditionError("scalar_coset needs a nonzero scalar");
  if (!level_->contains(a)) throw LevelMismatch("scalar outside the ambient level");
  FqSubspace out(*level_, *base_, arity_);
  for (auto v : basis()) {
    for (auto& x : v) x = level_->mul(a, x);
    out.insert(v);
  }
  return out;
}

FqSubspace FqSubspace::swapped() const {
  if (arity_ != 2) throw LevelMismatch("swapped needs an arity-2 subspace");
  FqSubspace out(*level_, *base_, 2);
  for (auto v : basis()) {
    std::swap(v[0], v[1]);
    out.insert(v);
  }
  return out;
}

std::uint64_t FqSubspace::cardinality() const {
  std::uint64_t c = 1;
  for (unsigned i = 0; i < dim(); ++i) c *= base_->size();
  return c;
}

bool FqSubspace::operator==(const FqSubspace& other) const {
  return level_ == other.level_ && base_ == other.base_ && arity_ == other.arity_ &&
         ech_.data() == other.ech_.data();
}

std::string FqSubspace::to_string() const {
  std::ostringstream os;
  for (unsigned r = 0; r < dim(); ++r) {
    if (r) os << ';';
    auto row = ech_.row(r);
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << row[j];
  }
  return os.str();
}

FqSubspace FqSubspace::parse(const GaloisField& level, const GaloisField& base, unsigned arity, std::string_view text) {
  FqSubspace S(level, base, arity);
  if (text.empty()) return S;
  const unsigned w = S.ech_.width();
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    const auto rowtext = text.substr(start, end - start);
    std::vector<Elem> row;
    std::size_t pos = 0;
    while (pos <= rowtext.size()) {
      auto comma = rowtext.find(',', pos);
      if (comma == std::string_view::npos) comma = rowtext.size();
      const auto tok = rowtext.substr(pos, comma - pos);
      Elem v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v >= base.size())
        throw ParseError("bad subspace digit '" + std::string(tok) + "'");
      row.push_back(v);
      pos = comma + 1;
    }
    if (row.size() != w)
      throw ParseError("subspace row has " + std::to_string(row.size()) + " digits, expected " + std::to_string(w));
    S.ech_.insert(row);
    start = end + 1;
  }
  return S;
}

// ---------------------------------------------------------------------------

std::uint64_t gaussian_binomial(unsigned d, unsigned i, std::uint64_t b) {
  if (i > d) return 0;
  unsigned __int128 acc = 1;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  auto bpow = [b](unsigned e) {
    unsigned __int128 r = 1;
    for (unsigned k = 0; k < e; ++k) r *= b;
    return r;
  };
  for (unsigned k = 0; k < i; ++k) {
    acc = acc * (bpow(d - k) - 1) / (bpow(k + 1) - 1);
    if (acc > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(acc);
}

SubspaceEnumerator::SubspaceEnumerator(const FqSubspace& T, unsigned i, std::uint64_t budget)
    : T_(&T), tbasis_(T.basis()), d_(T.dim()), i_(i) {
  if (i > d_) throw PreconditionError("subspace dimension exceeds the dimension of T");
  count_ = gaussian_binomial(d_, i_, T.base().size());
  if (count_ > budget)
    throw BoundExceeded(std::to_string(count_) + " subspaces exceed the enumeration budget " + std::to_string(budget));
  pivots_.resize(i_);
  for (unsigned r = 0; r < i_; ++r) pivots_[r] = r;
}

void SubspaceEnumerator::reset_free() {
  free_.clear();
  for (unsigned r = 0; r < i_; ++r)
    for (unsigned c = pivots_[r] + 1; c < d_; ++c)
      if (!std::binary_search(pivots_.begin(), pivots_.end(), c)) free_.emplace_back(r, c);
  free_val_.assign(free_.size(), 0);
}

bool SubspaceEnumerator::advance_pivots() {
  int r = static_cast<int>(i_) - 1;
  while (r >= 0 && pivots_[r] == d_ - i_ + static_cast<unsigned>(r)) --r;
  if (r < 0) return false;
  ++pivots_[r];
  for (unsigned s = static_cast<unsigned>(r) + 1; s < i_; ++s) pivots_[s] = pivots_[s - 1] + 1;
  return true;
}

std::optional<FqSubspace> SubspaceEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    reset_free();
  } else {
    const std::uint32_t b = T_->base().size();
    std::size_t pos = 0;
    while (pos < free_val_.size() && ++free_val_[pos] == b) free_val_[pos++] = 0;
    if (pos == free_val_.size()) {
      if (!advance_pivots()) {
        done_ = true;
        return std::nullopt;
      }
      reset_free();
    }
  }
  const GaloisField& F = T_->level();
  const unsigned arity = T_->arity();
  std::vector<std::vector<Elem>> coef(i_, std::vector<Elem>(d_, 0));
  for (unsigned r = 0; r < i_; ++r) coef[r][pivots_[r]] = 1;
  for (std::size_t k = 0; k < free_.size(); ++k) coef[free_[k].first][free_[k].second] = free_val_[k];
  FqSubspace W(F, T_->base(), arity);
  for (unsigned r = 0; r < i_; ++r) {
    Vector v(arity, 0);
    for (unsigned j = 0; j < d_; ++j) {
      if (coef[r][j] == 0) continue;
      for (unsigned a = 0; a < arity; ++a) v[a] = F.add(v[a], F.mul(coef[r][j], tbasis_[j][a]));
    }
    W.insert(v);
  }
  return W;
}

}  // namespace linsets

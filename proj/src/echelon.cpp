#include "linsets/echelon.hpp"

#include <algorithm>
#include <array>

namespace linsets {

void append_digits(Elem x, std::uint32_t b, unsigned m, std::vector<Elem>& out) {
  for (unsigned i = 0; i < m; ++i) {
    out.push_back(x % b);
    x /= b;
  }
}

Elem from_digits(std::span<const Elem> digits, std::uint32_t b) {
  Elem r = 0;
  for (std::size_t i = digits.size(); i-- > 0;) r = r * b + digits[i];
  return r;
}

Echelon::Echelon(const GaloisField& base, unsigned width) : base_(&base), width_(width) {}

void Echelon::reduce(std::span<Elem> v) const {
  const GaloisField& F = *base_;
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Elem c = v[pivots_[r]];
    if (c == 0) continue;
    const Elem* row = rows_.data() + r * width_;
    for (unsigned j = pivots_[r]; j < width_; ++j)
      if (row[j] != 0) v[j] = F.sub(v[j], F.mul(c, row[j]));
  }
}

bool Echelon::contains(std::span<const Elem> v) const {
  std::vector<Elem> w(v.begin(), v.end());
  reduce(w);
  return std::all_of(w.begin(), w.end(), [](Elem x) { return x == 0; });
}

bool Echelon::insert(std::span<const Elem> v) {
  if (v.size() != width_) throw LevelMismatch("vector width does not match the echelon width");
  const GaloisField& F = *base_;
  std::vector<Elem> w(v.begin(), v.end());
  reduce(w);
  unsigned pivot = 0;
  while (pivot < width_ && w[pivot] == 0) ++pivot;
  if (pivot == width_) return false;
  const Elem li = F.inv(w[pivot]);
  for (unsigned j = pivot; j < width_; ++j) w[j] = F.mul(w[j], li);
  // Clear the new pivot column from the existing rows.
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    Elem* row = rows_.data() + r * width_;
    const Elem c = row[pivot];
    if (c == 0) continue;
    for (unsigned j = pivot; j < width_; ++j)
      if (w[j] != 0) row[j] = F.sub(row[j], F.mul(c, w[j]));
  }
  const auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin());
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), pivot);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos * width_), w.begin(), w.end());
  return true;
}

unsigned rank_over(const GaloisField& base, unsigned m, std::span<const Elem> elems) {
  const std::uint32_t b = base.size();
  if (b == 2) {
    // Digits are bits: XOR basis indexed by leading bit.
    std::array<Elem, 32> basis{};
    unsigned rank = 0;
    for (Elem x : elems) {
      for (int bit = static_cast<int>(m) - 1; bit >= 0 && x != 0; --bit) {
        if (((x >> bit) & 1u) == 0) continue;
        if (basis[bit] == 0) {
          basis[bit] = x;
          ++rank;
          x = 0;
        } else {
          x ^= basis[bit];
        }
      }
    }
    return rank;
  }
  Echelon ech(base, m);
  std::vector<Elem> v;
  v.reserve(m);
  for (Elem x : elems) {
    v.clear();
    append_digits(x, b, m, v);
    ech.insert(v);
    if (ech.rank() == m) break;
  }
  return ech.rank();
}

std::vector<std::vector<Elem>> kernel_basis(const GaloisField& base, unsigned out,
                                            const std::vector<std::vector<Elem>>& images) {
  const auto in = static_cast<unsigned>(images.size());
  Echelon ech(base, out + in);
  std::vector<Elem> row(out + in);
  for (unsigned i = 0; i < in; ++i) {
    if (images[i].size() != out) throw LevelMismatch("image vector has the wrong width");
    std::fill(row.begin(), row.end(), 0);
    std::copy(images[i].begin(), images[i].end(), row.begin());
    row[out + i] = 1;
    ech.insert(row);
  }
  std::vector<std::vector<Elem>> ker;
  for (unsigned r = 0; r < ech.rank(); ++r) {
    if (ech.pivots()[r] < out) continue;
    auto rr = ech.row(r);
    ker.emplace_back(rr.begin() + out, rr.end());
  }
  return ker;
}

}  // namespace linsets

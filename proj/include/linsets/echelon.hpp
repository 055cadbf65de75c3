#pragma once

// Exact row reduction over a small field F_b. Vectors are "digit vectors":
// field elements of a level are expanded into their base-b digits, which are
// their coordinates over F_b (see gf_tower.hpp).

#include <cstdint>
#include <span>
#include <vector>

#include "linsets/gf_tower.hpp"

namespace linsets {

/// Appends the m base-b digits of x (least significant first) to out.
void append_digits(Elem x, std::uint32_t b, unsigned m, std::vector<Elem>& out);
/// Inverse of append_digits on a block of m digits.
Elem from_digits(std::span<const Elem> digits, std::uint32_t b);

/// A reduced row echelon matrix maintained incrementally. Rows are kept sorted
/// by pivot column and fully reduced, so two Echelons spanning the same row
/// space hold identical data.
class Echelon {
 public:
  Echelon(const GaloisField& base, unsigned width);

  const GaloisField& base() const { return *base_; }
  unsigned width() const { return width_; }
  unsigned rank() const { return static_cast<unsigned>(pivots_.size()); }
  std::span<const Elem> row(unsigned i) const { return {rows_.data() + std::size_t{i} * width_, width_}; }
  const std::vector<unsigned>& pivots() const { return pivots_; }
  const std::vector<Elem>& data() const { return rows_; }

  /// Reduces v in place against the current rows.
  void reduce(std::span<Elem> v) const;
  bool contains(std::span<const Elem> v) const;
  /// Adds v to the row space; returns false when v was already in it.
  bool insert(std::span<const Elem> v);

 private:
  const GaloisField* base_;
  unsigned width_;
  std::vector<Elem> rows_;
  std::vector<unsigned> pivots_;
};

/// F_b-rank of a family of elements of a field of size b^m.
unsigned rank_over(const GaloisField& base, unsigned m, std::span<const Elem> elems);

/// Basis of the kernel of the F_b-linear map sending the i-th standard basis
/// vector of F_b^in to images[i] (each a digit vector of length `out`).
std::vector<std::vector<Elem>> kernel_basis(const GaloisField& base, unsigned out,
                                            const std::vector<std::vector<Elem>>& images);

}  // namespace linsets

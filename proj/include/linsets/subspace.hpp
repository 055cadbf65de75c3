#pragma once

// F_b-subspaces of F^a for a tower level F and a subfield F_b (normally F_q,
// or F_2 for the even-set constructions), a in {1, 2}. A vector of F^2 is
// flattened to its 2m base-b digits, first coordinate first; the echelon form
// of the basis is the canonical representative.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linsets/echelon.hpp"
#include "linsets/gf_tower.hpp"

namespace linsets {

using Vector = std::vector<Elem>;  // `arity` field elements

class FqSubspace {
 public:
  /// The zero subspace of level^arity over base.
  FqSubspace(const GaloisField& level, const GaloisField& base, unsigned arity = 1);

  static FqSubspace span(const GaloisField& level, const GaloisField& base, unsigned arity,
                         const std::vector<Vector>& vectors);
  static FqSubspace span_elements(const GaloisField& level, const GaloisField& base, std::span<const Elem> elems);
  static FqSubspace whole(const GaloisField& level, const GaloisField& base, unsigned arity = 1);

  const GaloisField& level() const { return *level_; }
  const GaloisField& base() const { return *base_; }
  unsigned arity() const { return arity_; }
  /// Digits per field element, i.e. [level : base].
  unsigned degree() const { return m_; }
  unsigned dim() const { return ech_.rank(); }
  const Echelon& echelon() const { return ech_; }

  /// Basis vectors (echelon rows converted back to field elements).
  std::vector<Vector> basis() const;
  /// Basis of an arity-1 subspace as plain elements.
  std::vector<Elem> basis_elements() const;

  bool member(std::span<const Elem> v) const;
  bool member(Elem x) const;
  /// Adds a vector; returns false when it was already a member.
  bool insert(std::span<const Elem> v);

  FqSubspace intersect(const FqSubspace& other) const;
  FqSubspace sum(const FqSubspace& other) const;
  /// {a v : v in this}, a a nonzero element of the level.
  FqSubspace scalar_coset(Elem a) const;
  /// Swaps the two coordinates of an arity-2 subspace.
  FqSubspace swapped() const;

  /// Calls fn(const Vector&) for each of the b^dim members, zero first.
  template <class Fn>
  void for_each_member(Fn&& fn) const;
  std::uint64_t cardinality() const;

  bool operator==(const FqSubspace& other) const;

  /// Semicolon-separated echelon rows of comma-separated base-b digits.
  std::string to_string() const;
  static FqSubspace parse(const GaloisField& level, const GaloisField& base, unsigned arity, std::string_view text);

  std::vector<Elem> to_digits(std::span<const Elem> v) const;
  Vector from_digits_row(std::span<const Elem> digits) const;

 private:
  void check_compatible(const FqSubspace& other) const;

  const GaloisField* level_;
  const GaloisField* base_;
  unsigned arity_;
  unsigned m_;
  Echelon ech_;
};

/// Number of i-dimensional subspaces of F_b^d.
std::uint64_t gaussian_binomial(unsigned d, unsigned i, std::uint64_t b);

/// Walks every i-dimensional subspace of T once, in canonical order: pivot
/// column sets in lexicographic order, then free entries counting upward.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(const FqSubspace& T, unsigned i, std::uint64_t budget = kDefaultEnumerationBound);

  std::optional<FqSubspace> next();
  std::uint64_t count() const { return count_; }

 private:
  bool advance_pivots();
  void reset_free();

  const FqSubspace* T_;
  std::vector<Vector> tbasis_;
  unsigned d_;
  unsigned i_;
  std::uint64_t count_;
  std::vector<unsigned> pivots_;
  std::vector<std::pair<unsigned, unsigned>> free_;  // (row, column)
  std::vector<Elem> free_val_;
  bool started_ = false;
  bool done_ = false;
};

template <class Fn>
void FqSubspace::for_each_member(Fn&& fn) const {
  const unsigned k = dim();
  const std::uint32_t b = base_->size();
  const auto rows = basis();
  std::vector<Elem> coeff(k, 0);
  Vector v(arity_, 0);
  while (true) {
    std::fill(v.begin(), v.end(), 0);
    for (unsigned r = 0; r < k; ++r) {
      if (coeff[r] == 0) continue;
      for (unsigned a = 0; a < arity_; ++a) v[a] = level_->add(v[a], level_->mul(coeff[r], rows[r][a]));
    }
    fn(static_cast<const Vector&>(v));
    unsigned pos = 0;
    while (pos < k && ++coeff[pos] == b) coeff[pos++] = 0;
    if (pos == k) break;
  }
}

}  // namespace linsets

#pragma once

// Exact arithmetic in the field tower F_p <= F_q <= F_{q^t} <= F_{q^{2t}}.
//
// Every level stores its elements as integer indices: the index of an element
// is sum_i c_i * |sub|^i where (c_0, c_1, ...) are its coordinates over the
// level immediately below. Unfolding this recursively, the base-p digits of an
// index are the element's coordinates over F_p, and its base-q digits are the
// coordinates over F_q. Two consequences are used throughout the library:
//
//   * embedding a lower level into a higher one is the identity on indices, and
//     an element lies in a subfield of size N iff its index is < N;
//   * the base-b digits of an index (b = |F_p| or |F_q|) are exactly the
//     coordinate vector used by the echelon kernels over F_b.
//
// Multiplication goes through exp/log tables built from a primitive element,
// so a level is limited to kMaxFieldSize elements.

#include <array>
#include <cstdint>
#include <iterator>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linsets/error.hpp"

namespace linsets {

using Elem = std::uint32_t;

inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 24;

enum class Level : int { prime = 0, q = 1, qt = 2, qn = 3 };

std::string to_string(Level level);

/// One finite field given either as F_p or as a simple extension of a smaller
/// GaloisField. Values are plain indices; all methods are pure.
class GaloisField {
 public:
  explicit GaloisField(std::uint32_t p);
  GaloisField(const GaloisField& sub, std::vector<Elem> modulus);

  GaloisField(const GaloisField&) = delete;
  GaloisField& operator=(const GaloisField&) = delete;

  std::uint32_t size() const { return size_; }
  std::uint32_t characteristic() const { return p_; }
  /// Degree over the prime field.
  unsigned degree() const { return degree_; }
  /// Degree over `subfield()` (1 for a prime field).
  unsigned relative_degree() const { return rel_degree_; }
  const GaloisField* subfield() const { return sub_; }
  /// Monic defining polynomial over the subfield, low degree first.
  const std::vector<Elem>& modulus() const { return modulus_; }

  bool contains(Elem x) const { return x < size_; }
  bool is_subfield_of(const GaloisField& other) const;

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (degree_ == 1) return (a + b) % p_;
    return add_digits(a, b);
  }
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// x^(b^k) where b is the size of a subfield (the Frobenius relative to it).
  Elem frobenius(Elem x, std::uint32_t b, unsigned k) const;
  /// Multiplicative order of the group, size() - 1.
  std::uint32_t order() const { return size_ - 1; }
  Elem primitive() const { return exp_[1]; }
  std::uint32_t log(Elem a) const { return log_[a]; }
  Elem exp(std::uint64_t e) const { return exp_[e % (size_ - 1)]; }

  /// Coordinates over the immediate subfield.
  std::vector<Elem> coords(Elem x) const;
  Elem from_coords(std::span<const Elem> c) const;

  /// Multiplication through the polynomial representation, independent of the
  /// exp/log tables; used to build the tables and as a test oracle.
  Elem mul_schoolbook(Elem a, Elem b) const;

 private:
  Elem add_digits(Elem a, Elem b) const;
  void build_tables();

  std::uint32_t p_;
  std::uint32_t size_;
  unsigned degree_;
  unsigned rel_degree_;
  const GaloisField* sub_ = nullptr;
  std::vector<Elem> modulus_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

/// Sum_{i<m} x^(b^i) and prod_{i<m} x^(b^i) in `field`, for b = |subfield|.
Elem trace_over(const GaloisField& field, Elem x, std::uint32_t b, unsigned m);
Elem norm_over(const GaloisField& field, Elem x, std::uint32_t b, unsigned m);

/// Number of base-b digits needed for one element of a field of size N = b^m.
unsigned digits_per_element(std::uint32_t field_size, std::uint32_t b);

namespace poly {
// Dense polynomials over a GaloisField, low degree first, trailing zeros trimmed.
using Poly = std::vector<Elem>;

void trim(Poly& f);
Poly mul(const GaloisField& F, const Poly& a, const Poly& b);
Poly mod(const GaloisField& F, Poly a, const Poly& monic);
Poly gcd(const GaloisField& F, Poly a, Poly b);
bool is_irreducible(const GaloisField& F, const Poly& monic);
/// Smallest monic irreducible of the given degree, ordering candidates by the
/// integer sum_i c_i |F|^i of their non-leading coefficients.
Poly smallest_irreducible(const GaloisField& F, unsigned degree);
}  // namespace poly

bool is_prime(std::uint64_t n);

class FieldElement;
class ElementRange;

/// Immutable handle to the four-level tower. Copies share the same tables.
class FieldTower {
 public:
  /// Builds the tower with the smallest irreducible polynomials, or with the
  /// given overrides (one per relative extension, low degree first).
  static FieldTower make(std::uint32_t p, unsigned e, unsigned t,
                         const std::optional<std::array<std::vector<Elem>, 3>>& overrides = {});
  /// Parses the canonical form `p,e,t;poly1;poly2;poly3`.
  static FieldTower parse(std::string_view text);
  std::string serialize() const;

  std::uint32_t p() const;
  unsigned e() const;
  unsigned t() const;
  unsigned n() const { return 2 * t(); }
  std::uint32_t q() const { return field(Level::q).size(); }

  const GaloisField& field(Level level) const;
  FieldElement element(Level level, Elem value) const;
  FieldElement zero(Level level) const;
  FieldElement one(Level level) const;

  /// Canonical root of the top defining quadratic, with xi^2 = A xi + B.
  FieldElement xi() const;
  FieldElement xi_A() const;
  FieldElement xi_B() const;

  /// Level-checked relative trace and norm F_{q^t} -> F_q and F_{q^n} -> F_{q^t}.
  FieldElement rel_trace(const FieldElement& x) const;
  FieldElement rel_norm(const FieldElement& x) const;
  FieldElement top_trace(const FieldElement& x) const;
  FieldElement top_norm(const FieldElement& x) const;

  /// Index-level versions of the four maps above.
  Elem trace_qt(Elem x) const;
  Elem norm_qt(Elem x) const;
  Elem trace_qn(Elem x) const;
  Elem norm_qn(Elem x) const;

  FieldElement embed(const FieldElement& x, Level to) const;
  std::optional<FieldElement> project(const FieldElement& x, Level to) const;

  /// Every element of a level in index order; throws BoundExceeded when the
  /// level is larger than `bound`.
  ElementRange enumerate(Level level, std::uint64_t bound = kDefaultEnumerationBound) const;

  bool operator==(const FieldTower& other) const { return data_ == other.data_; }

 private:
  struct Data;
  explicit FieldTower(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// A value in one level of a tower. Holds a non-owning pointer to the level's
/// GaloisField, so the tower must outlive it.
class FieldElement {
 public:
  FieldElement(const GaloisField& field, Elem value);

  const GaloisField& field() const { return *field_; }
  Elem value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  std::vector<Elem> coords() const { return field_->coords(value_); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {*field_, field_->neg(value_)}; }
  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const { return {*field_, field_->pow(value_, e)}; }
  /// x^(b^k) for b the size of `base`, a subfield of this element's field.
  FieldElement frobenius(const GaloisField& base, unsigned k) const;

  bool operator==(const FieldElement& o) const { return field_ == o.field_ && value_ == o.value_; }

 private:
  void check_same(const FieldElement& o) const;
  const GaloisField* field_;
  Elem value_;
};

class ElementRange {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = FieldElement;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const GaloisField* f, Elem v) : field_(f), value_(v) {}
    FieldElement operator*() const { return {*field_, value_}; }
    iterator& operator++() { ++value_; return *this; }
    iterator operator++(int) { auto c = *this; ++value_; return c; }
    bool operator==(const iterator& o) const { return value_ == o.value_; }
   private:
    const GaloisField* field_ = nullptr;
    Elem value_ = 0;
  };
  explicit ElementRange(const GaloisField& f) : field_(&f) {}
  iterator begin() const { return {field_, 0}; }
  iterator end() const { return {field_, field_->size()}; }
  std::size_t size() const { return field_->size(); }
 private:
  const GaloisField* field_;
};

}  // namespace linsets

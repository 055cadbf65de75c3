#pragma once

// Linearized polynomials sum_i a_i X^(b^i) over a field F, where F_b is a
// subfield (normally F_q). Exponents are folded modulo m = [F : F_b] using
// x^(b^m) = x, so the coefficient list always has length m and polynomial
// equality is coefficient equality.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linsets/gf_tower.hpp"
#include "linsets/subspace.hpp"

namespace linsets {

class LinPoly {
 public:
  /// coeffs[i] multiplies X^(b^i); indices >= m are folded mod m.
  LinPoly(const GaloisField& level, const GaloisField& base, std::vector<Elem> coeffs);

  static LinPoly zero(const GaloisField& level, const GaloisField& base);
  static LinPoly identity(const GaloisField& level, const GaloisField& base);
  /// c X^(b^k).
  static LinPoly monomial(const GaloisField& level, const GaloisField& base, unsigned k, Elem c = 1);
  /// The relative trace onto the base field.
  static LinPoly trace(const GaloisField& level, const GaloisField& base);
  /// The unique polynomial mapping basis[j] to images[j]; basis must be a
  /// base-field basis of the level (solved through the Moore matrix).
  static LinPoly from_map(const GaloisField& level, const GaloisField& base, std::span<const Elem> basis,
                          std::span<const Elem> images);

  const GaloisField& level() const { return *level_; }
  const GaloisField& base() const { return *base_; }
  unsigned degree() const { return m_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  Elem coeff(unsigned i) const { return coeffs_[i % m_]; }
  bool is_zero() const;

  Elem eval(Elem x) const;
  Elem operator()(Elem x) const { return eval(x); }
  FieldElement eval(const FieldElement& x) const;

  /// Row j holds the base-b digits of f(e_j), e_j the standard basis element
  /// with index b^j; i.e. the transpose of the usual matrix of f.
  std::vector<std::vector<Elem>> as_matrix() const;
  unsigned image_dim() const;
  unsigned kernel_dim() const { return m_ - image_dim(); }
  bool is_invertible() const { return image_dim() == m_; }
  FqSubspace kernel() const;
  FqSubspace image() const;

  /// (f o g)(x) = f(g(x)).
  LinPoly compose(const LinPoly& g) const;
  LinPoly operator+(const LinPoly& g) const;
  LinPoly operator-(const LinPoly& g) const;
  LinPoly operator-() const;
  /// f(cX).
  LinPoly pre_scale(Elem c) const;
  /// c f(X).
  LinPoly post_scale(Elem c) const;

  bool operator==(const LinPoly& g) const;

  /// Terms `c*X^qk` joined by " + ", lowest exponent first; `X` for k = 0, `X^q`
  /// for k = 1, coefficient omitted when it is 1, `0` for the zero polynomial.
  /// Coefficients are element indices.
  std::string to_string() const;
  static LinPoly parse(const GaloisField& level, const GaloisField& base, std::string_view text);

 private:
  void check_same(const LinPoly& g) const;

  const GaloisField* level_;
  const GaloisField* base_;
  unsigned m_;
  std::vector<Elem> coeffs_;
  std::vector<std::uint64_t> frob_exp_;  // b^i mod (|F| - 1)
};

/// Coefficients c_0..c_k (c_k = 1) of the monic polynomial
/// sum_j c_j X^(b^(s j)) whose roots in the level are exactly the subspace W
/// (over F_b, dim k). Not folded, so the full q^s-degree is visible.
std::vector<Elem> subspace_polynomial_coeffs(const FqSubspace& W, unsigned s = 1);
/// The same polynomial as a folded LinPoly.
LinPoly subspace_polynomial(const FqSubspace& W, unsigned s = 1);

/// For c_0 X + c_1 X^(b^s) + ... + c_{k-1} X^(b^(s(k-1))) - X^(b^(sk)) over a
/// field of degree m over F_b with gcd(s, m) = 1: whether N(c_0) = (-1)^(m(k+1)),
/// the norm condition met by every such polynomial that splits completely.
/// Throws PreconditionError when c_k != -1 or gcd(s, m) != 1.
bool normcond_check(const GaloisField& level, const GaloisField& base, std::span<const Elem> c, unsigned s);
/// Reads c_j = f.coeff(s j) for j = 0..k; every other coefficient must be zero.
bool normcond_check(const LinPoly& f, unsigned s, unsigned k);

}  // namespace linsets

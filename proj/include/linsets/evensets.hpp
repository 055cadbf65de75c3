#pragma once

// Sets of even type in PG(2, Q), Q = 2^s, built from an F_2-linear map g of
// F_Q as  S = {(1, x, g(x))}  together with the points of the line X = 0 that
// are not directions (0, x, g(x)).
//
// Points (and lines, as dual triples) are normalized with first nonzero
// coordinate 1 and numbered
//   (1, y, z) -> y Q + z,   (0, 1, z) -> Q^2 + z,   (0, 0, 1) -> Q^2 + Q.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "linsets/gf_tower.hpp"
#include "linsets/linpoly.hpp"
#include "linsets/linset.hpp"

namespace linsets {

struct PlanePoint {
  Elem x = 0, y = 0, z = 0;

  /// Normal form of <(x, y, z)> != 0.
  static PlanePoint normalize(const GaloisField& F, Elem x, Elem y, Elem z);
  static PlanePoint from_index(std::uint64_t Q, std::uint64_t i);
  std::uint64_t index(std::uint64_t Q) const;
  std::string to_string() const;

  auto operator<=>(const PlanePoint&) const = default;
};

inline std::uint64_t plane_size(std::uint64_t Q) { return Q * Q + Q + 1; }

/// All lines of PG(2, Q) as normalized dual triples, in index order. Throws
/// PreconditionError for odd Q and BoundExceeded when Q^2 + Q + 1 > bound.
std::vector<PlanePoint> lines(const GaloisField& F, std::uint64_t bound = kDefaultEnumerationBound);
/// The Q + 1 points of a line, as point indices.
std::vector<std::uint64_t> points_on_line(const GaloisField& F, const PlanePoint& line);

/// Intersection size with every line, indexed like the points.
std::vector<std::uint32_t> line_intersections(const GaloisField& F, const std::vector<bool>& member,
                                              Exec exec = Exec::parallel);

struct EvenSetReport {
  std::uint64_t q = 0;
  std::uint64_t size = 0;
  std::map<std::uint32_t, std::uint64_t> spectrum;  // intersection size -> number of lines
  bool even = false;
  std::uint64_t translation_size = 0;  // |S| after de-duplication; q expected
  std::uint64_t lg_size = 0;
  WeightEnumerator lg_enumerator;
  bool size_formula_ok = false;    // size == 2q + 1 - |L_g|
  bool direction_rule_ok = false;  // lines through a weight-w direction meet in 0 or 2^w
  bool axis_line_ok = false;       // X = 0 meets in q + 1 - |L_g|
  std::vector<std::uint64_t> points;

  std::uint64_t line_count() const;
  std::set<std::uint32_t> spectrum_sizes() const;
  bool ok() const { return even && size_formula_ok && direction_rule_ok && axis_line_ok && translation_size == q; }
};

/// g must be linear over F_2 on a field of characteristic 2.
EvenSetReport translation_even_set(const LinPoly& g, Exec exec = Exec::parallel,
                                   std::uint64_t bound = kDefaultEnumerationBound);

/// An F_b-linear g on F with L_g projectively equivalent to L_U, for a linear
/// set of rank [F : F_b] that misses at least one point.
LinPoly graph_map(const LinearSet& L);

struct EvenSetCheck {
  std::string name;
  EvenSetReport report;
  std::uint64_t expected_size = 0;
  std::set<std::uint32_t> expected_spectrum;

  bool pass() const {
    return report.ok() && report.size == expected_size && report.spectrum_sizes() == expected_spectrum;
  }
};

/// From Psi^{m-1} of the subline at q = 2: Q = 2^{2^m}, size
/// 2Q + 1 - |L|, spectrum {0, 2, 2^2, 2^4, ..., 2^{2^{m-1}}, Q + 1 - |L|}.
EvenSetCheck verify_cor_evenset(unsigned m, Exec exec = Exec::parallel,
                                std::uint64_t bound = kDefaultEnumerationBound);
/// From the product of a scattered f on F_{2^t}: Q = 2^{2t}, size
/// Q + 2 sqrt(Q) - 2, spectrum {0, 2, sqrt(Q), 2 (sqrt(Q) - 1)}.
EvenSetCheck scattered_even_set(unsigned t, Exec exec = Exec::parallel,
                                std::uint64_t bound = kDefaultEnumerationBound);

}  // namespace linsets

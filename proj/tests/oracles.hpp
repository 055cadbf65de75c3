#pragma once

// Brute-force reference computations shared by the unit tests. Each one avoids
// the library routine it is used to check.

#include <cstdint>
#include <map>
#include <vector>

#include "linsets/linpoly.hpp"
#include "linsets/linset.hpp"

namespace oracle {

using linsets::Elem;

/// i-dim subspaces of F_b^d as (ordered bases) / |GL_i(b)|.
inline std::uint64_t gaussian(unsigned d, unsigned i, std::uint64_t b) {
  if (i > d) return 0;
  unsigned __int128 num = 1, den = 1;
  auto pw = [b](unsigned e) {
    unsigned __int128 r = 1;
    for (unsigned k = 0; k < e; ++k) r *= b;
    return r;
  };
  for (unsigned j = 0; j < i; ++j) {
    num *= pw(d) - pw(j);
    den *= pw(i) - pw(j);
  }
  return static_cast<std::uint64_t>(num / den);
}

/// Number of roots of f in its level, by evaluating sum c_i x^(b^i) with pow.
inline std::uint64_t root_count(const linsets::LinPoly& f) {
  const auto& F = f.level();
  const std::uint32_t b = f.base().size();
  std::uint64_t n = 0;
  for (Elem x = 0; x < F.size(); ++x) {
    Elem acc = 0;
    std::uint64_t e = 1;
    for (unsigned i = 0; i < f.degree(); ++i, e *= b) acc = F.add(acc, F.mul(f.coeff(i), F.pow(x, e)));
    n += acc == 0;
  }
  return n;
}

inline unsigned log_b(std::uint64_t n, std::uint64_t b) {
  unsigned w = 0;
  for (std::uint64_t c = 1; c < n; c *= b) ++w;
  return w;
}

/// Weights of every point, by walking the members of U and bucketing each
/// nonzero vector by the point it spans: a point of weight w collects b^w - 1.
inline std::vector<std::uint8_t> weights_by_members(const linsets::LinearSet& L) {
  const auto& F = L.field();
  std::vector<std::uint64_t> hits(F.size() + 1, 0);
  L.subspace().for_each_member([&](const linsets::Vector& v) {
    if (v[0] == 0 && v[1] == 0) return;
    const auto P = linsets::ProjPoint::normalize(F, v[0], v[1]);
    ++hits[P.index(F)];
  });
  std::vector<std::uint8_t> w(hits.size());
  for (std::size_t i = 0; i < hits.size(); ++i) w[i] = static_cast<std::uint8_t>(log_b(hits[i] + 1, L.base().size()));
  return w;
}

}  // namespace oracle

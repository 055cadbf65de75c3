#pragma once

// Named desk-scale checks, each comparing constructions against brute force or
// closed forms. Used by `linsets_cli verify` and by the acceptance binary.

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "linsets/gf_tower.hpp"
#include "linsets/linpoly.hpp"
#include "linsets/linset.hpp"
#include "linsets/subspace.hpp"

namespace linsets {

/// Counts linear sets whose enumerator was checked against
/// sum_w A_w (b^w - 1) = b^rank - 1.
struct IdentityTally {
  std::atomic<std::uint64_t> checked{0};
  std::atomic<std::uint64_t> failed{0};

  bool record(const WeightEnumerator& e, std::uint64_t b, unsigned rank) {
    ++checked;
    const bool ok = e.identity_holds(b, rank);
    if (!ok) ++failed;
    return ok;
  }
};

struct VerifyOptions {
  std::uint64_t max_field = 4096;  // largest q^n scanned
  std::optional<FieldTower> tower; // overrides the default parameters where a check takes one
  std::optional<unsigned> m;
  Exec exec = Exec::parallel;
  std::uint64_t seed = 20240601;
  IdentityTally* tally = nullptr;
};

struct CheckResult {
  std::string name;
  std::string params;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Deterministic random objects for the checks.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  Elem element(const GaloisField& F) { return static_cast<Elem>(below(F.size())); }
  Elem nonzero(const GaloisField& F) { return static_cast<Elem>(1 + below(F.size() - 1)); }
  /// Uniform element of `top` outside the subfield of size `sub`.
  Elem outside(const GaloisField& top, std::uint32_t sub) {
    return static_cast<Elem>(sub + below(top.size() - sub));
  }
  LinPoly linpoly(const GaloisField& level, const GaloisField& base);
  /// A subspace of exact dimension d of `level` over `base`.
  FqSubspace subspace(const GaloisField& level, const GaloisField& base, unsigned d, unsigned arity = 1);

 private:
  std::mt19937_64 rng_;
};

const std::vector<std::string>& check_names();
/// Throws ParseError for an unknown name.
CheckResult run_check(const std::string& name, const VerifyOptions& opts);
/// Every check in order, then the counting identity over everything they built.
std::vector<CheckResult> run_all(const VerifyOptions& opts,
                                 const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace linsets

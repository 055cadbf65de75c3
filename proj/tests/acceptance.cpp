// Desk-scale acceptance run: one PASS/FAIL line per criterion, each with a
// pinned wall-clock limit. Exit 0 iff every line passes.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "linsets/verify.hpp"

using namespace linsets;

namespace {

struct Criterion {
  int id;
  const char* title;
  std::vector<const char*> checks;
  double limit_seconds;
};

const std::vector<Criterion> kCriteria = {
    {1, "weight criteria equal the oracle", {"criteria-oracle"}, 120},
    {2, "points of weight >= i from subspace intersections", {"heavy-points"}, 120},
    {3, "trace x trace weights", {"trace-trace-weights"}, 30},
    {4, "monomial weights", {"monomial-weights"}, 30},
    {5, "binomial bounds", {"binomial-bounds"}, 60},
    {6, "f-trace, xq-trace and f-f bound suites", {"f-trace-bounds", "xq-trace-bounds", "f-f-bounds"}, 60},
    {7, "product enumerator", {"product-enumerator"}, 10},
    {8, "iterated product counts", {"iterated-product"}, 30},
    {9, "even sets of the plane of order 16", {"even-set"}, 10},
    {10, "norm of the constant term of subspace polynomials", {"subspace-polynomial-norm"}, 30},
    {11, "relation vs two heavy points", {"two-heavy-points"}, 120},
    {12, "counting identity over every constructed set", {"counting-identity"}, 60},
};

}  // namespace

int main() {
  IdentityTally tally;
  VerifyOptions opts;
  opts.max_field = 65536;  // PG(1, 256) scans and the q = 3, t = 4 run
  opts.tally = &tally;

  int failed = 0;
  for (const auto& c : kCriteria) {
    bool pass = true;
    double seconds = 0;
    std::string detail;
    for (const char* name : c.checks) {
      const CheckResult r = run_check(name, opts);
      pass = pass && r.pass;
      seconds += r.seconds;
      if (!detail.empty()) detail += " | ";
      detail += std::string(name) + ": " + r.params + "; " + r.detail;
    }
    const bool in_time = seconds <= c.limit_seconds;
    const bool ok = pass && in_time;
    failed += !ok;
    std::printf("%s criterion %d (%s) [%.2fs / %.0fs limit]%s :: %s\n", ok ? "PASS" : "FAIL", c.id, c.title, seconds,
                c.limit_seconds, in_time ? "" : " TIMEOUT", detail.c_str());
  }
  std::printf("%s: %d of %zu criteria failed\n", failed ? "FAIL" : "PASS", failed, kCriteria.size());
  return failed ? 1 : 0;
}

#pragma once

// Command-line front end. `run_cli` is the whole program; the executable in
// tools/ only forwards argv.
//
// Exit codes: 0 pass, 1 a check or prediction failed, 2 usage error (including
// odd q for even sets), 3 enumeration bound exceeded.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace linsets {

enum ExitCode : int { kExitPass = 0, kExitMismatch = 1, kExitUsage = 2, kExitBound = 3 };

struct RunConfig {
  std::string command;
  std::optional<std::uint32_t> p;
  std::optional<unsigned> e;
  std::optional<unsigned> t;
  std::string family;
  std::string S, T;  // comma-separated element indices of F_{q^n}
  std::string xi = "tower";
  std::string format = "table";
  std::string output;
  std::uint64_t bound = 0;  // 0 = library default
  unsigned threads = 0;     // 0 = OpenMP default
  bool dry_run = false;
  std::optional<unsigned> m;
  std::string g;
  std::optional<unsigned> scattered_t;
  std::vector<std::string> only;
  bool all = false;
  std::uint64_t max_field = 4096;
  std::optional<unsigned> weight;  // points: i
  bool exact = false;
  std::optional<std::uint64_t> x0, x1;
  bool list_points = false;

  /// `key=value` pairs joined by ';' in a fixed key order; unset keys omitted.
  std::string canonical() const;
  static RunConfig parse_canonical(std::string_view text);
};

/// Parses "p^e" or a prime power "q"; throws ParseError otherwise.
std::pair<std::uint32_t, unsigned> parse_q(std::string_view text);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace linsets

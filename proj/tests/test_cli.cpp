#include <gtest/gtest.h>

#include <sstream>

#include "linsets/cli.hpp"
#include "linsets/error.hpp"

using namespace linsets;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "linsets_cli");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ParseQ) {
  EXPECT_EQ(parse_q("3^2"), (std::pair<std::uint32_t, unsigned>{3, 2}));
  EXPECT_EQ(parse_q("8"), (std::pair<std::uint32_t, unsigned>{2, 3}));
  EXPECT_EQ(parse_q("5"), (std::pair<std::uint32_t, unsigned>{5, 1}));
  EXPECT_THROW(parse_q("6"), ParseError);
  EXPECT_THROW(parse_q("4^2"), ParseError);
  EXPECT_THROW(parse_q("x"), ParseError);
}

TEST(Cli, WeightsOfTraceTrace) {
  const auto r = run({"weights", "--q", "3", "--t", "3", "--family", "trace-trace"});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  EXPECT_NE(r.out.find("4X^3 + 312X"), std::string::npos) << r.out;
}

TEST(Cli, RecordsAreDeterministic) {
  const std::vector<std::string> args{"weights", "--q", "2", "--t", "3", "--family", "xq-trace", "--format", "records"};
  const auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, kExitPass);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.front(), '{');
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"weights", "--q", "3", "--t", "3", "--family", "bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"evenset", "--q", "3", "--g", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"weights", "--q", "3", "--t", "9", "--family", "trace-trace"}).code, kExitBound);
  EXPECT_EQ(run({"no-such-command"}).code, kExitUsage);
  EXPECT_EQ(run({"evenset", "--m", "2"}).code, kExitPass);
  EXPECT_EQ(run({"verify", "--only", "monomial-weights", "--q", "3", "--t", "3"}).code, kExitPass);
}

TEST(Cli, DryRunPrintsTheConfigAndDoesNothingElse) {
  const auto r = run({"weights", "--q", "3", "--t", "3", "--family", "trace-trace", "--dry-run"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out.find("312"), std::string::npos);
  EXPECT_NE(r.out.find("cmd=weights"), std::string::npos) << r.out;
}

TEST(Cli, CanonicalConfigRoundTrips) {
  RunConfig c;
  c.command = "verify";
  c.p = 3;
  c.e = 1;
  c.t = 4;
  c.only = {"heavy-points", "even-set"};
  c.m = 2;
  c.max_field = 6561;
  c.threads = 2;
  const RunConfig d = RunConfig::parse_canonical(c.canonical());
  EXPECT_EQ(d.canonical(), c.canonical());
  EXPECT_EQ(d.only, c.only);
  EXPECT_EQ(d.max_field, 6561u);
}

TEST(Cli, PointsAndRankWeights) {
  const auto p = run({"points", "--q", "2", "--t", "3", "--family", "trace-trace", "--weight", "3", "--exact"});
  EXPECT_EQ(p.code, kExitPass) << p.err;
  const auto r = run({"rank-weights", "--q", "2", "--t", "2", "--family", "trace-trace", "--x0", "1", "--x1", "0"});
  EXPECT_EQ(r.code, kExitPass) << r.err;
}

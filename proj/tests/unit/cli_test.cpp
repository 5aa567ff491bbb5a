#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "dimkit/cli.hpp"

using namespace dimkit;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(DIMKIT_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, SolveExitCodes) {
  CliRun c6 = run({"solve", data("c6.graph")});
  EXPECT_EQ(c6.code, kExitDim);
  EXPECT_NE(c6.out.find("# status: dim"), std::string::npos);

  CliRun c4 = run({"solve", "--json", data("c4.graph")});
  EXPECT_EQ(c4.code, kExitNoDim);
  EXPECT_EQ(nlohmann::json::parse(c4.out)["status"], "no-dim");

  EXPECT_EQ(run({"solve", data("missing.graph")}).code, kInputError);
  EXPECT_EQ(run({"solve", "--no-such-flag", data("c6.graph")}).code, kInputError);
  EXPECT_EQ(run({}).code, kInputError);
}

TEST(Cli, SolveWithoutFallback) {
  CliRun p7 = run({"solve", "--oracle-max-n", "0", data("p7.graph")});
  EXPECT_EQ(p7.code, kExitDim);
}

TEST(Cli, Verify) {
  EXPECT_EQ(run({"verify", data("c6.graph"), data("c6_good.matching")}).code, 0);
  CliRun bad = run({"verify", data("c6.graph"), data("c6_bad.matching")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("not a d.i.m."), std::string::npos);
}

TEST(Cli, Oracle) {
  CliRun r = run({"oracle", data("c6.graph")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# count: 3"), std::string::npos);
}

TEST(Cli, DeterministicJson) {
  std::vector<std::string> args{"solve", "--json", "--deterministic", data("p7.graph")};
  CliRun a = run(args), b = run(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}

TEST(Cli, GenPrintsGraph) {
  CliRun a = run({"gen", "planted", "--n", "20", "--k", "4", "--extra", "6", "--seed", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out.rfind("20 ", 0), 0U);
  EXPECT_EQ(a.out, run({"gen", "planted", "--n", "20", "--k", "4", "--extra", "6", "--seed", "3"}).out);
  EXPECT_EQ(run({"gen", "planted", "--n", "4", "--k", "3"}).code, kInputError);
}

TEST(Cli, CrossCheck) {
  CliRun r = run({"cross-check", "--max-n", "7", "--count", "200", "--seed", "5"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

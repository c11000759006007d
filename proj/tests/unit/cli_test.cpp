#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "convdiff/cli.hpp"
#include "convdiff/io.hpp"

using namespace convdiff;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, WorkedExampleMatrix) {
  const auto r = run({"diff", "--dom", "z2^2", "--cod", "z2^3", "--f", "(p,(1+p)(1+q),q)",
                      "--at", "(1,1)"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("(p,q) -> (p,0,q)"), std::string::npos);
  EXPECT_NE(r.out.find("differentials: 1"), std::string::npos);
}

TEST(Cli, PentacleProps) {
  const auto r = run({"space", "--pentacle", "--props"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("T0=true"), std::string::npos);
  EXPECT_NE(r.out.find("topological=false"), std::string::npos);
}

TEST(Cli, ExamplesSuitePasses) {
  const auto r = run({"examples", "--suite", "paper"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(run({"examples", "--suite", "reference"}).out, r.out);
}

TEST(Cli, UserErrors) {
  EXPECT_EQ(run({}).code, cli::kUserError);
  EXPECT_EQ(run({"group", "--group", "s:3", "--bogus"}).code, cli::kUserError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUserError);
  const auto bad_group = run({"group", "--group", "quaternion:8"});
  EXPECT_EQ(bad_group.code, cli::kUserError);
  EXPECT_EQ(bad_group.err.rfind("error[InvalidArgument]", 0), 0u);
  const auto redundant = run({"cayley", "--group", "s:3", "--gens", "r,r2,t"});
  EXPECT_EQ(redundant.code, cli::kUserError);
  EXPECT_EQ(redundant.err.rfind("error[Redundant]", 0), 0u);
  EXPECT_EQ(run({"diff", "--dom", "z2^2", "--cod", "z2^2", "--f", "p", "--at", "00"}).code,
            cli::kUserError); // one component for a two-dimensional codomain
  EXPECT_EQ(run({"diff", "--dom", "z2^2", "--f", "p", "--builtin", "zero", "--at", "0"}).code,
            cli::kUserError); // two function sources
  EXPECT_EQ(run({"examples", "--suite", "other"}).code, cli::kUserError);
}

TEST(Cli, GuardOverrideFromEnvironment) {
  ::setenv("CONVDIFF_LIMITS", "max_group_order=4", 1);
  const auto r = run({"group", "--group", "cyclic:6"});
  ::setenv("CONVDIFF_LIMITS", "no_such_key=1", 1);
  const auto bad = run({"group", "--group", "cyclic:2"});
  ::unsetenv("CONVDIFF_LIMITS");
  EXPECT_EQ(r.code, cli::kUserError);
  EXPECT_EQ(r.err.rfind("error[SizeGuardExceeded]", 0), 0u);
  EXPECT_EQ(bad.code, cli::kUserError);
  EXPECT_EQ(run({"group", "--group", "cyclic:6"}).code, 0);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::vector<std::string>> invocations{
      {"group", "--group", "s:3", "--homs-to", "s:3"},
      {"cayley", "--group", "s:3", "--format", "dot"},
      {"diffspace", "--dom", "z2^2", "--cod", "z2^2", "--format", "json"},
      {"diff", "--builtin", "bad", "--at", "(1,0,1)", "--format", "json"},
      {"bool", "census", "--m", "3", "--f", "pq+1"},
      {"examples", "--suite", "paper"},
  };
  for (const auto &args : invocations) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << args[0] << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << args[0];
  }
}

TEST(Cli, JsonOutputsReparse) {
  const auto g = run({"group", "--group", "cyclic:2+s:3", "--format", "json"});
  ASSERT_EQ(g.code, 0) << g.err;
  const auto doc = nlohmann::json::parse(g.out);
  EXPECT_EQ(group_from_json(doc), direct_sum(cyclic(2), symmetric(3)));

  const auto s = run({"space", "--group", "cyclic:5"});
  ASSERT_EQ(s.code, 0);
  const auto digraph = digraph_from_json(nlohmann::json::parse(s.out));
  EXPECT_EQ(digraph.size(), 5u);
  EXPECT_EQ(to_json(digraph), nlohmann::json::parse(s.out));
}

TEST(Cli, FileInputs) {
  const std::string dir = ::testing::TempDir();
  std::ofstream(dir + "z3.json") << R"({"order":3,"table":[[0,1,2],[1,2,0],[2,0,1]],"names":["e","a","b"]})";
  std::ofstream(dir + "f.json") << R"({"dom_size":3,"cod_size":3,"values":[0,1,2]})";
  const auto r = run({"diff", "--dom", "file:" + dir + "z3.json", "--cod",
                      "file:" + dir + "z3.json", "--fn", dir + "f.json", "--at", "a",
                      "--oracle", "both"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("differentials: 1"), std::string::npos);
  EXPECT_NE(r.out.find("[e, a, b]  isolated"), std::string::npos);
}

TEST(Cli, BoolSubcommands) {
  const auto d = run({"bool", "diff", "--m", "3", "--f", "((1+q)(1+p+pr),(1+r)q)", "--at", "101"});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_NE(d.out.find("(p,q,r) -> (q+r,0)"), std::string::npos);
  const auto s = run({"bool", "solve", "--m", "2", "--f", "(p,(1+p)(1+q),q)", "--at", "11"});
  ASSERT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("solutions: 1"), std::string::npos);
  const auto l = run({"bool", "leibniz", "--m", "2", "--f", "p", "--g", "q", "--at", "11"});
  EXPECT_EQ(l.code, 0);
  EXPECT_EQ(run({"bool", "diff", "--m", "2", "--f", "p", "--at", "101"}).code, cli::kUserError);
}

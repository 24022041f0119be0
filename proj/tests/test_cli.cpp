#include "equinorm/cli.hpp"

#include "cli_goldens.hpp"

#include <gtest/gtest.h>

#include <cctype>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = equinorm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

class Golden : public ::testing::TestWithParam<goldens::Case> {};

TEST_P(Golden, ByteIdenticalPayloadAndExitCode) {
  const auto& c = GetParam();
  const auto r = run(c.args);
  EXPECT_EQ(r.code, c.exit_code) << r.err;
  EXPECT_EQ(r.out, c.stdout_payload);
  if (!c.stderr_contains.empty()) EXPECT_NE(r.err.find(c.stderr_contains), std::string::npos) << r.err;
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(goldens::cases()),
                         [](const auto& info) {
                           std::string name = info.param.name;
                           for (auto& ch : name) {
                             if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                           }
                           return name;
                         });

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"forward", "--s", "4,2"}).code, 2);
  EXPECT_EQ(run({"forward", "--s", "4,x", "--lambda", "1"}).code, 2);
  EXPECT_EQ(run({"forward", "--s", "4,2", "--lambda", "1,2"}).code, 2);
  EXPECT_EQ(run({"inverse", "--x", "1,2", "--y", "1,2,3"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--dim", "2", "--bound", "201"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--dim", "2", "--bound", "5", "--method", "params"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--dim", "2", "--bound", "5", "--method", "nope"}).code, 2);
  EXPECT_EQ(run({"pythagorean", "generate", "--max", "4"}).code, 2);
  EXPECT_EQ(run({"three-squares", "integer", "--m", "1,1,1", "--n", "0,1,1"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("forward"), std::string::npos);
}

TEST(Cli, ForwardWithPivot) {
  const auto r = run({"forward", "--s", "0,4,2", "--lambda", "0,1/2", "--pivot", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "{\"x\":[\"0\",\"3\",\"4\"],\"y\":[\"0\",\"5\",\"0\"]}\n");
}

TEST(Cli, ParallelogramChain) {
  const auto r = run({"parallelogram", "chain", "--quad", "-1,3,4,2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "{\"u_plus\":\"3\",\"u_minus\":\"-1\",\"s1\":\"1\",\"s2\":\"1\",\"lambda2\":\"2\"}\n");
}

TEST(Cli, ThreeSquaresInverse) {
  const auto r = run({"three-squares", "inverse", "--sol", "-1,5,11,7"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "{\"s\":[\"3\",\"6\",\"9\"]}\n");
  EXPECT_EQ(run({"three-squares", "inverse", "--sol", "-1,-1,-1,1"}).code, 1);
}

TEST(Cli, EnumerateJsonAndParams) {
  auto r = run({"enumerate", "--dim", "2", "--bound", "1", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "{\"dimension\":2,\"solutions\":[{\"x\":[\"1\",\"0\"],\"y\":[\"1\",\"0\"]},"
            "{\"x\":[\"1\",\"1\"],\"y\":[\"1\",\"1\"]}]}\n");

  r = run({"enumerate", "--dim", "2", "--bound", "5", "--method", "params", "--param-bound", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\n4,3,5,0\n"), std::string::npos);

  r = run({"enumerate", "--dim", "2", "--bound", "5", "--method", "coverage", "--source", "sweep", "--param-bound",
           "0"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"reachable\":0,"), std::string::npos);

  r = run({"enumerate", "--dim", "2", "--bound", "5", "--method", "coverage", "--timing"});
  EXPECT_NE(r.out.find("\"elapsed_us\":"), std::string::npos);
}

TEST(Cli, BenchTable) {
  const auto r = run({"enumerate", "--dim", "2", "--bound", "30", "--method", "bench", "--param-bound", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("method,n,bound,count,elapsed_us\nbrute,2,30,354,", 0), 0u);
  EXPECT_NE(r.out.find("\nparams,2,2,"), std::string::npos);
}

TEST(Cli, NeverPrintsFloatingPoint) {
  for (const auto& c : goldens::cases()) {
    EXPECT_EQ(run(c.args).out.find('.'), std::string::npos) << c.name;
  }
}

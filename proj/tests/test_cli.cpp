#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "fsig/cli.hpp"

using namespace fsig;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "fsig");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST(Cli, AnalyzeSevenThree) {
  const Result r = run({"analyze", "--n", "7", "--a", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(has(r.out, "M_2: gens x^2, y^3; s = 3/7"));
  EXPECT_TRUE(has(r.out, "[3,2,2]"));
  EXPECT_TRUE(has(r.out, "canonical module: M_3"));
}

TEST(Cli, AnalyzeEightFive) {
  const Result r = run({"analyze", "--n", "8", "--a", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(has(r.out, "M_2: gens x^2, y^2; s = 5/16"));
}

TEST(Cli, AnalyzeRejectsNonCoprime) {
  const Result r = run({"analyze", "--n", "6", "--a", "4"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_TRUE(has(r.err, "gcd"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"analyze", "--n", "7"}).code, kExitUsage);
  EXPECT_EQ(run({"certify", "--n", "7", "--a", "3", "--t", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"compare-tau", "--n", "7", "--a", "3", "--t", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, FrobeniusCounts) {
  const Result r = run({"frobenius", "--n", "7", "--a", "3", "--p", "2", "--e", "1", "--t", "0",
                        "--enumerate"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(has(r.out, "counts (1,0,1,1,0,1,0)"));
  EXPECT_TRUE(has(r.out, "a_e = 1"));
  EXPECT_TRUE(has(r.out, "1/4"));
}

TEST(Cli, FrobeniusAllLabels) {
  const Result r = run({"frobenius", "--n", "5", "--a", "2", "--p", "2", "--e", "2", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["decompositions"].size(), 5u);
}

TEST(Cli, FrobeniusRejectsDividingCharacteristic) {
  const Result r = run({"frobenius", "--n", "7", "--a", "3", "--p", "7", "--e", "1", "--t", "0"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_TRUE(has(r.err, "p divides n"));
}

TEST(Cli, QuiverFormats) {
  std::ifstream in(std::string(FSIG_GOLDEN_DIR) + "/quiver_7_3.dot", std::ios::binary);
  std::ostringstream golden;
  golden << in.rdbuf();
  EXPECT_EQ(run({"quiver", "--n", "7", "--a", "3", "--format", "dot"}).out, golden.str());
  const Result j = run({"quiver", "--n", "7", "--a", "3", "--format", "json"});
  EXPECT_EQ(j.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(j.out)["arrows"].size(), 14u);
  EXPECT_EQ(run({"quiver", "--n", "7", "--a", "3", "--format", "svg"}).code, kExitUsage);
}

TEST(Cli, CertifyPasses) {
  const Result r = run({"certify", "--n", "7", "--a", "3", "--p", "2", "--e", "3", "--t", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(has(r.out, "certificate: PASS"));
  EXPECT_TRUE(has(r.out, "formula s = 3/7"));
  const Result r0 = run({"certify", "--n", "7", "--a", "3", "--p", "2", "--e", "3", "--t", "0"});
  EXPECT_EQ(r0.code, kExitOk);
  EXPECT_TRUE(has(r0.out, "F-splitting number"));
}

TEST(Cli, CertifyRejectsNonSpecialIndex) {
  EXPECT_EQ(run({"certify", "--n", "7", "--a", "3", "--p", "2", "--e", "3", "--t", "9"}).code,
            kExitUsage);
}

TEST(Cli, CertifyGuard) {
  EXPECT_EQ(run({"certify", "--n", "7", "--a", "3", "--p", "2", "--e", "11", "--t", "1"}).code,
            kExitUsage);
}

TEST(Cli, CompareTauGorenstein) {
  const Result r = run({"compare-tau", "--n", "4", "--a", "3", "--t", "1", "--p", "3", "--e", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(has(r.out, "tau = self; equality (Gorenstein)"));
}

TEST(Cli, CompareTauDeterministic) {
  const std::vector<std::string> args{"compare-tau", "--n", "7", "--a", "3", "--t", "2",
                                      "--p", "2", "--e", "2", "--seed", "1"};
  const Result a = run(args), b = run(args);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(has(a.out, "b_self <= b_tau: yes"));
}

TEST(Cli, SeedEnvironmentOverride) {
  const std::vector<std::string> args{"estimate", "--n", "5", "--a", "2", "--t", "1", "--p",
                                      "3", "--e", "1", "--seed", "4", "--format", "json"};
  ::setenv("FSIG_SEED", "17", 1);
  const Result r = run(args);
  ::unsetenv("FSIG_SEED");
  EXPECT_EQ(nlohmann::json::parse(r.out)["seed"], 17);
  EXPECT_EQ(nlohmann::json::parse(run(args).out)["seed"], 4);
}

TEST(Cli, JsonRoundTrips) {
  const std::vector<std::vector<std::string>> cases{
      {"analyze", "--n", "7", "--a", "3", "--format", "json"},
      {"frobenius", "--n", "7", "--a", "3", "--p", "2", "--e", "2", "--format", "json"},
      {"quiver", "--n", "8", "--a", "5", "--format", "json"},
      {"certify", "--n", "8", "--a", "5", "--p", "3", "--e", "2", "--t", "2", "--format", "json",
       "--witnesses"},
      {"compare-tau", "--n", "8", "--a", "5", "--p", "3", "--e", "1", "--t", "2", "--format",
       "json"},
  };
  for (const auto& args : cases) {
    const Result r = run(args);
    ASSERT_EQ(r.code, kExitOk) << args[0] << ": " << r.err;
    const auto doc = nlohmann::ordered_json::parse(r.out);
    EXPECT_EQ(doc.dump(2) + "\n", r.out) << args[0];
  }
}

TEST(Cli, JsonRationalsAreExact) {
  const Result r = run({"analyze", "--n", "8", "--a", "5", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["special_modules"][2]["dual_fsignature"], "5/16");
  EXPECT_FALSE(has(r.out, "≈"));
}

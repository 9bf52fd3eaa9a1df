// Copyright 2026 The braidq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "braidq/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "braidq");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = braidq::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string &name) { return std::string(BRAIDQ_CORPUS_DIR) + "/" + name; }

class CliFiles : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("braidq_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string &name, const std::string &text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

} // namespace

TEST(Cli, EvalUnknotAndTrefoil) {
  const Outcome u = invoke({"eval", corpus("unknot.braid")});
  EXPECT_EQ(u.code, 0);
  EXPECT_NE(u.out.find("V(q) =         1\n"), std::string::npos) << u.out;
  const Outcome t = invoke({"eval", corpus("trefoil.braid")});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("q + q^3 - q^4"), std::string::npos);
  EXPECT_NE(t.out.find("pattern:       a f a†"), std::string::npos);
}

TEST(Cli, EvalJsonMatchesOracleJson) {
  const auto eval = nlohmann::json::parse(invoke({"eval", corpus("B_a.braid"), "--json"}).out);
  const auto oracle = nlohmann::json::parse(invoke({"oracle", corpus("B_a.braid"), "--json"}).out);
  EXPECT_EQ(eval["polynomial"]["coeffs"], oracle["oracle_polynomial"]["coeffs"]);
  EXPECT_EQ(eval["operator_count"], 7);
  EXPECT_EQ(eval["n"], 2);
  EXPECT_LT(eval["residual"].get<double>(), 1e-6);
}

TEST(Cli, JsonIsDeterministic) {
  const auto a = invoke({"verify", "--random", "5", "--seed", "11", "--json"});
  const auto b = invoke({"verify", "--random", "5", "--seed", "11", "--json"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, 0);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["seed"], 11);
  EXPECT_EQ(j["cases"].size(), 5u);
}

TEST(Cli, OptionsAffectEval) {
  const Outcome w = invoke({"eval", corpus("trefoil.braid"), "--window=-12,12", "--samples", "40", "--json"});
  ASSERT_EQ(w.code, 0) << w.err;
  const auto j = nlohmann::json::parse(w.out);
  EXPECT_EQ(j["window"][0], -12);
  EXPECT_EQ(j["samples"], 40);
  const Outcome f = invoke({"eval", corpus("trefoil.braid"), "--flips", "10", "--json"});
  EXPECT_EQ(nlohmann::json::parse(f.out)["flips"], "10");
}

TEST(Cli, ProbIdentityAndTrefoil) {
  const Outcome u = invoke({"prob", corpus("unlink.braid"), "--root-order", "5", "--json"});
  ASSERT_EQ(u.code, 0);
  EXPECT_DOUBLE_EQ(nlohmann::json::parse(u.out)["p_k"].get<double>(), 1.0);
  const Outcome t = invoke({"prob", corpus("trefoil.braid"), "--root-order", "5", "--json"});
  const double pk = nlohmann::json::parse(t.out)["p_k"].get<double>();
  EXPECT_GE(pk, 0.0);
  EXPECT_LE(pk, 1.0);
  const Outcome f = invoke({"prob", corpus("figure_eight.braid"), "--root-order", "7", "--json"});
  EXPECT_LT(std::abs(nlohmann::json::parse(f.out)["im_amplitude"].get<double>()), 1e-9);
}

TEST(Cli, OracleHopf) {
  const Outcome h = invoke({"oracle", corpus("hopf.braid")});
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("V(t) =   -t^{-5/2} - t^{-1/2}"), std::string::npos) << h.out;
}

TEST(Cli, VerifyCorpus) {
  const Outcome v = invoke({"verify", BRAIDQ_CORPUS_DIR});
  EXPECT_EQ(v.code, 0) << v.out;
  EXPECT_NE(v.out.find("PASS  B_b.braid"), std::string::npos);
  EXPECT_NE(v.out.find("a f a† g a h a† f1 a g1 a†"), std::string::npos);
}

TEST_F(CliFiles, VerifyEmptyAndMismatchedPattern) {
  const Outcome empty = invoke({"verify", dir_.string()});
  EXPECT_EQ(empty.code, 0);
  EXPECT_NE(empty.out.find("0/0 passed"), std::string::npos);
  write("w.braid", "# pattern: a f a† g\nstrands=4; flips=01; g2^3\n");
  EXPECT_EQ(invoke({"verify", dir_.string()}).code, 1);
}

TEST_F(CliFiles, ExitCodes) {
  EXPECT_EQ(invoke({"eval", write("a.braid", "strands=4;\n b2 x1")}).code, 2);
  EXPECT_EQ(invoke({"eval", write("b.braid", "strands=4; b9")}).code, 2);
  EXPECT_EQ(invoke({"eval", write("c.braid", "strands=4; flips=00; g2")}).code, 3);
  EXPECT_EQ(invoke({"eval", corpus("B_a.braid"), "--window=-2,2"}).code, 4);
  EXPECT_EQ(invoke({"prob", corpus("trefoil.braid"), "--root-order", "2"}).code, 5);
  EXPECT_EQ(invoke({"prob", corpus("B_a.braid"), "--theta", "2.5"}).code, 5);
  EXPECT_EQ(invoke({"oracle", write("d.braid", "strands=4; g2^25")}).code, 6);
  EXPECT_EQ(invoke({"eval", write("e.braid", "strands=4; flips=01; h2^2")}).code, 7);
  EXPECT_EQ(invoke({"eval", (dir_ / "missing.braid").string()}).code, 1);
  const Outcome parse = invoke({"eval", write("f.braid", "strands=4;\n b2 x1")});
  EXPECT_NE(parse.err.find("line 2, column 5"), std::string::npos);
}

TEST(Cli, MaxCrossingsFlag) {
  EXPECT_EQ(invoke({"oracle", corpus("trefoil.braid"), "--max-crossings", "2"}).code, 6);
  EXPECT_EQ(invoke({"oracle", corpus("trefoil.braid"), "--max-crossings", "3"}).code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_NE(invoke({}).code, 0);
  EXPECT_NE(invoke({"eval"}).code, 0);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

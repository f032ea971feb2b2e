// Copyright 2026 The distcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "distcalc/cli.hpp"

namespace distcalc {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Cli, TableGolden) {
  auto text = run({"table"});
  EXPECT_EQ(text.code, kExitOk);
  EXPECT_EQ(text.out, slurp(std::string(DISTCALC_GOLDEN_DIR) + "/table.txt"));
  auto json = run({"table", "--json"});
  EXPECT_EQ(json.code, kExitOk);
  EXPECT_EQ(json.out, slurp(std::string(DISTCALC_GOLDEN_DIR) + "/table.json"));
  EXPECT_EQ(nlohmann::json::parse(json.out).size(), 14u);
}

TEST(Cli, Audit) {
  auto r = run({"audit-ehrenpreis"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("5 of 14 continuous"), std::string::npos);
  auto j = nlohmann::json::parse(run({"audit-ehrenpreis", "--json"}).out);
  EXPECT_EQ(j["continuous"], 5);
  EXPECT_EQ(j["items"].size(), 14u);
}

TEST(Cli, InferRemark2) {
  auto r = run({"infer", "(f:S) * (g:OM)", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["space"], "S");
  EXPECT_EQ(j["verdict"], "Discontinuous");
  EXPECT_EQ(j["ref"], "Remark 2");
}

TEST(Cli, Classify) {
  auto r = run({"classify", "D", "D'", "mul", "E'"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("Discontinuous"), std::string::npos);
  EXPECT_NE(r.out.find("Remark 5 item 14"), std::string::npos);
  EXPECT_EQ(run({"classify", "S'", "D'", "conv"}).code, kExitDomainError);
}

TEST(Cli, Seminorm) {
  auto r = run({"seminorm", "pS(0,2)", "gauss(1)"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NEAR(std::stod(r.out), 0.36787944117144233, 1e-9);
  EXPECT_EQ(run({"seminorm", "pD(0,1)", "gauss(1)"}).code, kExitDomainError);
  EXPECT_EQ(run({"seminorm", "pD(0,1)", "bump(9)"}).code, kExitDomainError);
}

TEST(Cli, Membership) {
  auto r = run({"membership", "chirp", "OC", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["member"], false);
  EXPECT_FALSE(j["reason"].get<std::string>().empty());
  EXPECT_EQ(nlohmann::json::parse(run({"membership", "chirp", "OM", "--json"}).out)["member"],
            true);
  EXPECT_EQ(run({"membership", "chirp", "S'"}).code, kExitDomainError);
}

TEST(Cli, Witness) {
  auto r = run({"witness", "D'", "E'", "conv", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["verdict"], "zero-denominator");
  EXPECT_EQ(run({"witness", "OM", "OM", "mul"}).code, kExitDomainError);
}

TEST(Cli, Pair) {
  auto r = run({"pair", "gauss(1)", "d[2]dirac(0)"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("-2"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsageError);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsageError);
  EXPECT_EQ(run({"classify", "D"}).code, kExitUsageError);
  auto bad = run({"infer", "(phi:D) * * (f:E)"});
  EXPECT_EQ(bad.code, kExitUsageError);
  EXPECT_NE(bad.err.find("position"), std::string::npos);
  EXPECT_NE(bad.err.find("EXPR"), std::string::npos);
  EXPECT_EQ(run({"seminorm", "pQ(1)", "gauss(1)"}).code, kExitUsageError);
  EXPECT_EQ(run({"table", "--format", "xml"}).code, kExitUsageError);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> requests{
      {"table", "--json"},
      {"audit-ehrenpreis", "--json"},
      {"infer", "fourier((T:OC') conv (S:S'))", "--json"},
      {"witness", "D", "E'", "conv", "--json"},
      {"seminorm", "pLp(1,2)", "bump(1)", "--points", "256"},
      {"bound", "OM", "OM", "mul", "OM", "--trials", "20", "--json"},
  };
  for (const auto& req : requests) {
    auto a = run(req);
    auto b = run(req);
    EXPECT_EQ(a.code, kExitOk) << req[0] << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << req[0];
  }
}

}  // namespace
}  // namespace distcalc

// Copyright 2026 The choqdist Authors.
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
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace choqdist {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "choqdist");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
  return std::string(CHOQDIST_DATA_DIR) + "/" + name;
}

TEST(FormatNumber, TwelveSignificantDigits) {
  EXPECT_EQ(cli::format_number(73.0 / 120.0), "0.608333333333");
  EXPECT_EQ(cli::format_number(-0.0), "0");
  EXPECT_EQ(cli::format_number(1.0), "1");
  EXPECT_EQ(cli::format_number(0.4375), "0.4375");
}

TEST(Cli, MomentsFooter) {
  const auto r = run({"moments", data("example3.json"), "--order", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "r,raw,central\n"
            "1,0.608333333333,0\n"
            "2,0.411666666667,0.0415972222222\n"
            "mean,0.608333333333\n"
            "std,0.203953970842\n");
}

TEST(Cli, GridMinPolynomial) {
  const auto r = run({"grid", data("min2.json"), "--lo", "0", "--hi", "1",
                      "--points", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "y,cdf,pdf,note\n"
            "0,0,2,knot\n"
            "0.25,0.4375,1.5,\n"
            "0.5,0.75,1,\n"
            "0.75,0.9375,0.5,\n"
            "1,1,0,knot\n");
}

TEST(Cli, Eval) {
  const auto r = run({"eval", data("example3.json"), "--point", "0.2,0.5,0.4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "representation,value\nsorted,0.44\nmoebius,0.44\n");
}

TEST(Cli, Classify) {
  const auto r = run({"classify", data("median5.json")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "property,value\nmonotone,true\nlattice_polynomial,true\n"
            "cardinality_based,true\nadditive,false\n");
}

TEST(Cli, SingleValues) {
  EXPECT_EQ(run({"cdf", data("max3.json"), "--at", "0.5"}).out, "0.125\n");
  EXPECT_EQ(run({"pdf", data("min2.json"), "--at", "0.5"}).out, "1\n");
  const auto q = run({"quantile", data("max3.json"), "--p", "0.125"});
  ASSERT_EQ(q.code, 0);
  EXPECT_NEAR(std::stod(q.out), 0.5, 1e-9);
}

TEST(Cli, SampleIsDeterministic) {
  const std::vector<std::string> args = {"sample", data("example3.json"),
                                         "--count", "100", "--seed", "7"};
  const auto a = run(args);
  auto threaded = args;
  threaded.insert(threaded.begin(), {"--threads", "3"});
  const auto b = run(threaded);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.substr(0, 6), "value\n");
}

TEST(Cli, GridIsDeterministicAcrossThreads) {
  const auto a = run({"--threads", "1", "grid", data("owa6.json")});
  const auto b = run({"--threads", "4", "grid", data("owa6.json")});
  const auto c = run({"--threads", "1", "grid", data("additive4.json")});
  const auto d = run({"--threads", "4", "grid", data("additive4.json")});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, CheckPassesOnCorpus) {
  for (const auto& entry : std::filesystem::directory_iterator(CHOQDIST_DATA_DIR)) {
    const auto r = run({"check", entry.path().string(), "--count", "20000"});
    EXPECT_EQ(r.code, 0) << entry.path() << '\n' << r.out << r.err;
    EXPECT_NE(r.out.find("result,pass"), std::string::npos);
  }
}

TEST(Cli, ErrorsAndExitCodes) {
  auto r = run({});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("error:parse:", 0), 0u);

  r = run({"frobnicate", data("min2.json")});
  EXPECT_EQ(r.code, 2);

  r = run({"cdf", data("min2.json")});  // --at missing
  EXPECT_EQ(r.code, 2);

  r = run({"classify", data("does_not_exist.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("error:parse:", 0), 0u);

  r = run({"eval", data("min2.json"), "--point", "0.5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error:dimension:", 0), 0u);

  r = run({"quantile", data("min2.json"), "--p", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error:domain:", 0), 0u);

  r = run({"moments", data("min2.json"), "--order", "40"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error:limit:", 0), 0u);
}

TEST(Cli, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("grid"), std::string::npos);
}

}  // namespace
}  // namespace choqdist

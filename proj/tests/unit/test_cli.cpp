/*
 * Copyright 2026 The hypst Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypst_cli/cli.hpp"

namespace hypst::cli {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json call_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = call(args);
  EXPECT_EQ(r.code, kExitOk) << r.err;
  return json::parse(r.out);
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

TEST(CliCount, OracleAgreement) {
  const auto r = call({"count", "--family", "additive", "--d", "9", "--c", "1", "--p", "19", "--oracle"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("count = 12"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("bruteforce = 12 (agree)"), std::string::npos) << r.out;
}

TEST(CliCount, BadPrimeIsEnumerated) {
  const auto r = call({"count", "--family", "linear", "--d", "7", "--c", "1", "--p", "7", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("bad reduction"), std::string::npos);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["results"][0]["count"], 8);
  EXPECT_EQ(j["results"][0]["bad_reduction"], true);
}

TEST(CliCount, ValidationErrors) {
  auto r = call({"count", "--family", "linear", "--d", "8", "--p", "11"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("d must be odd"), std::string::npos) << r.err;
  EXPECT_EQ(call({"count", "--d", "9"}).code, kExitUsage);
  EXPECT_EQ(call({"count", "--d", "9", "--p", "21"}).code, kExitUsage);
  EXPECT_EQ(call({"count", "--d", "9", "--c", "x", "--p", "19"}).code, kExitUsage);
  EXPECT_EQ(call({"count", "--d", "9", "--p", "19", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(call({"bogus"}).code, kExitUsage);
  EXPECT_EQ(call({}).code, kExitUsage);
}

TEST(CliCount, CsvRange) {
  const auto r = call({"count", "--curve", "x^6+c", "--pmin", "3", "--pmax", "50", "--format", "csv", "--oracle"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = lines(r.out);
  EXPECT_EQ(rows.front(), "p,count,t_p,x_p,bruteforce");
  EXPECT_EQ(rows.size(), 14u);  // odd primes below 50 except 3
  for (std::size_t i = 1; i < rows.size(); ++i) {
    long p, count, t, brute;
    double x;
    ASSERT_EQ(std::sscanf(rows[i].c_str(), "%ld,%ld,%ld,%lf,%ld", &p, &count, &t, &x, &brute), 5);
    EXPECT_EQ(count, brute);
    EXPECT_EQ(t, p - count);
    EXPECT_NEAR(x, t / std::sqrt(double(p)), 1e-11);
  }
}

TEST(CliCount, JsonRoundTrip) {
  const auto j = call_json({"count", "--d", "10", "--c", "-3/5", "--pmax", "60", "--oracle"});
  EXPECT_EQ(j["curve"]["d"], 10);
  EXPECT_EQ(j["curve"]["c"], "-3/5");
  for (const auto& r : j["results"]) EXPECT_TRUE(r["agree"].get<bool>());
  EXPECT_EQ(json::parse(j.dump()), j);
}

TEST(CliMatrix, GenusFourGrid) {
  const auto r = call({"matrix", "--family", "additive", "--d", "10", "--p", "11"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[1], "   m: 1 2 3 4 6 7 8 9");
  EXPECT_EQ(rows[2], "k = 1: 0 0 0 0 1 1 1 1");
  EXPECT_EQ(rows[3], "k = 3: 0 1 1 0 1 0 0 1");
  EXPECT_EQ(rows[4], "k = 7: 1 0 0 1 0 1 1 0");
  EXPECT_EQ(rows[5], "k = 9: 1 1 1 1 0 0 0 0");
  EXPECT_EQ(rows[6], "validation: ok");
}

TEST(CliMatrix, CsvAndJson) {
  const auto csv = lines(call({"matrix", "--d", "9", "--p", "19", "--format", "csv"}).out);
  ASSERT_EQ(csv.size(), 7u);
  EXPECT_EQ(csv[0], "k,a2,a4,a6,a8,a10,a12,a14,a16");
  EXPECT_EQ(csv[1], "1,0,0,0,0,1,1,1,1");
  const auto j = call_json({"matrix", "--d", "9", "--p", "19"});
  EXPECT_EQ(j["rows"].size(), 6u);
  EXPECT_EQ(j["entries"].size(), 6u);
  EXPECT_TRUE(j["generic"].get<bool>());
}

TEST(CliMatrix, NonGenericAndEmpty) {
  const auto r = call({"matrix", "--family", "additive", "--d", "9", "--p", "7"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("not generic"), std::string::npos) << r.err;
  const auto none = call({"matrix", "--d", "9", "--p", "5"});
  EXPECT_EQ(none.code, kExitUsage);
  EXPECT_FALSE(none.err.empty());
  EXPECT_EQ(call({"matrix", "--d", "9", "--p", "9"}).code, kExitUsage);
}

TEST(CliKernel, RelationsAnnotated) {
  const auto r = call({"kernel", "--family", "additive", "--d", "9", "--p", "19"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("kernel rank 4 of 8"), std::string::npos) << r.out;
  const auto j = call_json({"kernel", "--d", "9", "--p", "19"});
  EXPECT_EQ(j["rank"], 4);
  EXPECT_TRUE(j["saturated"].get<bool>());
  ASSERT_EQ(j["basis"].size(), 4u);
  for (const auto& b : j["basis"]) {
    EXPECT_NE(b["relation"]["kind"], "Fail");
    EXPECT_EQ(b["vector"].size(), 8u);
  }
  EXPECT_EQ(call({"kernel", "--d", "9", "--p", "19", "--format", "csv"}).code, kExitUsage);
}

TEST(CliSt0, PublishedNames) {
  EXPECT_EQ(lines(call({"st0", "--family", "additive", "--d", "10"}).out).front(), "U(1)_2 x U(1)_2");
  EXPECT_EQ(lines(call({"st0", "--family", "additive", "--d", "8"}).out).front(), "U(1)_2 x U(1)");
  EXPECT_EQ(lines(call({"st0", "--family", "additive", "--d", "24"}).out).front(),
            "U(1)_4 x U(1)_3 x U(1)_2 x U(1)_2");
}

TEST(CliSt0, Json) {
  const auto j = call_json({"st0", "--curve", "x^9+c", "--num-primes", "2"});
  EXPECT_EQ(j["name"], "U(1) x U(1) x U(1)");
  EXPECT_EQ(j["dimension"], 3);
  EXPECT_EQ(j["primes_used"], json({19, 37}));
  EXPECT_EQ(j["reports"].size(), 2u);
}

TEST(CliSplit, Examples) {
  const auto plain = call({"split", "--g", "5"});
  ASSERT_EQ(plain.code, kExitOk);
  EXPECT_NE(plain.out.find("~ (x^3 + c)^2 x (x^7 + cx)"), std::string::npos) << plain.out;
  const auto refined = call({"split", "--g", "5", "--refine"});
  ASSERT_EQ(refined.code, kExitOk);
  EXPECT_NE(refined.out.find("(x^3 + c)^2 x [(x^3 + cx) x C_0("), std::string::npos)
      << refined.out;
  const auto j = call_json({"split", "--g", "11", "--c", "2"});
  EXPECT_EQ(j["genus"], 11);
  EXPECT_EQ(j["factor_genus"], 11);
  EXPECT_EQ(j["factors"].size(), 3u);
  EXPECT_EQ(j["factors"][0]["exponent"], 2);
  EXPECT_EQ(j["factors"][1]["curve"], "y^2 = x^13 + 2x");
  EXPECT_EQ(call({"split"}).code, kExitUsage);
  EXPECT_EQ(call({"split", "--g", "1"}).code, kExitUsage);
}

TEST(CliSweep, WeilBoundForGenusTwo) {
  const auto r = call({"sweep", "--family", "additive", "--d", "6", "--c", "1", "--pmax", "1000", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = lines(r.out);
  EXPECT_EQ(rows.front(), "p,count,t_p,x_p");
  EXPECT_EQ(rows.size(), 167u);  // 166 odd primes below 1000
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto x = std::stod(rows[i].substr(rows[i].rfind(',') + 1));
    EXPECT_LE(std::abs(x), 4.0);
  }
  EXPECT_NE(r.err.find("# samples 166"), std::string::npos);
}

TEST(CliSweep, JsonAndFileOutput) {
  const auto j = call_json({"sweep", "--curve", "x^7+cx", "--pmax", "200", "--threads", "2"});
  EXPECT_EQ(j["summary"]["samples"], j["samples"].size());
  EXPECT_EQ(j["summary"]["modulus"].get<int>() > 0, true);
  const auto path = std::filesystem::temp_directory_path() / "hypst_cli_sweep.csv";
  const auto r = call({"sweep", "--d", "5", "--pmax", "100", "--out", path.string()});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "p,count,t_p,x_p");
  std::filesystem::remove(path);
  EXPECT_EQ(call({"sweep", "--d", "5", "--pmin", "50", "--pmax", "10"}).code, kExitUsage);
}

TEST(CliLockwood, PassesAndSeeds) {
  const auto r = call({"lockwood", "--g", "7"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(lines(r.out).size(), 2u);
  const auto j = call_json({"lockwood", "--g", "11", "--i", "1", "--c", "2", "--seed", "7"});
  EXPECT_EQ(j["seed"], 7);
  EXPECT_TRUE(j["results"][0]["pass"].get<bool>());
  EXPECT_EQ(call({"lockwood", "--g", "4"}).code, kExitUsage);
  EXPECT_EQ(call({"lockwood", "--g", "5", "--i", "2"}).code, kExitUsage);
}

}  // namespace
}  // namespace hypst::cli

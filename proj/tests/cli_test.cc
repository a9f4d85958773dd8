// Copyright 2026 The pmdkit Authors
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
#include <json.hpp>
#include <sstream>

#include "pmdkit/auth.h"
#include "pmdkit/cli.h"

using namespace pmdkit;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string &rel) { return std::string(PMDKIT_SOURCE_DIR) + "/data/" + rel; }

}  // namespace

TEST(Cli, FormatsDoubles) {
    EXPECT_EQ(fmt_double(0.375), "0.375");
    EXPECT_EQ(fmt_double(0), "0");
    EXPECT_EQ(fmt_double(1e-300), "1e-300");
    EXPECT_EQ(std::stod(fmt_double(0.1 + 0.2)), 0.1 + 0.2);
}

TEST(Cli, ReportFormats) {
    Report r;
    r.command = "demo";
    r.seed = 9;
    r.config = {{"n", "4"}};
    r.metric("epsilon", 0.5);
    r.check("bound", true, "0.5", "<= 1");
    EXPECT_TRUE(r.all_pass());
    auto j = nlohmann::json::parse(r.render(ReportFormat::kJson));
    EXPECT_EQ(j["seed"], 9);
    EXPECT_EQ(j["metrics"]["epsilon"], "0.5");
    EXPECT_EQ(j["checks"][0]["bound"], "<= 1");
    EXPECT_NE(r.render(ReportFormat::kCsv).find("check,bound,0.5,<= 1,PASS"), std::string::npos);
    r.check("other", false, "2", "<= 1");
    EXPECT_NE(r.render(ReportFormat::kText).find("FAIL other: 2 vs <= 1"), std::string::npos);
    EXPECT_FALSE(r.all_pass());
}

TEST(Cli, PtcFamilyRoundTrip) {
    PtcFamily f = build_bcgst_family(4, 2);
    std::string text = ptc_family_str(f);
    PtcFamily g = parse_ptc_family(text);
    EXPECT_EQ(ptc_family_str(g), text);
    EXPECT_EQ(measure_strong_ptc_error(g).epsilon.str(), measure_strong_ptc_error(f).epsilon.str());
    EXPECT_THROW(parse_ptc_family("ptc n=4 lambda=2\nkey 0\nXX\n"), std::invalid_argument);
    EXPECT_THROW(parse_ptc_family("ptc n=4 lambda=2\nkey 1\n"), std::invalid_argument);
}

TEST(Cli, NmTableRoundTripThroughFiles) {
    Rng rng(3);
    NmCode c = random_nm_code(2, 1, 5, rng);
    EXPECT_EQ(NmCode::parse(c.str()).str(), c.str());
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"pmd", "verify", "--n", "2", "--lambda", "1"}).code, 0);
    EXPECT_EQ(run({"pmd", "verify", "--bogus"}).code, 2);
    EXPECT_EQ(run({"pmd"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"ptc", "check", "--format", "yaml"}).code, 2);
    EXPECT_EQ(run({"qlde", "profile", "--code", "/nonexistent/file"}).code, 2);
    EXPECT_EQ(run({"ptc", "check", "--family", data("codes/ptc_6_3.family")}).code, 0);
    CliRun bad = run({"ptc", "check", "--family", data("codes/ptc_6_3_corrupted.family")});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.out.find("FAIL strong_ptc_error"), std::string::npos);
    EXPECT_EQ(run({"qlde", "profile", "--code-name", "steane", "--delta", "0.43", "--max-list", "2"}).code, 1);
    EXPECT_EQ(run({"--version"}).code, 0);
}

TEST(Cli, ConfigFileAndOverride) {
    std::string path = ::testing::TempDir() + "pmdkit_cli_test.cfg";
    std::ofstream(path) << "# comment\nn = 2\nlambda = 1\nseed = 5\nformat = json\n";
    CliRun a = run({"pmd", "verify", "--config", path});
    ASSERT_EQ(a.code, 0) << a.err;
    auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["seed"], 5);
    EXPECT_EQ(j["metrics"]["n"], "2");
    CliRun b = run({"pmd", "verify", "--config", path, "--seed", "6"});
    EXPECT_EQ(nlohmann::json::parse(b.out)["seed"], 6);
    std::ofstream(path) << "n 2\n";
    EXPECT_EQ(run({"pmd", "verify", "--config", path}).code, 2);
    std::ofstream(path) << "no-such-option = 1\n";
    EXPECT_EQ(run({"pmd", "verify", "--config", path}).code, 2);
}

TEST(Cli, SameSeedSameBytes) {
    std::vector<std::string> args = {"auth", "simulate", "--trials", "2", "--seed", "11", "--format", "json"};
    CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    args[5] = "12";
    EXPECT_NE(run(args).out, a.out);
}

TEST(Cli, SweepTables) {
    CliRun empty = run({"sweep", "--grid", "", "--format", "csv"});
    EXPECT_EQ(empty.code, 0);
    EXPECT_EQ(empty.out, "lambda,n,epsilon,bound,status\n");
    CliRun two = run({"sweep", "--grid", "1,2", "--format", "csv"});
    EXPECT_EQ(two.code, 0);
    EXPECT_EQ(two.out.substr(0, two.out.find('\n')), "lambda,n,epsilon,bound,status");
    EXPECT_EQ(std::count(two.out.begin(), two.out.end(), '\n'), 3);
    // A grid point past the size guard is flagged and the sweep continues.
    CliRun big = run({"sweep", "--grid", "1,9"});
    EXPECT_EQ(big.code, 1);
    EXPECT_NE(big.out.find("error"), std::string::npos);
    EXPECT_NE(big.out.find("1/2 ok"), std::string::npos);
    EXPECT_EQ(run({"sweep", "--grid", "1,x"}).code, 2);
}

TEST(Cli, SubcommandsRun) {
    EXPECT_EQ(run({"qlde", "decode", "--code", data("codes/c422.code"), "--erased", "0,1"}).code, 0);
    EXPECT_EQ(run({"qlde", "sample-css", "--n", "6", "--k", "2", "--draws", "10"}).code, 0);
    EXPECT_EQ(run({"aqec", "simulate", "--adversaries", "2"}).code, 0);
    EXPECT_EQ(run({"aqec", "simulate", "--adversary", data("channels/adversary_adaptive_8q.json")}).code, 0);
    EXPECT_EQ(run({"auth", "simulate", "--attack", "identity"}).code, 0);
    EXPECT_EQ(run({"auth", "simulate", "--channel", data("channels/amplitude_damping_0.64.json"), "--trials", "1"}).code, 0);
    EXPECT_EQ(run({"nm", "verify", "--code", data("nm/toy_k2_r2_n6.nm")}).code, 0);
    EXPECT_EQ(run({"nm", "verify", "--code", data("nm/toy_k2_r2_n6.nm"), "--max-epsilon", "0.25"}).code, 1);
}

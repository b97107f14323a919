// Copyright 2026 The cvexact Authors
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

#include "cvexact/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cvexact/dsl.hpp"
#include "cvexact/errors.hpp"

namespace cvexact {
namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string &s, const std::string &what) { return s.find(what) != std::string::npos; }

std::string temp_path(const std::string &name) {
    return (std::filesystem::path(::testing::TempDir()) / name).string();
}

TEST(dsl, round_trip) {
    for (const std::string spec : {"t=1 X[0] X[1] X[2]", "t=0.05 X[0]^4", "t=-0.25 P[0] X[1]^2",
                                   "t=1 X[0]^2 X[1]^2", "t=0.3 X[0]^4 X[1] X[2]"}) {
        const TargetGate t = parse_target(spec);
        EXPECT_EQ(format_target(t), spec);
        EXPECT_EQ(parse_target(format_target(t)).exponents, t.exponents);
    }
}

TEST(dsl, separators_and_sums) {
    const TargetGate a = parse_target("t=2 X[0]*X[1]^3");
    const TargetGate b = parse_target("  X[1]^3   X[0] t=2 ");
    EXPECT_EQ(a.exponents, b.exponents);
    EXPECT_EQ(a.strength, b.strength);
    EXPECT_EQ(parse_target("t=1e+3 X[0]").strength, 1000.0);
    const auto terms = parse_terms("t=0.5 X[0]^2 + P[0]^2");
    ASSERT_EQ(terms.size(), 2u);
    EXPECT_EQ(terms[1].exponents.at(0), (Factor{2, Basis::Momentum}));
}

TEST(dsl, parse_errors) {
    for (const std::string bad : {"t=1 X[0] X[0]", "X[0]", "t=1 X[0] t=2", "t=abc X[0]", "t=1 Y[0]",
                                  "t=1 X[0]^0", "t=1 X[0] +", "t=1 + X[0]", "t=1 X[0]^", "t=1 X[-1]",
                                  "t=1 X[0] + X[1]"}) {
        EXPECT_THROW(parse_target(bad), ParseError) << bad;
    }
}

TEST(dsl, presets) {
    EXPECT_EQ(preset_spec("cross-kerr"), "t=1 X[0]^2 X[1]^2");
    EXPECT_EQ(preset_spec("pca-rotation"), "t=1 X[0] X[1] X[2]");
    EXPECT_EQ(preset_spec("montecarlo:3"), "t=1 X[0]^3 P[1] P[2] P[3]");
    for (const auto &n : preset_names()) {
        if (n.rfind("montecarlo", 0) == 0) continue;
        EXPECT_NO_THROW(parse_target(preset_spec(n))) << n;
    }
    EXPECT_THROW(preset_spec("nope"), ParseError);
    EXPECT_THROW(preset_spec("montecarlo:0"), ParseError);
    EXPECT_THROW(preset_spec("montecarlo:x"), ParseError);
}

TEST(cli, compile_reports_gate_count) {
    const CliResult r = run({"compile", "t=1 X[0] X[1] X[2]"});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_TRUE(contains(r.out, "gates (non-Fourier):  17")) << r.out;
    EXPECT_TRUE(contains(r.out, "verification:         ok")) << r.out;
}

TEST(cli, json_format) {
    const CliResult r = run({"compile", "t=1 X[0]^4", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["report"]["n_gates_nonfourier"], 29);
    EXPECT_LT(j["report"]["residual_symbolic"].get<double>(), 1e-9);
    EXPECT_EQ(j["verified"], true);
}

TEST(cli, cubic_shear_route) {
    const CliResult r = run({"compile", "t=1 P[0] X[1]^2"});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_TRUE(contains(r.out, "px2")) << r.out;
}

TEST(cli, exit_codes) {
    CliResult r = run({"compile", "t=1 X[0]^5"});
    EXPECT_EQ(r.code, kExitIneligible);
    EXPECT_TRUE(contains(r.err, "divisible")) << r.err;
    EXPECT_EQ(run({"compile", "t=1 X[0]^2 X[1]^2 X[2]^2"}).code, kExitIneligible);
    EXPECT_EQ(run({"compile", "t=1 X[0] X[0]"}).code, kExitUsage);
    EXPECT_EQ(run({"preset", "nope"}).code, kExitUsage);
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"--help"}).code, kExitOk);
    EXPECT_EQ(run({"compile", "t=1 X[0]", "--format", "yaml"}).code, kExitUsage);
}

TEST(cli, deep_circuits_fall_back_to_compositional_check) {
    const CliResult r = run({"compile", "t=0.3 X[0]^9", "--term-budget", "10"});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_TRUE(contains(r.out, "compositional")) << r.out;
}

TEST(cli, numeric_check) {
    EXPECT_EQ(run({"compile", "t=0.3 X[0]^2", "--numeric-cutoff", "16"}).code, kExitOk);
    // Truncation error of a deep single-mode circuit at a small cutoff.
    const CliResult r = run({"compile", "t=0.05 X[0]^4", "--numeric-cutoff", "12"});
    EXPECT_EQ(r.code, kExitVerify) << r.out;
    EXPECT_TRUE(contains(r.out, "FAILED")) << r.out;
}

TEST(cli, write_and_verify_circuit) {
    const std::string path = temp_path("cvexact_cli_xxx.json");
    ASSERT_EQ(run({"compile", "t=0.4 X[0] X[1] X[2]", "--out", path}).code, kExitOk);
    EXPECT_EQ(run({"verify", path, "t=0.4 X[0] X[1] X[2]"}).code, kExitOk);
    EXPECT_EQ(run({"verify", path, "t=0.41 X[0] X[1] X[2]"}).code, kExitVerify);
    const CliResult tight = run({"verify", path, "t=0.4 X[0] X[1] X[2]", "--term-budget", "1"});
    EXPECT_EQ(tight.code, kExitVerify);
    EXPECT_TRUE(contains(tight.err, "inconclusive")) << tight.err;
    EXPECT_EQ(run({"verify", temp_path("missing.json"), "t=1 X[0]"}).code, kExitUsage);
    std::filesystem::remove(path);
}

TEST(cli, compare) {
    CliResult r = run({"compare", "t=1 X[0]^4", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["exact_gates"], 29);
    const double est = j["estimate_gates"].get<double>();
    EXPECT_GT(est, 1.8e3);
    EXPECT_LT(est, 1.8e5);
    r = run({"compare", "t=1 X[0]^4", "--epsilon", "1", "--format", "json"});
    EXPECT_EQ(nlohmann::json::parse(r.out)["estimate_gates"], 4.0);
}

TEST(cli, presets) {
    CliResult r = run({"preset", "cross-kerr"});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_TRUE(contains(r.out, "gates (non-Fourier):  119")) << r.out;
    r = run({"preset", "pca-rotation"});
    EXPECT_TRUE(contains(r.out, "gates (non-Fourier):  17")) << r.out;
    EXPECT_EQ(run({"preset", "montecarlo:2"}).code, kExitOk);
    r = run({"preset", "--list"});
    EXPECT_TRUE(contains(r.out, "bose-hubbard-dipole"));
}

TEST(cli, trotter_sum) {
    const CliResult r = run({"compile", "t=0.5 X[0]^2 + P[0]^2", "--trotter", "4", "--numeric-cutoff", "20",
                             "--subspace", "4", "--tolerance", "0.1"});
    EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
    EXPECT_TRUE(contains(r.out, "Trotter(K=4)")) << r.out;
}

}  // namespace
}  // namespace cvexact

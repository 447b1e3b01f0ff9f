// Copyright 2026 The privstate Authors
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

#include <cmath>
#include <sstream>

#include "privstate/cli/report.hpp"
#include "privstate/cli/suites.hpp"
#include "privstate/error.hpp"

using namespace privstate;
using namespace privstate::cli;

namespace {

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no error";
    return ErrorCode::kInvalidArgument;
}

RunConfig verify_config(const std::string &suite, std::vector<int> d = {}) {
    RunConfig cfg;
    cfg.suite = suite;
    cfg.d_values = std::move(d);
    return cfg;
}

}  // namespace

TEST(cli_report, empty_report_is_valid_json) {
    VerificationReport r;
    r.command = "verify";
    auto j = Json::parse(render(r, Format::kJson));
    ASSERT_TRUE(j["checks"].is_array());
    EXPECT_TRUE(j["checks"].empty());
    std::vector<std::string> keys;
    for (auto it = j["metadata"].begin(); it != j["metadata"].end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"version", "command", "seed", "config_digest"}));
}

TEST(cli_report, check_status_rules) {
    EXPECT_TRUE(near_check("a", "x", 1.0, 1.0 + 1e-9, 1e-8).pass);
    EXPECT_FALSE(near_check("a", "x", 1.0, 1.1, 1e-8).pass);
    EXPECT_FALSE(near_check("a", "x", std::nan(""), 0, 1).pass);
    auto up = upper_check("b", "x", 0.5, 0.6, 1e-9);
    EXPECT_TRUE(up.pass);
    EXPECT_EQ(up.measured, 0.0);
    EXPECT_FALSE(upper_check("b", "x", 0.7, 0.6, 1e-9).pass);
    EXPECT_TRUE(flag_check("c", "x", true).pass);
    EXPECT_FALSE(flag_check("c", "x", false).pass);
}

TEST(cli_report, flag_checks_serialize_as_booleans) {
    VerificationReport r;
    r.checks.push_back(flag_check("c", "x", true));
    auto j = to_json(r);
    EXPECT_TRUE(j["checks"][0]["measured"].is_boolean());
    EXPECT_EQ(j["checks"][0]["status"], "pass");
}

TEST(cli_report, unknown_format_is_usage_error) {
    EXPECT_EQ(code_of([] { parse_format("xml"); }), ErrorCode::kUsage);
    EXPECT_EQ(parse_format("csv"), Format::kCsv);
}

TEST(cli_report, unwritable_path_is_io_error) {
    EXPECT_EQ(code_of([] { write_text("/nonexistent-dir/out.json", "x"); }), ErrorCode::kIo);
}

TEST(cli_report, fnv1a_reference_values) {
    // Published FNV-1a 64 test vectors.
    EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
    EXPECT_EQ(hex64(fnv1a64("foobar")), "85944171f73967e8");
}

TEST(cli_suites, digest_tracks_result_fields_only) {
    RunConfig a, b;
    b.out = "elsewhere.json";
    b.format = "csv";
    EXPECT_EQ(config_digest(a), config_digest(b));
    b.seed = 43;
    EXPECT_NE(config_digest(a), config_digest(b));
}

TEST(cli_suites, parse_d_range_forms) {
    EXPECT_EQ(parse_d_range("2..4"), (std::vector<int>{2, 3, 4}));
    EXPECT_EQ(parse_d_range("3"), (std::vector<int>{3}));
    EXPECT_EQ(parse_d_range("4,9"), (std::vector<int>{4, 9}));
    EXPECT_EQ(code_of([] { parse_d_range("5..2"); }), ErrorCode::kUsage);
    EXPECT_EQ(code_of([] { parse_d_range("x"); }), ErrorCode::kUsage);
    EXPECT_EQ(code_of([] { parse_d_range("1"); }), ErrorCode::kUsage);
}

TEST(cli_suites, unknown_suite_is_usage_error) {
    EXPECT_EQ(code_of([] { run_verify(verify_config("nope")); }), ErrorCode::kUsage);
}

TEST(cli_suites, suite_names_listed) {
    EXPECT_EQ(suite_names().size(), 11u);
    EXPECT_EQ(suite_names().front(), "bell-basis");
}

TEST(cli_suites, bnot_d3_has_81_passing_checks) {
    auto r = run_verify(verify_config("bnot", {3}));
    EXPECT_EQ(r.checks.size(), 81u);
    EXPECT_TRUE(r.all_pass());
    EXPECT_TRUE(std::is_sorted(r.checks.begin(), r.checks.end(),
                               [](const Check &a, const Check &b) { return a.id < b.id; }));
}

TEST(cli_suites, ppt_d4_passes) {
    auto r = run_verify(verify_config("ppt", {4}));
    ASSERT_FALSE(r.checks.empty());
    EXPECT_TRUE(r.all_pass());
}

TEST(cli_suites, distill_2m_passes) {
    auto r = run_verify(verify_config("distill-2m"));
    EXPECT_TRUE(r.all_pass());
    bool found = false;
    for (const auto &c : r.checks) found = found || c.id == "distill-2m/output";
    EXPECT_TRUE(found);
}

TEST(cli_suites, tolerance_override_applies) {
    auto cfg = verify_config("bell-basis", {2});
    cfg.tol = -1.0;  // nothing numeric can pass
    auto r = run_verify(cfg);
    EXPECT_FALSE(r.all_pass());
}

TEST(cli_suites, verify_is_deterministic_apart_from_runtime) {
    auto strip = [](VerificationReport r) {
        for (auto &c : r.checks) c.runtime_ms = 0;
        return to_json(r).dump();
    };
    auto cfg = verify_config("reversible");
    EXPECT_EQ(strip(run_verify(cfg)), strip(run_verify(cfg)));
}

TEST(cli_bounds, swap_rows_and_csv) {
    RunConfig cfg;
    cfg.command = "bounds";
    cfg.d_values = {2, 3, 4};
    auto r = run_bounds(cfg);
    ASSERT_EQ(r.table.size(), 3u);
    EXPECT_TRUE(r.all_pass());
    EXPECT_NEAR(r.table[0].repeater_ub, 1.169925, 1e-6);
    std::istringstream csv(render(r, Format::kCsv));
    std::string line;
    std::getline(csv, line);
    EXPECT_EQ(line, kBoundsHeader);
    int rows = 0;
    while (std::getline(csv, line)) ++rows;
    EXPECT_EQ(rows, 3);
}

TEST(cli_bounds, flower_hashing_is_one) {
    auto rows = bounds_table(Family::kFlower, {2});
    EXPECT_NEAR(rows[0].hash_lb, 1.0, 1e-9);
}

TEST(cli_bounds, unsupported_family) {
    EXPECT_EQ(code_of([] { bounds_table(Family::kAlpha, {4}); }), ErrorCode::kUsage);
}

TEST(cli_optimize, hat_against_hat_is_zero) {
    RunConfig cfg;
    cfg.command = "optimize";
    cfg.hat_only = true;
    cfg.restarts = 3;
    auto r = run_optimize(cfg);
    EXPECT_TRUE(r.all_pass());
    EXPECT_NEAR(r.details["optimize"][0]["best_value"].get<double>(), 0.0, 1e-8);
}

TEST(cli_optimize, swap_sandwich_passes) {
    RunConfig cfg;
    cfg.command = "optimize";
    cfg.seed = 42;
    auto r = run_optimize(cfg);
    EXPECT_TRUE(r.all_pass());
    EXPECT_EQ(r.details["optimize"][0]["restarts"].size(), 16u);
}

TEST(cli_construct, dump_shape) {
    auto j = construct_json({Family::kSwap, 2, 1, std::nullopt});
    EXPECT_EQ(j["dim"], 16);
    ASSERT_EQ(j["entries"].size(), 16u);
    ASSERT_EQ(j["entries"][0].size(), 16u);
    EXPECT_EQ(j["entries"][0][0].size(), 2u);
    EXPECT_EQ(j["layout"][0]["label"], "KA");
    double tr = 0;
    for (int i = 0; i < 16; ++i) tr += j["entries"][i][i][0].get<double>();
    EXPECT_NEAR(tr, 1.0, 1e-12);
}

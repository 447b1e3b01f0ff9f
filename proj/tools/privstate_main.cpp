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

// privstate command-line driver: verify, bounds, optimize, construct.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "privstate/cli/report.hpp"
#include "privstate/cli/suites.hpp"
#include "privstate/error.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

using privstate::Error;
using privstate::ErrorCode;
namespace cli = privstate::cli;

struct Options {
    cli::RunConfig cfg;
    std::string d_range;
    std::string d_single;
    double tol = 0;
};

void add_common(CLI::App *cmd, Options &o, bool with_suite) {
    if (with_suite) cmd->add_option("--suite", o.cfg.suite, "Suite name or 'all'")->capture_default_str();
    cmd->add_option("--family", o.cfg.family, "State family")->capture_default_str();
    cmd->add_option("--d", o.d_single, "Shield dimension, or a comma list");
    cmd->add_option("--d-range", o.d_range, "Dimension range lo..hi or comma list");
    cmd->add_option("--m", o.cfg.m, "Key size in bits")->capture_default_str();
    cmd->add_option("--seed", o.cfg.seed, "Seed for random draws")->capture_default_str();
    cmd->add_option("--restarts", o.cfg.restarts, "Optimizer restarts")->capture_default_str();
    cmd->add_option("--out", o.cfg.out, "Output path (stdout when empty or '-')");
    cmd->add_option("--format", o.cfg.format, "json or csv")->capture_default_str();
    cmd->add_option("--tol", o.tol, "Replace every numeric check tolerance");
}

int finish(const cli::VerificationReport &report, const cli::RunConfig &cfg) {
    cli::emit(report, cfg.out, cli::parse_format(cfg.format));
    std::size_t failed = 0;
    for (const auto &c : report.checks) failed += c.pass ? 0 : 1;
    std::cerr << report.checks.size() - failed << "/" << report.checks.size() << " checks passed\n";
    return failed == 0 ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Private-state numerics: verification suites, bound tables, measurement optimization"};
    app.require_subcommand(1);
    Options o;

    auto *verify = app.add_subcommand("verify", "Run a verification suite");
    add_common(verify, o, true);
    auto *bounds = app.add_subcommand("bounds", "Bound table over a dimension sweep");
    add_common(bounds, o, false);
    auto *optimize = app.add_subcommand("optimize", "Optimize local measurements on a family");
    add_common(optimize, o, false);
    optimize->add_option("--copies", o.cfg.copies, "Tensor power (1 or 2)")->capture_default_str();
    optimize->add_flag("--hat-only", o.cfg.hat_only, "Compare the key-attacked state with itself");
    auto *construct = app.add_subcommand("construct", "Dump a family's density matrix as JSON");
    add_common(construct, o, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    try {
        auto &cfg = o.cfg;
        cli::parse_format(cfg.format);
        if (!o.d_single.empty() && !o.d_range.empty()) throw Error(ErrorCode::kUsage, "use either --d or --d-range");
        if (!o.d_single.empty()) cfg.d_values = cli::parse_d_range(o.d_single);
        if (!o.d_range.empty()) cfg.d_values = cli::parse_d_range(o.d_range);
        for (auto *sub : {verify, bounds, optimize}) {
            if (app.got_subcommand(sub) && sub->count("--tol") > 0) cfg.tol = o.tol;
        }
        if (cfg.tol && !(*cfg.tol >= 0)) throw Error(ErrorCode::kUsage, "--tol must be non-negative");

        if (app.got_subcommand(verify)) {
            cfg.command = "verify";
            return finish(cli::run_verify(cfg), cfg);
        }
        if (app.got_subcommand(bounds)) {
            cfg.command = "bounds";
            return finish(cli::run_bounds(cfg), cfg);
        }
        if (app.got_subcommand(optimize)) {
            cfg.command = "optimize";
            return finish(cli::run_optimize(cfg), cfg);
        }
        cfg.command = "construct";
        if (cfg.format != "json") throw Error(ErrorCode::kUsage, "construct writes json only");
        int d = cfg.d_values.empty() ? 2 : cfg.d_values.front();
        privstate::StateFamilyParams params{privstate::parse_family(cfg.family), d, cfg.m, std::nullopt};
        cli::write_text(cfg.out, cli::construct_json(params).dump(1) + "\n");
        return kExitPass;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::kIo ? kExitIo : kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

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

#ifndef PRIVSTATE_CLI_SUITES_HPP_
#define PRIVSTATE_CLI_SUITES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "privstate/cli/report.hpp"
#include "privstate/families.hpp"

namespace privstate::cli {

struct RunConfig {
    std::string command = "verify";
    std::string suite = "all";
    std::string family = "swap";
    /// Empty means the suite's own default dimensions.
    std::vector<int> d_values;
    int m = 1;
    std::uint64_t seed = 42;
    int restarts = 16;
    /// Tensor power used by optimize.
    int copies = 1;
    /// optimize: compare the key-attacked state with itself.
    bool hat_only = false;
    /// Replaces every numeric check tolerance when set.
    std::optional<double> tol;
    std::string out;
    std::string format = "json";
};

/// Deterministic text of the fields that affect results (not out/format).
std::string canonical_config(const RunConfig &cfg);
std::string config_digest(const RunConfig &cfg);

/// bell-basis, bnot, reversible, twisting, blockform, entropic-identities,
/// families, distill-2m, bounds, ppt, opt-sandwich.
const std::vector<std::string> &suite_names();

/// "2", "2,3,5" or "2..8" (inclusive). Throws Error(kUsage).
std::vector<int> parse_d_range(const std::string &text);

/// Runs one suite or "all". Throws Error(kUsage) for an unknown suite.
VerificationReport run_verify(const RunConfig &cfg);

/// One row per d (default 2..8). Families: swap, fourier, flower, ppt.
std::vector<BoundsRow> bounds_table(Family family, const std::vector<int> &d_values);
/// Table plus the checks hash_lb <= en_measured, repeater_ub = 2 en_measured
/// and en_measured = en_closed.
VerificationReport run_bounds(const RunConfig &cfg);

/// optimize_da on the family state against its key-attacked version (or the
/// key-attacked state against itself with hat_only), per d (default 2).
VerificationReport run_optimize(const RunConfig &cfg);

/// JSON dump of a constructed family: layout, dim, row-major [re, im] entries.
Json construct_json(const StateFamilyParams &params);

}  // namespace privstate::cli

#endif  // PRIVSTATE_CLI_SUITES_HPP_

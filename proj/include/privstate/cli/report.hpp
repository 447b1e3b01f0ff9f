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

#ifndef PRIVSTATE_CLI_REPORT_HPP_
#define PRIVSTATE_CLI_REPORT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace privstate::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char *kVersion = "0.1.0";

/// One verified claim. Numeric checks pass iff |measured - reference| <=
/// tolerance; flag checks pass iff the flags agree.
struct Check {
    std::string id;
    std::string anchor;
    bool is_flag = false;
    double measured = 0;
    double reference = 0;
    bool measured_flag = false;
    bool reference_flag = true;
    double tolerance = 0;
    bool pass = false;
    std::int64_t runtime_ms = 0;

    void evaluate();
};

Check near_check(std::string id, std::string anchor, double measured, double reference, double tolerance);
/// x <= bound + tolerance, reported as measured = max(0, x - bound) against 0.
Check upper_check(std::string id, std::string anchor, double x, double bound, double tolerance);
Check flag_check(std::string id, std::string anchor, bool measured, bool expected = true);

struct BoundsRow {
    std::string family;
    int d = 0;
    double en_measured = 0;
    double en_closed = 0;
    double hash_lb = 0;
    double repeater_ub = 0;
    double sc_ub = 0;
};

inline constexpr const char *kBoundsHeader = "family,d,en_measured,en_closed,hash_lb,repeater_ub,sc_ub";

struct VerificationReport {
    std::string command;
    std::uint64_t seed = 0;
    std::string config_digest;
    std::vector<Check> checks;
    std::vector<BoundsRow> table;
    /// Command-specific payload written after the checks (JSON only).
    Json details;

    bool all_pass() const;
    /// Orders checks by id.
    void sort();
};

enum class Format { kJson, kCsv };

/// Throws Error(kUsage) for anything but "json" or "csv".
Format parse_format(const std::string &name);

Json to_json(const VerificationReport &report);
/// Check rows: id,anchor,status,measured,reference,tolerance,runtime_ms.
std::string checks_csv(const VerificationReport &report);
/// Bounds rows under kBoundsHeader.
std::string bounds_csv(const std::vector<BoundsRow> &rows);
/// Text for the format: JSON, or bounds_csv when the report has a table
/// and checks_csv otherwise. Always ends with a newline.
std::string render(const VerificationReport &report, Format format);

/// Writes text to path, or to stdout when path is empty or "-".
/// Throws Error(kIo).
void write_text(const std::string &path, const std::string &text);
void emit(const VerificationReport &report, const std::string &path, Format format);

/// FNV-1a, 64 bit.
std::uint64_t fnv1a64(const std::string &text);
std::string hex64(std::uint64_t value);

}  // namespace privstate::cli

#endif  // PRIVSTATE_CLI_REPORT_HPP_

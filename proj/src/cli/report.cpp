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

#include "privstate/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "privstate/error.hpp"

namespace privstate::cli {
namespace {

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

std::string fmt(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

void Check::evaluate() {
    if (is_flag) {
        pass = measured_flag == reference_flag;
    } else {
        pass = std::isfinite(measured) && std::isfinite(reference) && std::abs(measured - reference) <= tolerance;
    }
}

Check near_check(std::string id, std::string anchor, double measured, double reference, double tolerance) {
    Check c;
    c.id = std::move(id);
    c.anchor = std::move(anchor);
    c.measured = measured;
    c.reference = reference;
    c.tolerance = tolerance;
    c.evaluate();
    return c;
}

Check upper_check(std::string id, std::string anchor, double x, double bound, double tolerance) {
    double excess = std::isnan(x) ? x : std::max(0.0, x - bound);
    return near_check(std::move(id), std::move(anchor), excess, 0.0, tolerance);
}

Check flag_check(std::string id, std::string anchor, bool measured, bool expected) {
    Check c;
    c.id = std::move(id);
    c.anchor = std::move(anchor);
    c.is_flag = true;
    c.measured_flag = measured;
    c.reference_flag = expected;
    c.evaluate();
    return c;
}

bool VerificationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
}

void VerificationReport::sort() {
    std::stable_sort(checks.begin(), checks.end(), [](const Check &a, const Check &b) { return a.id < b.id; });
}

Format parse_format(const std::string &name) {
    if (name == "json") return Format::kJson;
    if (name == "csv") return Format::kCsv;
    throw Error(ErrorCode::kUsage, "unknown format '" + name + "' (expected json or csv)");
}

Json to_json(const VerificationReport &report) {
    Json out;
    out["metadata"] = {{"version", kVersion},
                       {"command", report.command},
                       {"seed", report.seed},
                       {"config_digest", report.config_digest}};
    Json checks = Json::array();
    for (const auto &c : report.checks) {
        Json j;
        j["id"] = c.id;
        j["anchor"] = c.anchor;
        j["status"] = c.pass ? "pass" : "fail";
        j["measured"] = c.is_flag ? Json(c.measured_flag) : number(c.measured);
        j["reference"] = c.is_flag ? Json(c.reference_flag) : number(c.reference);
        j["tolerance"] = c.is_flag ? Json(0.0) : number(c.tolerance);
        j["runtime_ms"] = c.runtime_ms;
        checks.push_back(std::move(j));
    }
    out["checks"] = std::move(checks);
    if (!report.table.empty()) {
        Json rows = Json::array();
        for (const auto &r : report.table) {
            rows.push_back({{"family", r.family},
                            {"d", r.d},
                            {"en_measured", number(r.en_measured)},
                            {"en_closed", number(r.en_closed)},
                            {"hash_lb", number(r.hash_lb)},
                            {"repeater_ub", number(r.repeater_ub)},
                            {"sc_ub", number(r.sc_ub)}});
        }
        out["table"] = std::move(rows);
    }
    if (!report.details.is_null()) out["details"] = report.details;
    return out;
}

std::string checks_csv(const VerificationReport &report) {
    std::ostringstream os;
    os << "id,anchor,status,measured,reference,tolerance,runtime_ms\n";
    for (const auto &c : report.checks) {
        os << csv_field(c.id) << ',' << csv_field(c.anchor) << ',' << (c.pass ? "pass" : "fail") << ',';
        if (c.is_flag) {
            os << (c.measured_flag ? "true" : "false") << ',' << (c.reference_flag ? "true" : "false") << ",0";
        } else {
            os << fmt(c.measured) << ',' << fmt(c.reference) << ',' << fmt(c.tolerance);
        }
        os << ',' << c.runtime_ms << '\n';
    }
    return os.str();
}

std::string bounds_csv(const std::vector<BoundsRow> &rows) {
    std::ostringstream os;
    os << kBoundsHeader << '\n';
    for (const auto &r : rows) {
        os << r.family << ',' << r.d << ',' << fmt(r.en_measured) << ',' << fmt(r.en_closed) << ',' << fmt(r.hash_lb)
           << ',' << fmt(r.repeater_ub) << ',' << fmt(r.sc_ub) << '\n';
    }
    return os.str();
}

std::string render(const VerificationReport &report, Format format) {
    if (format == Format::kJson) return to_json(report).dump(2) + "\n";
    return report.table.empty() ? checks_csv(report) : bounds_csv(report.table);
}

void write_text(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        if (!std::cout) throw Error(ErrorCode::kIo, "failed writing to stdout");
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::kIo, "cannot open '" + path + "' for writing");
    f << text;
    f.close();
    if (!f) throw Error(ErrorCode::kIo, "failed writing '" + path + "'");
}

void emit(const VerificationReport &report, const std::string &path, Format format) {
    write_text(path, render(report, format));
}

std::uint64_t fnv1a64(const std::string &text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

}  // namespace privstate::cli

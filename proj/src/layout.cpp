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

#include "privstate/layout.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "privstate/error.hpp"

namespace privstate {

const char *to_string(Party party) {
    switch (party) {
        case Party::kA: return "A";
        case Party::kB: return "B";
        case Party::kCA: return "CA";
        case Party::kCB: return "CB";
        case Party::kReg: return "REG";
    }
    return "?";
}

const char *to_string(Role role) {
    switch (role) {
        case Role::kKey: return "key";
        case Role::kShield: return "shield";
        case Role::kRegister: return "register";
    }
    return "?";
}

Party parse_party(std::string_view text) {
    for (Party p : {Party::kA, Party::kB, Party::kCA, Party::kCB, Party::kReg}) {
        if (text == to_string(p)) return p;
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown party '" + std::string(text) + "'");
}

Role parse_role(std::string_view text) {
    for (Role r : {Role::kKey, Role::kShield, Role::kRegister}) {
        if (text == to_string(r)) return r;
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown role '" + std::string(text) + "'");
}

std::size_t default_dim_budget() {
    static const std::size_t budget = [] {
        const char *env = std::getenv("PRIVSTATE_DIM_BUDGET");
        if (env != nullptr) {
            char *end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        }
        return std::size_t{4096};
    }();
    return budget;
}

SystemLayout SystemLayout::make(std::vector<Part> parts, std::size_t budget) {
    SystemLayout out;
    std::set<std::string> seen;
    std::size_t total = 1;
    for (const auto &p : parts) {
        if (p.dim < 1) {
            throw Error(ErrorCode::kInvalidArgument, "part '" + p.label + "' has dimension 0");
        }
        if (p.label.empty()) throw Error(ErrorCode::kInvalidArgument, "empty part label");
        if (!seen.insert(p.label).second) throw Error(ErrorCode::kDuplicateLabel, p.label);
        if (p.dim > budget / total) {
            throw Error(ErrorCode::kBudgetExceeded,
                        "total dimension exceeds budget " + std::to_string(budget));
        }
        total *= p.dim;
    }
    out.parts_ = std::move(parts);
    out.total_dim_ = total;
    return out;
}

std::vector<std::size_t> SystemLayout::dims() const {
    std::vector<std::size_t> out;
    out.reserve(parts_.size());
    for (const auto &p : parts_) out.push_back(p.dim);
    return out;
}

std::vector<std::string> SystemLayout::labels() const {
    std::vector<std::string> out;
    out.reserve(parts_.size());
    for (const auto &p : parts_) out.push_back(p.label);
    return out;
}

std::optional<std::size_t> SystemLayout::find(std::string_view label) const {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i].label == label) return i;
    }
    return std::nullopt;
}

std::size_t SystemLayout::index_of(std::string_view label) const {
    auto i = find(label);
    if (!i) throw Error(ErrorCode::kUnknownLabel, std::string(label) + " in " + describe());
    return *i;
}

std::vector<std::size_t> SystemLayout::indices_of(std::span<const std::string> labels) const {
    std::vector<std::size_t> out;
    out.reserve(labels.size());
    for (const auto &l : labels) {
        std::size_t i = index_of(l);
        if (std::find(out.begin(), out.end(), i) != out.end()) {
            throw Error(ErrorCode::kDuplicateLabel, l);
        }
        out.push_back(i);
    }
    return out;
}

std::vector<std::string> SystemLayout::labels_with_role(Role role) const {
    std::vector<std::string> out;
    for (const auto &p : parts_) {
        if (p.role == role) out.push_back(p.label);
    }
    return out;
}

std::vector<std::string> SystemLayout::labels_with_party(Party party) const {
    std::vector<std::string> out;
    for (const auto &p : parts_) {
        if (p.party == party) out.push_back(p.label);
    }
    return out;
}

std::size_t SystemLayout::dim_of(std::span<const std::string> labels) const {
    std::size_t d = 1;
    for (std::size_t i : indices_of(labels)) d *= parts_[i].dim;
    return d;
}

SystemLayout SystemLayout::concat(const SystemLayout &other) const {
    std::vector<Part> parts = parts_;
    for (const auto &p : other.parts_) {
        if (contains(p.label)) throw Error(ErrorCode::kLabelClash, p.label);
        parts.push_back(p);
    }
    return make(std::move(parts));
}

SystemLayout SystemLayout::select(std::span<const std::size_t> indices) const {
    std::vector<Part> parts;
    parts.reserve(indices.size());
    for (std::size_t i : indices) parts.push_back(parts_.at(i));
    return make(std::move(parts), std::max(total_dim_, default_dim_budget()));
}

SystemLayout SystemLayout::without(std::span<const std::string> labels) const {
    auto drop = indices_of(labels);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (std::find(drop.begin(), drop.end(), i) == drop.end()) keep.push_back(i);
    }
    return select(keep);
}

SystemLayout SystemLayout::with_role(std::string_view label, Role role) const {
    SystemLayout out = *this;
    out.parts_[index_of(label)].role = role;
    return out;
}

SystemLayout SystemLayout::relabeled(std::string_view suffix) const {
    SystemLayout out = *this;
    for (auto &p : out.parts_) p.label += suffix;
    return out;
}

std::string SystemLayout::describe() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        const auto &p = parts_[i];
        if (i) os << ", ";
        os << p.label << ':' << p.dim << ':' << to_string(p.party) << ':' << to_string(p.role);
    }
    os << ']';
    return os.str();
}

}  // namespace privstate

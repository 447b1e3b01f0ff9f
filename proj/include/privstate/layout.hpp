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

#ifndef PRIVSTATE_LAYOUT_HPP_
#define PRIVSTATE_LAYOUT_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace privstate {

enum class Party { kA, kB, kCA, kCB, kReg };
enum class Role { kKey, kShield, kRegister };

const char *to_string(Party party);
const char *to_string(Role role);
Party parse_party(std::string_view text);
Role parse_role(std::string_view text);

struct Part {
    std::string label;
    std::size_t dim = 1;
    Party party = Party::kA;
    Role role = Role::kKey;

    bool operator==(const Part &) const = default;
};

/// Total dimension allowed for a layout unless a caller passes its own
/// budget. 4096 by default; the PRIVSTATE_DIM_BUDGET environment variable
/// overrides it (read once).
std::size_t default_dim_budget();

/// Ordered list of labelled subsystems.
///
/// Composite basis index convention: the leftmost part is the most
/// significant digit, i.e. |i_0 i_1 ... i_{n-1}> has index
/// ((i_0 * d_1 + i_1) * d_2 + ...) + i_{n-1}. Every constructor and circuit
/// in the library relies on this ordering.
class SystemLayout {
   public:
    /// Empty layout; total dimension 1.
    SystemLayout() = default;

    static SystemLayout make(std::vector<Part> parts, std::size_t budget = default_dim_budget());

    const std::vector<Part> &parts() const { return parts_; }
    const Part &part(std::size_t i) const { return parts_.at(i); }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    std::size_t total_dim() const { return total_dim_; }

    std::vector<std::size_t> dims() const;
    std::vector<std::string> labels() const;

    std::optional<std::size_t> find(std::string_view label) const;
    bool contains(std::string_view label) const { return find(label).has_value(); }
    /// Throws ErrorCode::kUnknownLabel.
    std::size_t index_of(std::string_view label) const;
    std::vector<std::size_t> indices_of(std::span<const std::string> labels) const;

    /// Labels of the parts matching the given party / role.
    std::vector<std::string> labels_with_role(Role role) const;
    std::vector<std::string> labels_with_party(Party party) const;

    /// Product of the dims of the named parts.
    std::size_t dim_of(std::span<const std::string> labels) const;

    /// Concatenation; fails with kLabelClash on a shared label.
    SystemLayout concat(const SystemLayout &other) const;
    /// Parts at the given positions, in the given order.
    SystemLayout select(std::span<const std::size_t> indices) const;
    /// All parts except the named ones, original order preserved.
    SystemLayout without(std::span<const std::string> labels) const;
    SystemLayout with_role(std::string_view label, Role role) const;
    SystemLayout relabeled(std::string_view suffix) const;

    std::string describe() const;

    bool operator==(const SystemLayout &other) const { return parts_ == other.parts_; }

   private:
    std::vector<Part> parts_;
    std::size_t total_dim_ = 1;
};

}  // namespace privstate

#endif  // PRIVSTATE_LAYOUT_HPP_

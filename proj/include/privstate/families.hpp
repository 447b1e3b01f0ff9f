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

#ifndef PRIVSTATE_FAMILIES_HPP_
#define PRIVSTATE_FAMILIES_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "privstate/operator.hpp"

namespace privstate {

enum class Family { kSwap, kFourier, kFlower, kPpt, kPptInvariant, kTwoMExample, kAlpha, kAlphaTilde };

const char *to_string(Family family);
/// Accepts the snake_case names ("swap", "ppt_invariant", "two_m_example", ...).
Family parse_family(std::string_view name);
std::vector<Family> all_families();

struct StateFamilyParams {
    Family family = Family::kSwap;
    int d = 2;
    int m = 1;
    /// d x d unitary; defaults to the discrete Fourier transform, or the
    /// Hadamard power for flower.
    std::optional<Matrix> unitary;
};

struct FamilyState {
    Operator state;
    /// Closed-form values known for the family, in bits. Keys used:
    /// "log_negativity", "hashing", "distillable", "repeater_oneway_ub",
    /// "repeater_twoway_ub", "alpha_divergence".
    std::map<std::string, double> reference;
};

/// Builds a named family on its canonical layout KA, SA, KB, SB (key
/// qubits, d-dimensional shields). two_m_example uses KA1, KA2, SA, KB1, KB2,
/// SB with qubit shields; alpha and alpha_tilde append a shield qubit F held
/// by A. Throws kUnsupportedFamily for invalid (family, d, m).
FamilyState family_construct(const StateFamilyParams &params);

/// Unitary used when params.unitary is empty.
Matrix default_family_unitary(Family family, int d);

/// sum_{ij} u_ij |ij><ji| and sum_{ij} u_ij |ii><jj| with u_ij = sqrt(d) U_ij.
Matrix fourier_twist(const Matrix &u);
Matrix flower_twist(const Matrix &u);

}  // namespace privstate

#endif  // PRIVSTATE_FAMILIES_HPP_

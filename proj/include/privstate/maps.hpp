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

#ifndef PRIVSTATE_MAPS_HPP_
#define PRIVSTATE_MAPS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "privstate/states.hpp"
#include "privstate/tensor.hpp"

namespace privstate {

/// Outcomes with probability at or below this carry no conditional state.
inline constexpr double kNullOutcome = 1e-12;

/// Positive operators on the composite of some parts, summing to identity.
struct Povm {
    std::vector<Matrix> elements;

    std::size_t dim() const { return elements.empty() ? 0 : static_cast<std::size_t>(elements.front().rows()); }
    /// Rank-1 projectors onto the columns of a unitary.
    static Povm from_basis(const Matrix &unitary);
    static Povm computational(std::size_t dim);
    static Povm trivial(std::size_t dim);
};

/// Throws kInvalidPovm unless every element is dim x dim, Hermitian PSD
/// within 1e-10 and the elements sum to the identity within 1e-10.
void validate(const Povm &povm, std::size_t dim);

struct CqOutcome {
    double probability = 0;
    std::optional<Operator> conditional;  // empty when probability <= kNullOutcome
};

/// Classical outcomes of a partial measurement with the post-measurement
/// states of the unmeasured parts.
struct CqState {
    std::string register_label = "X";
    SystemLayout rest;
    std::vector<CqOutcome> outcomes;
};

/// sum_k |k><k| ⊗ p_k rho_k with the register as a leading REG part.
Operator cq_embedding(const CqState &cq);

/// Fresh key pair appended by the reversible map: "<label>'".
std::string target_label(const std::string &label);

/// Key pair (A then B) of a key-correlated state. Throws kNoKeyParts.
std::pair<std::string, std::string> key_pair(const SystemLayout &layout);

/// ||1_corr rho 1_corr - rho||_F on the key pair.
double key_correlation_defect(const Operator &rho);

/// BNOT^dag (Phi-hat ⊗ rho) BNOT with rho's key pair as control and a fresh
/// key-attacked maximally entangled pair as target. The old key parts become
/// shields; the targets are appended as KA', KB' with key role.
Operator reversible_map(const Operator &rho);
/// Undoes reversible_map: applies BNOT and traces the targets.
Operator reversible_inverse(const Operator &e_out);
/// (1/d) sum_k Z_B^k rho Z_B^-k ⊗ phi_{0k}, laid out like reversible_map(rho).
/// Computed from phase flips only, without BNOT.
Operator phase_flip_mixture(const Operator &rho);

/// Z^k rho Z^-k on the named key part.
Operator phase_flip(const Operator &rho, int k, const std::string &side);

/// tr_shield T^dag gamma T for the twisting of spec.
Operator untwist_trace(const Operator &gamma, const PrivateStateSpec &spec);

/// Measures the composite of `labels` (in the given order) with the POVM.
CqState apply_povm_partial(const Operator &rho, const Povm &povm, const LabelList &labels);
/// Outcome distribution of measuring `labels`.
std::vector<double> outcome_distribution(const Operator &rho, const Povm &povm, const LabelList &labels);

/// Alice's local unitary of the 2m example on (KA1, KA2, SA): CNOT KA2 -> SA,
/// Hadamard on SA, CNOT KA1 -> SA. Bob applies the same on (KB1, KB2, SB).
Operator distill_2m_local_unitary(const std::string &k1, const std::string &k2, const std::string &s);

/// States after each of the three bilateral steps.
std::vector<Operator> distill_2m_steps(const Operator &gamma);
/// Final state of distill_2m_steps.
Operator distill_2m_circuit(const Operator &gamma);

}  // namespace privstate

#endif  // PRIVSTATE_MAPS_HPP_

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

#ifndef PRIVSTATE_STATES_HPP_
#define PRIVSTATE_STATES_HPP_

#include <cstddef>
#include <vector>

#include "privstate/operator.hpp"
#include "privstate/random.hpp"

namespace privstate {

/// Overlap threshold between support projectors of the shield flags.
inline constexpr double kOrthogonalityTol = 1e-8;

/// KA (key, A), SA (shield, A), KB (key, B), SB (shield, B).
SystemLayout canonical_layout(std::size_t key_dim, std::size_t shield_a, std::size_t shield_b);
/// 2^m; throws for m < 1 or m > 6.
std::size_t key_dim_for_bits(int m);

struct PrivateStateSpec {
    int m = 1;
    std::size_t shield_a = 1;
    std::size_t shield_b = 1;
    std::vector<Matrix> twisting;  // 2^m unitaries on SA SB
    Matrix sigma;                  // density on SA SB
};

struct BellPrivateSpec {
    std::vector<double> probs;  // length 2^m
    std::vector<Matrix> sigmas;  // densities on SA SB with orthogonal supports
    std::size_t shield_a = 1;
    std::size_t shield_b = 1;

    int m() const;
};

/// Throws kInvalidSpec describing the first violated invariant.
void validate(const PrivateStateSpec &spec);
/// Throws kInvalidSpec, or kNotOrthogonal when two flags overlap.
void validate(const BellPrivateSpec &spec);

/// sum_{mu nu} |phi_mu><phi_nu| ⊗ P[mu][nu] with phi_mu the Bell states
/// phi_{0 mu} spanning the maximally correlated subspace.
Operator key_correlated(const std::vector<std::vector<Matrix>> &p, int m, std::size_t shield_a, std::size_t shield_b);

/// sum_{ij} |ii><jj| ⊗ blocks[i][j] on the canonical layout.
Operator correlated_blocks(const std::vector<std::vector<Matrix>> &blocks, std::size_t shield_a, std::size_t shield_b,
                           bool validate_density = true);

/// T = sum_{ij} |ij><ij| ⊗ U_i on the canonical layout.
Operator twisting_operator(const PrivateStateSpec &spec);
/// T (Phi ⊗ sigma) T^dag.
Operator private_state(const PrivateStateSpec &spec);
/// sum_k p_k phi_{0k} ⊗ sigma_k.
Operator bell_private_state(const BellPrivateSpec &spec);
/// U_sigma = sum_k w^k P_k + P_perp with w = exp(2 pi i / 2^m).
Matrix bell_twisting_unitary(const BellPrivateSpec &spec);
/// Twisting U_i = U_sigma^i with sigma = sum_k p_k sigma_k.
PrivateStateSpec bell_twisting(const BellPrivateSpec &spec);

/// 2^-m sum_{ij} |ii><jj| ⊗ |Y| W^{i-j} where Y = W|Y| is the polar
/// decomposition (W^{-1} read as W^dag). Requires Y normal, ||Y||_1 = 1 and
/// Y^{2^m} positive semidefinite.
Operator block_form_state(const Matrix &y, int m, std::size_t shield_a, std::size_t shield_b);

/// Measures every key-role part in the computational basis.
Operator key_attack(const Operator &rho);

/// Random key-correlated density on the canonical layout with key dimension d:
/// a random density on C^d ⊗ shield pushed through |k> -> |kk>.
Operator random_key_correlated(Rng &rng, std::size_t d, std::size_t shield_a, std::size_t shield_b);
/// Random Bell private spec with 2^m flags. Flag k is a random mixture of the
/// columns c = k mod 2^m of a Haar unitary, so flags are orthogonal; needs
/// shield_a * shield_b >= 2^m.
BellPrivateSpec random_bell_spec(Rng &rng, int m, std::size_t shield_a, std::size_t shield_b);
/// rho_key ⊗ rho_shield, returned in the original part order.
Operator marginal_product(const Operator &rho);

}  // namespace privstate

#endif  // PRIVSTATE_STATES_HPP_

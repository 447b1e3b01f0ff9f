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

#ifndef PRIVSTATE_QUDIT_HPP_
#define PRIVSTATE_QUDIT_HPP_

#include <string>
#include <utility>

#include "privstate/operator.hpp"

namespace privstate {

struct BellIndex {
    int i = 0;
    int j = 0;
};

/// exp(2 pi i k / d).
Complex root_of_unity(int d, long long k);

Matrix shift_matrix(int d);  // X = sum_j |j+1><j|
Matrix clock_matrix(int d);  // Z = sum_j w^j |j><j|

struct PauliPair {
    Operator x;
    Operator z;
};

/// Generalized bit and phase flip on a single part labelled "Q".
PauliPair pauli_ops(int d);

/// (X^i Z^j ⊗ 1) d^{-1/2} sum_k |kk>; the flip acts on the first qudit.
Vector bell_vector(int d, BellIndex idx);
/// Projector onto bell_vector on layout (a: party A key, b: party B key).
Operator bell_state(int d, BellIndex idx, const std::string &a = "KA", const std::string &b = "KB");

/// sum_{ab} |a, a+b><a, b| on parts C (control) and T (target), both party A.
Operator cnot(int d);
/// CNOT_{C1 T1} ⊗ CNOT_{C2 T2} on parts ordered C1, C2, T1, T2. C1 and T1
/// belong to party A, C2 and T2 to party B, so the gate is local across A:B.
Operator bnot(int d);

/// Swap operator on SA, SB.
Operator swap_operator(int d);

struct WernerPair {
    Operator symmetric;
    Operator antisymmetric;
};

/// Normalized projectors onto the symmetric and antisymmetric subspaces of
/// C^d ⊗ C^d on SA, SB.
WernerPair sym_asym_states(int d);

/// sum_k |kk><kk| on KA, KB.
Operator max_corr_projector(int d);

/// F_{jk} = w^{jk} / sqrt(d).
Matrix fourier_matrix(int d);
/// Hadamard^{⊗k} for d = 2^k. Throws kInvalidArgument otherwise.
Matrix hadamard_power(int d);
bool is_power_of_two(int d);
/// Every entry has modulus 1/sqrt(d).
bool is_flat(const Matrix &u, double tol = 1e-10);

/// Identity on a single part.
Operator identity_on(const Part &part);
/// Maximally mixed density on a layout.
Operator maximally_mixed(const SystemLayout &layout);
/// |k><k| on a single part.
Operator basis_projector(const Part &part, std::size_t k);

}  // namespace privstate

#endif  // PRIVSTATE_QUDIT_HPP_

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

#ifndef PRIVSTATE_RANDOM_HPP_
#define PRIVSTATE_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "privstate/linalg.hpp"

namespace privstate {

using Rng = std::mt19937_64;

/// Mixes a base seed with a stream index so that parallel workers get
/// independent, reproducible generators.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

Matrix random_ginibre(Rng &rng, std::size_t rows, std::size_t cols);
/// Haar-distributed unitary.
Matrix random_unitary(Rng &rng, std::size_t n);
/// Random density matrix of the given rank (0 means full rank).
Matrix random_density(Rng &rng, std::size_t n, std::size_t rank = 0);
/// Random probability vector (Dirichlet(1,...,1)).
RealVector random_probabilities(Rng &rng, std::size_t n);

}  // namespace privstate

#endif  // PRIVSTATE_RANDOM_HPP_

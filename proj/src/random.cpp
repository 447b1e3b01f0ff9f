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

#include "privstate/random.hpp"

#include <cmath>

namespace privstate {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over the combined value.
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Matrix random_ginibre(Rng &rng, std::size_t rows, std::size_t cols) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix g(rows, cols);
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t r = 0; r < rows; ++r) {
            double re = normal(rng);
            double im = normal(rng);
            g(r, c) = Complex(re, im);
        }
    }
    return g;
}

Matrix random_unitary(Rng &rng, std::size_t n) {
    Matrix g = random_ginibre(rng, n, n);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (std::size_t k = 0; k < n; ++k) {
        Complex diag = r(k, k);
        double mag = std::abs(diag);
        if (mag > 0) q.col(k) *= diag / mag;
    }
    return q;
}

Matrix random_density(Rng &rng, std::size_t n, std::size_t rank) {
    if (rank == 0 || rank > n) rank = n;
    Matrix g = random_ginibre(rng, n, rank);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return hermitize(rho);
}

RealVector random_probabilities(Rng &rng, std::size_t n) {
    std::exponential_distribution<double> expo(1.0);
    RealVector p(n);
    for (std::size_t k = 0; k < n; ++k) p(k) = expo(rng);
    return p / p.sum();
}

}  // namespace privstate

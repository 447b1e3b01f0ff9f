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

#ifndef PRIVSTATE_OPT_HPP_
#define PRIVSTATE_OPT_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "privstate/measures.hpp"

namespace privstate {

/// Projective measurement on the composite of `labels`, given by the
/// columns of a unitary built from dim(dim-1)/2 adjacent two-level
/// rotations. angles holds (theta, phi) per rotation. With n_outcomes <
/// dim, column k is grouped into outcome k mod n_outcomes.
struct PovmParams {
    std::vector<double> angles;
    std::size_t dim = 0;
    std::size_t n_outcomes = 0;
    LabelList labels;
};

std::size_t angle_count(std::size_t dim);

/// Product of the rotations, in the fixed order: for column c = 0..dim-2,
/// rows (r-1, r) for r = dim-1 down to c+1. Each rotation is
/// [[cos t, -e^{-i p} sin t], [e^{i p} sin t, cos t]].
Matrix unitary_from_angles(const std::vector<double> &angles, std::size_t dim);
/// Angles whose unitary equals u up to a phase per column.
std::vector<double> angles_from_unitary(const Matrix &u);

/// Throws kInvalidArgument on a wrong angle count or outcome count.
Povm povm_from_params(const PovmParams &params);

/// Party-A parts with key or shield role.
LabelList default_alice_labels(const SystemLayout &layout);
/// Tensor product of per-part discrete Fourier transforms on `labels`.
Matrix conjugate_basis(const SystemLayout &layout, const LabelList &labels);

/// D(M(rho) || M(rho_hat)) with M measuring only `labels`, keeping the rest.
/// Throws kBadLabels when a label is not held by party A.
BitsValue da_objective(const Operator &rho, const Operator &rho_hat, const Povm &povm, const LabelList &labels);

/// (1/n) sum_k D(M(sigma_k) || M(sigma_avg)) with M a partial measurement.
/// Throws kMixtureMismatch unless sigma_avg is the uniform mixture within 1e-10.
BitsValue da_belldiagonal(const std::vector<Operator> &sigmas, const Operator &sigma_avg, const Povm &povm,
                          const LabelList &labels);

struct OptConfig {
    int restarts = 16;
    int max_evals = 3000;
    std::uint64_t seed = 0;
    double tolerance = 1e-7;
    /// Try `candidates` (angle vectors) as extra starting points.
    bool candidate_seeds = true;
    std::vector<std::vector<double>> candidates;
    /// 0 means one outcome per basis vector.
    std::size_t n_outcomes = 0;
    double initial_step = 0.25;
    /// 0 means std::thread::hardware_concurrency().
    unsigned threads = 0;
};

struct RestartTrace {
    std::string start;  // computational, conjugate, candidate or random
    double initial_value = 0;
    double final_value = 0;
    int evaluations = 0;
    bool budget_exhausted = false;
};

struct OptResult {
    double best_value = 0;
    PovmParams best;
    std::size_t best_restart = 0;
    std::vector<RestartTrace> restarts;
    long long evaluations = 0;
};

/// Nelder-Mead over PovmParams from several starts: computational basis,
/// conjugate basis, the configured candidates, then seeded random angles
/// (theta in [0, pi/2], phi in [0, 2 pi)). Start r draws from a generator
/// seeded by (cfg.seed, r); restarts run in parallel and the best value
/// wins with ties going to the lowest index, so results do not depend on
/// scheduling. The value is a lower estimate of the supremum over
/// measurements on `labels`.
OptResult optimize_da(const Operator &rho, const Operator &rho_hat, const LabelList &labels, const OptConfig &cfg);

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0;
    int evaluations = 0;
    bool budget_exhausted = false;
};

/// Minimizes f from x0 with an axis-aligned initial simplex.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double> &)> &f, std::vector<double> x0,
                             double step, double tolerance, int max_evals);

}  // namespace privstate

#endif  // PRIVSTATE_OPT_HPP_

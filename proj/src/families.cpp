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

#include "privstate/families.hpp"

#include <cmath>

#include "privstate/error.hpp"
#include "privstate/qudit.hpp"
#include "privstate/states.hpp"
#include "privstate/tensor.hpp"

namespace privstate {
namespace {

struct FamilyName {
    Family family;
    const char *name;
};

constexpr FamilyName kFamilyNames[] = {
    {Family::kSwap, "swap"},
    {Family::kFourier, "fourier"},
    {Family::kFlower, "flower"},
    {Family::kPpt, "ppt"},
    {Family::kPptInvariant, "ppt_invariant"},
    {Family::kTwoMExample, "two_m_example"},
    {Family::kAlpha, "alpha"},
    {Family::kAlphaTilde, "alpha_tilde"},
};

[[noreturn]] void unsupported(const StateFamilyParams &p, const std::string &why) {
    throw Error(ErrorCode::kUnsupportedFamily,
                std::string(to_string(p.family)) + " with d=" + std::to_string(p.d) + ": " + why);
}

Matrix unitary_for(const StateFamilyParams &p, bool need_flat) {
    Matrix u = p.unitary ? *p.unitary : default_family_unitary(p.family, p.d);
    if (u.rows() != p.d || u.cols() != p.d) unsupported(p, "unitary must be d x d");
    if (!is_unitary(u, kUnitaryTol)) unsupported(p, "supplied matrix is not unitary");
    if (need_flat && !is_flat(u)) unsupported(p, "unitary entries must all have modulus 1/sqrt(d)");
    return u;
}

Operator swap_state(int d) {
    auto w = sym_asym_states(d);
    BellPrivateSpec spec;
    double dd = d;
    spec.probs = {0.5 * (1 + 1 / dd), 0.5 * (1 - 1 / dd)};
    spec.sigmas = {w.symmetric.matrix(), w.antisymmetric.matrix()};
    spec.shield_a = spec.shield_b = static_cast<std::size_t>(d);
    return bell_private_state(spec);
}

Operator two_block_state(const Matrix &diag, const Matrix &off, int d) {
    std::vector<std::vector<Matrix>> blocks{{diag, off}, {off.adjoint(), diag}};
    return correlated_blocks(blocks, d, d);
}

Operator fourier_state(const Matrix &u, int d) {
    double dd = d;
    Matrix id = Matrix::Identity(d * d, d * d);
    return two_block_state(id / (2 * dd * dd), fourier_twist(u) / (2 * dd * dd), d);
}

Operator flower_state(const Matrix &u, int d) {
    double dd = d;
    Matrix corr = max_corr_projector(d).matrix();
    return two_block_state(corr / (2 * dd), flower_twist(u) / (2 * dd * std::sqrt(dd)), d);
}

Operator flip_key(const Operator &rho, const std::string &label) {
    auto x = pauli_ops(2).x;
    return conjugate_on(rho, x, {label});
}

Operator mix(double a, const Operator &x, double b, const Operator &y) {
    return Operator::density(x.layout(), hermitize(a * x.matrix() + b * y.matrix()));
}

Operator with_flag(const Operator &rho, std::size_t k) {
    Part flag{"F", 2, Party::kA, Role::kShield};
    return tensor(rho, basis_projector(flag, k));
}

Operator two_m_state() {
    // 1/4 sum_ij phi_{0i} ⊗ phi_{0j} ⊗ phi_{ij} on the pairs (KA1, KB1),
    // (KA2, KB2), (SA, SB).
    auto shield_layout =
        SystemLayout::make({{"SA", 2, Party::kA, Role::kShield}, {"SB", 2, Party::kB, Role::kShield}});
    std::optional<Operator> sum;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Operator term = tensor({bell_state(2, {0, i}, "KA1", "KB1"), bell_state(2, {0, j}, "KA2", "KB2"),
                                    bell_state(2, {i, j}).with_layout(shield_layout)});
            if (!sum) {
                sum = Operator(term.layout(), term.matrix() / 4.0);
            } else {
                sum = Operator(term.layout(), sum->matrix() + term.matrix() / 4.0);
            }
        }
    }
    Operator ordered = permute(*sum, {"KA1", "KA2", "SA", "KB1", "KB2", "SB"});
    return Operator::density(ordered.layout(), hermitize(ordered.matrix()));
}

}  // namespace

const char *to_string(Family family) {
    for (const auto &f : kFamilyNames) {
        if (f.family == family) return f.name;
    }
    return "?";
}

Family parse_family(std::string_view name) {
    for (const auto &f : kFamilyNames) {
        if (name == f.name) return f.family;
    }
    throw Error(ErrorCode::kUnsupportedFamily, "unknown family '" + std::string(name) + "'");
}

std::vector<Family> all_families() {
    std::vector<Family> out;
    for (const auto &f : kFamilyNames) out.push_back(f.family);
    return out;
}

Matrix default_family_unitary(Family family, int d) {
    if (family == Family::kFlower) return hadamard_power(d);
    return fourier_matrix(d);
}

Matrix fourier_twist(const Matrix &u) {
    auto d = u.rows();
    double scale = std::sqrt(static_cast<double>(d));
    Matrix out = Matrix::Zero(d * d, d * d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) out(i * d + j, j * d + i) = scale * u(i, j);
    }
    return out;
}

Matrix flower_twist(const Matrix &u) {
    auto d = u.rows();
    double scale = std::sqrt(static_cast<double>(d));
    Matrix out = Matrix::Zero(d * d, d * d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) out(i * d + i, j * d + j) = scale * u(i, j);
    }
    return out;
}

FamilyState family_construct(const StateFamilyParams &p) {
    if (p.d < 2) unsupported(p, "d must be at least 2");
    if (p.family == Family::kTwoMExample) {
        if (p.d != 2) unsupported(p, "shields are qubits, d must be 2");
        if (p.m != 1) {
            unsupported(p, "only m = 1 is built; m = " + std::to_string(p.m) + " exceeds the desk-scale budget");
        }
        return {two_m_state(), {{"distillable", 2.0}}};
    }
    if (p.m != 1) unsupported(p, "family is defined for m = 1 only");

    const double d = p.d;
    const double sd = std::sqrt(d);
    const double c = 1.0 / (1.0 + 1.0 / sd);
    switch (p.family) {
        case Family::kSwap: {
            double en = std::log2(1 + 1 / d);
            return {swap_state(p.d), {{"log_negativity", en}, {"repeater_oneway_ub", 2 * en}}};
        }
        case Family::kFourier: {
            double en = std::log2(1 + 1 / sd);
            return {fourier_state(unitary_for(p, true), p.d), {{"log_negativity", en}, {"repeater_oneway_ub", 2 * en}}};
        }
        case Family::kFlower: {
            if (!p.unitary && !is_power_of_two(p.d)) unsupported(p, "default Hadamard unitary needs d = 2^k");
            return {flower_state(unitary_for(p, true), p.d),
                    {{"log_negativity", std::log2(1 + sd)}, {"hashing", 1.0}, {"distillable", 1.0}}};
        }
        case Family::kPpt: {
            Matrix u = unitary_for(p, true);
            Operator noise = flip_key(key_attack(flower_state(u, p.d)), "KA");
            return {mix(c, fourier_state(u, p.d), c / sd, noise),
                    {{"log_negativity", 0.0},
                     {"repeater_oneway_ub", 2 * std::log2(1 + 1 / sd)},
                     {"repeater_twoway_ub", 1 / (sd + 1)}}};
        }
        case Family::kPptInvariant: {
            Matrix u = unitary_for(p, true);
            Operator noise = flip_key(flower_state(u, p.d), "KB");
            return {mix(c, fourier_state(u, p.d), c / sd, noise),
                    {{"repeater_oneway_ub", 2 * (1 + std::log2(std::exp(1.0))) / (1 + sd)}}};
        }
        case Family::kAlpha: {
            Matrix u = unitary_for(p, true);
            Operator a = mix(c, with_flag(fourier_state(u, p.d), 0), c / sd, with_flag(flower_state(u, p.d), 1));
            return {a,
                    {{"alpha_divergence", c * (std::log2(1 + 1 / sd) + 1 / sd)},
                     {"alpha_divergence_ub", (1 + std::log2(std::exp(1.0))) / (1 + sd)}}};
        }
        case Family::kAlphaTilde: {
            Matrix u = unitary_for(p, true);
            StateFamilyParams ppt = p;
            ppt.family = Family::kPpt;
            Operator xi = family_construct(ppt).state;
            Operator a = mix(c, with_flag(xi, 0), c / sd, with_flag(key_attack(flower_state(u, p.d)), 1));
            return {a, {}};
        }
        case Family::kTwoMExample:
            break;
    }
    unsupported(p, "unhandled family");
}

}  // namespace privstate

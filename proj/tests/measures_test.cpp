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

#include "privstate/measures.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "privstate/error.hpp"
#include "privstate/families.hpp"
#include "privstate/qudit.hpp"
#include "privstate/random.hpp"

using namespace privstate;

namespace {

double h2(double p) { return -p * std::log2(p) - (1 - p) * std::log2(1 - p); }

Operator qubit(const Matrix &m, const std::string &label = "Q") {
    return Operator::density(SystemLayout::make({{label, std::size_t(m.rows()), Party::kA, Role::kShield}}), m);
}

Matrix diag2(double a, double b) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

Operator tau_tau() {
    auto l = SystemLayout::make({{"A", 2, Party::kA, Role::kKey}, {"B", 2, Party::kB, Role::kKey}});
    return maximally_mixed(l);
}

// Independent D(rho||sigma) for full-rank sigma via matrix logarithms.
double reference_divergence(const Matrix &rho, const Matrix &sigma) {
    auto lg = [](double x) { return x > 1e-300 ? std::log2(x) : 0.0; };
    Matrix lr = hermitian_function(rho, lg);
    Matrix ls = hermitian_function(sigma, lg);
    return (rho * (lr - ls)).trace().real();
}

}  // namespace

TEST(measures, entropy_examples) {
    for (int d : {2, 3, 5}) EXPECT_NEAR(entropy(qubit(Matrix::Identity(d, d) / double(d))).value, std::log2(d), 1e-12);
    EXPECT_NEAR(entropy(bell_state(3, {1, 2})).value, 0.0, 1e-12);
    EXPECT_NEAR(entropy(qubit(diag2(0.75, 0.25))).value, 0.811278, 1e-6);
    Operator bad(SystemLayout::make({{"Q", 2, Party::kA, Role::kKey}}), Matrix::Identity(2, 2));
    EXPECT_THROW(entropy(bad), Error);
}

TEST(measures, relative_entropy_examples) {
    Rng rng(31);
    auto rho = qubit(random_density(rng, 3));
    EXPECT_NEAR(relative_entropy(rho, rho).value, 0.0, 1e-12);
    auto sigma = qubit(random_density(rng, 3));
    EXPECT_NEAR(relative_entropy(rho, sigma).value, reference_divergence(rho.matrix(), sigma.matrix()), 1e-10);
    auto g = family_construct({Family::kSwap, 2}).state;
    EXPECT_NEAR(relative_entropy(g, key_attack(g)).value, 1.0, 1e-9);
    auto zero = relative_entropy(qubit(diag2(1, 0)), qubit(diag2(0, 1)));
    EXPECT_FALSE(zero.finite);
    EXPECT_TRUE(std::isinf(zero.value));
    EXPECT_THROW(relative_entropy(rho, g), Error);
}

TEST(measures, relative_entropy_truncation) {
    // Leak of 1e-11 outside the support: truncated, finite.
    double eps = 1e-11;
    auto r = relative_entropy(qubit(diag2(1 - eps, eps)), qubit(diag2(1, 0)));
    EXPECT_TRUE(r.finite);
    EXPECT_TRUE(r.truncated);
    EXPECT_NEAR(r.value, 0.0, 1e-9);
    auto leak = relative_entropy(qubit(diag2(1 - 1e-6, 1e-6)), qubit(diag2(1, 0)));
    EXPECT_FALSE(leak.finite);
}

TEST(measures, relative_entropy_nonnegative) {
    Rng rng(32);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = qubit(random_density(rng, 4, 2));
        auto b = qubit(random_density(rng, 4));
        auto v = relative_entropy(a, b);
        EXPECT_GE(v.value, -1e-10);
        EXPECT_GT(trace_norm(a.matrix() - b.matrix()), 1e-8);
        EXPECT_GT(v.value, 0.0);
    }
}

TEST(measures, mutual_and_coherent_information) {
    auto phi = bell_state(2, {0, 0});
    EXPECT_NEAR(mutual_information(phi, {"KA"}, {"KB"}).value, 2.0, 1e-12);
    EXPECT_NEAR(mutual_information(tau_tau(), {"A"}, {"B"}).value, 0.0, 1e-12);
    auto g = family_construct({Family::kSwap, 2}).state;
    EXPECT_NEAR(mutual_information(g, {"KA", "KB"}, {"SA", "SB"}).value, h2(0.75), 1e-9);
    EXPECT_NEAR(coherent_information(phi, {"KA"}, {"KB"}).value, 1.0, 1e-12);
    EXPECT_NEAR(coherent_information(tau_tau(), {"A"}, {"B"}).value, -1.0, 1e-12);
    EXPECT_NEAR(coherent_information(key_attack(phi), {"KA"}, {"KB"}).value, 0.0, 1e-12);
    EXPECT_THROW(mutual_information(phi, {"KA"}, {"KA"}), Error);
    EXPECT_THROW(coherent_information(phi, {"KA"}, {}), Error);
}

TEST(measures, hashing_examples) {
    auto g = family_construct({Family::kSwap, 2}).state;
    auto key = partial_trace(g, {"SA", "SB"});
    EXPECT_NEAR(hashing_lower_bound(key, {"KB"}).value, 1 - h2(0.75), 1e-12);
    EXPECT_NEAR(hashing_lower_bound(key, {"KB"}).value, 0.188722, 1e-6);
    EXPECT_NEAR(hashing_lower_bound(bell_state(2, {0, 0}), {"KB"}).value, 1.0, 1e-12);
    for (int d : {2, 4, 8}) {
        EXPECT_NEAR(hashing_lower_bound(family_construct({Family::kFlower, d}).state, {"KB", "SB"}).value, 1.0, 1e-9);
    }
    EXPECT_THROW(hashing_lower_bound(key, {"SB"}), Error);
}

TEST(measures, log_negativity_and_ppt) {
    auto g = family_construct({Family::kSwap, 2}).state;
    EXPECT_NEAR(log_negativity(g, {"KB", "SB"}).value, std::log2(1.5), 1e-8);
    EXPECT_NEAR(log_negativity(family_construct({Family::kFourier, 4}).state, {"KB", "SB"}).value, std::log2(1.5), 1e-8);
    EXPECT_NEAR(log_negativity(key_attack(bell_state(2, {0, 0})), {"KB"}).value, 0.0, 1e-12);
    auto phi = is_ppt(bell_state(2, {0, 0}), {"KB"});
    EXPECT_FALSE(phi.ppt);
    EXPECT_NEAR(phi.min_eigenvalue, -0.5, 1e-12);
    EXPECT_TRUE(is_ppt(tau_tau(), {"B"}).ppt);
    // Additivity on two copies.
    auto g2 = tensor_power(g, 2);
    EXPECT_NEAR(log_negativity(g2, bob_labels(g2.layout())).value, 2 * std::log2(1.5), 1e-8);
}

TEST(measures, entropic_identities_random_bell_pbits) {
    Rng rng(33);
    for (int trial = 0; trial < 5; ++trial) {
        Matrix u = random_unitary(rng, 4);
        double p = random_probabilities(rng, 2)(0);
        Matrix s0 = 0.5 * (u.col(0) * u.col(0).adjoint() + u.col(1) * u.col(1).adjoint());
        Matrix s1 = u.col(2) * u.col(2).adjoint();
        auto g = bell_private_state({{p, 1 - p}, {s0, s1}, 2, 2});
        EXPECT_NEAR(relative_entropy(g, key_attack(g)).value, 1.0, 1e-9);
        EXPECT_NEAR(relative_entropy(g, marginal_product(g)).value, h2(p), 1e-9);
        EXPECT_NEAR(mutual_information(g, {"KA", "KB"}, {"SA", "SB"}).value, h2(p), 1e-9);
    }
}

TEST(measures, measured_relative_entropy_examples) {
    auto phi = bell_state(2, {0, 0});
    auto hat = key_attack(phi);
    Povm comp = Povm::computational(4);
    EXPECT_NEAR(measured_relative_entropy(phi, hat, comp, {"KA", "KB"}, false).value, 0.0, 1e-12);
    Matrix h = hadamard_power(4);
    EXPECT_NEAR(measured_relative_entropy(phi, hat, Povm::from_basis(h), {"KA", "KB"}, false).value, 1.0, 1e-12);
    Rng rng(34);
    auto g = family_construct({Family::kSwap, 2}).state;
    auto ghat = key_attack(g);
    double full = relative_entropy(g, ghat).value;
    for (int trial = 0; trial < 5; ++trial) {
        Povm povm = Povm::from_basis(random_unitary(rng, 4));
        EXPECT_LE(measured_relative_entropy(g, ghat, povm, {"KA", "SA"}, true).value, full + 1e-9);
        EXPECT_LE(measured_relative_entropy(g, ghat, povm, {"KA", "SA"}, false).value, full + 1e-9);
    }
}

TEST(measures, partial_measurement_equals_cq_embedding) {
    Rng rng(35);
    auto g = family_construct({Family::kSwap, 2}).state;
    auto ghat = key_attack(g);
    for (int trial = 0; trial < 3; ++trial) {
        Povm povm = Povm::from_basis(random_unitary(rng, 4));
        double blockwise = measured_relative_entropy(g, ghat, povm, {"KA", "SA"}, true).value;
        auto a = cq_embedding(apply_povm_partial(g, povm, {"KA", "SA"}));
        auto b = cq_embedding(apply_povm_partial(ghat, povm, {"KA", "SA"}));
        EXPECT_NEAR(blockwise, relative_entropy(a, b).value, 1e-9);
    }
}

TEST(measures, phase_invariance_of_measured_divergence) {
    Rng rng(36);
    auto g = family_construct({Family::kSwap, 3}).state;
    auto ghat = key_attack(g);
    Povm povm = Povm::from_basis(random_unitary(rng, 6));
    double base = measured_relative_entropy(g, ghat, povm, {"KA", "SA"}, true).value;
    double flipped = measured_relative_entropy(phase_flip(g, 1, "KB"), ghat, povm, {"KA", "SA"}, true).value;
    EXPECT_NEAR(base, flipped, 1e-9);
}

TEST(measures, closed_forms) {
    EXPECT_NEAR(closed_form("repeater_swap", {2}).value, 1.169925, 1e-6);
    EXPECT_NEAR(closed_form("er_oneway_ebit", {2, 1}).value, 0.584963, 1e-6);
    EXPECT_NEAR(closed_form("er_oneway_ebit", {2, 1}).value, std::log2(3.0) - 1, 1e-15);
    EXPECT_NEAR(closed_form("ppt_invariant_bound", {4}).value, 1.628463, 1e-6);
    EXPECT_NEAR(closed_form("ppt_twoway", {4}).value, 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(closed_form("en_swap", {2}).value, std::log2(1.5), 1e-15);
    EXPECT_NEAR(closed_form("en_fourier", {4}).value, std::log2(1.5), 1e-15);
    EXPECT_NEAR(closed_form("en_flower", {4}).value, std::log2(3.0), 1e-15);
    EXPECT_NEAR(closed_form("repeater_fourier", {9}).value, 2 * std::log2(4.0 / 3.0), 1e-15);
    EXPECT_NEAR(closed_form("alpha_chain", {4}).value, 1.628463 / 2, 1e-6);
    ClosedFormParams km;
    km.probs = {0.75, 0.25};
    EXPECT_NEAR(closed_form("key_marginal", km).value, 0.188722, 1e-6);
    ClosedFormParams sc;
    sc.key_dim = 2;
    sc.value = 0.5;
    EXPECT_NEAR(closed_form("single_copy", sc).value, 1.0, 1e-15);
    EXPECT_THROW(closed_form("nope", {}), Error);
    EXPECT_THROW(closed_form("en_swap", {1}), Error);
    for (const auto &name : closed_form_names()) {
        ClosedFormParams p;
        p.probs = {1.0};
        EXPECT_NO_THROW(closed_form(name, p)) << name;
    }
}

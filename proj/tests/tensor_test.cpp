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

#include "privstate/tensor.hpp"

#include <gtest/gtest.h>

#include <complex>

#include "privstate/error.hpp"
#include "privstate/qudit.hpp"
#include "privstate/random.hpp"

using namespace privstate;

namespace {

Part qpart(const std::string &label, std::size_t d, Party party = Party::kA) {
    return Part{label, d, party, Role::kShield};
}

Operator random_state(Rng &rng, std::vector<Part> parts) {
    auto layout = SystemLayout::make(std::move(parts));
    return Operator::density(layout, random_density(rng, layout.total_dim()));
}

// Reference partial trace over the last factor of a bipartite (da x db) matrix.
Matrix trace_second(const Matrix &m, int da, int db) {
    Matrix out = Matrix::Zero(da, da);
    for (int a = 0; a < da; ++a)
        for (int b = 0; b < da; ++b)
            for (int k = 0; k < db; ++k) out(a, b) += m(a * db + k, b * db + k);
    return out;
}

Matrix trace_first(const Matrix &m, int da, int db) {
    Matrix out = Matrix::Zero(db, db);
    for (int a = 0; a < db; ++a)
        for (int b = 0; b < db; ++b)
            for (int k = 0; k < da; ++k) out(a, b) += m(k * db + a, k * db + b);
    return out;
}

}  // namespace

TEST(tensor, kron_shapes_and_trace) {
    Rng rng(1);
    auto a = random_state(rng, {qpart("A", 4)});
    auto b = random_state(rng, {qpart("B", 4)});
    auto ab = tensor(a, b);
    EXPECT_EQ(ab.dim(), 16u);
    EXPECT_NEAR(std::abs(ab.trace() - a.trace() * b.trace()), 0.0, 1e-12);
    auto i2 = identity_on(qpart("X", 2));
    auto i3 = identity_on(qpart("Y", 3));
    EXPECT_LT(max_abs_diff(tensor(i2, i3).matrix(), Matrix::Identity(6, 6)), 1e-15);
    EXPECT_THROW(tensor(a, a), Error);
}

TEST(tensor, bell_times_mixed_is_8x8_density) {
    auto phi = bell_state(2, {0, 0});
    auto tau = maximally_mixed(SystemLayout::make({qpart("S", 2)}));
    auto out = tensor(phi, tau);
    EXPECT_EQ(out.dim(), 8u);
    EXPECT_TRUE(is_density(out.matrix()));
}

TEST(tensor, partial_trace_matches_reference) {
    Rng rng(2);
    auto rho = random_state(rng, {qpart("A", 2), qpart("B", 3)});
    EXPECT_LT(max_abs_diff(partial_trace(rho, {"B"}).matrix(), trace_second(rho.matrix(), 2, 3)), 1e-14);
    EXPECT_LT(max_abs_diff(partial_trace(rho, {"A"}).matrix(), trace_first(rho.matrix(), 2, 3)), 1e-14);
    auto all = partial_trace(rho, {"A", "B"});
    EXPECT_EQ(all.dim(), 1u);
    EXPECT_NEAR(all.matrix()(0, 0).real(), 1.0, 1e-12);
    EXPECT_THROW(partial_trace(rho, {"C"}), Error);
}

TEST(tensor, partial_trace_middle_keeps_order) {
    Rng rng(3);
    auto a = random_state(rng, {qpart("A", 2)});
    auto b = random_state(rng, {qpart("B", 3)});
    auto c = random_state(rng, {qpart("C", 2)});
    auto abc = tensor({a, b, c});
    auto ac = partial_trace(abc, {"B"});
    EXPECT_EQ(ac.layout().labels(), (std::vector<std::string>{"A", "C"}));
    EXPECT_LT(max_abs_diff(ac.matrix(), kron(a.matrix(), c.matrix())), 1e-14);
}

TEST(tensor, bell_marginal_is_mixed) {
    auto phi = bell_state(3, {1, 2});
    EXPECT_LT(max_abs_diff(partial_trace(phi, {"KB"}).matrix(), Matrix::Identity(3, 3) / 3.0), 1e-14);
}

TEST(tensor, partial_transpose_bell) {
    auto phi = bell_state(2, {0, 0});
    auto pt = partial_transpose(phi, {"KB"});
    RealVector ev = hermitian_eigenvalues(pt.matrix());
    EXPECT_NEAR(ev(0), -0.5, 1e-12);
    for (int k = 1; k < 4; ++k) EXPECT_NEAR(ev(k), 0.5, 1e-12);
    EXPECT_NEAR(trace_norm(pt.matrix()), 2.0, 1e-12);
    EXPECT_LT(max_abs_diff(partial_transpose(pt, {"KB"}).matrix(), phi.matrix()), 1e-15);
    // Transposing both halves is the full transpose.
    EXPECT_LT(max_abs_diff(partial_transpose(phi, {"KA", "KB"}).matrix(), phi.matrix().transpose()), 1e-15);
}

TEST(tensor, partial_transpose_reference_and_commutation) {
    Rng rng(4);
    auto rho = random_state(rng, {qpart("A", 2), qpart("B", 3), qpart("C", 2)});
    auto pt = partial_transpose(rho, {"B"});
    // Entrywise definition <a b c|X|a' b' c'> = <a b' c|rho|a' b c'>.
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 2; ++c)
                for (int a2 = 0; a2 < 2; ++a2)
                    for (int b2 = 0; b2 < 3; ++b2)
                        for (int c2 = 0; c2 < 2; ++c2) {
                            auto idx = [](int x, int y, int z) { return (x * 3 + y) * 2 + z; };
                            EXPECT_EQ(pt.matrix()(idx(a, b, c), idx(a2, b2, c2)),
                                      rho.matrix()(idx(a, b2, c), idx(a2, b, c2)));
                        }
    auto lhs = partial_trace(partial_transpose(rho, {"B"}), {"C"});
    auto rhs = partial_transpose(partial_trace(rho, {"C"}), {"B"});
    EXPECT_LT(max_abs_diff(lhs.matrix(), rhs.matrix()), 1e-14);
}

TEST(tensor, permute_roundtrip) {
    Rng rng(5);
    auto a = random_state(rng, {qpart("A", 2)});
    auto b = random_state(rng, {qpart("B", 3)});
    auto ab = tensor(a, b);
    auto ba = permute(ab, {"B", "A"});
    EXPECT_LT(max_abs_diff(ba.matrix(), kron(b.matrix(), a.matrix())), 1e-15);
    EXPECT_LT(max_abs_diff(permute(ba, {"A", "B"}).matrix(), ab.matrix()), 1e-15);
    EXPECT_THROW(permute(ab, {"A"}), Error);
}

TEST(tensor, embed_and_conjugate) {
    Rng rng(6);
    auto rho = random_state(rng, {qpart("A", 2), qpart("B", 3)});
    auto layout_b = SystemLayout::make({qpart("B", 3)});
    auto u = Operator::unitary(layout_b, random_unitary(rng, 3));
    Matrix full = kron(Matrix::Identity(2, 2), u.matrix());
    EXPECT_LT(max_abs_diff(embed(u, rho.layout()), full), 1e-15);
    auto out = conjugate(rho, u);
    EXPECT_LT(max_abs_diff(out.matrix(), full * rho.matrix() * full.adjoint()), 1e-13);
    // Two-part unitary applied in swapped order.
    auto layout_ba = SystemLayout::make({qpart("B", 3), qpart("A", 2)});
    auto v = Operator::unitary(layout_ba, random_unitary(rng, 6));
    Matrix perm = permute(Operator(layout_ba, v.matrix()), {"A", "B"}).matrix();
    EXPECT_LT(max_abs_diff(embed(v, rho.layout()), perm), 1e-15);
}

TEST(tensor, tensor_power_labels) {
    auto phi = bell_state(2, {0, 0});
    auto p2 = tensor_power(phi, 2);
    EXPECT_EQ(p2.layout().labels(), (std::vector<std::string>{"KA", "KB", "KA_2", "KB_2"}));
    EXPECT_LT(max_abs_diff(p2.matrix(), kron(phi.matrix(), phi.matrix())), 1e-15);
}

TEST(tensor, conjugate_monomial_matches_dense) {
    // A phased permutation takes the sparse path; compare with the dense product.
    auto layout = SystemLayout::make({{"A", 3, Party::kA, Role::kShield}, {"B", 2, Party::kB, Role::kShield}});
    Rng rng(4);
    Matrix rho = random_density(rng, 6);
    Matrix p = Matrix::Zero(3, 3);
    p(1, 0) = Complex(0, 1);
    p(2, 1) = -1;
    p(0, 2) = std::polar(1.0, 0.3);
    Operator u(SystemLayout::make({{"A", 3, Party::kA, Role::kShield}}), p);
    Matrix dense = kron(p, Matrix::Identity(2, 2)) * rho * kron(p, Matrix::Identity(2, 2)).adjoint();
    EXPECT_LT(max_abs_diff(conjugate(Operator::density(layout, rho), u).matrix(), dense), 1e-15);
}

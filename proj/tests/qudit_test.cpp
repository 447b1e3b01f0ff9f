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

#include "privstate/qudit.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "privstate/error.hpp"
#include "privstate/tensor.hpp"

using namespace privstate;

namespace {

int md(int a, int d) { return ((a % d) + d) % d; }

Matrix weyl(int d, int i, int j) {
    return matrix_power(shift_matrix(d), md(i, d)) * matrix_power(clock_matrix(d), md(j, d));
}

}  // namespace

TEST(qudit, bell_state_examples) {
    double s = 1.0 / std::sqrt(2.0);
    Vector plus(4), minus(4);
    plus << s, 0, 0, s;
    minus << s, 0, 0, -s;
    EXPECT_LT(max_abs_diff(bell_state(2, {0, 0}).matrix(), plus * plus.adjoint()), 1e-15);
    EXPECT_LT(max_abs_diff(bell_state(2, {0, 1}).matrix(), minus * minus.adjoint()), 1e-15);
    // (|10> + |21> + |02>) / sqrt 3
    Vector v = Vector::Zero(9);
    double t = 1.0 / std::sqrt(3.0);
    v(1 * 3 + 0) = t;
    v(2 * 3 + 1) = t;
    v(0 * 3 + 2) = t;
    EXPECT_LT(max_abs_diff(bell_state(3, {1, 0}).matrix(), v * v.adjoint()), 1e-15);
    EXPECT_THROW(bell_state(1, {0, 0}), Error);
}

TEST(qudit, bell_orthonormality) {
    for (int d = 2; d <= 5; ++d) {
        for (int a = 0; a < d * d; ++a) {
            for (int b = 0; b < d * d; ++b) {
                Complex ov = (bell_state(d, {a / d, a % d}).matrix() * bell_state(d, {b / d, b % d}).matrix()).trace();
                EXPECT_NEAR(std::abs(ov - Complex(a == b ? 1.0 : 0.0)), 0.0, 1e-12);
            }
        }
    }
}

TEST(qudit, pauli_relations) {
    auto q2 = pauli_ops(2);
    Matrix x(2, 2), z(2, 2);
    x << 0, 1, 1, 0;
    z << 1, 0, 0, -1;
    EXPECT_LT(max_abs_diff(q2.x.matrix(), x), 1e-15);
    EXPECT_LT(max_abs_diff(q2.z.matrix(), z), 1e-15);
    for (int d = 2; d <= 6; ++d) {
        auto q = pauli_ops(d);
        EXPECT_TRUE(q.x.flags().unitary);
        Matrix zx = q.z.matrix() * q.x.matrix();
        Matrix xz = q.x.matrix() * q.z.matrix();
        EXPECT_LT(max_abs_diff(zx, root_of_unity(d, 1) * xz), 1e-12);
        EXPECT_LT(max_abs_diff(matrix_power(q.x.matrix(), d), Matrix::Identity(d, d)), 1e-12);
        EXPECT_LT(max_abs_diff(matrix_power(q.z.matrix(), d), Matrix::Identity(d, d)), 1e-12);
    }
}

TEST(qudit, cnot_qubit_permutation) {
    Matrix ref = Matrix::Zero(4, 4);
    ref(0, 0) = ref(1, 1) = ref(3, 2) = ref(2, 3) = 1.0;
    EXPECT_LT(max_abs_diff(cnot(2).matrix(), ref), 1e-15);
}

TEST(qudit, bnot_layout) {
    auto b = bnot(3);
    EXPECT_EQ(b.layout().labels(), (std::vector<std::string>{"C1", "C2", "T1", "T2"}));
    EXPECT_EQ(b.layout().part(0).party, Party::kA);
    EXPECT_EQ(b.layout().part(1).party, Party::kB);
    EXPECT_EQ(b.layout().part(2).party, Party::kA);
    EXPECT_EQ(b.layout().part(3).party, Party::kB);
    // Equal to the two CNOTs applied on their own wires.
    Matrix u = kron(cnot(3).matrix(), cnot(3).matrix());
    Operator two(SystemLayout::make({{"C1", 3, Party::kA, Role::kKey},
                                     {"T1", 3, Party::kA, Role::kKey},
                                     {"C2", 3, Party::kB, Role::kKey},
                                     {"T2", 3, Party::kB, Role::kKey}}),
                 u);
    EXPECT_LT(max_abs_diff(permute(two, {"C1", "C2", "T1", "T2"}).matrix(), b.matrix()), 1e-15);
}

TEST(qudit, bnot_rewrite_exhaustive) {
    for (int d = 2; d <= 4; ++d) {
        auto b = bnot(d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k)
                    for (int l = 0; l < d; ++l) {
                        Operator in = tensor(bell_state(d, {i, j}, "C1", "C2"), bell_state(d, {k, l}, "T1", "T2"));
                        Operator out = conjugate(in, b);
                        Operator ref = tensor(bell_state(d, {i, md(j - l, d)}, "C1", "C2"),
                                              bell_state(d, {md(k + i, d), l}, "T1", "T2"));
                        EXPECT_LT(trace_distance(out.matrix(), ref.matrix()), 1e-10)
                            << "d=" << d << " " << i << j << k << l;
                    }
    }
}

TEST(qudit, bnot_fixes_phi_phi) {
    for (int d = 2; d <= 5; ++d) {
        Operator in = tensor(bell_state(d, {0, 0}, "C1", "C2"), bell_state(d, {0, 0}, "T1", "T2"));
        EXPECT_LT(max_abs_diff(conjugate(in, bnot(d)).matrix(), in.matrix()), 1e-12);
    }
}

TEST(qudit, clifford_rule) {
    for (int d = 2; d <= 3; ++d) {
        Matrix c = cnot(d).matrix();
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k)
                    for (int l = 0; l < d; ++l) {
                        Matrix lhs = c * kron(weyl(d, i, j), weyl(d, k, l));
                        Matrix rhs = kron(weyl(d, i, j - l), weyl(d, i + k, l)) * c;
                        EXPECT_NEAR(std::abs((lhs.adjoint() * rhs).trace()), double(d * d), 1e-8);
                    }
    }
}

TEST(qudit, werner_extremes) {
    for (int d = 2; d <= 5; ++d) {
        auto w = sym_asym_states(d);
        EXPECT_NEAR(w.symmetric.trace().real(), 1.0, 1e-12);
        EXPECT_NEAR(w.antisymmetric.trace().real(), 1.0, 1e-12);
        EXPECT_NEAR(std::abs((w.symmetric.matrix() * w.antisymmetric.matrix()).trace()), 0.0, 1e-14);
    }
    // d = 2 antisymmetric state is the singlet.
    double s = 1.0 / std::sqrt(2.0);
    Vector singlet(4);
    singlet << 0, s, -s, 0;
    EXPECT_LT(max_abs_diff(sym_asym_states(2).antisymmetric.matrix(), singlet * singlet.adjoint()), 1e-15);
}

TEST(qudit, max_corr_projector) {
    Matrix ref = Matrix::Zero(4, 4);
    ref(0, 0) = ref(3, 3) = 1.0;
    EXPECT_LT(max_abs_diff(max_corr_projector(2).matrix(), ref), 1e-15);
    for (int d = 2; d <= 5; ++d) {
        Matrix sum = Matrix::Zero(d * d, d * d);
        for (int k = 0; k < d; ++k) sum += bell_state(d, {0, k}).matrix();
        Matrix p = max_corr_projector(d).matrix();
        EXPECT_LT(max_abs_diff(sum, p), 1e-12);
        Matrix phi = bell_state(d, {0, 0}).matrix();
        EXPECT_LT(max_abs_diff(p * phi, phi), 1e-15);
    }
}

TEST(qudit, fourier_and_hadamard) {
    for (int d : {2, 3, 4, 9}) {
        Matrix f = fourier_matrix(d);
        EXPECT_TRUE(is_unitary(f, 1e-12));
        EXPECT_TRUE(is_flat(f));
    }
    for (int d : {2, 4, 8, 16}) {
        Matrix h = hadamard_power(d);
        EXPECT_TRUE(is_unitary(h, 1e-12));
        EXPECT_TRUE(is_flat(h));
    }
    EXPECT_THROW(hadamard_power(6), Error);
    EXPECT_FALSE(is_flat(Matrix::Identity(2, 2)));
}

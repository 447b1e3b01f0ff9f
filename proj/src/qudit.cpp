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

#include <cmath>
#include <numbers>

#include "privstate/error.hpp"

namespace privstate {
namespace {

void require_dim(int d) {
    if (d < 2) throw Error(ErrorCode::kInvalidArgument, "qudit dimension must be >= 2, got " + std::to_string(d));
}

int mod(long long a, int d) {
    long long r = a % d;
    return static_cast<int>(r < 0 ? r + d : r);
}

Part part(const std::string &label, int d, Party party, Role role) {
    return Part{label, static_cast<std::size_t>(d), party, role};
}

}  // namespace

Complex root_of_unity(int d, long long k) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(mod(k, d)) / d;
    return {std::cos(angle), std::sin(angle)};
}

Matrix shift_matrix(int d) {
    require_dim(d);
    Matrix x = Matrix::Zero(d, d);
    for (int j = 0; j < d; ++j) x((j + 1) % d, j) = 1.0;
    return x;
}

Matrix clock_matrix(int d) {
    require_dim(d);
    Matrix z = Matrix::Zero(d, d);
    for (int j = 0; j < d; ++j) z(j, j) = root_of_unity(d, j);
    return z;
}

PauliPair pauli_ops(int d) {
    auto layout = SystemLayout::make({part("Q", d, Party::kA, Role::kKey)});
    return {Operator::unitary(layout, shift_matrix(d)), Operator::unitary(layout, clock_matrix(d))};
}

Vector bell_vector(int d, BellIndex idx) {
    require_dim(d);
    Vector v = Vector::Zero(static_cast<Eigen::Index>(d) * d);
    double amp = 1.0 / std::sqrt(static_cast<double>(d));
    // X^i Z^j |k> = w^{jk} |k+i>.
    for (int k = 0; k < d; ++k) v(mod(k + idx.i, d) * d + k) = amp * root_of_unity(d, static_cast<long long>(idx.j) * k);
    return v;
}

Operator bell_state(int d, BellIndex idx, const std::string &a, const std::string &b) {
    Vector v = bell_vector(d, idx);
    auto layout = SystemLayout::make({part(a, d, Party::kA, Role::kKey), part(b, d, Party::kB, Role::kKey)});
    return Operator(layout, v * v.adjoint(), {true, false, true});
}

Operator cnot(int d) {
    require_dim(d);
    Matrix u = Matrix::Zero(d * d, d * d);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) u(a * d + mod(a + b, d), a * d + b) = 1.0;
    }
    auto layout = SystemLayout::make({part("C", d, Party::kA, Role::kKey), part("T", d, Party::kA, Role::kKey)});
    return Operator::unitary(layout, u);
}

Operator bnot(int d) {
    require_dim(d);
    auto layout = SystemLayout::make({part("C1", d, Party::kA, Role::kKey), part("C2", d, Party::kB, Role::kKey),
                                      part("T1", d, Party::kA, Role::kKey), part("T2", d, Party::kB, Role::kKey)});
    std::size_t n = layout.total_dim();
    Matrix u = Matrix::Zero(n, n);
    for (int c1 = 0; c1 < d; ++c1) {
        for (int c2 = 0; c2 < d; ++c2) {
            for (int t1 = 0; t1 < d; ++t1) {
                for (int t2 = 0; t2 < d; ++t2) {
                    std::size_t in = ((c1 * d + c2) * d + t1) * d + t2;
                    std::size_t out = ((c1 * d + c2) * d + mod(t1 + c1, d)) * d + mod(t2 + c2, d);
                    u(out, in) = 1.0;
                }
            }
        }
    }
    return Operator::unitary(layout, u);
}

Operator swap_operator(int d) {
    require_dim(d);
    Matrix s = Matrix::Zero(d * d, d * d);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) s(b * d + a, a * d + b) = 1.0;
    }
    auto layout = SystemLayout::make({part("SA", d, Party::kA, Role::kShield), part("SB", d, Party::kB, Role::kShield)});
    return Operator::unitary(layout, s);
}

WernerPair sym_asym_states(int d) {
    Operator s = swap_operator(d);
    Matrix id = Matrix::Identity(d * d, d * d);
    double dd = d;
    Matrix rs = (id + s.matrix()) / (dd * (dd + 1));
    Matrix ra = (id - s.matrix()) / (dd * (dd - 1));
    return {Operator::density(s.layout(), rs), Operator::density(s.layout(), ra)};
}

Operator max_corr_projector(int d) {
    require_dim(d);
    Matrix p = Matrix::Zero(d * d, d * d);
    for (int k = 0; k < d; ++k) p(k * d + k, k * d + k) = 1.0;
    auto layout = SystemLayout::make({part("KA", d, Party::kA, Role::kKey), part("KB", d, Party::kB, Role::kKey)});
    return Operator(layout, p, {true, false, false});
}

Matrix fourier_matrix(int d) {
    require_dim(d);
    Matrix f(d, d);
    double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) f(j, k) = amp * root_of_unity(d, static_cast<long long>(j) * k);
    }
    return f;
}

bool is_power_of_two(int d) { return d >= 1 && (d & (d - 1)) == 0; }

Matrix hadamard_power(int d) {
    if (d < 2 || !is_power_of_two(d)) {
        throw Error(ErrorCode::kInvalidArgument, "Hadamard power needs d = 2^k, got " + std::to_string(d));
    }
    Matrix h(2, 2);
    double s = 1.0 / std::sqrt(2.0);
    h << s, s, s, -s;
    Matrix out = Matrix::Identity(1, 1);
    for (int k = 1; k < d; k *= 2) out = kron(out, h);
    return out;
}

bool is_flat(const Matrix &u, double tol) {
    if (u.rows() != u.cols() || u.rows() == 0) return false;
    double target = 1.0 / std::sqrt(static_cast<double>(u.rows()));
    return (u.cwiseAbs().array() - target).abs().maxCoeff() <= tol;
}

Operator identity_on(const Part &p) {
    auto layout = SystemLayout::make({p});
    return Operator(layout, Matrix::Identity(p.dim, p.dim), {true, true, p.dim == 1});
}

Operator maximally_mixed(const SystemLayout &layout) {
    std::size_t n = layout.total_dim();
    return Operator(layout, Matrix::Identity(n, n) / static_cast<double>(n), {true, n == 1, true});
}

Operator basis_projector(const Part &p, std::size_t k) {
    if (k >= p.dim) throw Error(ErrorCode::kInvalidArgument, "basis index out of range");
    Matrix m = Matrix::Zero(p.dim, p.dim);
    m(k, k) = 1.0;
    return Operator(SystemLayout::make({p}), m, {true, p.dim == 1, true});
}

}  // namespace privstate

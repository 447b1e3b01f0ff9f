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

#include "privstate/linalg.hpp"

#include <cmath>

#include "privstate/error.hpp"

namespace privstate {

EigenSystem hermitian_eig(const Matrix &a) {
    Matrix h = (a + a.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::kInvalidArgument, "eigendecomposition failed");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector hermitian_eigenvalues(const Matrix &a) {
    Matrix h = (a + a.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::kInvalidArgument, "eigendecomposition failed");
    }
    return solver.eigenvalues();
}

double min_eigenvalue(const Matrix &a) {
    if (a.size() == 0) return 0.0;
    return hermitian_eigenvalues(a).minCoeff();
}

Matrix hermitian_function(const Matrix &a, const std::function<double(double)> &f) {
    EigenSystem es = hermitian_eig(a);
    RealVector fv = es.values.unaryExpr(f);
    return es.vectors * fv.cast<Complex>().asDiagonal() * es.vectors.adjoint();
}

Matrix support_projector(const Matrix &a, double cutoff) {
    return hermitian_function(a, [cutoff](double x) { return std::abs(x) > cutoff ? 1.0 : 0.0; });
}

Matrix psd_sqrt(const Matrix &a) {
    return hermitian_function(a, [](double x) { return x > 0 ? std::sqrt(x) : 0.0; });
}

Matrix hermitian_pinv(const Matrix &a, double cutoff) {
    return hermitian_function(a, [cutoff](double x) { return std::abs(x) > cutoff ? 1.0 / x : 0.0; });
}

RealVector singular_values(const Matrix &a) {
    Eigen::BDCSVD<Matrix> svd(a);
    return svd.singularValues();
}

double trace_norm(const Matrix &a) {
    if (a.size() == 0) return 0.0;
    if (is_hermitian(a, 1e-13)) return hermitian_eigenvalues(a).cwiseAbs().sum();
    return singular_values(a).sum();
}

double trace_distance(const Matrix &a, const Matrix &b) { return 0.5 * trace_norm(a - b); }

double max_abs_diff(const Matrix &a, const Matrix &b) {
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

Matrix hermitize(const Matrix &a) { return (a + a.adjoint()) * 0.5; }

bool is_hermitian(const Matrix &a, double tol) {
    if (a.rows() != a.cols()) return false;
    return (a - a.adjoint()).norm() <= tol;
}

bool is_unitary(const Matrix &a, double tol) {
    if (a.rows() != a.cols()) return false;
    return (a.adjoint() * a - Matrix::Identity(a.rows(), a.cols())).norm() <= tol;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix kron_all(const std::vector<Matrix> &factors) {
    Matrix out = Matrix::Identity(1, 1);
    for (const auto &f : factors) out = kron(out, f);
    return out;
}

Matrix matrix_power(const Matrix &a, int n) {
    if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative matrix power");
    Matrix out = Matrix::Identity(a.rows(), a.cols());
    Matrix base = a;
    while (n > 0) {
        if (n & 1) out = out * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return out;
}

double phase_overlap(const Matrix &a, const Matrix &b) {
    double na = a.norm();
    double nb = b.norm();
    if (na == 0 || nb == 0) return (na == nb) ? 1.0 : 0.0;
    return std::abs((a.adjoint() * b).trace()) / (na * nb);
}

bool equal_up_to_phase(const Matrix &a, const Matrix &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return std::abs(a.norm() - b.norm()) <= tol * std::max(1.0, a.norm()) &&
           1.0 - phase_overlap(a, b) <= tol;
}

}  // namespace privstate

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

#ifndef PRIVSTATE_LINALG_HPP_
#define PRIVSTATE_LINALG_HPP_

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

namespace privstate {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Eigenvalues below this magnitude count as zero for rank and support.
inline constexpr double kEigenCutoff = 1e-12;

struct EigenSystem {
    RealVector values;  // ascending
    Matrix vectors;     // columns
};

/// Eigendecomposition of the Hermitian part (A + A^dag) / 2.
EigenSystem hermitian_eig(const Matrix &a);
RealVector hermitian_eigenvalues(const Matrix &a);
double min_eigenvalue(const Matrix &a);

/// f applied to the spectrum of a Hermitian matrix.
Matrix hermitian_function(const Matrix &a, const std::function<double(double)> &f);

/// Projector onto eigenvectors with eigenvalue magnitude above cutoff.
Matrix support_projector(const Matrix &a, double cutoff = kEigenCutoff);
Matrix psd_sqrt(const Matrix &a);
/// Moore-Penrose inverse of a Hermitian matrix.
Matrix hermitian_pinv(const Matrix &a, double cutoff = kEigenCutoff);

RealVector singular_values(const Matrix &a);
double trace_norm(const Matrix &a);
double trace_distance(const Matrix &a, const Matrix &b);
/// Largest entrywise modulus of a - b.
double max_abs_diff(const Matrix &a, const Matrix &b);

Matrix hermitize(const Matrix &a);
bool is_hermitian(const Matrix &a, double tol);
bool is_unitary(const Matrix &a, double tol);

Matrix kron(const Matrix &a, const Matrix &b);
Matrix kron_all(const std::vector<Matrix> &factors);
Matrix matrix_power(const Matrix &a, int n);

/// |tr(a^dag b)| / (||a||_F ||b||_F); 1 when a and b agree up to a global phase.
double phase_overlap(const Matrix &a, const Matrix &b);
bool equal_up_to_phase(const Matrix &a, const Matrix &b, double tol);

}  // namespace privstate

#endif  // PRIVSTATE_LINALG_HPP_

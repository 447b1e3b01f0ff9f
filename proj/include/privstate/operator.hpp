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

#ifndef PRIVSTATE_OPERATOR_HPP_
#define PRIVSTATE_OPERATOR_HPP_

#include <string>

#include "privstate/layout.hpp"
#include "privstate/linalg.hpp"

namespace privstate {

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;

struct OperatorFlags {
    bool hermitian = false;
    bool unitary = false;
    bool density = false;

    bool operator==(const OperatorFlags &) const = default;
};

/// Dense square matrix bound to a layout.
class Operator {
   public:
    Operator() : matrix_(Matrix::Identity(1, 1)) {}
    /// Checks only that the matrix size matches the layout.
    Operator(SystemLayout layout, Matrix matrix, OperatorFlags flags = {});

    /// Validates Hermiticity, unit trace and positivity. Throws kNotDensity.
    static Operator density(SystemLayout layout, Matrix matrix);
    /// Validates U^dag U = I. Throws kNotUnitary.
    static Operator unitary(SystemLayout layout, Matrix matrix);

    const SystemLayout &layout() const { return layout_; }
    const Matrix &matrix() const { return matrix_; }
    const OperatorFlags &flags() const { return flags_; }
    std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }

    /// Same matrix on a layout of equal total dimension.
    Operator with_layout(SystemLayout layout) const;
    /// Renames every part, in order.
    Operator with_labels(const std::vector<std::string> &labels) const;

    Complex trace() const { return matrix_.trace(); }
    Operator adjoint() const;

   private:
    SystemLayout layout_;
    Matrix matrix_;
    OperatorFlags flags_;
};

/// Human-readable reason if the matrix is not a density within the
/// library tolerances, empty otherwise.
std::string density_violation(const Matrix &m);
bool is_density(const Matrix &m);
/// Throws kNotDensity with the given context if the check fails.
void require_density(const Operator &op, const std::string &context);

}  // namespace privstate

#endif  // PRIVSTATE_OPERATOR_HPP_

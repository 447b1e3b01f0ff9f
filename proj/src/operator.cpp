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

#include "privstate/operator.hpp"

#include <cmath>
#include <sstream>

#include "privstate/error.hpp"

namespace privstate {

Operator::Operator(SystemLayout layout, Matrix matrix, OperatorFlags flags)
    : layout_(std::move(layout)), matrix_(std::move(matrix)), flags_(flags) {
    auto n = static_cast<Eigen::Index>(layout_.total_dim());
    if (matrix_.rows() != n || matrix_.cols() != n) {
        std::ostringstream os;
        os << "matrix is " << matrix_.rows() << "x" << matrix_.cols() << " but layout " << layout_.describe()
           << " has dimension " << n;
        throw Error(ErrorCode::kLayoutMismatch, os.str());
    }
}

std::string density_violation(const Matrix &m) {
    std::ostringstream os;
    if (m.rows() != m.cols()) return "not square";
    double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermitianTol) {
        os << "not Hermitian (deviation " << herm << ")";
        return os.str();
    }
    Complex tr = m.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTol) {
        os << "trace " << tr.real() << " != 1";
        return os.str();
    }
    double lo = min_eigenvalue(m);
    if (lo < -kPsdTol) {
        os << "negative eigenvalue " << lo;
        return os.str();
    }
    return {};
}

bool is_density(const Matrix &m) { return density_violation(m).empty(); }

Operator Operator::density(SystemLayout layout, Matrix matrix) {
    std::string why = density_violation(matrix);
    if (!why.empty()) throw Error(ErrorCode::kNotDensity, why);
    return Operator(std::move(layout), std::move(matrix), {true, false, true});
}

Operator Operator::unitary(SystemLayout layout, Matrix matrix) {
    if (!is_unitary(matrix, kUnitaryTol)) throw Error(ErrorCode::kNotUnitary, "U^dag U != I");
    bool herm = is_hermitian(matrix, kHermitianTol);
    return Operator(std::move(layout), std::move(matrix), {herm, true, false});
}

Operator Operator::with_layout(SystemLayout layout) const { return Operator(std::move(layout), matrix_, flags_); }

Operator Operator::with_labels(const std::vector<std::string> &labels) const {
    if (labels.size() != layout_.size()) {
        throw Error(ErrorCode::kLayoutMismatch, "relabel needs one label per part");
    }
    std::vector<Part> parts = layout_.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) parts[i].label = labels[i];
    return with_layout(SystemLayout::make(std::move(parts), std::max(layout_.total_dim(), default_dim_budget())));
}

Operator Operator::adjoint() const {
    OperatorFlags f = flags_;
    return Operator(layout_, matrix_.adjoint(), f);
}

void require_density(const Operator &op, const std::string &context) {
    std::string why = density_violation(op.matrix());
    if (!why.empty()) throw Error(ErrorCode::kNotDensity, context + ": " + why);
}

}  // namespace privstate

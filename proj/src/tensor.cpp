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

#include <algorithm>
#include <numeric>

#include "privstate/error.hpp"

namespace privstate {
namespace {

OperatorFlags product_flags(const OperatorFlags &a, const OperatorFlags &b) {
    return {a.hermitian && b.hermitian, a.unitary && b.unitary, a.density && b.density};
}

// For every composite index, the part of it contributed by the selected parts.
std::vector<std::size_t> selected_offsets(const std::vector<std::size_t> &dims, const std::vector<bool> &selected) {
    std::size_t total = 1;
    for (auto d : dims) total *= d;
    auto st = strides(dims);
    std::vector<std::size_t> out(total, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        std::size_t acc = 0;
        for (std::size_t p = 0; p < dims.size(); ++p) {
            std::size_t digit = rest / st[p];
            rest %= st[p];
            if (selected[p]) acc += digit * st[p];
        }
        out[idx] = acc;
    }
    return out;
}

// Composite index in the old ordering for each index of the layout whose
// parts are old parts listed in `order`.
std::vector<std::size_t> permutation_map(const std::vector<std::size_t> &dims, const std::vector<std::size_t> &order) {
    auto old_st = strides(dims);
    std::vector<std::size_t> new_dims;
    for (auto i : order) new_dims.push_back(dims[i]);
    auto new_st = strides(new_dims);
    std::size_t total = 1;
    for (auto d : dims) total *= d;
    std::vector<std::size_t> out(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        std::size_t old = 0;
        for (std::size_t p = 0; p < order.size(); ++p) {
            std::size_t digit = rest / new_st[p];
            rest %= new_st[p];
            old += digit * old_st[order[p]];
        }
        out[idx] = old;
    }
    return out;
}

std::vector<bool> mask_of(const SystemLayout &layout, const LabelList &labels) {
    std::vector<bool> mask(layout.size(), false);
    for (auto i : layout.indices_of(labels)) mask[i] = true;
    return mask;
}

}  // namespace

std::vector<std::size_t> strides(const std::vector<std::size_t> &dims) {
    std::vector<std::size_t> st(dims.size(), 1);
    for (std::size_t i = dims.size(); i-- > 1;) st[i - 1] = st[i] * dims[i];
    return st;
}

std::vector<std::size_t> index_components(const SystemLayout &layout, const LabelList &labels) {
    return selected_offsets(layout.dims(), mask_of(layout, labels));
}

Operator tensor(const Operator &a, const Operator &b) {
    SystemLayout layout = a.layout().concat(b.layout());
    return Operator(std::move(layout), kron(a.matrix(), b.matrix()), product_flags(a.flags(), b.flags()));
}

Operator tensor(const std::vector<Operator> &factors) {
    if (factors.empty()) return Operator();
    Operator out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) out = tensor(out, factors[i]);
    return out;
}

Operator partial_trace(const Operator &op, const LabelList &labels) {
    const SystemLayout &layout = op.layout();
    auto traced = mask_of(layout, labels);
    std::vector<std::size_t> keep_idx, trace_idx;
    for (std::size_t i = 0; i < layout.size(); ++i) (traced[i] ? trace_idx : keep_idx).push_back(i);
    std::vector<std::size_t> order = keep_idx;
    order.insert(order.end(), trace_idx.begin(), trace_idx.end());
    auto map = permutation_map(layout.dims(), order);
    std::size_t dk = 1, dt = 1;
    for (auto i : keep_idx) dk *= layout.part(i).dim;
    for (auto i : trace_idx) dt *= layout.part(i).dim;
    const Matrix &m = op.matrix();
    Matrix out = Matrix::Zero(dk, dk);
    for (std::size_t c = 0; c < dk; ++c) {
        for (std::size_t r = 0; r < dk; ++r) {
            Complex acc = 0;
            for (std::size_t t = 0; t < dt; ++t) acc += m(map[r * dt + t], map[c * dt + t]);
            out(r, c) = acc;
        }
    }
    OperatorFlags f = op.flags();
    f.unitary = false;
    return Operator(layout.select(keep_idx), std::move(out), f);
}

Operator reduce_to(const Operator &op, const LabelList &keep) {
    auto mask = mask_of(op.layout(), keep);
    LabelList drop;
    for (std::size_t i = 0; i < mask.size(); ++i) {
        if (!mask[i]) drop.push_back(op.layout().part(i).label);
    }
    return partial_trace(op, drop);
}

Operator partial_transpose(const Operator &op, const LabelList &labels) {
    const SystemLayout &layout = op.layout();
    auto sel = selected_offsets(layout.dims(), mask_of(layout, labels));
    const Matrix &m = op.matrix();
    std::size_t n = op.dim();
    Matrix out(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) {
            std::size_t r2 = r - sel[r] + sel[c];
            std::size_t c2 = c - sel[c] + sel[r];
            out(r2, c2) = m(r, c);
        }
    }
    OperatorFlags f;
    f.hermitian = op.flags().hermitian;
    return Operator(layout, std::move(out), f);
}

Operator permute(const Operator &op, const LabelList &order) {
    const SystemLayout &layout = op.layout();
    if (order.size() != layout.size()) throw Error(ErrorCode::kBadLabels, "permutation must name every part");
    auto idx = layout.indices_of(order);
    auto map = permutation_map(layout.dims(), idx);
    const Matrix &m = op.matrix();
    std::size_t n = op.dim();
    Matrix out(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) out(r, c) = m(map[r], map[c]);
    }
    return Operator(layout.select(idx), std::move(out), op.flags());
}

Matrix embed(const Operator &u, const SystemLayout &layout) {
    LabelList ulabels = u.layout().labels();
    auto uidx = layout.indices_of(ulabels);
    for (std::size_t k = 0; k < uidx.size(); ++k) {
        if (layout.part(uidx[k]).dim != u.layout().part(k).dim) {
            throw Error(ErrorCode::kLayoutMismatch, "dimension of " + ulabels[k] + " differs");
        }
    }
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (std::find(uidx.begin(), uidx.end(), i) == uidx.end()) rest.push_back(i);
    }
    std::size_t drest = 1;
    for (auto i : rest) drest *= layout.part(i).dim;
    // Composite ordering (u parts, rest parts) mapped back to the layout.
    std::vector<std::size_t> order = uidx;
    order.insert(order.end(), rest.begin(), rest.end());
    auto map = permutation_map(layout.dims(), order);
    const Matrix &um = u.matrix();
    std::size_t du = u.dim();
    std::size_t n = layout.total_dim();
    Matrix out = Matrix::Zero(n, n);
    for (std::size_t a = 0; a < du; ++a) {
        for (std::size_t b = 0; b < du; ++b) {
            Complex v = um(a, b);
            if (v == Complex(0, 0)) continue;
            for (std::size_t t = 0; t < drest; ++t) out(map[a * drest + t], map[b * drest + t]) = v;
        }
    }
    return out;
}

namespace {

// For a matrix with exactly one nonzero per column: row[c] and value[c].
bool monomial_columns(const Matrix &m, std::vector<Eigen::Index> &row, std::vector<Complex> &value) {
    row.assign(m.cols(), -1);
    value.assign(m.cols(), Complex(0, 0));
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (m(r, c) == Complex(0, 0)) continue;
            if (row[c] >= 0) return false;
            row[c] = r;
            value[c] = m(r, c);
        }
        if (row[c] < 0) return false;
    }
    return true;
}

}  // namespace

Operator conjugate(const Operator &rho, const Operator &u) {
    Matrix full = embed(u, rho.layout());
    std::vector<Eigen::Index> row;
    std::vector<Complex> value;
    Matrix out;
    if (monomial_columns(full, row, value)) {
        // Permutation with phases: (U rho U^dag)(row[a], row[b]) = v_a rho(a, b) conj(v_b).
        const Matrix &m = rho.matrix();
        out = Matrix::Zero(m.rows(), m.cols());
        for (Eigen::Index b = 0; b < m.cols(); ++b) {
            for (Eigen::Index a = 0; a < m.rows(); ++a) out(row[a], row[b]) += value[a] * m(a, b) * std::conj(value[b]);
        }
    } else {
        out = full * rho.matrix() * full.adjoint();
    }
    OperatorFlags f = rho.flags();
    if (f.hermitian) out = hermitize(out);
    return Operator(rho.layout(), std::move(out), f);
}

Operator conjugate_on(const Operator &rho, const Operator &u, const LabelList &targets) {
    return conjugate(rho, u.with_labels(targets));
}

Operator tensor_power(const Operator &op, int n) {
    if (n < 1) throw Error(ErrorCode::kInvalidArgument, "tensor power needs n >= 1");
    Operator out = op;
    for (int k = 2; k <= n; ++k) {
        std::string suffix = "_" + std::to_string(k);
        std::vector<Part> parts = op.layout().parts();
        for (auto &p : parts) p.label += suffix;
        Operator copy = op.with_layout(SystemLayout::make(std::move(parts), op.layout().total_dim()));
        out = tensor(out, copy);
    }
    return out;
}

}  // namespace privstate

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

#ifndef PRIVSTATE_TENSOR_HPP_
#define PRIVSTATE_TENSOR_HPP_

#include <string>
#include <vector>

#include "privstate/operator.hpp"

namespace privstate {

using LabelList = std::vector<std::string>;

/// Kronecker product; the layout is a followed by b. Throws kLabelClash.
Operator tensor(const Operator &a, const Operator &b);
Operator tensor(const std::vector<Operator> &factors);

/// Traces out the named parts; the remaining parts keep their order.
Operator partial_trace(const Operator &op, const LabelList &labels);
/// Keeps only the named parts, in layout order.
Operator reduce_to(const Operator &op, const LabelList &keep);

/// Transpose on the named parts only.
Operator partial_transpose(const Operator &op, const LabelList &labels);

/// Reorders the parts to the given label order (must be a permutation).
Operator permute(const Operator &op, const LabelList &order);

/// u acting on the parts of `layout` named by u's labels, identity elsewhere.
Matrix embed(const Operator &u, const SystemLayout &layout);
/// u rho u^dag with u embedded as above.
Operator conjugate(const Operator &rho, const Operator &u);
/// u rho u^dag where u's parts are renamed to `targets` first.
Operator conjugate_on(const Operator &rho, const Operator &u, const LabelList &targets);
/// rho ⊗ ... ⊗ rho with the k-th copy's labels suffixed "_k" (k >= 2).
Operator tensor_power(const Operator &op, int n);

/// Index bookkeeping for a composite basis with the leftmost part most
/// significant.
std::vector<std::size_t> strides(const std::vector<std::size_t> &dims);
/// For every composite index of the layout, the contribution of the named
/// parts' digits (other digits zeroed).
std::vector<std::size_t> index_components(const SystemLayout &layout, const LabelList &labels);

}  // namespace privstate

#endif  // PRIVSTATE_TENSOR_HPP_

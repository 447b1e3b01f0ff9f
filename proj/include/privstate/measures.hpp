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

#ifndef PRIVSTATE_MEASURES_HPP_
#define PRIVSTATE_MEASURES_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "privstate/maps.hpp"

namespace privstate {

/// Leaked mass of rho outside supp(sigma) above which D(rho||sigma) = +inf.
inline constexpr double kLeakTol = 1e-9;

/// A quantity in bits. Relative entropies may be +infinity (finite=false).
/// truncated marks a relative entropy where a leaked mass below kLeakTol
/// was discarded.
struct BitsValue {
    double value = 0;
    bool finite = true;
    bool truncated = false;

    static BitsValue infinite();
};

/// -sum lambda log2 lambda over eigenvalues above 1e-12.
BitsValue entropy(const Operator &rho);
double entropy_of(const Matrix &rho);
double entropy_of_probabilities(const std::vector<double> &p);

/// tr rho (log2 rho - log2 sigma). Both must be densities on the same layout.
BitsValue relative_entropy(const Operator &rho, const Operator &sigma);
/// Same for positive semidefinite matrices of any trace; the rho mass
/// outside supp(sigma) is compared against kLeakTol relative to tr rho.
BitsValue relative_entropy_psd(const Matrix &rho, const Matrix &sigma);
/// Classical Kullback-Leibler divergence in bits.
BitsValue kl_divergence(const std::vector<double> &p, const std::vector<double> &q);

/// H(X) + H(Y) - H(XY); x and y must partition the layout.
BitsValue mutual_information(const Operator &rho, const LabelList &x, const LabelList &y);
/// H(Y) - H(XY); `from` and `to` must partition the layout.
BitsValue coherent_information(const Operator &rho, const LabelList &from, const LabelList &to);
/// H(Bob) - H(all).
BitsValue hashing_lower_bound(const Operator &rho, const LabelList &bob);
/// log2 ||rho^Gamma||_1 with the transpose on `cut`.
BitsValue log_negativity(const Operator &rho, const LabelList &cut);

struct PptResult {
    bool ppt = false;
    double min_eigenvalue = 0;
};
PptResult is_ppt(const Operator &rho, const LabelList &cut, double tol = 1e-10);

/// Parts of party B, the default cut for the two-party quantities.
LabelList bob_labels(const SystemLayout &layout);

/// partial: relative entropy of the cq embeddings of the partial
/// measurements (computed block by block). Otherwise the KL divergence of
/// the outcome distributions.
BitsValue measured_relative_entropy(const Operator &rho, const Operator &sigma, const Povm &povm,
                                    const LabelList &labels, bool partial);
/// sum_k D(p_k rho_k || q_k sigma_k), the block decomposition of the cq
/// relative entropy.
BitsValue cq_relative_entropy(const CqState &rho, const CqState &sigma);

struct ClosedFormParams {
    int d = 2;
    int m = 1;
    std::vector<double> probs;  // key_marginal
    double key_dim = 2;         // single_copy
    double value = 0;           // single_copy
};

/// Named reference values, in bits:
///   en_swap, en_fourier, en_flower        log negativity of the families
///   repeater_swap, repeater_fourier       twice the above
///   ppt_invariant_bound                   2 (1 + log2 e) / (1 + sqrt d)
///   alpha_chain                           (1 + log2 e) / (1 + sqrt d)
///   ppt_twoway                            1 / (sqrt d + 1)
///   er_oneway_ebit                        log2(2^m + 1) - 1
///   key_marginal                          m - H(probs)
///   single_copy                           key_dim * value
/// Throws kUnknownName or kInvalidArgument.
BitsValue closed_form(std::string_view name, const ClosedFormParams &params);
std::vector<std::string> closed_form_names();

}  // namespace privstate

#endif  // PRIVSTATE_MEASURES_HPP_

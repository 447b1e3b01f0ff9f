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

#include "privstate/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "privstate/error.hpp"

namespace privstate {
namespace {

double xlog2x(double x) { return x > kEigenCutoff ? x * std::log2(x) : 0.0; }

void require_partition(const SystemLayout &layout, const LabelList &x, const LabelList &y) {
    std::set<std::string> seen;
    for (const auto &l : x) seen.insert(l);
    for (const auto &l : y) {
        if (!seen.insert(l).second) throw Error(ErrorCode::kBadLabels, "label '" + l + "' appears on both sides");
    }
    layout.indices_of(x);
    layout.indices_of(y);
    if (seen.size() != layout.size()) throw Error(ErrorCode::kBadLabels, "labels do not cover " + layout.describe());
}

void require_state(const Operator &rho, const char *what) { require_density(rho, what); }

double entropy_of_labels(const Operator &rho, const LabelList &keep) { return entropy_of(reduce_to(rho, keep).matrix()); }

}  // namespace

BitsValue BitsValue::infinite() { return {std::numeric_limits<double>::infinity(), false, false}; }

double entropy_of(const Matrix &rho) {
    if (rho.size() == 0) return 0.0;
    RealVector ev = hermitian_eigenvalues(rho);
    double h = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) h -= xlog2x(ev(i));
    return h;
}

double entropy_of_probabilities(const std::vector<double> &p) {
    double h = 0;
    for (double x : p) h -= xlog2x(x);
    return h;
}

BitsValue entropy(const Operator &rho) {
    require_state(rho, "entropy");
    return {entropy_of(rho.matrix())};
}

BitsValue relative_entropy_psd(const Matrix &rho, const Matrix &sigma) {
    if (rho.rows() != sigma.rows()) throw Error(ErrorCode::kLayoutMismatch, "relative entropy of mismatched sizes");
    EigenSystem es = hermitian_eig(sigma);
    Matrix rot = es.vectors.adjoint() * hermitize(rho) * es.vectors;
    double mass = rot.trace().real();
    double leaked = 0;
    std::vector<Eigen::Index> support;
    for (Eigen::Index j = 0; j < es.values.size(); ++j) {
        if (es.values(j) > kEigenCutoff) {
            support.push_back(j);
        } else {
            leaked += std::max(0.0, rot(j, j).real());
        }
    }
    if (leaked > kLeakTol) return BitsValue::infinite();
    BitsValue out;
    out.truncated = leaked > kEigenCutoff;
    auto n = static_cast<Eigen::Index>(support.size());
    Matrix restricted(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = 0; b < n; ++b) restricted(a, b) = rot(support[a], support[b]);
    }
    double kept = restricted.trace().real();
    if (kept <= 0) return out;
    if (out.truncated) restricted *= mass / kept;
    double cross = 0;
    for (Eigen::Index a = 0; a < n; ++a) cross += restricted(a, a).real() * std::log2(es.values(support[a]));
    out.value = -entropy_of(restricted) - cross;
    return out;
}

BitsValue relative_entropy(const Operator &rho, const Operator &sigma) {
    if (rho.layout().dims() != sigma.layout().dims()) {
        throw Error(ErrorCode::kLayoutMismatch, "relative entropy needs states on the same layout");
    }
    require_state(rho, "relative entropy (rho)");
    require_state(sigma, "relative entropy (sigma)");
    return relative_entropy_psd(rho.matrix(), sigma.matrix());
}

BitsValue kl_divergence(const std::vector<double> &p, const std::vector<double> &q) {
    if (p.size() != q.size()) throw Error(ErrorCode::kInvalidArgument, "distributions differ in length");
    BitsValue out;
    double leaked = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] <= kEigenCutoff) continue;
        if (q[k] <= kEigenCutoff) {
            leaked += p[k];
            continue;
        }
        out.value += p[k] * std::log2(p[k] / q[k]);
    }
    if (leaked > kLeakTol) return BitsValue::infinite();
    out.truncated = leaked > 0;
    return out;
}

BitsValue mutual_information(const Operator &rho, const LabelList &x, const LabelList &y) {
    require_partition(rho.layout(), x, y);
    require_state(rho, "mutual information");
    return {entropy_of_labels(rho, x) + entropy_of_labels(rho, y) - entropy_of(rho.matrix())};
}

BitsValue coherent_information(const Operator &rho, const LabelList &from, const LabelList &to) {
    require_partition(rho.layout(), from, to);
    require_state(rho, "coherent information");
    return {entropy_of_labels(rho, to) - entropy_of(rho.matrix())};
}

BitsValue hashing_lower_bound(const Operator &rho, const LabelList &bob) {
    if (bob.empty()) throw Error(ErrorCode::kBadLabels, "no Bob labels");
    rho.layout().indices_of(bob);
    require_state(rho, "hashing bound");
    return {entropy_of_labels(rho, bob) - entropy_of(rho.matrix())};
}

BitsValue log_negativity(const Operator &rho, const LabelList &cut) {
    if (cut.empty()) throw Error(ErrorCode::kBadLabels, "empty cut");
    require_state(rho, "log negativity");
    Operator pt = partial_transpose(rho, cut);
    return {std::log2(hermitian_eigenvalues(pt.matrix()).cwiseAbs().sum())};
}

PptResult is_ppt(const Operator &rho, const LabelList &cut, double tol) {
    if (cut.empty()) throw Error(ErrorCode::kBadLabels, "empty cut");
    require_state(rho, "PPT test");
    double lo = min_eigenvalue(partial_transpose(rho, cut).matrix());
    return {lo >= -tol, lo};
}

LabelList bob_labels(const SystemLayout &layout) { return layout.labels_with_party(Party::kB); }

BitsValue cq_relative_entropy(const CqState &rho, const CqState &sigma) {
    if (rho.outcomes.size() != sigma.outcomes.size() || rho.rest.dims() != sigma.rest.dims()) {
        throw Error(ErrorCode::kLayoutMismatch, "cq states differ in shape");
    }
    BitsValue out;
    for (std::size_t k = 0; k < rho.outcomes.size(); ++k) {
        const auto &r = rho.outcomes[k];
        const auto &s = sigma.outcomes[k];
        if (!r.conditional) continue;
        if (!s.conditional) {
            if (r.probability > kLeakTol) return BitsValue::infinite();
            out.truncated = true;
            continue;
        }
        BitsValue part = relative_entropy_psd(r.probability * r.conditional->matrix(),
                                              s.probability * s.conditional->matrix());
        if (!part.finite) return part;
        out.value += part.value;
        out.truncated = out.truncated || part.truncated;
    }
    return out;
}

BitsValue measured_relative_entropy(const Operator &rho, const Operator &sigma, const Povm &povm,
                                    const LabelList &labels, bool partial) {
    if (rho.layout().dims() != sigma.layout().dims() || rho.layout().labels() != sigma.layout().labels()) {
        throw Error(ErrorCode::kLayoutMismatch, "measured relative entropy needs states on the same layout");
    }
    if (!partial) return kl_divergence(outcome_distribution(rho, povm, labels), outcome_distribution(sigma, povm, labels));
    return cq_relative_entropy(apply_povm_partial(rho, povm, labels), apply_povm_partial(sigma, povm, labels));
}

std::vector<std::string> closed_form_names() {
    return {"alpha_chain",      "en_flower",   "en_fourier",          "en_swap",        "er_oneway_ebit",
            "key_marginal",     "ppt_invariant_bound", "ppt_twoway", "repeater_fourier", "repeater_swap",
            "single_copy"};
}

BitsValue closed_form(std::string_view name, const ClosedFormParams &p) {
    auto need_d = [&] {
        if (p.d < 2) throw Error(ErrorCode::kInvalidArgument, std::string(name) + " needs d >= 2");
        return static_cast<double>(p.d);
    };
    const double log2e = std::log2(std::exp(1.0));
    if (name == "en_swap") return {std::log2(1 + 1 / need_d())};
    if (name == "en_fourier") return {std::log2(1 + 1 / std::sqrt(need_d()))};
    if (name == "en_flower") return {std::log2(1 + std::sqrt(need_d()))};
    if (name == "repeater_swap") return {2 * std::log2(1 + 1 / need_d())};
    if (name == "repeater_fourier") return {2 * std::log2(1 + 1 / std::sqrt(need_d()))};
    if (name == "ppt_invariant_bound") return {2 * (1 + log2e) / (1 + std::sqrt(need_d()))};
    if (name == "alpha_chain") return {(1 + log2e) / (1 + std::sqrt(need_d()))};
    if (name == "ppt_twoway") return {1 / (std::sqrt(need_d()) + 1)};
    if (name == "er_oneway_ebit") {
        if (p.m < 1 || p.m > 62) throw Error(ErrorCode::kInvalidArgument, "er_oneway_ebit needs 1 <= m <= 62");
        return {std::log2(std::ldexp(1.0, p.m) + 1) - 1};
    }
    if (name == "key_marginal") {
        if (p.m < 1) throw Error(ErrorCode::kInvalidArgument, "key_marginal needs m >= 1");
        double total = 0;
        for (double x : p.probs) {
            if (x < 0) throw Error(ErrorCode::kInvalidArgument, "negative probability");
            total += x;
        }
        if (p.probs.empty() || std::abs(total - 1) > 1e-12) {
            throw Error(ErrorCode::kInvalidArgument, "key_marginal needs a probability vector");
        }
        return {p.m - entropy_of_probabilities(p.probs)};
    }
    if (name == "single_copy") {
        if (p.key_dim < 1) throw Error(ErrorCode::kInvalidArgument, "single_copy needs key_dim >= 1");
        return {p.key_dim * p.value};
    }
    throw Error(ErrorCode::kUnknownName, "unknown closed form '" + std::string(name) + "'");
}

}  // namespace privstate

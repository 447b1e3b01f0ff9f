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

#include "privstate/maps.hpp"

#include <algorithm>
#include <cmath>

#include "privstate/error.hpp"
#include "privstate/qudit.hpp"

namespace privstate {
namespace {

constexpr double kKeyCorrelationTol = 1e-10;
constexpr double kPovmTol = 1e-10;

// Rows (composite of `labels`) x columns (everything else, layout order).
struct Split {
    Operator ordered;
    std::size_t measured_dim;
    std::size_t rest_dim;
    SystemLayout rest;
};

Split split_for(const Operator &rho, const LabelList &labels) {
    if (labels.empty()) throw Error(ErrorCode::kBadLabels, "no labels to measure");
    auto idx = rho.layout().indices_of(labels);
    LabelList order = labels;
    std::vector<std::size_t> rest_idx;
    for (std::size_t i = 0; i < rho.layout().size(); ++i) {
        if (std::find(idx.begin(), idx.end(), i) == idx.end()) {
            order.push_back(rho.layout().part(i).label);
            rest_idx.push_back(i);
        }
    }
    Operator ordered = permute(rho, order);
    std::size_t dm = rho.layout().dim_of(labels);
    return {ordered, dm, rho.dim() / dm, rho.layout().select(rest_idx)};
}

// tr_M[(E ⊗ 1) rho] for rho ordered as (measured, rest).
Matrix measured_block(const Matrix &rho, const Matrix &e, std::size_t dm, std::size_t dr) {
    Matrix out = Matrix::Zero(dr, dr);
    for (std::size_t a = 0; a < dm; ++a) {
        for (std::size_t b = 0; b < dm; ++b) {
            Complex w = e(b, a);
            if (std::abs(w) < 1e-300) continue;
            out += w * rho.block(a * dr, b * dr, dr, dr);
        }
    }
    return out;
}

Operator bnot_on(const std::string &c1, const std::string &c2, const std::string &t1, const std::string &t2,
                 std::size_t d) {
    return bnot(static_cast<int>(d)).with_labels({c1, c2, t1, t2});
}

void require_key_part(const SystemLayout &layout, const std::string &label) {
    auto i = layout.find(label);
    if (!i || layout.part(*i).role != Role::kKey) {
        throw Error(ErrorCode::kBadLabels, "'" + label + "' is not a key part of " + layout.describe());
    }
}

}  // namespace

Povm Povm::from_basis(const Matrix &unitary) {
    Povm p;
    for (Eigen::Index k = 0; k < unitary.cols(); ++k) p.elements.push_back(unitary.col(k) * unitary.col(k).adjoint());
    return p;
}

Povm Povm::computational(std::size_t dim) { return from_basis(Matrix::Identity(dim, dim)); }

Povm Povm::trivial(std::size_t dim) { return Povm{{Matrix::Identity(dim, dim)}}; }

void validate(const Povm &povm, std::size_t dim) {
    if (povm.elements.empty()) throw Error(ErrorCode::kInvalidPovm, "no outcomes");
    Matrix sum = Matrix::Zero(dim, dim);
    for (std::size_t k = 0; k < povm.elements.size(); ++k) {
        const Matrix &e = povm.elements[k];
        if (static_cast<std::size_t>(e.rows()) != dim || static_cast<std::size_t>(e.cols()) != dim) {
            throw Error(ErrorCode::kInvalidPovm, "element " + std::to_string(k) + " has wrong size");
        }
        if (!is_hermitian(e, kPovmTol) || min_eigenvalue(e) < -kPovmTol) {
            throw Error(ErrorCode::kInvalidPovm, "element " + std::to_string(k) + " is not positive");
        }
        sum += e;
    }
    double dev = (sum - Matrix::Identity(dim, dim)).norm();
    if (dev > kPovmTol) throw Error(ErrorCode::kInvalidPovm, "elements sum to identity only within " + std::to_string(dev));
}

Operator cq_embedding(const CqState &cq) {
    std::size_t n = cq.outcomes.size();
    std::size_t dr = cq.rest.total_dim();
    Matrix m = Matrix::Zero(n * dr, n * dr);
    for (std::size_t k = 0; k < n; ++k) {
        const auto &o = cq.outcomes[k];
        if (o.conditional) m.block(k * dr, k * dr, dr, dr) = o.probability * o.conditional->matrix();
    }
    Part reg{cq.register_label, n, Party::kReg, Role::kRegister};
    SystemLayout layout = SystemLayout::make({reg}).concat(cq.rest);
    return Operator(layout, std::move(m), {true, false, true});
}

std::string target_label(const std::string &label) { return label + "'"; }

std::pair<std::string, std::string> key_pair(const SystemLayout &layout) {
    std::string a, b;
    for (const auto &p : layout.parts()) {
        if (p.role != Role::kKey) continue;
        if (p.party == Party::kA) {
            if (!a.empty()) throw Error(ErrorCode::kNoKeyParts, "more than one A key part");
            a = p.label;
        } else if (p.party == Party::kB) {
            if (!b.empty()) throw Error(ErrorCode::kNoKeyParts, "more than one B key part");
            b = p.label;
        }
    }
    if (a.empty() || b.empty()) throw Error(ErrorCode::kNoKeyParts, "need one A and one B key part");
    if (layout.part(layout.index_of(a)).dim != layout.part(layout.index_of(b)).dim) {
        throw Error(ErrorCode::kLayoutMismatch, "key parts differ in dimension");
    }
    return {a, b};
}

double key_correlation_defect(const Operator &rho) {
    auto [a, b] = key_pair(rho.layout());
    int d = static_cast<int>(rho.layout().part(rho.layout().index_of(a)).dim);
    Operator proj = max_corr_projector(d).with_labels({a, b});
    Matrix p = embed(proj, rho.layout());
    return (p * rho.matrix() * p - rho.matrix()).norm();
}

Operator reversible_map(const Operator &rho) {
    auto [a, b] = key_pair(rho.layout());
    double defect = key_correlation_defect(rho);
    if (defect > kKeyCorrelationTol) {
        throw Error(ErrorCode::kNotKeyCorrelated, "state leaves the maximally correlated subspace by " +
                                                      std::to_string(defect));
    }
    std::size_t d = rho.layout().part(rho.layout().index_of(a)).dim;
    SystemLayout shielded = rho.layout().with_role(a, Role::kShield).with_role(b, Role::kShield);
    Operator hat_phi = key_attack(bell_state(static_cast<int>(d), {0, 0}, target_label(a), target_label(b)));
    Operator joint = tensor(rho.with_layout(shielded), hat_phi);
    Operator gate = bnot_on(a, b, target_label(a), target_label(b), d).adjoint();
    return conjugate(joint, gate);
}

Operator phase_flip_mixture(const Operator &rho) {
    auto [a, b] = key_pair(rho.layout());
    std::size_t d = rho.layout().part(rho.layout().index_of(a)).dim;
    SystemLayout shielded = rho.layout().with_role(a, Role::kShield).with_role(b, Role::kShield);
    Matrix sum = Matrix::Zero(rho.dim() * d * d, rho.dim() * d * d);
    SystemLayout out_layout;
    for (std::size_t k = 0; k < d; ++k) {
        Operator flipped = phase_flip(rho, static_cast<int>(k), b).with_layout(shielded);
        Operator term = tensor(flipped, bell_state(static_cast<int>(d), {0, static_cast<int>(k)}, target_label(a),
                                                   target_label(b)));
        sum += term.matrix();
        out_layout = term.layout();
    }
    return Operator(out_layout, sum / static_cast<double>(d));
}

Operator reversible_inverse(const Operator &e_out) {
    const SystemLayout &layout = e_out.layout();
    auto [ta, tb] = key_pair(layout);
    auto strip = [](const std::string &t) {
        if (t.size() < 2 || t.back() != '\'') throw Error(ErrorCode::kLayoutMismatch, "'" + t + "' is not a target");
        return t.substr(0, t.size() - 1);
    };
    std::string a = strip(ta), b = strip(tb);
    auto ia = layout.find(a), ib = layout.find(b);
    if (!ia || !ib) throw Error(ErrorCode::kLayoutMismatch, "controls for " + ta + ", " + tb + " are missing");
    std::size_t d = layout.part(*ia).dim;
    if (layout.part(*ib).dim != d || layout.part(layout.index_of(ta)).dim != d) {
        throw Error(ErrorCode::kLayoutMismatch, "control and target dimensions differ");
    }
    Operator undone = conjugate(e_out, bnot_on(a, b, ta, tb, d));
    Operator rho = partial_trace(undone, {ta, tb});
    SystemLayout keyed = rho.layout().with_role(a, Role::kKey).with_role(b, Role::kKey);
    return Operator(keyed, hermitize(rho.matrix()), rho.flags());
}

Operator phase_flip(const Operator &rho, int k, const std::string &side) {
    require_key_part(rho.layout(), side);
    int d = static_cast<int>(rho.layout().part(rho.layout().index_of(side)).dim);
    int kk = ((k % d) + d) % d;
    if (kk == 0) return rho;
    Matrix z = matrix_power(clock_matrix(d), kk);
    Part part = rho.layout().part(rho.layout().index_of(side));
    return conjugate(rho, Operator::unitary(SystemLayout::make({part}), z));
}

Operator untwist_trace(const Operator &gamma, const PrivateStateSpec &spec) {
    Operator t = twisting_operator(spec);
    const SystemLayout &l = gamma.layout();
    if (l.dims() != t.layout().dims()) {
        throw Error(ErrorCode::kLayoutMismatch, "state layout " + l.describe() + " does not match the twisting");
    }
    Operator untwisted = conjugate(gamma, t.adjoint().with_labels(l.labels()));
    return partial_trace(untwisted, l.labels_with_role(Role::kShield));
}

std::vector<double> outcome_distribution(const Operator &rho, const Povm &povm, const LabelList &labels) {
    Split s = split_for(rho, labels);
    validate(povm, s.measured_dim);
    // Reduced state on the measured parts.
    Matrix reduced = Matrix::Zero(s.measured_dim, s.measured_dim);
    const Matrix &m = s.ordered.matrix();
    for (std::size_t a = 0; a < s.measured_dim; ++a) {
        for (std::size_t b = 0; b < s.measured_dim; ++b) reduced(a, b) = m.block(a * s.rest_dim, b * s.rest_dim, s.rest_dim, s.rest_dim).trace();
    }
    std::vector<double> out;
    for (const auto &e : povm.elements) out.push_back(std::max(0.0, (e * reduced).trace().real()));
    return out;
}

CqState apply_povm_partial(const Operator &rho, const Povm &povm, const LabelList &labels) {
    Split s = split_for(rho, labels);
    validate(povm, s.measured_dim);
    CqState cq;
    cq.rest = s.rest;
    for (const auto &e : povm.elements) {
        Matrix block = measured_block(s.ordered.matrix(), e, s.measured_dim, s.rest_dim);
        double p = block.trace().real();
        CqOutcome o;
        o.probability = std::max(0.0, p);
        if (p > kNullOutcome) o.conditional = Operator(s.rest, hermitize(block / p), {true, false, true});
        cq.outcomes.push_back(std::move(o));
    }
    return cq;
}

Operator distill_2m_local_unitary(const std::string &k1, const std::string &k2, const std::string &s) {
    auto layout = SystemLayout::make({{k1, 2, Party::kA, Role::kKey}, {k2, 2, Party::kA, Role::kKey},
                                      {s, 2, Party::kA, Role::kShield}});
    Operator c = cnot(2);
    Matrix c21 = embed(c.with_labels({k2, s}), layout);
    Matrix c11 = embed(c.with_labels({k1, s}), layout);
    Matrix h = embed(Operator(SystemLayout::make({{s, 2, Party::kA, Role::kShield}}), hadamard_power(2)), layout);
    return Operator::unitary(layout, c11 * h * c21);
}

std::vector<Operator> distill_2m_steps(const Operator &gamma) {
    const LabelList expected{"KA1", "KA2", "SA", "KB1", "KB2", "SB"};
    if (gamma.layout().labels() != expected || gamma.layout().dims() != std::vector<std::size_t>(6, 2)) {
        throw Error(ErrorCode::kLayoutMismatch, "expected the two_m_example layout, got " + gamma.layout().describe());
    }
    std::vector<Operator> steps;
    steps.push_back(conjugate(gamma, bnot_on("KA2", "KB2", "SA", "SB", 2)));
    auto shields = SystemLayout::make({{"SA", 2, Party::kA, Role::kShield}, {"SB", 2, Party::kB, Role::kShield}});
    Operator hh(shields, kron(hadamard_power(2), hadamard_power(2)));
    steps.push_back(conjugate(steps.back(), hh));
    steps.push_back(conjugate(steps.back(), bnot_on("KA1", "KB1", "SA", "SB", 2)));
    return steps;
}

Operator distill_2m_circuit(const Operator &gamma) { return distill_2m_steps(gamma).back(); }

}  // namespace privstate

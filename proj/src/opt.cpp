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

#include "privstate/opt.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <thread>

#include "privstate/error.hpp"
#include "privstate/qudit.hpp"
#include "privstate/random.hpp"

namespace privstate {
namespace {

struct RotationSlot {
    std::size_t upper;  // rows (upper, upper + 1)
    std::size_t column;
};

std::vector<RotationSlot> rotation_order(std::size_t dim) {
    std::vector<RotationSlot> out;
    for (std::size_t c = 0; c + 1 < dim; ++c) {
        for (std::size_t r = dim - 1; r > c; --r) out.push_back({r - 1, c});
    }
    return out;
}

void require_alice(const SystemLayout &layout, const LabelList &labels) {
    if (labels.empty()) throw Error(ErrorCode::kBadLabels, "no labels to measure");
    for (auto i : layout.indices_of(labels)) {
        if (layout.part(i).party != Party::kA) {
            throw Error(ErrorCode::kBadLabels, "'" + layout.part(i).label + "' is not held by A");
        }
    }
}

// rho reordered as (measured, rest) for repeated evaluation.
class PreparedPair {
   public:
    PreparedPair(const Operator &rho, const Operator &hat, const LabelList &labels) {
        LabelList order = labels;
        auto idx = rho.layout().indices_of(labels);
        for (std::size_t i = 0; i < rho.layout().size(); ++i) {
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) order.push_back(rho.layout().part(i).label);
        }
        rho_ = permute(rho, order).matrix();
        hat_ = permute(hat, order).matrix();
        dm_ = rho.layout().dim_of(labels);
        dr_ = rho.dim() / dm_;
    }

    std::size_t measured_dim() const { return dm_; }

    double value(const Matrix &u, std::size_t n_outcomes) const {
        std::vector<Matrix> a(n_outcomes, Matrix::Zero(dr_, dr_));
        std::vector<Matrix> b(n_outcomes, Matrix::Zero(dr_, dr_));
        for (std::size_t k = 0; k < dm_; ++k) {
            a[k % n_outcomes] += sandwich(rho_, u.col(k));
            b[k % n_outcomes] += sandwich(hat_, u.col(k));
        }
        double total = 0;
        for (std::size_t j = 0; j < n_outcomes; ++j) {
            if (a[j].trace().real() <= kNullOutcome) continue;
            BitsValue v = relative_entropy_psd(a[j], b[j]);
            if (!v.finite) return std::numeric_limits<double>::infinity();
            total += v.value;
        }
        return total;
    }

   private:
    // (v^dag ⊗ 1) m (v ⊗ 1)
    Matrix sandwich(const Matrix &m, const Vector &v) const {
        Matrix right = Matrix::Zero(dm_ * dr_, dr_);
        for (std::size_t b = 0; b < dm_; ++b) {
            if (v(b) == Complex(0, 0)) continue;
            right += v(b) * m.middleCols(b * dr_, dr_);
        }
        Matrix out = Matrix::Zero(dr_, dr_);
        for (std::size_t a = 0; a < dm_; ++a) {
            if (v(a) == Complex(0, 0)) continue;
            out += std::conj(v(a)) * right.middleRows(a * dr_, dr_);
        }
        return out;
    }

    Matrix rho_, hat_;
    std::size_t dm_ = 1, dr_ = 1;
};

struct Start {
    std::string kind;
    std::vector<double> x;
};

}  // namespace

std::size_t angle_count(std::size_t dim) { return dim * (dim - 1); }

Matrix unitary_from_angles(const std::vector<double> &angles, std::size_t dim) {
    if (angles.size() != angle_count(dim)) {
        throw Error(ErrorCode::kInvalidArgument, "expected " + std::to_string(angle_count(dim)) + " angles for dim " +
                                                     std::to_string(dim) + ", got " + std::to_string(angles.size()));
    }
    Matrix u = Matrix::Identity(dim, dim);
    auto order = rotation_order(dim);
    // U = R_1 R_2 ... R_N; build from the right so each step is a row rotation.
    for (std::size_t k = order.size(); k-- > 0;) {
        double t = angles[2 * k], p = angles[2 * k + 1];
        Complex e(std::cos(p), std::sin(p));
        double c = std::cos(t), s = std::sin(t);
        std::size_t r0 = order[k].upper, r1 = r0 + 1;
        for (std::size_t col = 0; col < dim; ++col) {
            Complex x0 = u(r0, col), x1 = u(r1, col);
            u(r0, col) = c * x0 - std::conj(e) * s * x1;
            u(r1, col) = e * s * x0 + c * x1;
        }
    }
    return u;
}

std::vector<double> angles_from_unitary(const Matrix &u) {
    std::size_t dim = static_cast<std::size_t>(u.rows());
    if (!is_unitary(u, 1e-8)) throw Error(ErrorCode::kNotUnitary, "cannot parametrize a non-unitary matrix");
    Matrix m = u;
    std::vector<double> angles;
    for (const auto &slot : rotation_order(dim)) {
        std::size_t r0 = slot.upper, r1 = r0 + 1;
        Complex a = m(r0, slot.column), b = m(r1, slot.column);
        double t = std::atan2(std::abs(b), std::abs(a));
        double p = std::abs(b) > 0 ? std::arg(b) - (std::abs(a) > 0 ? std::arg(a) : 0.0) : 0.0;
        angles.push_back(t);
        angles.push_back(p);
        // Apply the inverse rotation to zero m(r1, column).
        Complex e(std::cos(p), std::sin(p));
        double c = std::cos(t), s = std::sin(t);
        for (std::size_t col = 0; col < dim; ++col) {
            Complex x0 = m(r0, col), x1 = m(r1, col);
            m(r0, col) = c * x0 + std::conj(e) * s * x1;
            m(r1, col) = -e * s * x0 + c * x1;
        }
    }
    return angles;
}

Povm povm_from_params(const PovmParams &params) {
    std::size_t n = params.n_outcomes == 0 ? params.dim : params.n_outcomes;
    if (n > params.dim || params.dim == 0) throw Error(ErrorCode::kInvalidArgument, "outcome count exceeds dimension");
    Matrix u = unitary_from_angles(params.angles, params.dim);
    Povm povm;
    povm.elements.assign(n, Matrix::Zero(params.dim, params.dim));
    for (std::size_t k = 0; k < params.dim; ++k) povm.elements[k % n] += u.col(k) * u.col(k).adjoint();
    return povm;
}

LabelList default_alice_labels(const SystemLayout &layout) {
    LabelList out;
    for (const auto &p : layout.parts()) {
        if (p.party == Party::kA && (p.role == Role::kKey || p.role == Role::kShield)) out.push_back(p.label);
    }
    return out;
}

Matrix conjugate_basis(const SystemLayout &layout, const LabelList &labels) {
    std::vector<Matrix> factors;
    for (auto i : layout.indices_of(labels)) {
        std::size_t d = layout.part(i).dim;
        factors.push_back(d == 1 ? Matrix::Identity(1, 1) : fourier_matrix(static_cast<int>(d)));
    }
    return kron_all(factors);
}

BitsValue da_objective(const Operator &rho, const Operator &rho_hat, const Povm &povm, const LabelList &labels) {
    require_alice(rho.layout(), labels);
    return measured_relative_entropy(rho, rho_hat, povm, labels, true);
}

BitsValue da_belldiagonal(const std::vector<Operator> &sigmas, const Operator &sigma_avg, const Povm &povm,
                          const LabelList &labels) {
    if (sigmas.empty()) throw Error(ErrorCode::kMixtureMismatch, "no states");
    require_alice(sigma_avg.layout(), labels);
    Matrix mean = Matrix::Zero(sigma_avg.dim(), sigma_avg.dim());
    for (const auto &s : sigmas) {
        if (s.layout().dims() != sigma_avg.layout().dims()) throw Error(ErrorCode::kLayoutMismatch, "states differ in layout");
        mean += s.matrix();
    }
    mean /= static_cast<double>(sigmas.size());
    double dev = max_abs_diff(mean, sigma_avg.matrix());
    if (dev > 1e-10) throw Error(ErrorCode::kMixtureMismatch, "average differs from the mixture by " + std::to_string(dev));
    CqState avg = apply_povm_partial(sigma_avg, povm, labels);
    BitsValue out;
    for (const auto &s : sigmas) {
        BitsValue v = cq_relative_entropy(apply_povm_partial(s, povm, labels), avg);
        if (!v.finite) return v;
        out.value += v.value;
        out.truncated = out.truncated || v.truncated;
    }
    out.value /= static_cast<double>(sigmas.size());
    return out;
}

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double> &)> &f, std::vector<double> x0,
                             double step, double tolerance, int max_evals) {
    const std::size_t n = x0.size();
    NelderMeadResult res;
    if (n == 0) {
        res.x = x0;
        res.value = f(x0);
        res.evaluations = 1;
        return res;
    }
    std::vector<std::vector<double>> pts(n + 1, x0);
    std::vector<double> vals(n + 1);
    for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
    for (std::size_t i = 0; i <= n; ++i) vals[i] = f(pts[i]);
    int evals = static_cast<int>(n + 1);
    std::vector<std::size_t> idx(n + 1);

    auto blend = [&](const std::vector<double> &a, const std::vector<double> &b, double t) {
        std::vector<double> out(n);
        for (std::size_t k = 0; k < n; ++k) out[k] = a[k] + t * (b[k] - a[k]);
        return out;
    };

    while (true) {
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        std::size_t best = idx.front(), worst = idx.back(), second = idx[n - 1];
        if (std::abs(vals[worst] - vals[best]) <= tolerance) break;
        if (evals >= max_evals) {
            res.budget_exhausted = true;
            break;
        }
        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[idx[i]][k] / static_cast<double>(n);
        }
        auto reflected = blend(centroid, pts[worst], -1.0);
        double fr = f(reflected);
        ++evals;
        if (fr < vals[best]) {
            auto expanded = blend(centroid, pts[worst], -2.0);
            double fe = f(expanded);
            ++evals;
            if (fe < fr) {
                pts[worst] = std::move(expanded);
                vals[worst] = fe;
            } else {
                pts[worst] = std::move(reflected);
                vals[worst] = fr;
            }
            continue;
        }
        if (fr < vals[second]) {
            pts[worst] = std::move(reflected);
            vals[worst] = fr;
            continue;
        }
        bool outside = fr < vals[worst];
        auto contracted = outside ? blend(centroid, reflected, 0.5) : blend(centroid, pts[worst], 0.5);
        double fc = f(contracted);
        ++evals;
        if (fc < (outside ? fr : vals[worst])) {
            pts[worst] = std::move(contracted);
            vals[worst] = fc;
            continue;
        }
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) continue;
            pts[i] = blend(pts[best], pts[i], 0.5);
            vals[i] = f(pts[i]);
            ++evals;
        }
    }
    std::size_t best = static_cast<std::size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
    res.x = pts[best];
    res.value = vals[best];
    res.evaluations = evals;
    return res;
}

OptResult optimize_da(const Operator &rho, const Operator &rho_hat, const LabelList &labels, const OptConfig &cfg) {
    if (cfg.restarts < 1 || cfg.max_evals < 1 || cfg.tolerance <= 0 || cfg.initial_step <= 0) {
        throw Error(ErrorCode::kInvalidArgument, "optimizer settings must be positive");
    }
    if (rho.layout().labels() != rho_hat.layout().labels() || rho.layout().dims() != rho_hat.layout().dims()) {
        throw Error(ErrorCode::kLayoutMismatch, "states differ in layout");
    }
    require_alice(rho.layout(), labels);
    require_density(rho, "optimize_da (rho)");
    require_density(rho_hat, "optimize_da (rho_hat)");
    PreparedPair pair(rho, rho_hat, labels);
    const std::size_t dim = pair.measured_dim();
    const std::size_t n_out = cfg.n_outcomes == 0 ? dim : cfg.n_outcomes;
    if (n_out > dim) throw Error(ErrorCode::kInvalidArgument, "outcome count exceeds dimension");
    const std::size_t n_angles = angle_count(dim);

    std::vector<Start> starts;
    starts.push_back({"computational", std::vector<double>(n_angles, 0.0)});
    if (cfg.restarts >= 2) starts.push_back({"conjugate", angles_from_unitary(conjugate_basis(rho.layout(), labels))});
    if (cfg.candidate_seeds) {
        for (const auto &c : cfg.candidates) {
            if (c.size() != n_angles) {
                throw Error(ErrorCode::kInvalidArgument, "candidate has " + std::to_string(c.size()) + " angles, expected " +
                                                             std::to_string(n_angles));
            }
            starts.push_back({"candidate", c});
        }
    }
    std::size_t total = starts.size() + static_cast<std::size_t>(std::max(0, cfg.restarts - 2));
    for (std::size_t r = starts.size(); r < total; ++r) {
        Rng rng(derive_seed(cfg.seed, r));
        std::uniform_real_distribution<double> theta(0.0, std::numbers::pi / 2);
        std::uniform_real_distribution<double> phi(0.0, 2 * std::numbers::pi);
        std::vector<double> x(n_angles);
        for (std::size_t k = 0; k < n_angles; k += 2) {
            x[k] = theta(rng);
            x[k + 1] = phi(rng);
        }
        starts.push_back({"random", std::move(x)});
    }

    auto objective = [&](const std::vector<double> &x) { return -pair.value(unitary_from_angles(x, dim), n_out); };
    std::vector<NelderMeadResult> results(starts.size());
    std::vector<double> initial(starts.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t r = next++; r < starts.size(); r = next++) {
            initial[r] = -objective(starts[r].x);
            results[r] = nelder_mead(objective, starts[r].x, cfg.initial_step, cfg.tolerance, cfg.max_evals);
        }
    };
    unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, starts.size()));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }

    OptResult out;
    out.best_value = -std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < starts.size(); ++r) {
        double v = -results[r].value;
        out.restarts.push_back({starts[r].kind, initial[r], v, results[r].evaluations + 1, results[r].budget_exhausted});
        out.evaluations += results[r].evaluations + 1;
        if (v > out.best_value) {
            out.best_value = v;
            out.best_restart = r;
        }
    }
    out.best = {results[out.best_restart].x, dim, cfg.n_outcomes, labels};
    return out;
}

}  // namespace privstate

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

#include "privstate/cli/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <thread>

#include "privstate/error.hpp"
#include "privstate/maps.hpp"
#include "privstate/measures.hpp"
#include "privstate/opt.hpp"
#include "privstate/qudit.hpp"
#include "privstate/random.hpp"
#include "privstate/states.hpp"
#include "privstate/tensor.hpp"

namespace privstate::cli {
namespace {

using Job = std::function<std::vector<Check>()>;

// Runs jobs on a pool; each check inherits its job's wall time.
std::vector<Check> run_jobs(const std::vector<Job> &jobs) {
    std::vector<std::vector<Check>> out(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            auto t0 = std::chrono::steady_clock::now();
            out[i] = jobs[i]();
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
            for (auto &c : out[i]) c.runtime_ms = ms;
        }
    };
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, jobs.size()));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
        worker();
    }
    std::vector<Check> flat;
    for (auto &v : out) flat.insert(flat.end(), v.begin(), v.end());
    return flat;
}

Job single(std::function<Check()> f) {
    return [f = std::move(f)] { return std::vector<Check>{f()}; };
}

std::string pad(long long v, int width = 2) {
    std::string s = std::to_string(v);
    return std::string(width > static_cast<int>(s.size()) ? width - s.size() : 0, '0') + s;
}

std::string dtag(int d) { return "d" + pad(d); }

int mod(int a, int d) { return ((a % d) + d) % d; }

std::vector<int> dims_or(const RunConfig &cfg, std::vector<int> fallback) {
    return cfg.d_values.empty() ? fallback : cfg.d_values;
}

Operator build(Family f, int d) { return family_construct({f, d}).state; }

BellPrivateSpec swap_spec(int d) {
    auto w = sym_asym_states(d);
    double p = 0.5 * (1 + 1.0 / d);
    return {{p, 1 - p}, {w.symmetric.matrix(), w.antisymmetric.matrix()}, std::size_t(d), std::size_t(d)};
}

double h2(double p) { return entropy_of_probabilities({p, 1 - p}); }

// ---------------------------------------------------------------- bell-basis

void bell_basis_jobs(const RunConfig &cfg, std::vector<Job> &jobs) {
    for (int d : dims_or(cfg, {2, 3, 4})) {
        std::string base = "bell-basis/" + dtag(d) + "/";
        jobs.push_back([d, base] {
            std::vector<Vector> v;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) v.push_back(bell_vector(d, {i, j}));
            double ortho = 0;
            Matrix sum = Matrix::Zero(d * d, d * d);
            for (std::size_t a = 0; a < v.size(); ++a) {
                sum += v[a] * v[a].adjoint();
                for (std::size_t b = 0; b < v.size(); ++b) {
                    ortho = std::max(ortho, std::abs(v[a].dot(v[b]) - (a == b ? 1.0 : 0.0)));
                }
            }
            // (X^i Z^j ⊗ 1)|Phi> with |Phi> = d^{-1/2} sum_k |kk>.
            Vector phi = Vector::Zero(d * d);
            for (int k = 0; k < d; ++k) phi(k * d + k) = 1 / std::sqrt(double(d));
            Matrix id = Matrix::Identity(d, d);
            double weyl = 0;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    Matrix xz = matrix_power(shift_matrix(d), i) * matrix_power(clock_matrix(d), j);
                    Vector ref = kron(xz, id) * phi;
                    weyl = std::max(weyl, (ref - bell_vector(d, {i, j})).cwiseAbs().maxCoeff());
                }
            auto flipped = phase_flip(bell_state(d, {0, 0}), 1, "KA");
            Matrix hat = Matrix::Zero(d * d, d * d);
            for (int k = 0; k < d; ++k) hat(k * d + k, k * d + k) = 1.0 / d;
            return std::vector<Check>{
                near_check(base + "orthonormal", "Bell basis is orthonormal", ortho, 0, 1e-12),
                near_check(base + "complete", "Bell projectors sum to the identity",
                           max_abs_diff(sum, Matrix::Identity(d * d, d * d)), 0, 1e-12),
                near_check(base + "weyl-form", "phi_ij = (X^i Z^j ⊗ 1)|Phi>", weyl, 0, 1e-12),
                near_check(base + "phase-flip", "Z on the first qudit maps Phi to phi_01",
                           max_abs_diff(flipped.matrix(), bell_state(d, {0, 1}).matrix()), 0, 1e-12),
                near_check(base + "key-attack", "measuring the keys of Phi gives (1/d) sum |kk><kk|",
                           max_abs_diff(key_attack(bell_state(d, {0, 0})).matrix(), hat), 0, 1e-12),
            };
        });
    }
}

// ---------------------------------------------------------------- bnot

void bnot_jobs(const RunConfig &cfg, std::vector<Job> &jobs) {
    for (int d : dims_or(cfg, {3})) {
        for (int i = 0; i < d; ++i) {
            jobs.push_back([d, i] {
                auto b = bnot(d);
                std::vector<Check> out;
                for (int j = 0; j < d; ++j)
                    for (int k = 0; k < d; ++k)
                        for (int l = 0; l < d; ++l) {
                            Operator in = tensor(bell_state(d, {i, j}, "C1", "C2"), bell_state(d, {k, l}, "T1", "T2"));
                            Operator ref = tensor(bell_state(d, {i, mod(j - l, d)}, "C1", "C2"),
                                                  bell_state(d, {mod(k + i, d), l}, "T1", "T2"));
                            double dist = trace_distance(conjugate(in, b).matrix(), ref.matrix());
                            std::string id = "bnot/" + dtag(d) + "/i" + pad(i) + "-j" + pad(j) + "-k" + pad(k) +
                                             "-l" + pad(l);
                            out.push_back(
                                near_check(id, "BNOT maps phi_ij ⊗ phi_kl to phi_{i,j-l} ⊗ phi_{k+i,l}", dist, 0, 1e-10));
                        }
                return out;
            });
        }
    }
}

// ---------------------------------------------------------------- reversible

void reversible_jobs(const RunConfig &cfg, std::vector<Job> &jobs) {
    const char *anchor_id = "reversible map equals (1/d) sum_k Z_B^k rho Z_B^-k ⊗ phi_0k on key-correlated states";
    const char *anchor_rt = "reversible map is undone by BNOT and tracing the targets";
    std::uint64_t stream = 0;
    for (std::size_t s : {2u, 3u}) {
        for (int r = 0; r < 20; ++r) {
            std::uint64_t seed = derive_seed(cfg.seed, 1000 + stream++);
            std::string base = "reversible/shield" + std::to_string(s) + "x" + std::to_string(s) + "/r" + pad(r) + "/";
            jobs.push_back([=] {
                Rng rng(seed);
                auto rho = random_key_correlated(rng, 2, s, s);
                auto e = reversible_map(rho);
                return std::vector<Check>{
                    near_check(base + "identity", anchor_id, trace_norm(e.matrix() - phase_flip_mixture(rho).matrix()),
                               0, 1e-9),
                    near_check(base + "roundtrip", anchor_rt,
                               trace_norm(reversible_inverse(e).matrix() - rho.matrix()), 0, 1e-10),
                };
            });
        }
    }
    jobs.push_back(single([=] {
        auto phi = bell_state(2, {0, 0});
        return near_check("reversible/phi/roundtrip", anchor_rt,
                          trace_norm(reversible_inverse(reversible_map(phi)).matrix() - phi.matrix()), 0, 1e-10);
    }));
    for (int d : {2, 3}) {
        jobs.push_back([=] {
            auto g = build(Family::kSwap, d);
            auto e = reversible_map(g);
            std::string base = "reversible/swap-" + dtag(d) + "/";
            double overlap = std::abs((g.matrix() * phase_flip(g, 1, "KB").matrix()).trace());
            return std::vector<Check>{
                near_check(base + "roundtrip", anchor_rt, trace_norm(reversible_inverse(e).matrix() - g.matrix()), 0,
                           1e-10),
                near_check(base + "identity", anchor_id, trace_norm(e.matrix() - phase_flip_mixture(g).matrix()), 0,
                           1e-9),
                near_check(base + "flags-orthogonal", "phase-flipped copies of a private state are orthogonal", overlap,
                           0, 1e-12),
            };
        });
    }
}

// ---------------------------------------------------------------- twisting

void twisting_jobs(const RunConfig &cfg, std::vector<Job> &jobs) {
    for (int d : dims_or(cfg, {2, 3})) {
        jobs.push_back([d] {
            std::string base = "twisting/swap-" + dtag(d) + "/";
            auto spec = swap_spec(d);
            auto tw = bell_twisting(spec);
            auto g = private_state(tw);
            auto key = untwist_trace(g, tw);
            auto hat = key_attack(g);
            auto shields = SystemLayout::make(
                {{"SA", std::size_t(d), Party::kA, Role::kShield}, {"SB", std::size_t(d), Party::kB, Role::kShield}});
            Matrix t = twisting_operator(tw).matrix();
            Matrix untwisted =
                permute(tensor(key_attack(bell_state(2, {0, 0})), Operator(shields, tw.sigma)), {"KA", "SA", "KB", "SB"})
                    .matrix();
            Matrix hat_twisted = t * untwisted * t.adjoint();
            return std::vector<Check>{
                near_check(base + "unitary-is-swap", "the flag unitary of the swap family is the swap operator",
                           max_abs_diff(tw.twisting[1], swap_operator(d).matrix()), 0, 1e-12),
                near_check(base + "matches-family", "twisted construction equals the swap family",
                           max_abs_diff(g.matrix(), build(Family::kSwap, d).matrix()), 0, 1e-10),
                near_check(base + "untwist", "untwisting and tracing the shield leaves Phi",
                           max_abs_diff(key.matrix(), bell_state(2, {0, 0}).matrix()), 0, 1e-10),
                near_check(base + "hat-commutes", "key attack commutes with the twisting",
                           max_abs_diff(hat.matrix(), hat_twisted), 0, 1e-10),
            };
        });
    }
    std::uint64_t stream = 0;
    for (int m : {1, 2}) {
        for (int r = 0; r < 5; ++r) {
            std::uint64_t seed = derive_seed(cfg.seed, 2000 + stream++);
            jobs.push_back([=] {
                Rng rng(seed);
                auto spec = random_bell_spec(rng, m, 2, 2);
                auto tw = bell_twisting(spec);
                std::string base = "twisting/random-m" + std::to_string(m) + "/r" + pad(r) + "/";
                return std::vector<Check>{
                    near_check(base + "roundtrip", "Bell private states are twisted Phi ⊗ sigma",
                               max_abs_diff(private_state(tw).matrix(), bell_private_state(spec).matrix()), 0, 1e-10),
                    near_check(base + "untwist", "untwisting and tracing the shield leaves Phi",
                               max_abs_diff(untwist_trace(private_state(tw), tw).matrix(),
                                            bell_state(int(key_dim_for_bits(m)), {0, 0}).matrix()),
                               0, 1e-10),
                };
            });
        }
    }
}

// ---------------------------------------------------------------- blockform

void blockform_jobs(const RunConfig &cfg, std::vector<Job> &jobs) {
    const char *anchor = "block form |Y|(Y/|Y|)^{i-j} reproduces the Bell private state";
    jobs.push_back(single([] {
        Matrix y = Matrix::Identity(1, 1);
        return near_check("blockform/scalar", "a scalar block gives Phi",
                          max_abs_diff(block_form_state(y, 1, 1, 1).matrix(), bell_state(2, {0, 0}).matrix()), 0, 1e-12);
    }));
    jobs.push_back(single([] {
        Matrix y = Matrix::Zero(2, 2);
        y(0, 0) = 0.5;
        y(1, 1) = -0.5;
        Matrix s0 = Matrix::Zero(2, 2), s1 = Matrix::Zero(2, 2);
        s0(0, 0) = 1;
        s1(1, 1) = 1;
        auto ref = bell_private_state({{0.5, 0.5}, {s0, s1}, 2, 1});
        return near_check("blockform/hermitian", "Y = diag(1/2, -1/2) gives (phi_+ ⊗ |0><0| + phi_- ⊗ |1><1|)/2",
                          max_abs_diff(block_form_state(y, 1, 2, 1).matrix(), ref.matrix()), 0, 1e-12);
    }));
    for (int d : dims_or(cfg, {2, 3})) {
        jobs.push_back(single([=] {
            auto tw = bell_twisting(swap_spec(d));
            auto g = block_form_state(tw.sigma * tw.twisting[1], 1, d, d);
            return near_check("blockform/swap-" + dtag(d), anchor,
                              max_abs_diff(g.matrix(), build(Family::kSwap, d).matrix()), 0, 1e-10);
        }));
    }
    for (int r = 0; r < 5; ++r) {
        std::uint64_t seed = derive_seed(cfg.seed, 3000 + r);
        jobs.push_back(single([=] {
            Rng rng(seed);
            auto spec = random_bell_spec(rng, 1, 2, 2);
            auto tw = bell_twisting(spec);
            return near_check("blockform/random/r" + pad(r), anchor,
                              max_abs_diff(block_form_state(tw.sigma * tw.twisting[1], 1, 2, 2).matrix(),
                                           bell_private_state(spec).matrix()),
                              0, 1e-10);
        }));
    }
}

// ---------------------------------------------------------------- entropic-identities

void entropic_jobs(const RunConfig &cfg, std::vector<Job> &jobs) {
    for (int r = 0; r < 20; ++r) {
        std::uint64_t seed = derive_seed(cfg.seed, 4000 + r);
        jobs.push_back([=] {
            Rng rng(seed);
            auto spec = random_bell_spec(rng, 1, 2, 2);
            auto g = bell_private_state(spec);
            std::string base = "entropic-identities/bell-pbit/r" + pad(r) + "/";
            return std::vector<Check>{
                near_check(base + "d-hat", "D(gamma || gamma-hat) = m", relative_entropy(g, key_attack(g)).value, 1.0,
                           1e-9),
                near_check(base + "d-marginal", "D(gamma || gamma-key ⊗ gamma-shield) = H(p)",
                           relative_entropy(g, marginal_product(g)).value, entropy_of_probabilities(spec.probs), 1e-9),
            };
        });
    }
    jobs.push_back([] {
        auto g = build(Family::kSwap, 2);
        auto key = reduce_to(g, {"KA", "KB"});
        double closed = closed_form("key_marginal", {.probs = {0.75, 0.25}}).value;
        return std::vector<Check>{
            near_check("entropic-identities/swap-d02/key-hashing", "hashing on the swap key marginal is 1 - H(3/4, 1/4)",
                       hashing_lower_bound(key, {"KB"}).value, 1 - h2(0.75), 1e-6),
            near_check("entropic-identities/swap-d02/key-closed-form", "closed-form key marginal value", closed,
                       1 - h2(0.75), 1e-12),
        };
    });
    jobs.push_back(single([] {
        return near_check("entropic-identities/er-oneway-ebit", "one-way relative entropy constant log2(2^m + 1) - 1",
                          closed_form("er_oneway_ebit", {.m = 1}).value, std::log2(3.0) - 1, 1e-9);
    }));
    jobs.push_back(single([=] {
        Rng rng(derive_seed(cfg.seed, 4100));
        auto g = build(Family::kSwap, 2);
        auto hat = key_attack(g);
        auto povm = Povm::from_basis(random_unitary(rng, 4));
        double a = measured_relative_entropy(g, hat, povm, {"KA", "SA"}, true).value;
        double b = measured_relative_entropy(phase_flip(g, 1, "KB"), hat, povm, {"KA", "SA"}, true).value;
        return near_check("entropic-identities/phase-invariance",
                          "A-side measured divergence to the key-attacked state is invariant under Z_B flips", b, a, 1e-9);
    }));
    jobs.push_back(single([] {
        auto w = sym_asym_states(2);
        auto g = bell_private_state({{0.5, 0.5}, {w.symmetric.matrix(), w.antisymmetric.matrix()}, 2, 2});
        return near_check("entropic-identities/uniform-marginal-is-hat",
                          "for uniform p the marginal product equals the key-attacked state",
                          max_abs_diff(marginal_product(g).matrix(), key_attack(g).matrix()), 0, 1e-12);
    }));
}

// ---------------------------------------------------------------- families

void families_jobs(const RunConfig &cfg, std::vector<Job> &jobs) {
    std::map<Family, std::vector<int>> dims = {
        {Family::kSwap, {2, 3, 4, 5, 6, 7, 8}}, {Family::kFourier, {4, 9}},     {Family::kFlower, {2, 4, 8}},
        {Family::kPpt, {4, 9}},                 {Family::kPptInvariant, {4, 9}}, {Family::kTwoMExample, {2}},
        {Family::kAlpha, {4, 9}},               {Family::kAlphaTilde, {4, 9}},
    };
    for (auto &[family, ds] : dims) {
        for (int d : cfg.d_values.empty() ? ds : cfg.d_values) {
            jobs.push_back([family, d] {
                std::string base = std::string("families/") + to_string(family) + "/" + dtag(d) + "/";
                FamilyState fs;
                try {
                    fs = family_construct({family, d});
                } catch (const Error &e) {
                    if (e.code() == ErrorCode::kUnsupportedFamily) return std::vector<Check>{};
                    throw;
                }
                std::vector<Check> out;
                out.push_back(flag_check(base + "density", "constructed families are densities", is_density(fs.state.matrix())));
                auto bob = bob_labels(fs.state.layout());
                auto en = fs.reference.find("log_negativity");
                if (en != fs.reference.end()) {
                    out.push_back(near_check(base + "log-negativity", "log negativity matches its closed form",
                                             log_negativity(fs.state, bob).value, en->second, 1e-8));
                }
                auto hash = fs.reference.find("hashing");
                if (hash != fs.reference.end()) {
                    out.push_back(near_check(base + "hashing", "hashing bound matches its closed form",
                                             hashing_lower_bound(fs.state, bob).value, hash->second, 1e-9));
                }
                if (family == Family::kSwap) {
                    Matrix ref = kron(key_attack(bell_state(2, {0, 0})).matrix(), Matrix::Identity(d * d, d * d) / (d * d));
                    auto hat = permute(key_attack(fs.state), {"KA", "KB", "SA", "SB"});
                    out.push_back(near_check(base + "key-attack", "key-attacked swap state is Phi-hat ⊗ I/d^2",
                                             max_abs_diff(hat.matrix(), ref), 0, 1e-12));
                }
                if (family == Family::kFlower) {
                    out.push_back(near_check(base + "d-hat", "D(gamma || gamma-hat) = 1 for the flower family",
                                             relative_entropy(fs.state, key_attack(fs.state)).value, 1.0, 1e-9));
                }
                if (family == Family::kTwoMExample) {
                    double defect = 0;
                    for (const auto &[a, b] : {std::pair{"KA1", "KB1"}, std::pair{"KA2", "KB2"}}) {
                        LabelList order{a, b};
                        for (const auto &l : fs.state.layout().labels())
                            if (l != a && l != b) order.push_back(l);
                        auto p = permute(fs.state, order);
                        std::size_t rest = p.dim() / 4;
                        Matrix proj = kron(max_corr_projector(2).matrix(), Matrix::Identity(rest, rest));
                        defect = std::max(defect, max_abs_diff(proj * p.matrix() * proj, p.matrix()));
                    }
                    out.push_back(near_check(base + "correlated-support",
                                             "both key pairs live in the maximally correlated subspace", defect, 0, 1e-12));
                }
                return out;
            });
        }
    }
}

// ---------------------------------------------------------------- distill-2m

void distill_jobs(const RunConfig &, std::vector<Job> &jobs) {
    jobs.push_back([] {
        auto g = build(Family::kTwoMExample, 2);
        auto steps = distill_2m_steps(g);
        auto shields = SystemLayout::make({{"SA", 2, Party::kA, Role::kShield}, {"SB", 2, Party::kB, Role::kShield}});
        auto ref = permute(
            tensor({bell_state(2, {0, 0}, "KA1", "KB1"), bell_state(2, {0, 0}, "KA2", "KB2"), maximally_mixed(shields)}),
            g.layout().labels());
        auto second = reduce_to(steps[0], {"KA2", "KB2"});
        return std::vector<Check>{
            near_check("distill-2m/output", "three bilateral unitaries turn the 2m example into Phi ⊗ Phi ⊗ tau",
                       trace_distance(steps.back().matrix(), ref.matrix()), 0, 1e-10),
            near_check("distill-2m/trace", "the circuit preserves the trace", steps.back().trace().real(), 1, 1e-12),
            near_check("distill-2m/intermediate", "after the first BNOT the second key pair is phi_00",
                       max_abs_diff(second.matrix(), bell_state(2, {0, 0}, "KA2", "KB2").matrix()), 0, 1e-12),
            near_check("distill-2m/d-hat", "D(gamma || gamma-hat) = 2m", relative_entropy(g, key_attack(g)).value, 2,
                       1e-9),
        };
    });
    jobs.push_back(single([] {
        std::vector<Operator> bells;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) bells.push_back(bell_state(2, {i, j}, "SA", "SB"));
        Operator avg(bells[0].layout(), Matrix::Identity(4, 4) / 4);
        double v = da_belldiagonal(bells, avg, Povm::computational(2), {"SA"}).value;
        return near_check("distill-2m/candidate-computational", "computational-basis candidate yields m", v, 1, 1e-8);
    }));
    jobs.push_back(single([] {
        auto g = build(Family::kTwoMExample, 2);
        Matrix ua = distill_2m_local_unitary("KA1", "KA2", "SA").matrix();
        auto povm = Povm::from_basis(ua.adjoint() * hadamard_power(8));
        double v = da_objective(g, key_attack(g), povm, {"KA1", "KA2", "SA"}).value;
        return near_check("distill-2m/candidate-conjugate", "post-rotation conjugate-basis candidate yields 2m", v, 2,
                          1e-8);
    }));
}

// ---------------------------------------------------------------- bounds

const char *kAnchorHash = "hashing lower bound does not exceed log negativity";
const char *kAnchorRepeater = "one-way repeater bound is twice the log negativity";
const char *kAnchorEn = "log negativity matches its closed form";

std::vector<Check> table_checks(const std::vector<BoundsRow> &rows) {
    std::vector<Check> out;
    for (const auto &r : rows) {
        std::string base = "bounds/" + r.family + "/" + dtag(r.d) + "/";
        out.push_back(upper_check(base + "hash-le-en", kAnchorHash, r.hash_lb, r.en_measured, 1e-10));
        out.push_back(near_check(base + "repeater-2en", kAnchorRepeater, r.repeater_ub, 2 * r.en_measured, 1e-10));
        out.push_back(near_check(base + "en-closed", kAnchorEn, r.en_measured, r.en_closed, 1e-8));
    }
    return out;
}

void bounds_jobs(const RunConfig &cfg, std::vector<Job> &jobs) {
    auto ds = dims_or(cfg, {2, 3, 4, 5, 6, 7, 8});
    jobs.push_back([ds] {
        auto rows = bounds_table(Family::kSwap, ds);
        auto out = table_checks(rows);
        for (const auto &r : rows) {
            if (r.d == 2) {
                out.push_back(near_check("bounds/swap/d02/repeater-value", "swap d=2 repeater bound 2 log2(3/2)",
                                         r.repeater_ub, 1.169925, 1e-6));
            }
        }
        return out;
    });
    for (int d : {4, 9}) {
        jobs.push_back(single([d] {
            double v = relative_entropy(build(Family::kAlpha, d), build(Family::kAlphaTilde, d)).value;
            return upper_check("bounds/alpha-chain/" + dtag(d),
                               "D(alpha || alpha-tilde) <= (1 + log2 e)/(1 + sqrt d)", v,
                               closed_form("alpha_chain", {.d = d}).value, 1e-8);
        }));
    }
    jobs.push_back(single([] {
        auto rows = bounds_table(Family::kFlower, {2});
        return near_check("bounds/flower/d02/hash-value", "hashing bound of the flower family is 1", rows[0].hash_lb, 1,
                          1e-9);
    }));
}

// ---------------------------------------------------------------- ppt

void ppt_jobs(const RunConfig &cfg, std::vector<Job> &jobs) {
    for (int d : dims_or(cfg, {4, 9})) {
        jobs.push_back([d] {
            auto xi = build(Family::kPpt, d);
            auto gamma = build(Family::kPptInvariant, d);
            auto bob = bob_labels(xi.layout());
            double min_eig = is_ppt(xi, bob).min_eigenvalue;
            double self = max_abs_diff(partial_transpose(gamma, bob).matrix(), gamma.matrix());
            std::string base = "ppt/" + dtag(d) + "/";
            return std::vector<Check>{
                upper_check(base + "xi-u-ppt", "the mixed Fourier/flower state is PPT", -min_eig, 0, 1e-10),
                near_check(base + "xi-gamma-self-transpose", "the PT-invariant state equals its partial transpose",
                           self, 0, 1e-12),
                flag_check(base + "xi-gamma-density", "the PT-invariant state is a density", is_density(gamma.matrix())),
            };
        });
    }
}

// ---------------------------------------------------------------- opt-sandwich

void opt_jobs(const RunConfig &cfg, std::vector<Job> &jobs) {
    for (int d : dims_or(cfg, {2, 3})) {
        jobs.push_back([d, cfg] {
            auto g = build(Family::kSwap, d);
            auto hat = key_attack(g);
            LabelList labels = default_alice_labels(g.layout());
            OptConfig oc;
            oc.restarts = cfg.restarts;
            oc.seed = cfg.seed;
            auto a = optimize_da(g, hat, labels, oc);
            auto b = optimize_da(g, hat, labels, oc);
            double comp = da_objective(g, hat, Povm::computational(labels.empty() ? 1 : g.layout().dim_of(labels)), labels).value;
            double again = da_objective(g, hat, povm_from_params(a.best), labels).value;
            double bound = std::log2(1 + 1.0 / d);
            std::string base = "opt-sandwich/swap-" + dtag(d) + "/";
            return std::vector<Check>{
                upper_check(base + "upper", "measured divergence lower estimate stays below log negativity",
                            a.best_value, bound, 1e-6),
                upper_check(base + "above-computational", "optimum is at least the computational candidate", comp,
                            a.best_value, 1e-10),
                flag_check(base + "deterministic", "fixed seed reproduces the optimum",
                           a.best_value == b.best_value && a.best.angles == b.best.angles),
                near_check(base + "feasible", "returned measurement reproduces the optimum", again, a.best_value, 1e-10),
            };
        });
    }
}

using SuiteFn = void (*)(const RunConfig &, std::vector<Job> &);

const std::vector<std::pair<std::string, SuiteFn>> &suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"bell-basis", bell_basis_jobs},   {"bnot", bnot_jobs},         {"reversible", reversible_jobs},
        {"twisting", twisting_jobs},       {"blockform", blockform_jobs}, {"entropic-identities", entropic_jobs},
        {"families", families_jobs},       {"distill-2m", distill_jobs}, {"bounds", bounds_jobs},
        {"ppt", ppt_jobs},                 {"opt-sandwich", opt_jobs},
    };
    return table;
}

void apply_tolerance(const RunConfig &cfg, VerificationReport &report) {
    if (!cfg.tol) return;
    for (auto &c : report.checks) {
        if (c.is_flag) continue;
        c.tolerance = *cfg.tol;
        c.evaluate();
    }
}

VerificationReport start_report(const RunConfig &cfg) {
    VerificationReport r;
    r.command = cfg.command;
    r.seed = cfg.seed;
    r.config_digest = config_digest(cfg);
    return r;
}

}  // namespace

std::string canonical_config(const RunConfig &cfg) {
    std::ostringstream os;
    os << "command=" << cfg.command << ";suite=" << cfg.suite << ";family=" << cfg.family << ";d=";
    for (std::size_t i = 0; i < cfg.d_values.size(); ++i) os << (i ? "," : "") << cfg.d_values[i];
    os << ";m=" << cfg.m << ";seed=" << cfg.seed << ";restarts=" << cfg.restarts << ";copies=" << cfg.copies
       << ";hat_only=" << cfg.hat_only << ";tol=";
    if (cfg.tol) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", *cfg.tol);
        os << buf;
    }
    return os.str();
}

std::string config_digest(const RunConfig &cfg) { return hex64(fnv1a64(canonical_config(cfg))); }

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto &[name, fn] : suite_table()) n.push_back(name);
        return n;
    }();
    return names;
}

std::vector<int> parse_d_range(const std::string &text) {
    auto to_int = [&](const std::string &s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != s.size() || v < 2) throw Error(ErrorCode::kUsage, "bad dimension '" + s + "' in '" + text + "'");
        return v;
    };
    std::vector<int> out;
    auto dots = text.find("..");
    if (dots != std::string::npos) {
        int lo = to_int(text.substr(0, dots)), hi = to_int(text.substr(dots + 2));
        if (hi < lo) throw Error(ErrorCode::kUsage, "empty range '" + text + "'");
        for (int d = lo; d <= hi; ++d) out.push_back(d);
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_int(item));
    if (out.empty()) throw Error(ErrorCode::kUsage, "empty dimension list");
    return out;
}

VerificationReport run_verify(const RunConfig &cfg) {
    std::vector<Job> jobs;
    bool found = false;
    for (const auto &[name, fn] : suite_table()) {
        if (cfg.suite == "all" || cfg.suite == name) {
            fn(cfg, jobs);
            found = true;
        }
    }
    if (!found) throw Error(ErrorCode::kUsage, "unknown suite '" + cfg.suite + "'");
    auto report = start_report(cfg);
    report.checks = run_jobs(jobs);
    apply_tolerance(cfg, report);
    report.sort();
    return report;
}

std::vector<BoundsRow> bounds_table(Family family, const std::vector<int> &d_values) {
    if (family != Family::kSwap && family != Family::kFourier && family != Family::kFlower && family != Family::kPpt) {
        throw Error(ErrorCode::kUsage, std::string("no bounds table for family '") + to_string(family) + "'");
    }
    std::vector<BoundsRow> rows(d_values.size());
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < d_values.size(); ++i) {
        jobs.push_back([&, i] {
            int d = d_values[i];
            auto fs = family_construct({family, d});
            auto bob = bob_labels(fs.state.layout());
            BoundsRow &r = rows[i];
            r.family = to_string(family);
            r.d = d;
            r.en_measured = log_negativity(fs.state, bob).value;
            auto it = fs.reference.find("log_negativity");
            r.en_closed = it == fs.reference.end() ? std::nan("") : it->second;
            r.hash_lb = hashing_lower_bound(fs.state, bob).value;
            r.repeater_ub = 2 * r.en_measured;
            double key_dim = static_cast<double>(fs.state.layout().dim_of(LabelList{"KB"}));
            r.sc_ub = closed_form("single_copy", {.key_dim = key_dim, .value = r.en_measured}).value;
            return std::vector<Check>{};
        });
    }
    run_jobs(jobs);
    return rows;
}

VerificationReport run_bounds(const RunConfig &cfg) {
    Family family = parse_family(cfg.family);
    auto report = start_report(cfg);
    report.table = bounds_table(family, dims_or(cfg, {2, 3, 4, 5, 6, 7, 8}));
    report.checks = table_checks(report.table);
    apply_tolerance(cfg, report);
    report.sort();
    return report;
}

VerificationReport run_optimize(const RunConfig &cfg) {
    Family family = parse_family(cfg.family);
    if (cfg.restarts < 1) throw Error(ErrorCode::kUsage, "--restarts must be at least 1");
    if (cfg.copies < 1 || cfg.copies > 2) throw Error(ErrorCode::kUsage, "--copies must be 1 or 2");
    auto report = start_report(cfg);
    Json runs = Json::array();
    for (int d : dims_or(cfg, {2})) {
        auto t0 = std::chrono::steady_clock::now();
        auto fs = family_construct({family, d, cfg.m});
        Operator rho = cfg.hat_only ? key_attack(fs.state) : fs.state;
        Operator hat = key_attack(fs.state);
        LabelList labels = default_alice_labels(rho.layout());
        OptConfig oc;
        oc.restarts = cfg.restarts;
        oc.seed = cfg.seed;
        auto single = optimize_da(rho, hat, labels, oc);
        OptResult res = single;
        if (cfg.copies == 2) {
            Matrix u = unitary_from_angles(single.best.angles, single.best.dim);
            oc.candidates = {angles_from_unitary(kron(u, u))};
            auto rho2 = tensor_power(rho, 2);
            res = optimize_da(rho2, tensor_power(hat, 2), default_alice_labels(rho2.layout()), oc);
        }
        double per_copy = res.best_value / cfg.copies;
        std::string base = std::string("optimize/") + to_string(family) + "/" + dtag(d) + "/n" + std::to_string(cfg.copies) + "/";
        std::vector<Check> checks;
        if (cfg.hat_only) {
            checks.push_back(near_check(base + "zero", "identical states give zero divergence", res.best_value, 0, 1e-8));
        } else {
            auto en = fs.reference.find("log_negativity");
            double bound = en != fs.reference.end() ? en->second : log_negativity(fs.state, bob_labels(fs.state.layout())).value;
            checks.push_back(upper_check(base + "sandwich", "measured divergence lower estimate stays below log negativity",
                                         per_copy, bound, 1e-6));
        }
        if (cfg.copies == 2) {
            checks.push_back(upper_check(base + "superadditive", "two-copy optimum per copy is at least the single-copy optimum",
                                         single.best_value, per_copy, 1e-6));
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        for (auto &c : checks) {
            c.runtime_ms = ms;
            report.checks.push_back(c);
        }
        Json restarts = Json::array();
        for (const auto &t : res.restarts) {
            restarts.push_back({{"start", t.start},
                                {"initial", t.initial_value},
                                {"final", t.final_value},
                                {"evaluations", t.evaluations},
                                {"budget_exhausted", t.budget_exhausted}});
        }
        runs.push_back({{"family", to_string(family)},
                        {"d", d},
                        {"copies", cfg.copies},
                        {"labels", labels},
                        {"best_value", res.best_value},
                        {"best_restart", res.best_restart},
                        {"evaluations", res.evaluations},
                        {"best_angles", res.best.angles},
                        {"restarts", restarts}});
    }
    report.details = {{"optimize", runs}};
    apply_tolerance(cfg, report);
    report.sort();
    return report;
}

Json construct_json(const StateFamilyParams &params) {
    auto fs = family_construct(params);
    const auto &layout = fs.state.layout();
    Json parts = Json::array();
    for (const auto &p : layout.parts()) {
        parts.push_back({{"label", p.label}, {"dim", p.dim}, {"party", to_string(p.party)}, {"role", to_string(p.role)}});
    }
    Json entries = Json::array();
    const Matrix &m = fs.state.matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
        entries.push_back(std::move(row));
    }
    Json reference = Json::object();
    for (const auto &[k, v] : fs.reference) reference[k] = v;
    return {{"family", to_string(params.family)},
            {"d", params.d},
            {"m", params.m},
            {"layout", parts},
            {"dim", layout.total_dim()},
            {"reference", reference},
            {"entries", entries}};
}

}  // namespace privstate::cli

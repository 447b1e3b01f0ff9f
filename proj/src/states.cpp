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

#include "privstate/states.hpp"

#include <cmath>
#include <sstream>

#include "privstate/error.hpp"
#include "privstate/qudit.hpp"
#include "privstate/tensor.hpp"

namespace privstate {
namespace {

void require_spec(bool ok, const std::string &what) {
    if (!ok) throw Error(ErrorCode::kInvalidSpec, what);
}

void require_shield_matrix(const Matrix &m, std::size_t sa, std::size_t sb, const std::string &name) {
    auto n = static_cast<Eigen::Index>(sa * sb);
    require_spec(m.rows() == n && m.cols() == n, name + " must be " + std::to_string(n) + "x" + std::to_string(n));
}

// Lays out (KA, KB, SA, SB)-ordered matrices onto the canonical ordering.
Matrix to_canonical(const Matrix &m, std::size_t key_dim, std::size_t sa, std::size_t sb) {
    auto layout = SystemLayout::make({{"KA", key_dim, Party::kA, Role::kKey},
                                      {"KB", key_dim, Party::kB, Role::kKey},
                                      {"SA", sa, Party::kA, Role::kShield},
                                      {"SB", sb, Party::kB, Role::kShield}});
    return permute(Operator(layout, m), {"KA", "SA", "KB", "SB"}).matrix();
}

}  // namespace

SystemLayout canonical_layout(std::size_t key_dim, std::size_t shield_a, std::size_t shield_b) {
    return SystemLayout::make({{"KA", key_dim, Party::kA, Role::kKey},
                               {"SA", shield_a, Party::kA, Role::kShield},
                               {"KB", key_dim, Party::kB, Role::kKey},
                               {"SB", shield_b, Party::kB, Role::kShield}});
}

std::size_t key_dim_for_bits(int m) {
    if (m < 1 || m > 6) throw Error(ErrorCode::kInvalidArgument, "key size m must be in [1, 6]");
    return std::size_t{1} << m;
}

int BellPrivateSpec::m() const {
    int m = 0;
    std::size_t n = probs.size();
    while ((std::size_t{1} << m) < n) ++m;
    return m;
}

void validate(const PrivateStateSpec &spec) {
    std::size_t key_dim = key_dim_for_bits(spec.m);
    require_spec(spec.shield_a >= 1 && spec.shield_b >= 1, "shield dimensions must be positive");
    require_spec(spec.twisting.size() == key_dim, "twisting needs 2^m unitaries");
    for (std::size_t i = 0; i < spec.twisting.size(); ++i) {
        require_shield_matrix(spec.twisting[i], spec.shield_a, spec.shield_b, "U_" + std::to_string(i));
        require_spec(is_unitary(spec.twisting[i], kUnitaryTol), "U_" + std::to_string(i) + " is not unitary");
    }
    require_shield_matrix(spec.sigma, spec.shield_a, spec.shield_b, "sigma");
    std::string why = density_violation(spec.sigma);
    require_spec(why.empty(), "sigma: " + why);
}

void validate(const BellPrivateSpec &spec) {
    std::size_t n = spec.probs.size();
    require_spec(n >= 2 && (n & (n - 1)) == 0, "number of probabilities must be 2^m with m >= 1");
    require_spec(spec.sigmas.size() == n, "one shield state per probability");
    double total = 0;
    for (double p : spec.probs) {
        require_spec(p >= 0, "negative probability");
        total += p;
    }
    require_spec(std::abs(total - 1.0) <= 1e-12, "probabilities must sum to 1");
    std::vector<Matrix> supports;
    for (std::size_t k = 0; k < n; ++k) {
        require_shield_matrix(spec.sigmas[k], spec.shield_a, spec.shield_b, "sigma_" + std::to_string(k));
        std::string why = density_violation(spec.sigmas[k]);
        require_spec(why.empty(), "sigma_" + std::to_string(k) + ": " + why);
        supports.push_back(support_projector(spec.sigmas[k]));
    }
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
            double overlap = (supports[j] * supports[k]).norm();
            if (overlap > kOrthogonalityTol) {
                std::ostringstream os;
                os << "supports of sigma_" << j << " and sigma_" << k << " overlap (" << overlap << ")";
                throw Error(ErrorCode::kNotOrthogonal, os.str());
            }
        }
    }
}

Operator correlated_blocks(const std::vector<std::vector<Matrix>> &blocks, std::size_t shield_a, std::size_t shield_b,
                           bool validate_density) {
    std::size_t key_dim = blocks.size();
    std::size_t s = shield_a * shield_b;
    Matrix m = Matrix::Zero(key_dim * key_dim * s, key_dim * key_dim * s);
    for (std::size_t i = 0; i < key_dim; ++i) {
        if (blocks[i].size() != key_dim) throw Error(ErrorCode::kInvalidSpec, "block table must be square");
        for (std::size_t j = 0; j < key_dim; ++j) {
            require_shield_matrix(blocks[i][j], shield_a, shield_b, "block");
            m.block((i * key_dim + i) * s, (j * key_dim + j) * s, s, s) = blocks[i][j];
        }
    }
    Matrix c = to_canonical(m, key_dim, shield_a, shield_b);
    auto layout = canonical_layout(key_dim, shield_a, shield_b);
    if (!validate_density) return Operator(layout, std::move(c));
    return Operator::density(layout, hermitize(c));
}

Operator key_correlated(const std::vector<std::vector<Matrix>> &p, int m, std::size_t shield_a, std::size_t shield_b) {
    std::size_t key_dim = key_dim_for_bits(m);
    if (p.size() != key_dim) throw Error(ErrorCode::kInvalidSpec, "P must be 2^m x 2^m");
    std::size_t s = shield_a * shield_b;
    int kd = static_cast<int>(key_dim);
    // |phi_mu> = D^{-1/2} sum_k w^{mu k} |kk>, so the |kk><ll| block is
    // D^{-1} sum_{mu nu} w^{mu k - nu l} P_{mu nu}.
    std::vector<std::vector<Matrix>> blocks(key_dim, std::vector<Matrix>(key_dim, Matrix::Zero(s, s)));
    for (std::size_t mu = 0; mu < key_dim; ++mu) {
        if (p[mu].size() != key_dim) throw Error(ErrorCode::kInvalidSpec, "P must be 2^m x 2^m");
        for (std::size_t nu = 0; nu < key_dim; ++nu) {
            require_shield_matrix(p[mu][nu], shield_a, shield_b, "P entry");
            for (std::size_t k = 0; k < key_dim; ++k) {
                for (std::size_t l = 0; l < key_dim; ++l) {
                    Complex w = root_of_unity(kd, static_cast<long long>(mu * k) - static_cast<long long>(nu * l));
                    blocks[k][l] += (w / static_cast<double>(key_dim)) * p[mu][nu];
                }
            }
        }
    }
    Operator out = correlated_blocks(blocks, shield_a, shield_b, false);
    std::string why = density_violation(out.matrix());
    if (!why.empty()) throw Error(ErrorCode::kNotDensity, "key correlated state: " + why);
    return Operator::density(out.layout(), hermitize(out.matrix()));
}

Operator twisting_operator(const PrivateStateSpec &spec) {
    validate(spec);
    std::size_t key_dim = key_dim_for_bits(spec.m);
    std::size_t s = spec.shield_a * spec.shield_b;
    Matrix t = Matrix::Zero(key_dim * key_dim * s, key_dim * key_dim * s);
    for (std::size_t i = 0; i < key_dim; ++i) {
        for (std::size_t j = 0; j < key_dim; ++j) {
            std::size_t off = (i * key_dim + j) * s;
            t.block(off, off, s, s) = spec.twisting[i];
        }
    }
    return Operator::unitary(canonical_layout(key_dim, spec.shield_a, spec.shield_b),
                             to_canonical(t, key_dim, spec.shield_a, spec.shield_b));
}

Operator private_state(const PrivateStateSpec &spec) {
    validate(spec);
    std::size_t key_dim = key_dim_for_bits(spec.m);
    std::vector<std::vector<Matrix>> blocks(key_dim, std::vector<Matrix>(key_dim));
    for (std::size_t i = 0; i < key_dim; ++i) {
        for (std::size_t j = 0; j < key_dim; ++j) {
            blocks[i][j] = spec.twisting[i] * spec.sigma * spec.twisting[j].adjoint() / static_cast<double>(key_dim);
        }
    }
    return correlated_blocks(blocks, spec.shield_a, spec.shield_b);
}

Operator bell_private_state(const BellPrivateSpec &spec) {
    validate(spec);
    std::size_t key_dim = spec.probs.size();
    std::size_t s = spec.shield_a * spec.shield_b;
    int kd = static_cast<int>(key_dim);
    std::vector<std::vector<Matrix>> blocks(key_dim, std::vector<Matrix>(key_dim, Matrix::Zero(s, s)));
    for (std::size_t k = 0; k < key_dim; ++k) {
        for (std::size_t i = 0; i < key_dim; ++i) {
            for (std::size_t j = 0; j < key_dim; ++j) {
                Complex w = root_of_unity(kd, static_cast<long long>(k * i) - static_cast<long long>(k * j));
                blocks[i][j] += (spec.probs[k] / static_cast<double>(key_dim)) * w * spec.sigmas[k];
            }
        }
    }
    return correlated_blocks(blocks, spec.shield_a, spec.shield_b);
}

Matrix bell_twisting_unitary(const BellPrivateSpec &spec) {
    validate(spec);
    std::size_t key_dim = spec.probs.size();
    std::size_t s = spec.shield_a * spec.shield_b;
    Matrix u = Matrix::Identity(s, s);
    for (std::size_t k = 0; k < key_dim; ++k) {
        Matrix proj = support_projector(spec.sigmas[k]);
        u += (root_of_unity(static_cast<int>(key_dim), static_cast<long long>(k)) - Complex(1.0)) * proj;
    }
    return u;
}

PrivateStateSpec bell_twisting(const BellPrivateSpec &spec) {
    Matrix u = bell_twisting_unitary(spec);
    std::size_t key_dim = spec.probs.size();
    std::size_t s = spec.shield_a * spec.shield_b;
    PrivateStateSpec out;
    out.m = spec.m();
    out.shield_a = spec.shield_a;
    out.shield_b = spec.shield_b;
    out.sigma = Matrix::Zero(s, s);
    for (std::size_t k = 0; k < key_dim; ++k) out.sigma += spec.probs[k] * spec.sigmas[k];
    out.sigma = hermitize(out.sigma);
    Matrix power = Matrix::Identity(s, s);
    for (std::size_t i = 0; i < key_dim; ++i) {
        out.twisting.push_back(power);
        power = power * u;
    }
    return out;
}

Operator block_form_state(const Matrix &y, int m, std::size_t shield_a, std::size_t shield_b) {
    std::size_t key_dim = key_dim_for_bits(m);
    require_shield_matrix(y, shield_a, shield_b, "Y");
    double normality = (y.adjoint() * y - y * y.adjoint()).norm();
    if (normality > 1e-10) {
        throw Error(ErrorCode::kNotNormal, "Y is not normal (deviation " + std::to_string(normality) + ")");
    }
    double tn = singular_values(y).sum();
    if (std::abs(tn - 1.0) > 1e-10) {
        throw Error(ErrorCode::kNotUnitTraceNorm, "||Y||_1 = " + std::to_string(tn));
    }
    Matrix power = matrix_power(y, static_cast<int>(key_dim));
    if (!is_hermitian(power, 1e-10) || min_eigenvalue(power) < -1e-10) {
        throw Error(ErrorCode::kPowerNotPsd, "Y^(2^m) is not positive semidefinite");
    }
    Matrix abs_y = psd_sqrt(y.adjoint() * y);
    Matrix w = y * hermitian_pinv(abs_y);
    std::vector<Matrix> wpow(key_dim), wneg(key_dim);
    std::size_t s = shield_a * shield_b;
    wpow[0] = wneg[0] = Matrix::Identity(s, s);
    for (std::size_t k = 1; k < key_dim; ++k) {
        wpow[k] = wpow[k - 1] * w;
        wneg[k] = wneg[k - 1] * w.adjoint();
    }
    std::vector<std::vector<Matrix>> blocks(key_dim, std::vector<Matrix>(key_dim));
    for (std::size_t i = 0; i < key_dim; ++i) {
        for (std::size_t j = 0; j < key_dim; ++j) {
            const Matrix &wp = i >= j ? wpow[i - j] : wneg[j - i];
            blocks[i][j] = abs_y * wp / static_cast<double>(key_dim);
        }
    }
    return correlated_blocks(blocks, shield_a, shield_b);
}

Operator key_attack(const Operator &rho) {
    auto keys = rho.layout().labels_with_role(Role::kKey);
    if (keys.empty()) throw Error(ErrorCode::kNoKeyParts, "state has no key parts: " + rho.layout().describe());
    auto comp = index_components(rho.layout(), keys);
    Matrix out = rho.matrix();
    std::size_t n = rho.dim();
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) {
            if (comp[r] != comp[c]) out(r, c) = 0;
        }
    }
    return Operator(rho.layout(), std::move(out), rho.flags());
}

Operator marginal_product(const Operator &rho) {
    auto keys = rho.layout().labels_with_role(Role::kKey);
    auto shields = rho.layout().labels_with_role(Role::kShield);
    if (keys.empty() || shields.empty()) {
        throw Error(ErrorCode::kMissingRoles, "need key and shield parts: " + rho.layout().describe());
    }
    auto registers = rho.layout().labels_with_role(Role::kRegister);
    if (!registers.empty()) throw Error(ErrorCode::kMissingRoles, "register parts are not supported here");
    Operator key = reduce_to(rho, keys);
    Operator shield = reduce_to(rho, shields);
    return permute(tensor(key, shield), rho.layout().labels());
}

Operator random_key_correlated(Rng &rng, std::size_t d, std::size_t shield_a, std::size_t shield_b) {
    std::size_t s = shield_a * shield_b;
    Matrix r = random_density(rng, d * s);
    std::vector<std::vector<Matrix>> blocks(d, std::vector<Matrix>(d));
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) blocks[a][b] = r.block(a * s, b * s, s, s);
    }
    return correlated_blocks(blocks, shield_a, shield_b);
}

BellPrivateSpec random_bell_spec(Rng &rng, int m, std::size_t shield_a, std::size_t shield_b) {
    std::size_t n = key_dim_for_bits(m);
    std::size_t s = shield_a * shield_b;
    if (s < n) throw Error(ErrorCode::kInvalidSpec, "shield too small for " + std::to_string(n) + " orthogonal flags");
    Matrix u = random_unitary(rng, s);
    BellPrivateSpec spec;
    spec.shield_a = shield_a;
    spec.shield_b = shield_b;
    RealVector p = random_probabilities(rng, n);
    for (std::size_t k = 0; k < n; ++k) {
        spec.probs.push_back(p(k));
        RealVector w = random_probabilities(rng, s);
        Matrix sigma = Matrix::Zero(s, s);
        double total = 0;
        for (std::size_t c = k; c < s; c += n) {
            sigma += w(c) * u.col(c) * u.col(c).adjoint();
            total += w(c);
        }
        spec.sigmas.push_back(sigma / total);
    }
    double sum = 0;
    for (double x : spec.probs) sum += x;
    for (double &x : spec.probs) x /= sum;
    return spec;
}

}  // namespace privstate

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

#include <gtest/gtest.h>

#include <cmath>

#include "privstate/error.hpp"
#include "privstate/families.hpp"
#include "privstate/measures.hpp"
#include "privstate/qudit.hpp"
#include "privstate/random.hpp"

using namespace privstate;

TEST(maps, povm_builders) {
    EXPECT_NO_THROW(validate(Povm::computational(3), 3));
    EXPECT_NO_THROW(validate(Povm::trivial(3), 3));
    EXPECT_THROW(validate(Povm::computational(3), 2), Error);
    Povm bad{{Matrix::Identity(2, 2), Matrix::Identity(2, 2)}};
    EXPECT_THROW(validate(bad, 2), Error);
    Matrix neg = Matrix::Zero(2, 2);
    neg(0, 0) = 2;
    neg(1, 1) = 1;
    Matrix neg2 = Matrix::Zero(2, 2);
    neg2(0, 0) = -1;
    EXPECT_THROW(validate(Povm{{neg, neg2}}, 2), Error);
}

TEST(maps, reversible_map_on_phi) {
    auto phi = bell_state(2, {0, 0});
    auto e = reversible_map(phi);
    EXPECT_EQ(e.layout().labels(), (LabelList{"KA", "KB", "KA'", "KB'"}));
    EXPECT_EQ(e.layout().part(0).role, Role::kShield);
    EXPECT_EQ(e.layout().part(2).role, Role::kKey);
    Matrix ref = Matrix::Zero(16, 16);
    for (int k = 0; k < 2; ++k) ref += 0.5 * kron(bell_state(2, {0, k}).matrix(), bell_state(2, {0, k}).matrix());
    EXPECT_LT(max_abs_diff(e.matrix(), ref), 1e-14);
    EXPECT_NEAR(e.trace().real(), 1.0, 1e-12);
    EXPECT_LT(max_abs_diff(reversible_inverse(e).matrix(), phi.matrix()), 1e-14);
}

TEST(maps, reversible_map_identity_random) {
    Rng rng(21);
    for (auto [sa, sb] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 3}}) {
        for (int trial = 0; trial < 5; ++trial) {
            auto rho = random_key_correlated(rng, 2, sa, sb);
            auto e = reversible_map(rho);
            EXPECT_TRUE(is_density(e.matrix()));
            EXPECT_LT(trace_norm(e.matrix() - phase_flip_mixture(rho).matrix()), 1e-9);
            auto back = reversible_inverse(e);
            EXPECT_EQ(back.layout(), rho.layout());
            EXPECT_LT(max_abs_diff(back.matrix(), rho.matrix()), 1e-10);
        }
    }
    // Qutrit keys.
    auto rho3 = random_key_correlated(rng, 3, 2, 1);
    auto e3 = reversible_map(rho3);
    EXPECT_LT(trace_norm(e3.matrix() - phase_flip_mixture(rho3).matrix()), 1e-9);
}

TEST(maps, reversible_map_of_swap_is_bell_pbit) {
    for (int d : {2, 3}) {
        auto g = family_construct({Family::kSwap, d}).state;
        auto e = reversible_map(g);
        EXPECT_LT(max_abs_diff(reversible_inverse(e).matrix(), g.matrix()), 1e-10);
        // Flags Z^k(gamma) for k = 0, 1 are orthogonal.
        Matrix z0 = g.matrix();
        Matrix z1 = phase_flip(g, 1, "KB").matrix();
        EXPECT_NEAR(std::abs((z0 * z1).trace()), 0.0, 1e-12);
    }
}

TEST(maps, reversible_map_rejects_uncorrelated) {
    Rng rng(22);
    auto layout = canonical_layout(2, 2, 1);
    auto rho = Operator::density(layout, random_density(rng, 8));
    try {
        reversible_map(rho);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kNotKeyCorrelated);
    }
    EXPECT_THROW(reversible_inverse(rho), Error);
}

TEST(maps, phase_flip_examples) {
    auto phi = bell_state(2, {0, 0});
    EXPECT_LT(max_abs_diff(phase_flip(phi, 0, "KB").matrix(), phi.matrix()), 1e-15);
    EXPECT_LT(max_abs_diff(phase_flip(phi, 1, "KB").matrix(), bell_state(2, {0, 1}).matrix()), 1e-15);
    auto hat = key_attack(family_construct({Family::kSwap, 3}).state);
    for (int k = 0; k < 2; ++k) EXPECT_LT(max_abs_diff(phase_flip(hat, k, "KA").matrix(), hat.matrix()), 1e-15);
    EXPECT_THROW(phase_flip(family_construct({Family::kSwap, 2}).state, 1, "SA"), Error);
}

TEST(maps, untwist_trace_examples) {
    Rng rng(23);
    for (int trial = 0; trial < 3; ++trial) {
        PrivateStateSpec spec{1, 2, 2, {random_unitary(rng, 4), random_unitary(rng, 4)}, random_density(rng, 4)};
        auto out = untwist_trace(private_state(spec), spec);
        EXPECT_LT(max_abs_diff(out.matrix(), bell_state(2, {0, 0}).matrix()), 1e-10);
    }
    // Trivial twisting just traces the shield.
    PrivateStateSpec trivial{1, 2, 2, {Matrix::Identity(4, 4), Matrix::Identity(4, 4)}, random_density(rng, 4)};
    auto g = family_construct({Family::kSwap, 2}).state;
    EXPECT_LT(max_abs_diff(untwist_trace(g, trivial).matrix(), partial_trace(g, {"SA", "SB"}).matrix()), 1e-14);
    // Untwisting the attacked swap state leaves a PPT key pair.
    std::size_t s = 4;
    PrivateStateSpec swap{1, 2, 2, {Matrix::Identity(s, s), swap_operator(2).matrix()}, Matrix::Identity(s, s) / 4.0};
    auto key = untwist_trace(key_attack(g), swap);
    EXPECT_TRUE(is_ppt(key, {"KB"}).ppt);
    EXPECT_THROW(untwist_trace(family_construct({Family::kSwap, 3}).state, swap), Error);
}

TEST(maps, povm_partial_examples) {
    auto phi = bell_state(2, {0, 0});
    auto cq = apply_povm_partial(phi, Povm::computational(2), {"KA"});
    ASSERT_EQ(cq.outcomes.size(), 2u);
    for (int k = 0; k < 2; ++k) {
        EXPECT_NEAR(cq.outcomes[k].probability, 0.5, 1e-15);
        Matrix proj = Matrix::Zero(2, 2);
        proj(k, k) = 1;
        EXPECT_LT(max_abs_diff(cq.outcomes[k].conditional->matrix(), proj), 1e-15);
    }
    EXPECT_EQ(cq.rest.labels(), (LabelList{"KB"}));
    auto whole = apply_povm_partial(phi, Povm::trivial(2), {"KA"});
    EXPECT_NEAR(whole.outcomes[0].probability, 1.0, 1e-15);
    auto g = family_construct({Family::kSwap, 2}).state;
    auto shield = apply_povm_partial(g, Povm::computational(4), {"SA", "SB"});
    double total = 0;
    for (const auto &o : shield.outcomes) total += o.probability;
    EXPECT_NEAR(total, 1.0, 1e-12);
    EXPECT_THROW(apply_povm_partial(g, Povm::computational(3), {"SA"}), Error);
    // Outcome distribution agrees with the cq probabilities.
    auto dist = outcome_distribution(g, Povm::computational(4), {"SA", "SB"});
    for (std::size_t k = 0; k < dist.size(); ++k) EXPECT_NEAR(dist[k], shield.outcomes[k].probability, 1e-14);
}

TEST(maps, cq_embedding_is_block_diagonal) {
    auto phi = bell_state(2, {0, 0});
    auto cq = apply_povm_partial(phi, Povm::computational(2), {"KA"});
    auto emb = cq_embedding(cq);
    EXPECT_EQ(emb.layout().part(0).party, Party::kReg);
    Matrix ref = Matrix::Zero(4, 4);
    ref(0, 0) = ref(3, 3) = 0.5;
    EXPECT_LT(max_abs_diff(emb.matrix(), ref), 1e-15);
}

TEST(maps, phase_invariance_of_a_side_measurement) {
    auto g = family_construct({Family::kSwap, 2}).state;
    Rng rng(24);
    Matrix u = random_unitary(rng, 4);
    Povm povm = Povm::from_basis(u);
    auto a = apply_povm_partial(g, povm, {"KA", "SA"});
    auto b = apply_povm_partial(phase_flip(g, 1, "KB"), povm, {"KA", "SA"});
    Matrix z = clock_matrix(2);
    for (std::size_t k = 0; k < a.outcomes.size(); ++k) {
        EXPECT_NEAR(a.outcomes[k].probability, b.outcomes[k].probability, 1e-12);
        Operator rotated = phase_flip(*a.outcomes[k].conditional, 1, "KB");
        EXPECT_LT(max_abs_diff(rotated.matrix(), b.outcomes[k].conditional->matrix()), 1e-12);
    }
}

TEST(maps, distill_2m) {
    auto g = family_construct({Family::kTwoMExample, 2}).state;
    auto steps = distill_2m_steps(g);
    ASSERT_EQ(steps.size(), 3u);
    auto second = reduce_to(steps[0], {"KA2", "KB2"});
    EXPECT_LT(max_abs_diff(second.matrix(), bell_state(2, {0, 0}, "KA2", "KB2").matrix()), 1e-12);
    auto out = steps.back();
    EXPECT_NEAR(out.trace().real(), 1.0, 1e-12);
    auto shields = SystemLayout::make({{"SA", 2, Party::kA, Role::kShield}, {"SB", 2, Party::kB, Role::kShield}});
    auto ref = permute(tensor({bell_state(2, {0, 0}, "KA1", "KB1"), bell_state(2, {0, 0}, "KA2", "KB2"),
                               maximally_mixed(shields)}),
                       g.layout().labels());
    EXPECT_LT(trace_distance(out.matrix(), ref.matrix()), 1e-10);
    EXPECT_THROW(distill_2m_circuit(family_construct({Family::kSwap, 2}).state), Error);
}

TEST(maps, distill_local_unitary_matches_circuit) {
    auto g = family_construct({Family::kTwoMExample, 2}).state;
    Operator ua = distill_2m_local_unitary("KA1", "KA2", "SA");
    Operator ub = distill_2m_local_unitary("KB1", "KB2", "SB");
    Operator out = conjugate(conjugate(g, ua), ub);
    EXPECT_LT(max_abs_diff(out.matrix(), distill_2m_circuit(g).matrix()), 1e-12);
}

TEST(maps, phase_flip_mixture_layout_matches_reversible_map) {
    Rng rng(31);
    auto rho = random_key_correlated(rng, 3, 2, 1);
    auto e = reversible_map(rho);
    auto f = phase_flip_mixture(rho);
    EXPECT_EQ(e.layout(), f.layout());
    EXPECT_NEAR(f.trace().real(), 1.0, 1e-12);
}

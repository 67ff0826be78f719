// Copyright 2026 The hamming-line Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hline/builder.h"

#include <gtest/gtest.h>

#include <random>

#include "hline/tableau.h"

using namespace hline;

namespace {

Builder &shared_builder() {
    static Builder b(1);
    return b;
}

// Product state stabilized by `op` (X sites in |+>, Z sites in |0>), then the hook.
Circuit hook_on_product_state(Builder &b, const SparsePauli &op, uint32_t nblocks) {
    Layer prep;
    for (auto [q, p] : op.terms) {
        if (p == Pauli1::X) {
            prep.push_back(Operation::h(q));
        }
    }
    std::vector<Placement> ch;
    if (!prep.empty()) {
        ch.push_back({make_leaf(Role::Generic, nblocks * BlockInfo::kN, {prep}, "prep"), 0, 0});
    }
    ch.push_back({b.hook0(op, nblocks, "m"), 0, 0});
    auto root = make_seq(Role::Generic, nblocks * BlockInfo::kN, ch, "t");
    return flatten(root, b.layout(0, nblocks)).circuit;
}

uint8_t v_parity(const Circuit &c, const std::vector<uint8_t> &rec) {
    uint8_t v = 0;
    for (auto i : c.detectors.back().indices) {
        v ^= rec[i];
    }
    return v;
}

}  // namespace

TEST(builder, block_info_logicals) {
    const auto &bi = block_info();
    ASSERT_EQ(bi.data_logicals.size(), 6u);
    for (uint32_t l = 0; l < 7; l++) {
        PauliString z(7), x(7);
        z.set(l, Pauli1::Z);
        x.set(l, Pauli1::X);
        auto zr = bi.logical_rep(z), xr = bi.logical_rep(x);
        EXPECT_TRUE(zr.is_z_type());
        EXPECT_TRUE(xr.is_x_type());
        EXPECT_FALSE(zr.commutes(xr));
        for (uint32_t s = 0; s < BlockInfo::kChecks; s++) {
            EXPECT_TRUE(zr.commutes(bi.stabilizer(true, s)));
            EXPECT_TRUE(xr.commutes(bi.stabilizer(false, s)));
        }
    }
    // X and Z representatives of one logical overlap on an odd number of qubits in every coset.
    PauliString y(7);
    y.set(2, Pauli1::Y);
    EXPECT_THROW(bi.logical_rep(y), std::invalid_argument);
    PauliString xz(7);
    xz.set(1, Pauli1::X);
    xz.set(4, Pauli1::Z);
    EXPECT_FALSE(bi.logical_rep(xz).has_y());
}

TEST(builder, cnot_across_data_qubit_equals_direct_cnot) {
    // CX(c,d) CX(d,e) CX(c,d) CX(d,e) acts as CX(c,e) on qubits (e, d, c) = (0, 1, 2).
    for (int k = 0; k < 64; k++) {
        PauliString p(3);
        for (int q = 0; q < 3; q++) {
            p.set(q, static_cast<Pauli1>((k >> (2 * q)) & 3));
        }
        auto a = conjugate_by_cnot(p, 2, 1);
        a = conjugate_by_cnot(a, 1, 0);
        a = conjugate_by_cnot(a, 2, 1);
        a = conjugate_by_cnot(a, 1, 0);
        ASSERT_EQ(a, conjugate_by_cnot(p, 2, 0)) << p.str();
    }
}

TEST(builder, hook0_shape) {
    auto &b = shared_builder();
    auto op = SparsePauli::parse("Z1*Z10*Z13");
    auto h = b.hook0(op, 1, "z");
    uint32_t t = 5;
    ASSERT_EQ(h->hook0->sites.size(), t);
    ASSERT_EQ(h->measurements, 3 * (t - 1) + t);
    ASSERT_EQ(h->depth, 27u);
    ASSERT_EQ(b.hook0(SparsePauli::parse("X1*X4"), 1, "x")->depth, 25u);
    ASSERT_EQ(b.hook0(op, 1, "again").get(), h.get());
    ASSERT_THROW(b.hook0(SparsePauli::parse("Y1*Z4"), 1, "y"), std::invalid_argument);
    ASSERT_THROW(b.hook0(SparsePauli::parse("Z1"), 1, "one"), std::invalid_argument);
    ASSERT_THROW(b.hook0(SparsePauli::parse("Z2*Z4"), 1, "cat"), std::invalid_argument);
    ASSERT_TRUE(check_locality(h).empty());
}

TEST(builder, ec0_has_24_hooks) {
    auto &b = shared_builder();
    auto ec = b.build_ec(0);
    ASSERT_EQ(ec->children.size(), 24u);
    for (const auto &c : ec->children) {
        ASSERT_EQ(c.node->role, Role::Hook0);
    }
    ASSERT_TRUE(check_locality(ec).empty());
}

TEST(builder, ec1_has_360_hooks_and_is_local) {
    auto &b = shared_builder();
    auto ec = b.build_ec(1);
    ASSERT_EQ(ec->children.size(), 360u);
    for (const auto &c : ec->children) {
        ASSERT_EQ(c.node->role, Role::Hook1);
    }
    ASSERT_TRUE(check_locality(ec).empty());
}

TEST(builder, noiseless_hook_reads_stabilized_operator) {
    auto &b = shared_builder();
    const char *ops[] = {"Z1*Z10*Z13", "X13*X31*X40", "X1*Z4*X7", "Z4*X10*Z16*X19"};
    for (auto s : ops) {
        auto op = SparsePauli::parse(s);
        auto c = hook_on_product_state(b, op, 1);
        ASSERT_TRUE(check_locality(c).empty());
        for (uint64_t seed = 0; seed < 8; seed++) {
            auto run = tableau_run(c, {}, seed);
            // Cat checks are random but repeat exactly across the three rounds without faults.
            const auto &chk = c.detectors[c.detectors.size() - 2].indices;
            size_t per = chk.size() / 3;
            for (size_t i = 0; i < per; i++) {
                ASSERT_EQ(run.record[chk[i]], run.record[chk[per + i]]) << s;
                ASSERT_EQ(run.record[chk[i]], run.record[chk[2 * per + i]]) << s;
            }
            ASSERT_EQ(v_parity(c, run.record), 0) << s;
            auto e = run.final_state.expectation(op.to_dense(c.num_qubits));
            ASSERT_TRUE(e.has_value());
            ASSERT_EQ(*e, 1);
        }
        // Flipping the eigenvalue flips the readout.
        PauliString err(c.num_qubits);
        // X on |0> flips a Z site; after the preparing H it is a Z and flips an X site.
        err.set(op.terms[0].first, Pauli1::X);
        auto run = tableau_run(c, {}, 3, &err);
        ASSERT_EQ(v_parity(c, run.record), 1) << s;
    }
}

TEST(builder, two_block_hook) {
    auto &b = shared_builder();
    auto op = SparsePauli::parse("Z43*Z46");
    auto c = hook_on_product_state(b, op, 2);
    ASSERT_TRUE(check_locality(c).empty());
    ASSERT_EQ(v_parity(c, tableau_simulate(c, {}, 1)), 0);
}

TEST(builder, cat_prep_is_ghz) {
    auto &b = shared_builder();
    auto prep = b.build_cat_prep(0, {2, 3, 4, 5}, 1);
    auto c = flatten(prep, b.layout(0)).circuit;
    for (uint64_t seed = 0; seed < 4; seed++) {
        auto run = tableau_run(c, {}, seed);
        // Round-one checks give the X frame of the chain; later rounds repeat them.
        ASSERT_EQ(run.record.size(), 9u);
        uint8_t x = 0;
        for (uint32_t k = 1; k < 4; k++) {
            ASSERT_EQ(run.record[k - 1], run.record[k + 2]);
            ASSERT_EQ(run.record[k - 1], run.record[k + 5]);
            x ^= run.record[k - 1];
            if (x) {
                run.final_state.apply_pauli1(BlockInfo::cat(2 + k), Pauli1::X);
            }
        }
        PauliString xs(c.num_qubits);
        for (uint32_t t = 2; t <= 5; t++) {
            xs.set(BlockInfo::cat(t), Pauli1::X);
        }
        ASSERT_EQ(run.final_state.expectation(xs), 1);
        for (uint32_t t = 3; t <= 5; t++) {
            PauliString zz(c.num_qubits);
            zz.set(BlockInfo::cat(t - 1), Pauli1::Z);
            zz.set(BlockInfo::cat(t), Pauli1::Z);
            ASSERT_EQ(run.final_state.expectation(zz), 1);
        }
    }
    ASSERT_THROW(b.build_cat_prep(0, {2, 4}, 1), std::invalid_argument);
    auto p1 = b.build_cat_prep(1, {0, 1, 2}, 1);
    ASSERT_TRUE(check_locality(p1).empty());
}

TEST(builder, level1_sites_cover_the_outer_logical) {
    auto &b = shared_builder();
    PauliString z(b.code(1).k);
    z.set(0, Pauli1::Z);
    auto sites = b.level1_sites(z, 1);
    ASSERT_GE(sites.size(), 2u);
    for (size_t i = 1; i < sites.size(); i++) {
        ASSERT_EQ(sites[i].block, sites[i - 1].block + 1);
    }
    ASSERT_TRUE(sites.front().active());
    ASSERT_TRUE(sites.back().active());
    // Physical support of the lifted sites equals the tower's logical Z representative up to stabilizers:
    // check it commutes with every tower stabilizer and anticommutes with logical X 0 only.
    SparsePauli phys;
    for (const auto &s : sites) {
        if (s.active()) {
            phys = phys * block_info().logical_rep(s.logical).shifted(s.block * BlockInfo::kN);
        }
    }
    const auto &c1 = b.code(1);
    for (const auto &s : c1.stabilizers) {
        ASSERT_TRUE(phys.commutes(s));
    }
    for (uint32_t l = 0; l < c1.k; l++) {
        ASSERT_EQ(phys.commutes(c1.logical_x[l]), l != 0) << l;
        ASSERT_TRUE(phys.commutes(c1.logical_z[l]));
    }
}

TEST(builder, memory_experiment_flattens) {
    auto &b = shared_builder();
    auto m = build_memory_experiment(b, 0, 2);
    auto fp = flatten_memory(b, m);
    fp.circuit.validate();
    ASSERT_TRUE(check_locality(fp.circuit).empty());
    ASSERT_EQ(fp.circuit.observables.size(), b.code(0).k);
    for (const auto &o : fp.circuit.observables) {
        ASSERT_EQ(o.indices.size(), 3u) << o.name;
    }
    ASSERT_THROW(build_memory_experiment(b, 0, 0), std::invalid_argument);
    auto m1 = build_memory_experiment(b, 1, 1);
    ASSERT_THROW(flatten_memory(b, m1), std::length_error);
}

TEST(builder, depth_model_ratio) {
    auto dm = measured_depth_model();
    ASSERT_GT(dm.T0, 0);
    ASSERT_GT(dm.T1 / dm.T0, 62.0);
}

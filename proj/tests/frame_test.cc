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

#include "hline/frame.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hline/builder.h"

using namespace hline;

namespace {

Circuit random_circuit(uint32_t n, uint32_t depth, std::mt19937_64 &rng) {
    Circuit c(n);
    std::vector<uint32_t> q(n);
    for (uint32_t i = 0; i < n; i++) {
        q[i] = i;
    }
    for (uint32_t l = 0; l < depth; l++) {
        std::shuffle(q.begin(), q.end(), rng);
        Layer layer;
        for (uint32_t i = 0; i < n;) {
            int k = static_cast<int>(rng() % 6);
            if (k <= 1 && i + 1 < n) {
                layer.push_back(Operation::cx(q[i], q[i + 1]));
                i += 2;
                continue;
            }
            if (k == 2) {
                layer.push_back(Operation::h(q[i]));
            } else if (k == 3) {
                layer.push_back(Operation::mz(q[i]));
            } else if (k == 4) {
                layer.push_back(Operation::rz(q[i]));
            }
            i++;
        }
        c.layers.push_back(std::move(layer));
    }
    return c;
}

Fault random_fault(const Circuit &c, std::mt19937_64 &rng) {
    uint32_t l = rng() % c.layers.size();
    Fault f;
    f.layer = l;
    if (c.layers[l].empty() || rng() % 4 == 0) {
        f.op = Fault::kIdleOp;
        f.q0 = rng() % c.num_qubits;
    } else {
        f.op = rng() % c.layers[l].size();
        const auto &op = c.layers[l][f.op];
        f.q0 = op.a;
        if (op.two_qubit()) {
            f.q1 = op.b;
            f.p1 = static_cast<Pauli1>(rng() % 4);
        }
    }
    f.p0 = static_cast<Pauli1>(1 + rng() % 3);
    return f;
}

// Checks one lane of a coupled run against two tableau runs with the same seed.
void expect_lane_matches(const Circuit &c, const FlatFrameRun &run, size_t lane, const std::vector<Fault> &faults,
                         uint64_t seed) {
    auto ref = tableau_run(c, {}, seed);
    auto bad = tableau_run(c, faults, seed);
    for (size_t i = 0; i < ref.record.size(); i++) {
        ASSERT_EQ((run.flips[i] >> lane) & 1, uint64_t(ref.record[i] ^ bad.record[i])) << "bit " << i;
    }
    // The final frame maps the reference state onto the faulty one.
    PauliString f = run.final_frame.lane(lane);
    Tableau moved = ref.final_state;
    moved.apply_pauli(f);
    auto q = pauli_difference(moved, bad.final_state);
    ASSERT_TRUE(ref.final_state.expectation(q).has_value());
}

}  // namespace

TEST(frame, coupled_run_equals_tableau_difference_on_random_circuits) {
    std::mt19937_64 rng(2026);
    int triples = 0;
    while (triples < 1000) {
        auto c = random_circuit(2 + rng() % 7, 4 + rng() % 20, rng);
        auto reference = build_frame_reference(c);
        std::vector<std::vector<Fault>> lanes;
        for (int j = 0; j < 10; j++) {
            lanes.push_back({random_fault(c, rng)});
        }
        // Reference stabilizers differ between outcome branches only in sign, so any seed works.
        uint64_t seed = rng();
        auto run = flat_frame_run(c, lanes, &reference);
        for (size_t j = 0; j < lanes.size(); j++) {
            expect_lane_matches(c, run, j, lanes[j], seed);
            triples++;
        }
    }
}

TEST(frame, coupled_run_equals_tableau_difference_on_a_hook) {
    Builder b(0);
    auto node = b.hook0(block_info().stabilizer(true, 1), 1, "X1");
    auto fp = flatten(node, b.layout(0));
    auto reference = build_frame_reference(fp.circuit);
    std::mt19937_64 rng(7);
    std::vector<std::vector<Fault>> lanes;
    for (int j = 0; j < 64; j++) {
        lanes.push_back({random_fault(fp.circuit, rng)});
    }
    auto run = flat_frame_run(fp.circuit, lanes, &reference);
    for (size_t j = 0; j < lanes.size(); j++) {
        expect_lane_matches(fp.circuit, run, j, lanes[j], 11 + j);
    }
}

TEST(frame, zero_noise_source_gives_zero_records) {
    Builder b(0);
    auto ec = b.build_ec(0);
    FrameSource src(BlockInfo::kN, NoiseModel{0, true}, 3);
    std::vector<uint64_t> out;
    std::function<void(const Node &, uint32_t)> walk = [&](const Node &n, uint32_t off) {
        if (n.kind == NodeKind::Leaf) {
            src.leaf(n, off, out);
            return;
        }
        for (const auto &c : n.children) {
            walk(*c.node, off + c.offset);
        }
    };
    walk(*ec, 0);
    ASSERT_EQ(out.size(), ec->measurements);
    for (auto w : out) {
        ASSERT_EQ(w, 0u);
    }
    ASSERT_EQ(src.faults_sampled(), 0u);
    ASSERT_THROW(FrameSource(4, NoiseModel{1.0, true}, 0), std::invalid_argument);
    ASSERT_THROW(FrameSource(4, NoiseModel{-0.1, true}, 0), std::invalid_argument);
}

TEST(frame, fault_frequency_per_location_is_binomial) {
    // One qubit idling: every (layer, lane) is one Bernoulli(p) trial.
    const double p = 0.01;
    const uint64_t layers = 100000;
    FrameSource src(1, NoiseModel{p, true}, 12345);
    uint64_t per_kind[4] = {};
    for (uint64_t done = 0; done < layers; done += 1000) {
        src.idle(0, 1, 1000);
    }
    double trials = double(layers) * 64;
    double mean = trials * p, sd = std::sqrt(trials * p * (1 - p));
    ASSERT_LT(std::abs(double(src.faults_sampled()) - mean), 3 * sd);

    // Pauli kinds are uniform: drive single layers and read the frame back.
    FrameSource one(1, NoiseModel{0.2, true}, 99);
    uint64_t hits = 0;
    for (int t = 0; t < 20000; t++) {
        one.state().x[0] = one.state().z[0] = 0;
        auto before = one.faults_sampled();
        one.idle(0, 1, 1);
        if (one.faults_sampled() == before) {
            continue;
        }
        for (int j = 0; j < 64; j++) {
            int k = int((one.state().x[0] >> j) & 1) | int(((one.state().z[0] >> j) & 1) << 1);
            per_kind[k]++;
        }
        hits += one.faults_sampled() - before;
    }
    uint64_t nontrivial = per_kind[1] + per_kind[2] + per_kind[3];
    ASSERT_EQ(nontrivial, hits);
    for (int k = 1; k < 4; k++) {
        double m = hits / 3.0, s = std::sqrt(hits * (1.0 / 3) * (2.0 / 3));
        ASSERT_LT(std::abs(double(per_kind[k]) - m), 3 * s) << k;
    }
}

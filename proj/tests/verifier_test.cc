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

#include "hline/verifier.h"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <tuple>

using namespace hline;

namespace {

Builder &builder() {
    static Builder b(0);
    return b;
}

const Gadget &hook_z0() {
    static Gadget g = make_gadget(builder(), builder().hook0(block_info().stabilizer(false, 0), 1, "Z0"), 1, "Z0");
    return g;
}

const Gadget &hook_x2() {
    static Gadget g = make_gadget(builder(), builder().hook0(block_info().stabilizer(true, 2), 1, "X2"), 1, "X2");
    return g;
}

}  // namespace

TEST(verifier, enumerate_counts_small_circuits) {
    Circuit c(2);
    c.layers.push_back({Operation::cx(0, 1)});
    ASSERT_EQ(enumerate_fault_locations(c, false).size(), 15u);
    Circuit h(2);
    h.layers.push_back({Operation::h(0)});
    ASSERT_EQ(enumerate_fault_locations(h, false).size(), 3u);
    // Qubit 1 idles in that layer.
    ASSERT_EQ(enumerate_fault_locations(h, true).size(), 6u);
    ASSERT_EQ(enumerate_fault_locations(c, 2, false).size(), 15u * 14 / 2);
    ASSERT_THROW(enumerate_fault_locations(c, 3, false), std::invalid_argument);
    ASSERT_THROW(enumerate_fault_locations(c, 2, false, 10), std::length_error);
}

TEST(verifier, enumerate_covers_every_slot_once) {
    auto g = make_gadget(builder(), builder().build_ec(0), 1, "ec0");
    const auto &c = g.program.circuit;
    uint64_t expect = 0;
    for (const auto &layer : c.layers) {
        uint32_t busy = 0;
        for (const auto &op : layer) {
            expect += op.two_qubit() ? 15 : 3;
            busy += op.two_qubit() ? 2 : 1;
        }
        expect += 3 * (c.num_qubits - busy);
    }
    auto f = enumerate_fault_locations(c, true);
    ASSERT_EQ(f.size(), expect);
    std::set<std::tuple<uint32_t, uint32_t, uint32_t, uint32_t, int, int>> seen;
    for (const auto &x : f) {
        ASSERT_TRUE(seen.insert({x.layer, x.op, x.q0, x.q1, int(x.p0), int(x.p1)}).second);
        ASSERT_FALSE(x.p0 == Pauli1::I && x.p1 == Pauli1::I);
    }
}

TEST(verifier, classify_residual_examples) {
    LineLayout id;
    const auto &bi = block_info();
    PauliString s(45);
    for (auto i : bi.check_support[1]) {
        s.set(BlockInfo::data(i), Pauli1::X);
    }
    ASSERT_EQ(classify_residual(s, id, false), AdjClass::Clean);
    PauliString t = s;
    t.set(BlockInfo::data(bi.check_support[1][0]), Pauli1::Y);
    PauliString rep;
    ASSERT_EQ(classify_residual(t, id, false, &rep), AdjClass::SingleDataError);
    ASSERT_EQ(rep.weight(), 1u);
    PauliString lz(45);
    for (auto i : bi.lz[3]) {
        lz.set(BlockInfo::data(i), Pauli1::Z);
    }
    ASSERT_EQ(classify_residual(lz, id, false), AdjClass::Violation);
    ASSERT_EQ(classify_residual(lz, id, true), AdjClass::Clean);
    PauliString two(90);
    two.set(BlockInfo::data(14), Pauli1::X);
    two.set(45 + BlockInfo::data(0), Pauli1::X);
    ASSERT_EQ(classify_residual(two, id, false), AdjClass::Violation);
}

TEST(verifier, classify_fault_examples) {
    const auto &g = hook_z0();
    const auto &sites = g.node->hook0->sites;
    auto none = classify_fault(builder(), g, {});
    ASSERT_EQ(none.adj_classification, AdjClass::Clean);
    ASSERT_TRUE(none.measurement_flips.empty());
    ASSERT_EQ(none.outcome_wrong, std::vector<uint8_t>{0});

    // Z on a cat qubit in the middle: flips the readout, leaves data alone.
    Fault z{12, Fault::kIdleOp, sites[1].cat, Fault::kNoQubit, Pauli1::Z, Pauli1::I};
    auto ez = classify_fault(builder(), g, {z});
    ASSERT_EQ(ez.adj_classification, AdjClass::Clean);
    ASSERT_EQ(ez.outcome_wrong, std::vector<uint8_t>{1});

    // X on an entangling qubit just before its first read flips that one parity bit.
    Fault x{5, Fault::kIdleOp, sites[2].ent, Fault::kNoQubit, Pauli1::X, Pauli1::I};
    auto ex = classify_fault(builder(), g, {x});
    ASSERT_EQ(ex.adj_classification, AdjClass::Clean);
    ASSERT_FALSE(ex.measurement_flips.empty());
    ASSERT_EQ(ex.outcome_wrong, std::vector<uint8_t>{0});
    // Against a reference that shares the faulty run's random outcomes, exactly that bit flips.
    auto fx = classify_lanes(builder(), g, {{x}});
    ASSERT_EQ(fx[0].measurement_flips.size(), 1u);

    Fault late{uint32_t(g.program.circuit.layers.size()), 0, 0, Fault::kNoQubit, Pauli1::X, Pauli1::I};
    ASSERT_THROW(classify_fault(builder(), g, {late}), std::out_of_range);
}

TEST(verifier, planted_damage_is_a_violation) {
    const auto &g = hook_x2();
    PauliString in(45);
    in.set(BlockInfo::data(0), Pauli1::X);
    in.set(BlockInfo::data(9), Pauli1::X);
    std::vector<PauliString> inputs{in};
    auto e = classify_lanes(builder(), g, {{}}, &inputs);
    ASSERT_EQ(e[0].adj_classification, AdjClass::Violation);
    auto t = classify_fault(builder(), g, {}, &in);
    ASSERT_EQ(t.adj_classification, AdjClass::Violation);
}

TEST(verifier, classification_is_seed_independent_and_matches_frames) {
    for (const Gadget *g : {&hook_z0(), &hook_x2()}) {
        auto all = enumerate_fault_locations(g->program.circuit, true);
        std::mt19937_64 rng(5);
        std::vector<std::vector<Fault>> lanes;
        for (int j = 0; j < 64; j++) {
            lanes.push_back({all[rng() % all.size()]});
        }
        auto frame = classify_lanes(builder(), *g, lanes);
        for (int j = 0; j < 64; j++) {
            auto a = classify_fault(builder(), *g, lanes[j], nullptr, 1);
            for (uint64_t seed : {2, 3}) {
                auto b = classify_fault(builder(), *g, lanes[j], nullptr, seed);
                ASSERT_EQ(a.adj_classification, b.adj_classification) << j;
            }
            // The frame path keeps errors that act trivially on the state, so it is never more lenient.
            ASSERT_LE(int(a.adj_classification), int(frame[j].adj_classification)) << j;
            ASSERT_NE(a.adj_classification, AdjClass::Violation);
        }
    }
}

TEST(verifier, unknown_property_throws) {
    ASSERT_THROW(verify_property(builder(), "hook-everything"), std::invalid_argument);
}

class PropertyTest : public ::testing::TestWithParam<std::string> {};

TEST_P(PropertyTest, zero_counterexamples_at_level_0) {
    auto v = verify_property(builder(), GetParam());
    EXPECT_GT(v.domain, 0u);
    EXPECT_TRUE(v.pass()) << v.report().substr(0, 4000);
    EXPECT_NE(v.report().find("0 counterexamples"), std::string::npos);
}

INSTANTIATE_TEST_SUITE_P(verifier, PropertyTest, ::testing::ValuesIn(property_ids()),
                         [](const auto &info) {
                             std::string s = info.param;
                             for (auto &ch : s) {
                                 if (ch == '-') {
                                     ch = '_';
                                 }
                             }
                             return s;
                         });

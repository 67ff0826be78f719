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

#include "hline/code_tower.h"

#include <gtest/gtest.h>

#include <set>

using namespace hline;

namespace {

const StabilizerCode &tower(int r) {
    static StabilizerCode c0 = build_tower(0);
    static StabilizerCode c1 = build_tower(1);
    return r == 0 ? c0 : c1;
}

// Stabilizers commute; logical pairs are symplectic and commute with the stabilizers.
void expect_valid(const StabilizerCode &c) {
    ASSERT_EQ(c.logical_x.size(), c.k);
    ASSERT_EQ(c.logical_z.size(), c.k);
    for (size_t i = 0; i < c.stabilizers.size(); i++) {
        for (size_t j = i + 1; j < c.stabilizers.size(); j++) {
            ASSERT_TRUE(c.stabilizers[i].commutes(c.stabilizers[j])) << i << " " << j;
        }
    }
    for (uint32_t i = 0; i < c.k; i++) {
        for (const auto &s : c.stabilizers) {
            ASSERT_TRUE(s.commutes(c.logical_x[i]));
            ASSERT_TRUE(s.commutes(c.logical_z[i]));
        }
        for (uint32_t j = 0; j < c.k; j++) {
            ASSERT_EQ(c.logical_x[i].commutes(c.logical_z[j]), i != j) << i << " " << j;
            ASSERT_TRUE(c.logical_x[i].commutes(c.logical_x[j]));
            ASSERT_TRUE(c.logical_z[i].commutes(c.logical_z[j]));
        }
    }
    // Reserved pairs are neither stabilizers nor data logicals.
    PauliSpan span(c.n, c.stabilizers);
    ASSERT_EQ(span.rank() + c.k + c.reserved.size(), c.n);
}

}  // namespace

TEST(code_tower, hamming_parameters) {
    for (auto [m, n, k] : {std::tuple{3, 7u, 1u}, {4, 15u, 7u}, {5, 31u, 21u}}) {
        auto h = hamming_code(m);
        ASSERT_EQ(h.n, n);
        ASSERT_EQ(h.k, k);
        ASSERT_EQ(h.stabilizers.size(), size_t(2 * m));
        expect_valid(h);
    }
    ASSERT_THROW(hamming_code(2), std::invalid_argument);
}

TEST(code_tower, hamming_check_structure) {
    auto h = hamming_code(4);
    for (int k = 0; k < 4; k++) {
        for (bool x : {true, false}) {
            const auto &s = h.stabilizers[x ? k : 4 + k];
            std::set<uint32_t> on;
            for (auto [q, p] : s.terms) {
                ASSERT_EQ(p, x ? Pauli1::X : Pauli1::Z);
                on.insert(q);
            }
            for (uint32_t i = 0; i < 15; i++) {
                ASSERT_EQ(on.count(i) == 1, bool(((i + 1) >> k) & 1));
            }
        }
    }
}

TEST(code_tower, interleave_examples) {
    auto c0 = interleave_concat(hamming_code(4), triple_code());
    ASSERT_EQ(c0.n, 45u);
    ASSERT_EQ(c0.k, 7u);
    expect_valid(c0);
    auto same = interleave_concat(hamming_code(3), trivial_code());
    ASSERT_EQ(same.n, 7u);
    ASSERT_EQ(same.k, 1u);
    PauliSpan a(7, same.stabilizers), b(7, hamming_code(3).stabilizers);
    for (const auto &s : hamming_code(3).stabilizers) {
        ASSERT_TRUE(a.contains(s.to_dense(7)));
    }
    for (const auto &s : same.stabilizers) {
        ASSERT_TRUE(b.contains(s.to_dense(7)));
    }
}

TEST(code_tower, reserve_and_pair) {
    const auto &c0 = tower(0);
    auto r1 = reserve_logical(c0);
    ASSERT_EQ(r1.k, 6u);
    ASSERT_EQ(r1.reserved.size(), 1u);
    ASSERT_EQ(r1.stabilizers, c0.stabilizers);
    auto r2 = reserve_logical(r1);
    ASSERT_EQ(r2.k, 5u);
    ASSERT_EQ(r2.reserved.size(), 2u);
    auto empty = r1;
    for (int i = 0; i < 6; i++) {
        empty = reserve_logical(empty);
    }
    ASSERT_EQ(empty.k, 0u);
    ASSERT_ANY_THROW(reserve_logical(empty));

    auto p = pair_interleave(r1);
    ASSERT_EQ(p.n, 90u);
    ASSERT_EQ(p.k, 12u);
    expect_valid(p);
    for (uint32_t i = 0; i < p.k; i++) {
        bool first = p.logical_z[i].max_qubit() < 45;
        ASSERT_EQ(first, i % 2 == 0) << i;
        ASSERT_EQ(p.logical_x[i].max_qubit() < 45, first);
    }
    auto pe = pair_interleave(empty);
    ASSERT_EQ(pe.n, 90u);
    ASSERT_EQ(pe.k, 0u);
}

TEST(code_tower, built_tower_matches_recursion) {
    for (int r : {0, 1}) {
        const auto &c = tower(r);
        auto p = tower_params(r);
        ASSERT_EQ(std::to_string(c.n), p.n);
        ASSERT_EQ(std::to_string(c.k), p.k);
        ASSERT_EQ(c.level, r);
        expect_valid(c);
    }
    ASSERT_EQ(tower(0).n, 45u);
    ASSERT_EQ(tower(0).k, 7u);
    ASSERT_EQ(tower(1).n, 2790u);
    ASSERT_EQ(tower(1).k, 252u);
    auto p2 = tower_params(2);
    ASSERT_EQ(p2.n, "351540");
    ASSERT_EQ(p2.k, "25602");
    ASSERT_EQ(tower_params(0).d, "3");
    ASSERT_EQ(tower_params(2).d, "27");
    ASSERT_NEAR(tower_params(1).rate, 252.0 / 2790, 1e-12);
    try {
        build_tower(2, 100000);
        FAIL() << "budget not enforced";
    } catch (const BudgetError &e) {
        ASSERT_EQ(e.needed, 351540u);
    }
}

TEST(code_tower, layout_is_a_line) {
    for (int r : {0, 1}) {
        const auto &c = tower(r);
        ASSERT_EQ(c.layout.size(), c.n);
        std::set<uint32_t> pos;
        for (const auto &e : c.layout) {
            pos.insert(e.position);
        }
        ASSERT_EQ(pos.size(), c.n);
        ASSERT_EQ(*pos.rbegin(), c.n - 1);
    }
    for (uint32_t i = 0; i < 15; i++) {
        ASSERT_EQ(tower(0).layout[3 * i].role, QubitRole::Entangle);
        ASSERT_EQ(tower(0).layout[3 * i + 1].role, QubitRole::Data);
        ASSERT_EQ(tower(0).layout[3 * i + 2].role, QubitRole::Cat);
    }
    const auto &c1 = tower(1);
    ASSERT_EQ(c1.children.size(), 62u);
    for (size_t i = 0; i < c1.children.size(); i++) {
        ASSERT_EQ(c1.children[i].end - c1.children[i].begin, 45u);
        if (i > 0) {
            ASSERT_EQ(c1.children[i].begin, c1.children[i - 1].end);
        }
    }
}

TEST(code_tower, logicals_live_on_data_qubits) {
    for (int r : {0, 1}) {
        const auto &c = tower(r);
        std::set<uint32_t> data;
        for (auto q : c.data_qubits()) {
            data.insert(q);
        }
        for (const auto &l : c.logical_x) {
            for (auto [q, p] : l.terms) {
                ASSERT_TRUE(data.count(q)) << q;
            }
        }
        for (const auto &l : c.logical_z) {
            for (auto [q, p] : l.terms) {
                ASSERT_TRUE(data.count(q)) << q;
            }
        }
    }
    // Reserved logicals of level 0 blocks inside C_1 commute with every data logical.
    const auto &c1 = tower(1);
    ASSERT_FALSE(c1.reserved.empty());
    for (const auto &rp : c1.reserved) {
        for (uint32_t i = 0; i < c1.k; i++) {
            ASSERT_TRUE(rp.x.commutes(c1.logical_z[i]));
            ASSERT_TRUE(rp.z.commutes(c1.logical_x[i]));
        }
    }
}

TEST(code_tower, c0_has_data_distance_three) {
    ASSERT_TRUE(data_logicals_up_to(tower(0), 2).empty());
    auto three = data_logicals_up_to(tower(0), 3);
    ASSERT_FALSE(three.empty());
    for (const auto &l : three) {
        ASSERT_EQ(l.weight(), 3u);
    }
}

TEST(code_tower, rate_limits) {
    ASSERT_NEAR(plain_tower_rate(60), 0.197, 0.001);
    auto rates = tower_rates(40);
    for (size_t r = 0; r < rates.size(); r++) {
        ASSERT_GT(rates[r], 1.0 / 20) << r;
        if (r > 0) {
            ASSERT_LE(rates[r], rates[r - 1]) << r;
        }
    }
    ASSERT_NEAR(rates[40], 0.06, 0.005);
}

TEST(code_tower, text_roundtrip) {
    for (int r : {0, 1}) {
        auto text = code_to_text(tower(r), {"level " + std::to_string(r)});
        ASSERT_EQ(code_from_text(text), tower(r));
    }
}

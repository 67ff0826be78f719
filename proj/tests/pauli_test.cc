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

#include "hline/pauli.h"

#include <gtest/gtest.h>

#include <random>

using namespace hline;

namespace {

PauliString random_pauli(size_t n, std::mt19937_64 &rng) {
    PauliString p(n);
    for (size_t q = 0; q < n; q++) {
        p.set(q, static_cast<Pauli1>(rng() & 3));
    }
    p.phase = rng() & 3;
    return p;
}

}  // namespace

TEST(pauli, compose_identity) {
    auto r = PauliString::from_dense("X") * PauliString::from_dense("X");
    ASSERT_EQ(r, PauliString::from_dense("I"));
}

TEST(pauli, compose_x_z_is_minus_i_y) {
    auto r = PauliString::from_dense("X") * PauliString::from_dense("Z");
    ASSERT_EQ(r, PauliString::from_dense("-iY"));
    ASSERT_EQ(r.phase, 3);
}

TEST(pauli, compose_two_qubit_phases_cancel) {
    auto r = PauliString::from_dense("XZ") * PauliString::from_dense("ZX");
    ASSERT_EQ(r, PauliString::from_dense("YY"));
}

TEST(pauli, compose_matches_matrix_products) {
    // Single-qubit products written out from the 2x2 matrices.
    struct Case {
        const char *a, *b, *ab;
    } cases[] = {
        {"X", "Y", "+iZ"}, {"Y", "X", "-iZ"}, {"Y", "Z", "+iX"}, {"Z", "Y", "-iX"},
        {"Z", "X", "+iY"}, {"X", "Z", "-iY"}, {"Y", "Y", "+I"},  {"-X", "iZ", "-Y"},
    };
    for (auto &c : cases) {
        EXPECT_EQ(PauliString::from_dense(c.a) * PauliString::from_dense(c.b), PauliString::from_dense(c.ab))
            << c.a << " * " << c.b;
    }
}

TEST(pauli, compose_length_mismatch) {
    ASSERT_THROW(PauliString::from_dense("XX") * PauliString::from_dense("X"), DimensionError);
}

TEST(pauli, commutes) {
    ASSERT_FALSE(pauli_commutes(PauliString::from_dense("X"), PauliString::from_dense("Z")));
    ASSERT_TRUE(pauli_commutes(PauliString::from_dense("XX"), PauliString::from_dense("ZZ")));
    ASSERT_TRUE(pauli_commutes(PauliString::from_dense("ZI"), PauliString::from_dense("ZZ")));
    ASSERT_THROW(pauli_commutes(PauliString::from_dense("ZI"), PauliString::from_dense("Z")), DimensionError);
}

TEST(pauli, cnot_identities) {
    ASSERT_EQ(conjugate_by_cnot(PauliString::from_dense("XI"), 0, 1), PauliString::from_dense("XX"));
    ASSERT_EQ(conjugate_by_cnot(PauliString::from_dense("IZ"), 0, 1), PauliString::from_dense("ZZ"));
    ASSERT_EQ(conjugate_by_cnot(PauliString::from_dense("ZI"), 0, 1), PauliString::from_dense("ZI"));
    ASSERT_EQ(conjugate_by_cnot(PauliString::from_dense("IX"), 0, 1), PauliString::from_dense("IX"));
    ASSERT_EQ(conjugate_by_cnot(PauliString::from_dense("XZ"), 0, 1), PauliString::from_dense("-YY"));
    ASSERT_THROW(conjugate_by_cnot(PauliString::from_dense("XZ"), 1, 1), InvalidGateError);
}

TEST(pauli, cnot_conjugation_is_homomorphism) {
    // C (ab) C = (C a C)(C b C) pins the sign rule down given the generator images.
    std::mt19937_64 rng(5);
    for (int t = 0; t < 2000; t++) {
        size_t n = 2 + rng() % 6;
        auto a = random_pauli(n, rng), b = random_pauli(n, rng);
        size_t c = rng() % n, g = rng() % n;
        if (c == g) {
            continue;
        }
        ASSERT_EQ(conjugate_by_cnot(a * b, c, g), conjugate_by_cnot(a, c, g) * conjugate_by_cnot(b, c, g));
        ASSERT_EQ(conjugate_by_h(a * b, c), conjugate_by_h(a, c) * conjugate_by_h(b, c));
    }
}

TEST(pauli, cnot_preserves_commutation_randomized) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 10000; t++) {
        size_t n = 2 + rng() % 9;
        auto a = random_pauli(n, rng), b = random_pauli(n, rng);
        size_t c = rng() % n, g = (c + 1 + rng() % (n - 1)) % n;
        ASSERT_EQ(pauli_commutes(a, b), pauli_commutes(conjugate_by_cnot(a, c, g), conjugate_by_cnot(b, c, g)));
    }
}

TEST(pauli, double_cnot_is_identity) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 2000; t++) {
        size_t n = 2 + rng() % 9;
        auto a = random_pauli(n, rng);
        size_t c = rng() % n, g = (c + 1 + rng() % (n - 1)) % n;
        ASSERT_EQ(conjugate_by_cnot(conjugate_by_cnot(a, c, g), c, g), a);
    }
}

TEST(pauli, sparse_roundtrip) {
    auto s = SparsePauli::parse("X1*X3*Z7");
    ASSERT_EQ(s.str(), "X1*X3*Z7");
    auto d = s.to_dense(8);
    ASSERT_EQ(d, PauliString::from_dense("IXIXIIIZ"));
    ASSERT_EQ(SparsePauli::from_dense(d), s);
    ASSERT_EQ(SparsePauli::parse("I").str(), "I");
    ASSERT_THROW(SparsePauli::parse("X1*Q2"), std::invalid_argument);
    ASSERT_THROW(SparsePauli::parse("X1*Z1"), std::invalid_argument);
}

TEST(pauli, sparse_product_and_commutation) {
    auto a = SparsePauli::parse("X0*Z2*Y5");
    auto b = SparsePauli::parse("X0*X2*Z9");
    ASSERT_EQ((a * b).str(), "Y2*Y5*Z9");
    std::mt19937_64 rng(3);
    for (int t = 0; t < 1000; t++) {
        auto p = random_pauli(12, rng), q = random_pauli(12, rng);
        ASSERT_EQ(SparsePauli::from_dense(p).commutes(SparsePauli::from_dense(q)), pauli_commutes(p, q));
    }
}

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

#ifndef HLINE_TABLEAU_H
#define HLINE_TABLEAU_H

#include <cstdint>
#include <optional>
#include <vector>

#include "hline/circuit.h"
#include "hline/pauli.h"

namespace hline {

/// Counter-based generator: the value for (seed, stream, counter) is a pure function.
uint64_t mix64(uint64_t x);
uint64_t derive_seed(uint64_t seed, uint64_t index);
inline bool random_bit(uint64_t seed, uint64_t stream, uint64_t counter) {
    return mix64(seed ^ mix64(stream * 0x9E3779B97F4A7C15ULL + counter + 1)) & 1;
}

/// A Pauli fault applied after a circuit location.
///
/// `layer == kInputLayer` places the fault before the first layer. `op == kIdleOp` marks a fault on
/// a qubit not touched by the layer. `p0` acts on `q0`, `p1` on `q1` (two-qubit faults only).
struct Fault {
    static constexpr uint32_t kInputLayer = UINT32_MAX;
    static constexpr uint32_t kIdleOp = UINT32_MAX;
    static constexpr uint32_t kNoQubit = UINT32_MAX;

    uint32_t layer = 0;
    uint32_t op = 0;
    uint32_t q0 = 0;
    uint32_t q1 = kNoQubit;
    Pauli1 p0 = Pauli1::I;
    Pauli1 p1 = Pauli1::I;

    bool is_idle() const { return op == kIdleOp; }
    PauliString to_pauli(size_t n) const;
    bool operator==(const Fault &) const = default;
};

/// Stabilizer tableau with destabilizers (rows 0..n-1 destabilizers, n..2n-1 stabilizers).
class Tableau {
   public:
    /// The all-|0> state.
    explicit Tableau(size_t n);

    size_t num_qubits() const { return n_; }
    void h(size_t q);
    void cx(size_t c, size_t t);
    void apply_pauli(const PauliString &p);
    void apply_pauli1(size_t q, Pauli1 p);
    /// Measures Z_q. `random_outcome` is used only when the outcome is not determined.
    bool mz(size_t q, bool random_outcome);
    bool is_deterministic_z(size_t q) const;
    void reset(size_t q, bool random_outcome) {
        if (mz(q, random_outcome)) {
            apply_pauli1(q, Pauli1::X);
        }
    }

    PauliString stabilizer(size_t i) const { return row(n_ + i); }
    PauliString destabilizer(size_t i) const { return row(i); }
    /// +1 or -1 when +-p is in the stabilizer group, nullopt otherwise.
    std::optional<int> expectation(const PauliString &p) const;
    /// Symplectic rank of the stabilizer rows.
    size_t stabilizer_rank() const;
    /// Checks commutation relations among stabilizer and destabilizer rows.
    bool is_consistent() const;

   private:
    PauliString row(size_t i) const;
    uint64_t *xrow(size_t i) { return &x_[i * w_]; }
    uint64_t *zrow(size_t i) { return &z_[i * w_]; }
    const uint64_t *xrow(size_t i) const { return &x_[i * w_]; }
    const uint64_t *zrow(size_t i) const { return &z_[i * w_]; }
    void rowmult(size_t h, size_t i);
    void rowcopy(size_t dst, size_t src);
    void rowclear(size_t i);

    size_t n_;
    size_t w_;
    std::vector<uint64_t> x_;
    std::vector<uint64_t> z_;
    std::vector<uint8_t> r_;  // power of i
};

struct TableauRun {
    std::vector<uint8_t> record;
    Tableau final_state;
};

/// Exact simulation. Random measurement (and reset) outcomes are drawn from `seed` with one counter per
/// record index, so two runs with the same seed resolve the same random events identically.
/// `input_error` (optional) is applied before the first layer.
TableauRun tableau_run(const Circuit &c, const std::vector<Fault> &faults, uint64_t seed,
                       const PauliString *input_error = nullptr);
std::vector<uint8_t> tableau_simulate(const Circuit &c, const std::vector<Fault> &faults, uint64_t seed);

/// Returns Q with faulty = Q * reference up to phase, as the product of reference destabilizers over
/// stabilizer generators whose sign differs. Throws if the states are not Pauli-related.
PauliString pauli_difference(const Tableau &reference, const Tableau &faulty);

}  // namespace hline

#endif

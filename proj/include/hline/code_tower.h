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

#ifndef HLINE_CODE_TOWER_H
#define HLINE_CODE_TOWER_H

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hline/circuit.h"
#include "hline/pauli.h"

namespace hline {

constexpr uint64_t kDefaultQubitBudget = 1000000;

/// Qubit budget from HAMMING_LINE_BUDGET, falling back to kDefaultQubitBudget.
uint64_t qubit_budget_from_env();

struct BudgetError : std::runtime_error {
    BudgetError(const std::string &what, uint64_t needed) : std::runtime_error(what), needed(needed) {}
    uint64_t needed;
};

struct ReservedPair {
    int level;
    SparsePauli x;
    SparsePauli z;
    bool operator==(const ReservedPair &) const = default;
};

struct LayoutEntry {
    uint32_t position;
    QubitRole role;
    bool operator==(const LayoutEntry &) const = default;
};

struct ChildSpan {
    uint32_t begin;
    uint32_t end;
    bool operator==(const ChildSpan &) const = default;
};

struct StabilizerCode {
    uint32_t n = 0;
    uint32_t k = 0;
    int level = 0;
    /// The first `num_outer` stabilizers are the outer (Hamming) stabilizers, grouped by outer copy,
    /// `outer_per_copy` per copy, X-type before Z-type within a copy.
    std::vector<SparsePauli> stabilizers;
    uint32_t num_outer = 0;
    uint32_t outer_per_copy = 0;
    std::vector<SparsePauli> logical_x;
    std::vector<SparsePauli> logical_z;
    std::vector<ReservedPair> reserved;
    std::vector<LayoutEntry> layout;
    std::vector<ChildSpan> children;

    bool operator==(const StabilizerCode &) const = default;
    std::vector<uint32_t> data_qubits() const;
};

/// The [[2^m-1, 2^m-2m-1, 3]] quantum Hamming code. Stabilizer k (X then Z) acts on qubit i iff bit k
/// of i+1 is set.
StabilizerCode hamming_code(int m);
/// [[3,1,1]] on an (entangle, data, cat) triple; helpers stabilized by Z.
StabilizerCode triple_code();
/// [[1,1,1]].
StabilizerCode trivial_code();
StabilizerCode interleave_concat(const StabilizerCode &outer, const StabilizerCode &inner);
StabilizerCode reserve_logical(const StabilizerCode &code);
StabilizerCode pair_interleave(const StabilizerCode &code);
StabilizerCode build_tower(int r, uint64_t budget = kDefaultQubitBudget);

/// Exact parameters from the recursions. Integers are decimal strings since they outgrow 128 bits.
struct CodeParams {
    int r = 0;
    std::string n;
    std::string k;
    double rate = 0;
    std::string d;
    std::string s;
    /// Layers per fault-tolerant measurement; 0 when no depth model was supplied.
    double T = 0;
};

/// Depths of built 0-Meas and 1-Meas circuits; T_r for r ≥ 2 extrapolates T_r = c n_r T_{r-1}.
struct DepthModel {
    double T0 = 0;
    double T1 = 0;
};

CodeParams tower_params(int r, const DepthModel *depth = nullptr);
/// n_r as an integer; throws BudgetError-free std::overflow_error past 64 bits.
uint64_t tower_n(int r);
uint64_t tower_k(int r);
/// k_r / n_r for r = 0..max_r computed in floating point.
std::vector<double> tower_rates(int max_r);
/// Product over i = 4..m of (2^i - 2i - 1)/(2^i - 1): rate of the unmodified Hamming tower.
double plain_tower_rate(int m);

/// Symplectic GF(2) span of a set of Paulis (signs ignored). reduce() returns the coset representative
/// with zeros on every pivot, so two Paulis are equivalent iff their reductions agree.
class PauliSpan {
   public:
    PauliSpan(uint32_t n, const std::vector<SparsePauli> &generators);
    void add(const PauliString &p);
    PauliString reduce(const PauliString &p) const;
    bool contains(const PauliString &p) const { return reduce(p).is_identity(); }
    size_t rank() const { return rows_.size(); }

   private:
    BitVec pack(const PauliString &p) const;
    void reduce_bits(BitVec &v) const;

    uint32_t n_;
    std::vector<BitVec> rows_;
    std::vector<uint32_t> pivots_;
};

/// Every Pauli supported on at most `max_weight` data qubits that commutes with all stabilizers but
/// is not itself in the stabilizer group. Empty means the data distance exceeds `max_weight`.
std::vector<SparsePauli> data_logicals_up_to(const StabilizerCode &c, uint32_t max_weight);

std::string code_to_text(const StabilizerCode &c, const std::vector<std::string> &header = {});
StabilizerCode code_from_text(std::string_view text);

}  // namespace hline

#endif

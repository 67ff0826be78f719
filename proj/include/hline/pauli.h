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

#ifndef HLINE_PAULI_H
#define HLINE_PAULI_H

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hline {

/// Single-qubit Pauli label packed as (x bit) | (z bit << 1).
enum class Pauli1 : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char pauli1_char(Pauli1 p);

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidGateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A fixed-length bit vector backed by 64-bit words. Bits past `size()` are kept zero.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    size_t size() const { return n_; }
    size_t num_words() const { return words_.size(); }
    bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool v) {
        uint64_t m = uint64_t{1} << (i & 63);
        if (v) {
            words_[i >> 6] |= m;
        } else {
            words_[i >> 6] &= ~m;
        }
    }
    void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }
    uint64_t *data() { return words_.data(); }
    const uint64_t *data() const { return words_.data(); }
    uint64_t &word(size_t k) { return words_[k]; }
    uint64_t word(size_t k) const { return words_[k]; }

    BitVec &operator^=(const BitVec &other);
    bool operator==(const BitVec &other) const = default;
    bool any() const;
    size_t popcount() const;
    /// Indices of set bits in increasing order.
    std::vector<uint32_t> ones() const;
    void clear();

   private:
    size_t n_ = 0;
    std::vector<uint64_t> words_;
};

/// A signed n-qubit Pauli operator i^phase * prod_q P_q, with Y = (x,z) = (1,1).
///
/// Multiplication follows the convention X*Z = -iY.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(size_t n) : xs(n), zs(n) {}

    /// Parses dense text such as "+XIZY" or "-iXX". Sign prefix is optional.
    static PauliString from_dense(std::string_view text);
    /// Parses sparse text such as "X1*X3*Z7" (0-indexed qubits) onto n qubits.
    static PauliString from_sparse(std::string_view text, size_t n);

    size_t num_qubits() const { return xs.size(); }
    Pauli1 get(size_t q) const {
        return static_cast<Pauli1>(static_cast<uint8_t>(xs.get(q)) | (static_cast<uint8_t>(zs.get(q)) << 1));
    }
    void set(size_t q, Pauli1 p) {
        xs.set(q, static_cast<uint8_t>(p) & 1);
        zs.set(q, static_cast<uint8_t>(p) & 2);
    }
    size_t weight() const;
    bool is_identity() const { return !xs.any() && !zs.any(); }
    std::vector<uint32_t> support() const;

    /// Returns this * other (operator applied as matrix product: this on the left).
    PauliString operator*(const PauliString &other) const;
    PauliString &operator*=(const PauliString &other);
    bool operator==(const PauliString &other) const = default;

    std::string str() const;
    /// Sparse text "X1*X3*Z7"; identity prints as "I". Phase is not included.
    std::string sparse_str() const;

    BitVec xs;
    BitVec zs;
    /// Power of i, in 0..3.
    uint8_t phase = 0;
};

PauliString pauli_compose(const PauliString &a, const PauliString &b);
bool pauli_commutes(const PauliString &a, const PauliString &b);
/// Returns CNOT * p * CNOT.
PauliString conjugate_by_cnot(const PauliString &p, size_t control, size_t target);
PauliString conjugate_by_h(const PauliString &p, size_t q);

/// Sparse unsigned Pauli operator on a large register: sorted (qubit, pauli) terms.
struct SparsePauli {
    std::vector<std::pair<uint32_t, Pauli1>> terms;

    static SparsePauli parse(std::string_view text);
    static SparsePauli from_dense(const PauliString &p);
    PauliString to_dense(size_t n) const;

    size_t weight() const { return terms.size(); }
    bool empty() const { return terms.empty(); }
    uint32_t min_qubit() const { return terms.front().first; }
    uint32_t max_qubit() const { return terms.back().first; }
    Pauli1 get(uint32_t q) const;
    bool is_x_type() const;
    bool is_z_type() const;
    bool has_y() const;
    SparsePauli shifted(uint32_t offset) const;
    /// Product ignoring phase.
    SparsePauli operator*(const SparsePauli &other) const;
    bool commutes(const SparsePauli &other) const;
    bool operator==(const SparsePauli &other) const = default;
    bool operator<(const SparsePauli &other) const { return terms < other.terms; }
    std::string str() const;
};

}  // namespace hline

#endif

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

#ifndef HLINE_CIRCUIT_H
#define HLINE_CIRCUIT_H

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hline {

enum class GateKind : uint8_t { CX, H, RZ, MZ };

enum class QubitRole : uint8_t { Data, Cat, Entangle };

const char *gate_name(GateKind k);
const char *role_name(QubitRole r);

struct Operation {
    GateKind kind;
    uint32_t a;
    uint32_t b;  // target of CX; unused otherwise

    static Operation cx(uint32_t c, uint32_t t) { return {GateKind::CX, c, t}; }
    static Operation h(uint32_t q) { return {GateKind::H, q, 0}; }
    static Operation rz(uint32_t q) { return {GateKind::RZ, q, 0}; }
    static Operation mz(uint32_t q) { return {GateKind::MZ, q, 0}; }
    bool two_qubit() const { return kind == GateKind::CX; }
    bool operator==(const Operation &) const = default;
};

using Layer = std::vector<Operation>;

/// Metadata for a group of measurement bits: which gadget produced them and what they measure.
struct DetectorEntry {
    int level = 0;
    std::string gadget;
    int rep = 0;
    std::string stab;
    std::vector<uint64_t> indices;
    bool operator==(const DetectorEntry &) const = default;
};

struct ObservableEntry {
    std::string name;
    std::vector<uint64_t> indices;
    bool operator==(const ObservableEntry &) const = default;
};

/// A flat layered circuit on a line. Measurement record indices are implicit: the i'th MZ in
/// (layer, op) order writes record bit i.
struct Circuit {
    uint32_t num_qubits = 0;
    std::vector<uint32_t> positions;
    std::vector<QubitRole> roles;
    std::vector<Layer> layers;
    std::vector<DetectorEntry> detectors;
    std::vector<ObservableEntry> observables;

    explicit Circuit(uint32_t n = 0);
    uint64_t num_measurements() const;
    uint64_t num_operations() const;
    size_t depth() const { return layers.size(); }
    /// Throws std::invalid_argument if an index is out of range or a layer reuses a qubit.
    void validate() const;
    bool operator==(const Circuit &) const = default;
};

struct LocalityViolation {
    size_t layer;
    size_t op;
    uint32_t a;
    uint32_t b;
};

std::vector<LocalityViolation> check_locality(const Circuit &c);

struct ParseError : std::runtime_error {
    ParseError(size_t line, const std::string &msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
    size_t line;
};

/// Serializes to the line-oriented text format. `header` lines are emitted as `#` comments first.
std::string circuit_to_text(const Circuit &c, const std::vector<std::string> &header = {});
Circuit circuit_from_text(std::string_view text);

}  // namespace hline

#endif

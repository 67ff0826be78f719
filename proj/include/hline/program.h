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

#ifndef HLINE_PROGRAM_H
#define HLINE_PROGRAM_H

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hline/circuit.h"
#include "hline/pauli.h"

namespace hline {

/// Gadgets are trees. Leaves hold flat layers on local qubits 0..scope-1; Seq children run one after
/// another; Par children run side by side on disjoint qubit ranges. Subtrees are shared, so a level-1
/// memory experiment with billions of operations is a few hundred thousand nodes.
enum class NodeKind : uint8_t { Leaf, Seq, Par };

enum class Role : uint8_t {
    Generic,
    Reset,
    Readout,
    CatPrep,
    Hook0,
    Ec0,
    Meas0,
    EcLayer,
    Step,
    Hook1,
    Ec1,
    Meas1,
    Memory,
};

const char *role_label(Role r);

struct Node;
using NodeRef = std::shared_ptr<const Node>;

struct Placement {
    NodeRef node;
    uint32_t offset = 0;
    /// Meaning depends on the parent: repetition index inside EC/Meas, block index inside a step,
    /// step kind inside a level-1 hook.
    uint32_t tag = 0;
};

/// Qubits [begin, end) of the node's scope sit idle for `layers` layers once child `after_child` is done.
struct IdleSpan {
    uint32_t after_child;
    uint32_t begin;
    uint32_t end;
    uint64_t layers;
};

/// Noise exposure of one qubit, applied after a leaf layer: `layers` > 1 only for idle stretches.
struct NoiseSlot {
    uint32_t qubit;
    uint32_t layers;
    bool idle;
};

/// One site of a level-0 hook: cat qubit, data qubit, entangling qubit (the one in the same triple)
/// and the Pauli on the data qubit (I for span sites outside the support).
struct Hook0Site {
    uint32_t cat;
    uint32_t data;
    uint32_t ent;
    Pauli1 pauli;
};

struct Hook0Info {
    SparsePauli op;
    std::vector<Hook0Site> sites;
};

/// A level-1 hook site: a 0-block of the scope and the Pauli over that block's 7 logical qubits
/// (identity for span blocks outside the support).
struct Hook1Site {
    uint32_t block;
    PauliString logical;
    bool active() const { return !logical.is_identity(); }
};

struct Hook1Info {
    uint32_t first_block;
    uint32_t last_block;
    std::vector<Hook1Site> sites;  // one per span block, in line order
};

enum class StepKind : uint32_t { PrepX = 1, ZZ = 2, Parity = 3, ZRead = 4, Ec = 5 };

inline uint32_t step_tag(StepKind k, uint32_t round = 0) { return static_cast<uint32_t>(k) * 16 + round; }
inline StepKind step_kind(uint32_t tag) { return static_cast<StepKind>(tag / 16); }
inline uint32_t step_round(uint32_t tag) { return tag % 16; }

struct Node {
    NodeKind kind = NodeKind::Leaf;
    Role role = Role::Generic;
    uint32_t scope = 0;
    std::string label;

    std::vector<Layer> layers;
    std::vector<Placement> children;
    std::vector<IdleSpan> idle;

    // Leaf noise schedule: slots[slot_start[l] .. slot_start[l+1]) follow layer l.
    std::vector<uint32_t> slot_start;
    std::vector<NoiseSlot> slots;

    uint64_t depth = 0;
    uint64_t measurements = 0;
    uint64_t operations = 0;

    std::shared_ptr<const Hook0Info> hook0;
    std::shared_ptr<const Hook1Info> hook1;
    /// Number of 0-blocks in scope for gadgets that live on whole blocks.
    uint32_t blocks = 0;
};

NodeRef make_leaf(Role role, uint32_t scope, std::vector<Layer> layers, std::string label = {});
NodeRef make_seq(Role role, uint32_t scope, std::vector<Placement> children, std::string label = {});
NodeRef make_par(Role role, uint32_t scope, std::vector<Placement> children, std::string label = {});
/// Fills derived fields (depth, counts, idle spans, noise slots). Used by the make_* helpers.
void finalize_node(Node &n);

/// Flattened circuit plus the map from depth-first (node-local) measurement order to record order.
struct FlatProgram {
    Circuit circuit;
    std::vector<uint64_t> dfs_to_record;
};

/// Layout for flattening: per-qubit position and role; identity positions when empty.
struct LineLayout {
    std::vector<uint32_t> positions;
    std::vector<QubitRole> roles;
};

FlatProgram flatten(const NodeRef &root, const LineLayout &layout, uint64_t max_operations = 50'000'000);

struct ProgramLocalityViolation {
    std::string leaf;
    uint32_t a;
    uint32_t b;
};

/// Locality on the hierarchical program: every distinct leaf is checked once (placements translate
/// qubit indices by offsets, which preserves adjacency when positions equal qubit indices).
std::vector<ProgramLocalityViolation> check_locality(const NodeRef &root);

/// Number of distinct nodes reachable from root.
size_t count_distinct_nodes(const NodeRef &root);

}  // namespace hline

#endif

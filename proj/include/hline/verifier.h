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

#ifndef HLINE_VERIFIER_H
#define HLINE_VERIFIER_H

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hline/builder.h"
#include "hline/decoder.h"

namespace hline {

enum class AdjClass { Clean, SingleDataError, AdjacentPair, Violation };
const char *adj_class_name(AdjClass c);

/// A level-0 gadget ready for fault injection: its tree, flat circuit and line layout.
struct Gadget {
    std::string name;
    NodeRef node;
    uint32_t nblocks = 1;
    FlatProgram program;
    LineLayout layout;
    /// Decoding returns an outcome (hooks and measurements).
    bool measures = false;
    /// Noiseless lead-in (an EC layer, then the gadget itself when it measures) followed by the
    /// gadget, so that the gadget starts in a code state where its outcome is deterministic.
    NodeRef lead_in;
    FlatProgram lead_in_program;
    uint32_t lead_in_depth = 0;
};

Gadget make_gadget(Builder &b, NodeRef node, uint32_t nblocks, std::string name);

struct FaultEffect {
    /// Minimum-weight data Pauli equivalent to the residual (physical error times decoder frame).
    PauliString residual_data_error;
    /// Record indices whose bit differs from the noiseless run.
    std::vector<uint64_t> measurement_flips;
    /// One entry for measuring gadgets: the decoded outcome differs from the noiseless one.
    std::vector<uint8_t> outcome_wrong;
    AdjClass adj_classification = AdjClass::Clean;
};

/// Weight 1: every (layer, operation) slot times every nontrivial Pauli on its support (3 per
/// one-qubit op, 15 per CX), then idle qubits (3 each) when `include_idle`. Deterministic order.
std::vector<Fault> enumerate_fault_locations(const Circuit &c, bool include_idle = true);
/// Weight 1 or 2 as fault sets; weight 2 lists unordered pairs of distinct weight-1 faults.
/// Throws std::length_error when the list would exceed `max_sets`.
std::vector<std::vector<Fault>> enumerate_fault_locations(const Circuit &c, int weight, bool include_idle = true,
                                                          uint64_t max_sets = uint64_t{1} << 24);

/// Classifies a data residual: weight after reduction modulo the H_4 stabilizers of each block.
/// With `modulo_logicals` the residual is reduced modulo the whole normalizer (syndrome only).
AdjClass classify_residual(const PauliString &residual, const LineLayout &layout, bool modulo_logicals,
                           PauliString *min_rep = nullptr);

/// Exact classification of one fault set (layers relative to the gadget) with two tableau runs of
/// the lead-in program, same seed. Each record is decoded on its own; the residual is the state
/// difference times both decoder frames, taken up to the stabilizer group of the noiseless final
/// state, so errors that act trivially on that state count as clean.
FaultEffect classify_fault(const Builder &b, const Gadget &g, const std::vector<Fault> &faults,
                           const PauliString *input_error = nullptr, uint64_t seed = 0);

/// Bit-sliced classification of up to 64 lanes (faults and optional input errors per lane). The
/// residual is the Pauli itself, reduced modulo the code stabilizers only.
std::vector<FaultEffect> classify_lanes(const Builder &b, const Gadget &g,
                                        const std::vector<std::vector<Fault>> &lane_faults,
                                        const std::vector<PauliString> *lane_inputs = nullptr,
                                        bool modulo_logicals = false);

const std::vector<std::string> &property_ids();

struct VerifyOptions {
    bool include_idle = true;
    /// Pairs of faults for hook gadgets (informational; the properties cover single faults).
    bool two_faults = false;
    uint32_t workers = 1;
    uint64_t seed = 1;
    uint32_t random_inputs = 1000;
};

struct Counterexample {
    std::string gadget;
    std::vector<Fault> faults;
    std::string input;
    FaultEffect effect;
    std::string reason;
};

struct Verdict {
    std::string property;
    uint64_t domain = 0;
    uint64_t idle_domain = 0;
    uint32_t gadgets = 0;
    std::vector<Counterexample> counterexamples;
    bool pass() const { return counterexamples.empty(); }
    std::string report() const;
};

/// Runs one property id at level 0. Throws std::invalid_argument for an unknown id.
Verdict verify_property(const Builder &b, const std::string &property_id, const VerifyOptions &opt = {});

/// Gadget families the properties quantify over.
std::vector<Gadget> hook_gadgets(Builder &b);
std::vector<Gadget> meas_gadgets(Builder &b);

}  // namespace hline

#endif

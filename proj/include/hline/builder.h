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

#ifndef HLINE_BUILDER_H
#define HLINE_BUILDER_H

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hline/code_tower.h"
#include "hline/program.h"

namespace hline {

/// An observable to measure: a Pauli over the logical qubits of one or two adjacent r-blocks
/// (k_r qubits per block, blocks concatenated in line order).
struct ObservableSpec {
    int level = 0;
    std::vector<uint32_t> blocks;
    PauliString pauli;
};

/// Level-0 block facts shared by the builders and the decoder. Qubit indices are block-local.
struct BlockInfo {
    static constexpr uint32_t kN = 45;
    static constexpr uint32_t kHammingN = 15;
    static constexpr uint32_t kChecks = 4;

    static uint32_t ent(uint32_t i) { return 3 * i; }
    static uint32_t data(uint32_t i) { return 3 * i + 1; }
    static uint32_t cat(uint32_t i) { return 3 * i + 2; }

    /// Support (Hamming positions 0..14) of check b; X and Z checks share supports.
    std::vector<uint32_t> check_support[kChecks];
    /// Logical representatives (Hamming positions) of the 7 block logicals.
    std::vector<uint32_t> lx[7];
    std::vector<uint32_t> lz[7];
    uint32_t reserved = 0;
    /// Block logical index of data logical d (the 6 non-reserved logicals in order).
    std::vector<uint32_t> data_logicals;

    /// Y-free block-local physical representative of a Pauli over the 7 block logicals, searched
    /// over the stabilizer coset (minimum weight, lexicographic tie-break).
    SparsePauli logical_rep(const PauliString &logical) const;
    SparsePauli stabilizer(bool x_type, uint32_t b) const;
};

const BlockInfo &block_info();

/// Owns the tower codes a program refers to and caches shared subtrees.
class Builder {
   public:
    explicit Builder(int max_level = 1, uint64_t budget = kDefaultQubitBudget);

    int max_level() const { return max_level_; }
    const StabilizerCode &code(int r) const { return codes_.at(r); }
    uint32_t block_size(int r) const { return code(r).n; }
    /// 0-blocks in an r-block.
    uint32_t zero_blocks(int r) const { return block_size(r) / BlockInfo::kN; }
    LineLayout layout(int r, uint32_t nblocks = 1) const;

    /// Level 0: `sites` are Hamming triple indices in a line of `nblocks` 0-blocks (3 check rounds).
    /// Level 1: `sites` are consecutive 0-block indices inside one 1-block.
    NodeRef build_cat_prep(int level, const std::vector<uint32_t> &sites, uint32_t nblocks = 1);
    NodeRef build_hook(const ObservableSpec &obs);
    NodeRef build_ec(int level);
    NodeRef build_meas(const ObservableSpec &obs);

    /// Level-0 hook of a block-local physical operator on `nblocks` adjacent 0-blocks.
    NodeRef hook0(const SparsePauli &op, uint32_t nblocks, const std::string &label);
    NodeRef meas0(const SparsePauli &op, uint32_t nblocks, const std::string &label);
    /// 0-EC on every 0-block of a line of `nblocks` blocks, in parallel.
    NodeRef ec_layer(uint32_t nblocks);
    /// Level-1 hook from its per-block sites over a line of `nblocks` 0-blocks.
    NodeRef hook1(const std::vector<Hook1Site> &sites, uint32_t nblocks, const std::string &label);

    /// Outer stabilizer `s` (X checks first) of Hamming copy `copy` of a 1-block, as level-1 sites.
    std::vector<Hook1Site> outer_stabilizer_sites(uint32_t copy, uint32_t s) const;
    /// 0-block and block logical carrying position `pos` of outer Hamming copy `copy` of a 1-block.
    std::pair<uint32_t, uint32_t> outer_site(uint32_t copy, uint32_t pos) const;
    /// Level-1 sites of a Pauli over the k_1 logicals of a line of 1-blocks.
    std::vector<Hook1Site> level1_sites(const PauliString &logical, uint32_t nblocks1) const;

   private:
    int max_level_;
    std::map<int, StabilizerCode> codes_;
    std::map<std::string, NodeRef> cache_;
};

/// Memory experiment with the observables it tracks (data qubits of each logical Z representative).
struct MemoryExperiment {
    int level = 0;
    uint32_t cycles = 0;
    NodeRef root;
    std::vector<std::string> observable_names;
    std::vector<std::vector<uint32_t>> observable_support;
    std::vector<uint32_t> readout_qubits;  // in readout order
};

/// Reset, one projecting r-EC, `cycles` r-ECs, transversal Z readout of all data qubits.
/// `observables` lists logical indices of C_r to track (empty means all).
MemoryExperiment build_memory_experiment(Builder &b, int r, uint32_t cycles, std::vector<uint32_t> observables = {});
/// Flattened memory experiment with OBSERVABLE lines tied to the readout.
FlatProgram flatten_memory(const Builder &b, const MemoryExperiment &m, uint64_t max_operations = 50'000'000);

/// Depth of built 0-Meas and 1-Meas of a logical Z.
DepthModel measured_depth_model();

}  // namespace hline

#endif

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

#ifndef HLINE_DECODER_H
#define HLINE_DECODER_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hline/builder.h"
#include "hline/frame.h"

namespace hline {

/// Syndrome of a Hamming code: bit k of the 1-indexed position. Returns the position, or none for 0.
std::optional<uint32_t> hamming_decode(const std::vector<uint8_t> &syndrome, uint32_t m);

inline uint8_t majority3(uint8_t a, uint8_t b, uint8_t c) { return (a & b) | (a & c) | (b & c); }
inline uint64_t majority3(uint64_t a, uint64_t b, uint64_t c) { return (a & b) | (a & c) | (b & c); }

struct RepetitionDecode {
    std::vector<uint32_t> flips;  // cat sites 0..t-1, ascending
    bool low_confidence = false;
};

/// `parity_bits` holds 3 rounds of t-1 checks, round-major; check k compares sites k and k+1.
RepetitionDecode repetition_decode(const std::vector<uint8_t> &parity_bits, uint32_t t);

/// Advisory counters, summed over lanes.
struct DecoderStats {
    uint64_t hooks = 0;
    /// Cat checks that were not unanimous over the three rounds, or a decoded flip set that is
    /// not empty, a single site or an adjacent pair.
    uint64_t cat_low_confidence = 0;
    /// ECs whose first two rounds disagreed on some stabilizer of a copy.
    uint64_t ec_round_disagreements = 0;
    /// Level-1 ECs where copies trusted different rounds.
    uint64_t copy_conflicts = 0;
};

/// Hierarchical decoder of a program tree, 64 lanes at a time. It walks the tree in the same order
/// as the record source and keeps a Pauli frame over the data qubits.
class Decoder {
   public:
    Decoder(const Builder &builder, uint32_t num_qubits);

    /// Walks `node` at `offset`; returns the decoded outcome word for measuring gadgets, else 0.
    uint64_t decode(const Node &node, uint32_t offset, RecordSource &src);

    /// Decodes a memory experiment; returns one prediction word per tracked observable
    /// (bit set = the lane's logical Z reads 1, which for the all-zero input is a failure).
    std::vector<uint64_t> decode_memory(const MemoryExperiment &m, RecordSource &src);

    /// Treats every block as already corrected to the all-zero syndrome (the reference when records
    /// are flips against a noiseless run).
    void assume_zero_reference();

    const FrameState &frame() const { return frame_; }
    FrameState &frame() { return frame_; }
    const DecoderStats &stats() const { return stats_; }
    /// Readout words of the last leaf of role Readout (one per measured qubit).
    const std::vector<uint64_t> &readout() const { return readout_; }

   private:
    void walk_children(const Node &n, uint32_t offset, RecordSource &src, std::vector<uint64_t> *values);
    uint64_t hook0(const Node &n, uint32_t offset, RecordSource &src);
    void ec0(const Node &n, uint32_t offset, RecordSource &src);
    uint64_t hook1(const Node &n, uint32_t offset, RecordSource &src);
    void ec1(const Node &n, uint32_t offset, RecordSource &src);
    void apply_block_logical(uint32_t block_offset, uint32_t logical, bool x_type, uint64_t lanes);

    const Builder &builder_;
    FrameState frame_;
    DecoderStats stats_;
    std::vector<uint64_t> readout_;
    std::vector<uint64_t> scratch_;

    // Level-0 syndrome history per 0-block: X checks then Z checks.
    std::vector<uint64_t> last0_;
    std::vector<uint8_t> seen0_;
    // Level-1 history per 1-block: per copy, X checks then Z checks.
    std::vector<uint64_t> last1_;
    std::vector<uint8_t> seen1_;
    uint32_t n1_ = 0;
    uint32_t copies1_ = 0;
    uint32_t checks1_ = 0;

    // Check syndrome -> Hamming position (1-indexed) for H_4 supports, and physical representatives
    // of single block logicals.
    uint32_t position_of_syndrome0_[16];
    std::vector<uint32_t> lrep_x_[7];
    std::vector<uint32_t> lrep_z_[7];
};

/// Decoded frame restricted to data qubits, plus the observables predicted to read 1.
struct Correction {
    PauliString frame;
    std::vector<std::string> flips;
    std::string to_text() const;
};

/// Single-record decode of a flattened memory experiment.
Correction decode_hierarchical(const Builder &builder, const MemoryExperiment &m, const FlatProgram &program,
                               const std::vector<uint8_t> &record);

}  // namespace hline

#endif

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

#ifndef HLINE_FRAME_H
#define HLINE_FRAME_H

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hline/circuit.h"
#include "hline/pauli.h"
#include "hline/program.h"
#include "hline/tableau.h"

namespace hline {

/// Depolarizing strength per qubit per layer. Idle qubits depolarize too when idle_noise is set.
struct NoiseModel {
    double p = 0;
    bool idle_noise = true;
};

/// 64 Pauli frames side by side: bit j of x[q] / z[q] is lane j's frame on qubit q.
struct FrameState {
    std::vector<uint64_t> x;
    std::vector<uint64_t> z;

    explicit FrameState(size_t n = 0) : x(n), z(n) {}
    size_t num_qubits() const { return x.size(); }
    void apply_pauli1(uint32_t q, Pauli1 p, uint64_t lanes) {
        auto v = static_cast<uint8_t>(p);
        if (v & 1) {
            x[q] ^= lanes;
        }
        if (v & 2) {
            z[q] ^= lanes;
        }
    }
    /// Lane `lane` as a PauliString (phase dropped).
    PauliString lane(size_t lane) const;
    void set_lane(size_t lane, const PauliString &p);
};

/// Feeds measurement words to a walker of a program tree. Leaves arrive in depth-first order.
class RecordSource {
   public:
    virtual ~RecordSource() = default;
    /// Executes (or looks up) leaf `n` placed at `offset`; appends one 64-lane word per measurement.
    virtual void leaf(const Node &n, uint32_t offset, std::vector<uint64_t> &out) = 0;
    /// Qubits [begin, end) wait for `layers` layers.
    virtual void idle(uint32_t begin, uint32_t end, uint64_t layers) {
        (void)begin;
        (void)end;
        (void)layers;
    }
};

/// Noisy 64-lane Pauli frame simulator driven leaf by leaf. Records are flips against a noiseless
/// reference; random-outcome measurements are not re-randomized.
class FrameSource : public RecordSource {
   public:
    FrameSource(uint32_t num_qubits, NoiseModel noise, uint64_t seed);
    void leaf(const Node &n, uint32_t offset, std::vector<uint64_t> &out) override;
    void idle(uint32_t begin, uint32_t end, uint64_t layers) override;

    const FrameState &state() const { return frame_; }
    FrameState &state() { return frame_; }
    uint64_t faults_sampled() const { return hits_; }

   private:
    void expose(uint32_t q, uint64_t layers);
    void redraw();

    FrameState frame_;
    NoiseModel noise_;
    std::mt19937_64 rng_;
    std::optional<std::geometric_distribution<uint64_t>> gap_dist_;
    std::uniform_int_distribution<int> pauli_dist_{1, 3};
    uint64_t gap_ = 0;
    uint64_t hits_ = 0;
};

/// Replays up to 64 flat records through the tree walk using the depth-first to record map.
class FlatRecordSource : public RecordSource {
   public:
    /// words[i] holds bit j = measurement i of lane j.
    FlatRecordSource(const FlatProgram &program, std::vector<uint64_t> words);
    static std::vector<uint64_t> pack(const std::vector<std::vector<uint8_t>> &records);
    void leaf(const Node &n, uint32_t offset, std::vector<uint64_t> &out) override;

   private:
    const FlatProgram &program_;
    std::vector<uint64_t> words_;
    uint64_t next_ = 0;
};

/// For each MZ/RZ of a flat circuit (in execution order): the stabilizer of the noiseless run that
/// anticommutes with Z on the measured qubit, when the outcome is random.
struct FrameReference {
    std::vector<std::optional<PauliString>> random_stabilizer;
};
FrameReference build_frame_reference(const Circuit &c);

struct FlatFrameRun {
    std::vector<uint64_t> flips;  // one word per measurement
    FrameState final_frame;
};

/// Flat frame simulation with per-lane faults (and optional per-lane input errors). With a reference,
/// random-outcome measurements copy the noiseless outcome, so flips equal
/// tableau(faulty, seed) xor tableau(noiseless, seed) bit for bit.
FlatFrameRun flat_frame_run(const Circuit &c, const std::vector<std::vector<Fault>> &lane_faults,
                            const FrameReference *reference = nullptr,
                            const std::vector<PauliString> *lane_inputs = nullptr);

}  // namespace hline

#endif

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

#include "hline/frame.h"

#include <stdexcept>

namespace hline {

PauliString FrameState::lane(size_t lane) const {
    PauliString p(x.size());
    for (size_t q = 0; q < x.size(); q++) {
        p.set(q, static_cast<Pauli1>(((x[q] >> lane) & 1) | (((z[q] >> lane) & 1) << 1)));
    }
    return p;
}

void FrameState::set_lane(size_t lane, const PauliString &p) {
    uint64_t bit = uint64_t{1} << lane;
    for (size_t q = 0; q < x.size(); q++) {
        auto v = static_cast<uint8_t>(p.get(q));
        x[q] = (x[q] & ~bit) | ((v & 1) ? bit : 0);
        z[q] = (z[q] & ~bit) | ((v & 2) ? bit : 0);
    }
}

namespace {

inline void frame_op(FrameState &f, const Operation &op, uint32_t off, std::vector<uint64_t> *out) {
    uint32_t a = op.a + off;
    switch (op.kind) {
        case GateKind::CX: {
            uint32_t b = op.b + off;
            f.x[b] ^= f.x[a];
            f.z[a] ^= f.z[b];
            break;
        }
        case GateKind::H:
            std::swap(f.x[a], f.z[a]);
            break;
        case GateKind::RZ:
            f.x[a] = 0;
            f.z[a] = 0;
            break;
        case GateKind::MZ:
            out->push_back(f.x[a]);
            f.z[a] = 0;
            break;
    }
}

}  // namespace

FrameSource::FrameSource(uint32_t num_qubits, NoiseModel noise, uint64_t seed)
    : frame_(num_qubits), noise_(noise), rng_(seed) {
    if (!(noise.p >= 0 && noise.p < 1)) {
        throw std::invalid_argument("noise strength must lie in [0, 1)");
    }
    if (noise.p > 0) {
        gap_dist_.emplace(noise.p);
        redraw();
    }
}

void FrameSource::redraw() { gap_ = (*gap_dist_)(rng_); }

void FrameSource::expose(uint32_t q, uint64_t layers) {
    // One Bernoulli(p) trial per (layer, lane); trial t hits lane t % 64.
    uint64_t trials = layers * 64, pos = 0;
    while (gap_ < trials - pos) {
        pos += gap_;
        frame_.apply_pauli1(q, static_cast<Pauli1>(pauli_dist_(rng_)), uint64_t{1} << (pos & 63));
        hits_++;
        pos++;
        redraw();
    }
    gap_ -= trials - pos;
}

void FrameSource::leaf(const Node &n, uint32_t offset, std::vector<uint64_t> &out) {
    bool noisy = gap_dist_.has_value();
    for (size_t l = 0; l < n.layers.size(); l++) {
        for (const auto &op : n.layers[l]) {
            frame_op(frame_, op, offset, &out);
        }
        if (!noisy) {
            continue;
        }
        for (uint32_t s = n.slot_start[l]; s < n.slot_start[l + 1]; s++) {
            const auto &slot = n.slots[s];
            if (slot.idle && !noise_.idle_noise) {
                continue;
            }
            expose(slot.qubit + offset, slot.layers);
        }
    }
}

void FrameSource::idle(uint32_t begin, uint32_t end, uint64_t layers) {
    if (!gap_dist_ || !noise_.idle_noise) {
        return;
    }
    for (uint32_t q = begin; q < end; q++) {
        expose(q, layers);
    }
}

FlatRecordSource::FlatRecordSource(const FlatProgram &program, std::vector<uint64_t> words)
    : program_(program), words_(std::move(words)) {
    if (words_.size() != program.dfs_to_record.size()) {
        throw std::invalid_argument("record length " + std::to_string(words_.size()) + " does not match the " +
                                    std::to_string(program.dfs_to_record.size()) + " measurements of the program");
    }
}

std::vector<uint64_t> FlatRecordSource::pack(const std::vector<std::vector<uint8_t>> &records) {
    if (records.empty() || records.size() > 64) {
        throw std::invalid_argument("between 1 and 64 records can be packed");
    }
    std::vector<uint64_t> w(records[0].size());
    for (size_t j = 0; j < records.size(); j++) {
        if (records[j].size() != w.size()) {
            throw std::invalid_argument("records differ in length");
        }
        for (size_t i = 0; i < w.size(); i++) {
            w[i] |= uint64_t{records[j][i] & 1u} << j;
        }
    }
    return w;
}

void FlatRecordSource::leaf(const Node &n, uint32_t, std::vector<uint64_t> &out) {
    for (uint64_t i = 0; i < n.measurements; i++) {
        out.push_back(words_[program_.dfs_to_record[next_++]]);
    }
}

FrameReference build_frame_reference(const Circuit &c) {
    FrameReference ref;
    Tableau t(c.num_qubits);
    for (const auto &layer : c.layers) {
        for (const auto &op : layer) {
            switch (op.kind) {
                case GateKind::CX:
                    t.cx(op.a, op.b);
                    break;
                case GateKind::H:
                    t.h(op.a);
                    break;
                case GateKind::RZ:
                case GateKind::MZ: {
                    std::optional<PauliString> s;
                    if (!t.is_deterministic_z(op.a)) {
                        for (size_t i = 0; i < c.num_qubits; i++) {
                            auto g = t.stabilizer(i);
                            if (static_cast<uint8_t>(g.get(op.a)) & 1) {
                                g.phase = 0;
                                s = std::move(g);
                                break;
                            }
                        }
                    }
                    ref.random_stabilizer.push_back(std::move(s));
                    if (op.kind == GateKind::RZ) {
                        t.reset(op.a, false);
                    } else {
                        t.mz(op.a, false);
                    }
                    break;
                }
            }
        }
    }
    return ref;
}

FlatFrameRun flat_frame_run(const Circuit &c, const std::vector<std::vector<Fault>> &lane_faults,
                            const FrameReference *reference, const std::vector<PauliString> *lane_inputs) {
    if (lane_faults.size() > 64) {
        throw std::invalid_argument("at most 64 lanes");
    }
    struct Hit {
        uint32_t q;
        Pauli1 p;
        uint64_t lanes;
    };
    std::vector<std::vector<Hit>> by_layer(c.layers.size());
    FlatFrameRun run{{}, FrameState(c.num_qubits)};
    auto &f = run.final_frame;
    for (size_t j = 0; j < lane_faults.size(); j++) {
        uint64_t bit = uint64_t{1} << j;
        for (const auto &fl : lane_faults[j]) {
            if (fl.q0 >= c.num_qubits || (fl.q1 != Fault::kNoQubit && fl.q1 >= c.num_qubits)) {
                throw std::out_of_range("fault qubit out of range");
            }
            if (fl.layer == Fault::kInputLayer) {
                f.apply_pauli1(fl.q0, fl.p0, bit);
                if (fl.q1 != Fault::kNoQubit) {
                    f.apply_pauli1(fl.q1, fl.p1, bit);
                }
                continue;
            }
            if (fl.layer >= c.layers.size()) {
                throw std::out_of_range("fault layer " + std::to_string(fl.layer) + " out of range");
            }
            by_layer[fl.layer].push_back({fl.q0, fl.p0, bit});
            if (fl.q1 != Fault::kNoQubit) {
                by_layer[fl.layer].push_back({fl.q1, fl.p1, bit});
            }
        }
    }
    if (lane_inputs) {
        if (lane_inputs->size() > 64) {
            throw std::invalid_argument("at most 64 lanes");
        }
        for (size_t j = 0; j < lane_inputs->size(); j++) {
            const auto &p = (*lane_inputs)[j];
            if (p.num_qubits() != c.num_qubits) {
                throw DimensionError("input error size does not match the circuit");
            }
            for (auto q : p.support()) {
                f.apply_pauli1(q, p.get(q), uint64_t{1} << j);
            }
        }
    }
    size_t k = 0;
    run.flips.reserve(c.num_measurements());
    for (size_t l = 0; l < c.layers.size(); l++) {
        for (const auto &op : c.layers[l]) {
            if (reference && (op.kind == GateKind::MZ || op.kind == GateKind::RZ)) {
                const auto &s = reference->random_stabilizer.at(k++);
                if (s) {
                    // Both runs see the same random outcome; lanes whose frame anticommutes with Z
                    // land on the other branch, which the reference stabilizer maps back.
                    uint64_t flip = f.x[op.a];
                    for (auto q : s->support()) {
                        f.apply_pauli1(q, s->get(q), flip);
                    }
                    if (op.kind == GateKind::MZ) {
                        run.flips.push_back(0);
                        f.z[op.a] = 0;
                    } else {
                        f.x[op.a] = 0;
                        f.z[op.a] = 0;
                    }
                    continue;
                }
            }
            frame_op(f, op, 0, &run.flips);
        }
        for (const auto &h : by_layer[l]) {
            f.apply_pauli1(h.q, h.p, h.lanes);
        }
    }
    return run;
}

}  // namespace hline

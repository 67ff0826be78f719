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

#include "hline/decoder.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hline {

std::optional<uint32_t> hamming_decode(const std::vector<uint8_t> &syndrome, uint32_t m) {
    if (syndrome.size() != m) {
        throw DimensionError("syndrome has " + std::to_string(syndrome.size()) + " bits, expected " + std::to_string(m));
    }
    uint32_t pos = 0;
    for (uint32_t k = 0; k < m; k++) {
        pos |= uint32_t{syndrome[k] & 1u} << k;
    }
    if (pos == 0) {
        return std::nullopt;
    }
    return pos;
}

int trusted_round(bool eq12, bool eq13, bool eq23) {
    if (eq23) {
        return 2;
    }
    if (eq12) {
        return 1;
    }
    if (eq13) {
        return 0;
    }
    return 2;
}

RepetitionDecode repetition_decode(const std::vector<uint8_t> &parity_bits, uint32_t t) {
    if (t < 2 || parity_bits.size() != 3 * (t - 1)) {
        throw DimensionError("expected 3 rounds of t-1 parity checks");
    }
    RepetitionDecode out;
    uint32_t c = t - 1;
    auto round = [&](int r) { return std::vector<uint8_t>(parity_bits.begin() + r * c, parity_bits.begin() + (r + 1) * c); };
    auto r1 = round(0), r2 = round(1), r3 = round(2);
    out.low_confidence = !(r1 == r2 && r2 == r3);
    const auto &use = trusted_round(r1 == r2, r1 == r3, r2 == r3) == 0 ? r1 : trusted_round(r1 == r2, r1 == r3, r2 == r3) == 1 ? r2 : r3;
    std::vector<uint8_t> x(t, 0);
    uint32_t weight = 0;
    for (uint32_t k = 1; k < t; k++) {
        x[k] = x[k - 1] ^ use[k - 1];
        weight += x[k];
    }
    // The complement explains the same checks; keep the lighter set, and on a tie the one holding site 0.
    bool comp = 2 * weight >= t;
    for (uint32_t k = 0; k < t; k++) {
        if (x[k] ^ comp) {
            out.flips.push_back(k);
        }
    }
    bool shape_ok = out.flips.size() <= 1 || (out.flips.size() == 2 && out.flips[1] == out.flips[0] + 1);
    if (!shape_ok) {
        out.low_confidence = true;
    }
    return out;
}

namespace {

// Lane-wise x >= k for a bit-sliced counter.
uint64_t sliced_ge(const uint64_t *cnt, int bits, uint32_t k) {
    uint64_t gt = 0, eq = ~uint64_t{0};
    for (int i = bits - 1; i >= 0; i--) {
        uint64_t kb = ((k >> i) & 1) ? ~uint64_t{0} : 0;
        gt |= eq & cnt[i] & ~kb;
        eq &= ~(cnt[i] ^ kb);
    }
    return gt | eq;
}

void sliced_add(uint64_t *cnt, int bits, uint64_t v) {
    for (int i = 0; i < bits && v; i++) {
        uint64_t carry = cnt[i] & v;
        cnt[i] ^= v;
        v = carry;
    }
}

// Repetition chain over t sites from three rounds of t-1 checks (check k at index k-1). Picks one
// round per lane (trusted_round), then x[0] = 0, x[k] = x[k-1] ^ check k, complemented where the set is
// heavier than half (ties go to the set holding site 0). Returns lanes whose rounds were not unanimous.
uint64_t chain_decode(const uint64_t *r1, const uint64_t *r2, const uint64_t *r3, std::vector<uint64_t> &x, uint32_t t) {
    uint64_t d12 = 0, d13 = 0, d23 = 0;
    for (uint32_t k = 0; k + 1 < t; k++) {
        d12 |= r1[k] ^ r2[k];
        d13 |= r1[k] ^ r3[k];
        d23 |= r2[k] ^ r3[k];
    }
    uint64_t use3 = ~d23 | (d12 & d13);
    uint64_t use2 = ~use3 & ~d12;
    uint64_t use1 = ~use3 & ~use2;
    uint64_t cnt[8] = {};
    x.assign(t, 0);
    for (uint32_t k = 1; k < t; k++) {
        uint64_t chk = (use1 & r1[k - 1]) | (use2 & r2[k - 1]) | (use3 & r3[k - 1]);
        x[k] = x[k - 1] ^ chk;
        sliced_add(cnt, 8, x[k]);
    }
    uint64_t comp = sliced_ge(cnt, 8, (t + 1) / 2);
    for (uint32_t k = 0; k < t; k++) {
        x[k] ^= comp;
    }
    return d12 | d13;
}

}  // namespace

Decoder::Decoder(const Builder &builder, uint32_t num_qubits) : builder_(builder), frame_(num_qubits) {
    const auto &bi = block_info();
    uint32_t nb0 = num_qubits / BlockInfo::kN;
    last0_.assign(size_t{nb0} * 2 * BlockInfo::kChecks, 0);
    seen0_.assign(size_t{nb0} * 2, 0);
    if (builder.max_level() >= 1) {
        const auto &c1 = builder.code(1);
        n1_ = c1.n;
        checks1_ = c1.outer_per_copy;
        copies1_ = c1.num_outer / c1.outer_per_copy;
        uint32_t nb1 = num_qubits / n1_;
        last1_.assign(size_t{nb1} * copies1_ * checks1_, 0);
        seen1_.assign(size_t{nb1} * 2, 0);
    }
    for (auto &p : position_of_syndrome0_) {
        p = 0;
    }
    for (uint32_t i = 0; i < BlockInfo::kHammingN; i++) {
        uint32_t syn = 0;
        for (uint32_t b = 0; b < BlockInfo::kChecks; b++) {
            for (auto j : bi.check_support[b]) {
                if (j == i) {
                    syn |= 1u << b;
                }
            }
        }
        position_of_syndrome0_[syn] = i + 1;
    }
    for (uint32_t l = 0; l < 7; l++) {
        PauliString x(7), z(7);
        x.set(l, Pauli1::X);
        z.set(l, Pauli1::Z);
        for (auto [q, p] : bi.logical_rep(x).terms) {
            lrep_x_[l].push_back(q);
        }
        for (auto [q, p] : bi.logical_rep(z).terms) {
            lrep_z_[l].push_back(q);
        }
    }
}

void Decoder::assume_zero_reference() {
    std::fill(last0_.begin(), last0_.end(), 0);
    std::fill(seen0_.begin(), seen0_.end(), 1);
    std::fill(last1_.begin(), last1_.end(), 0);
    std::fill(seen1_.begin(), seen1_.end(), 1);
}

template <typename F>
static void for_each_child(const Node &n, uint32_t offset, RecordSource &src, F &&f) {
    size_t s = 0;
    for (uint32_t i = 0; i < n.children.size(); i++) {
        f(i, n.children[i], offset + n.children[i].offset);
        for (; s < n.idle.size() && n.idle[s].after_child == i; s++) {
            src.idle(offset + n.idle[s].begin, offset + n.idle[s].end, n.idle[s].layers);
        }
    }
    for (; s < n.idle.size(); s++) {
        src.idle(offset + n.idle[s].begin, offset + n.idle[s].end, n.idle[s].layers);
    }
}

void Decoder::walk_children(const Node &n, uint32_t offset, RecordSource &src, std::vector<uint64_t> *values) {
    for_each_child(n, offset, src, [&](uint32_t, const Placement &c, uint32_t off) {
        uint64_t v = decode(*c.node, off, src);
        if (values) {
            values->push_back(v);
        }
    });
}

uint64_t Decoder::decode(const Node &n, uint32_t offset, RecordSource &src) {
    switch (n.role) {
        case Role::Hook0:
            return hook0(n, offset, src);
        case Role::Ec0:
            ec0(n, offset, src);
            return 0;
        case Role::Hook1:
            return hook1(n, offset, src);
        case Role::Ec1:
            ec1(n, offset, src);
            return 0;
        case Role::Meas0:
        case Role::Meas1: {
            std::vector<uint64_t> v;
            walk_children(n, offset, src, &v);
            uint64_t r[3] = {0, 0, 0};
            for (size_t i = 0; i < v.size(); i++) {
                uint32_t tag = n.children[i].tag;
                if (tag >= 1 && tag <= 3) {
                    r[tag - 1] = v[i];
                }
            }
            return majority3(r[0], r[1], r[2]);
        }
        default:
            break;
    }
    if (n.kind == NodeKind::Leaf) {
        scratch_.clear();
        src.leaf(n, offset, scratch_);
        if (n.role == Role::Readout) {
            readout_ = scratch_;
        }
        if (n.role == Role::Reset) {
            // All-zero product state: every Z-type check reads 0.
            for (uint32_t q = offset; q + BlockInfo::kN <= offset + n.scope; q += BlockInfo::kN) {
                uint32_t b = q / BlockInfo::kN;
                std::fill_n(&last0_[size_t{b} * 2 * BlockInfo::kChecks + BlockInfo::kChecks], BlockInfo::kChecks, 0);
                seen0_[2 * b + 1] = 1;
            }
            for (uint32_t q = offset; n1_ && q + n1_ <= offset + n.scope; q += n1_) {
                uint32_t b = q / n1_;
                for (uint32_t j = 0; j < copies1_; j++) {
                    std::fill_n(&last1_[(size_t{b} * copies1_ + j) * checks1_ + checks1_ / 2], checks1_ / 2, 0);
                }
                seen1_[2 * b + 1] = 1;
            }
        }
        return 0;
    }
    walk_children(n, offset, src, nullptr);
    return 0;
}

uint64_t Decoder::hook0(const Node &n, uint32_t offset, RecordSource &src) {
    scratch_.clear();
    src.leaf(n, offset, scratch_);
    const auto &sites = n.hook0->sites;
    uint32_t t = static_cast<uint32_t>(sites.size());
    uint32_t c = t - 1;
    const auto &w = scratch_;
    std::vector<uint64_t> x;
    uint64_t shaky = chain_decode(&w[0], &w[c], &w[2 * c], x, t);
    uint64_t v = 0;
    for (uint32_t k = 0; k < t; k++) {
        v ^= w[3 * c + k];
    }
    for (uint32_t k = 0; k < t; k++) {
        uint32_t d = sites[k].data + offset;
        switch (sites[k].pauli) {
            case Pauli1::X:
                v ^= frame_.z[d];
                frame_.x[d] ^= x[k];
                break;
            case Pauli1::Z:
                v ^= frame_.x[d];
                frame_.z[d] ^= x[k];
                break;
            default:
                break;
        }
    }
    stats_.hooks++;
    stats_.cat_low_confidence += std::popcount(shaky);
    return v;
}

void Decoder::ec0(const Node &n, uint32_t offset, RecordSource &src) {
    constexpr uint32_t S = 2 * BlockInfo::kChecks;
    std::vector<uint64_t> v;
    v.reserve(3 * S);
    walk_children(n, offset, src, &v);
    if (v.size() != 3 * S) {
        throw std::logic_error("0-EC must hold 3 rounds of 8 hooks");
    }
    uint32_t block = offset / BlockInfo::kN;
    uint64_t agree = ~uint64_t{0};
    for (uint32_t s = 0; s < S; s++) {
        agree &= ~(v[s] ^ v[S + s]);
    }
    stats_.ec_round_disagreements += std::popcount(~agree);
    uint64_t syn[S];
    for (uint32_t s = 0; s < S; s++) {
        syn[s] = (agree & v[s]) | (~agree & v[2 * S + s]);
    }
    uint64_t *last = &last0_[size_t{block} * S];
    for (int half = 0; half < 2; half++) {
        if (!seen0_[2 * block + half]) {
            // No reference yet: this round defines it.
            std::copy_n(syn + half * BlockInfo::kChecks, BlockInfo::kChecks, last + half * BlockInfo::kChecks);
            seen0_[2 * block + half] = 1;
            continue;
        }
        uint64_t d[BlockInfo::kChecks];
        uint64_t any = 0;
        for (uint32_t b = 0; b < BlockInfo::kChecks; b++) {
            d[b] = syn[half * BlockInfo::kChecks + b] ^ last[half * BlockInfo::kChecks + b];
            any |= d[b];
        }
        if (!any) {
            continue;
        }
        for (uint32_t pattern = 1; pattern < 16; pattern++) {
            uint64_t mask = ~uint64_t{0};
            for (uint32_t b = 0; b < BlockInfo::kChecks; b++) {
                mask &= ((pattern >> b) & 1) ? d[b] : ~d[b];
            }
            uint32_t q = offset + BlockInfo::data(position_of_syndrome0_[pattern] - 1);
            // X checks see Z errors and the other way round.
            if (half == 0) {
                frame_.z[q] ^= mask;
            } else {
                frame_.x[q] ^= mask;
            }
        }
    }
}

void Decoder::apply_block_logical(uint32_t block_offset, uint32_t logical, bool x_type, uint64_t lanes) {
    if (x_type) {
        for (auto q : lrep_x_[logical]) {
            frame_.x[block_offset + q] ^= lanes;
        }
    } else {
        for (auto q : lrep_z_[logical]) {
            frame_.z[block_offset + q] ^= lanes;
        }
    }
}

uint64_t Decoder::hook1(const Node &n, uint32_t offset, RecordSource &src) {
    const auto &info = *n.hook1;
    uint32_t t = static_cast<uint32_t>(info.sites.size());
    uint32_t first = info.first_block;
    std::vector<uint64_t> prep(t, 0), parity(t, 0), zread(t, 0);
    std::vector<uint64_t> zz[3];
    for (auto &r : zz) {
        r.assign(t, 0);
    }
    std::vector<uint64_t> vals;
    for_each_child(n, offset, src, [&](uint32_t, const Placement &c, uint32_t off) {
        StepKind kind = step_kind(c.tag);
        if (kind == StepKind::Ec) {
            decode(*c.node, off, src);
            return;
        }
        vals.clear();
        walk_children(*c.node, off, src, &vals);
        for (size_t i = 0; i < vals.size(); i++) {
            uint32_t k = c.node->children[i].tag - first;
            switch (kind) {
                case StepKind::PrepX:
                    prep[k] = vals[i];
                    break;
                case StepKind::ZZ:
                    zz[step_round(c.tag)][k] = vals[i];
                    break;
                case StepKind::Parity:
                    parity[k] = vals[i];
                    break;
                case StepKind::ZRead:
                    zread[k] = vals[i];
                    break;
                default:
                    break;
            }
        }
    });
    // zz[r][k] compares sites k and k+1.
    std::vector<uint64_t> x;
    stats_.cat_low_confidence += std::popcount(chain_decode(zz[0].data(), zz[1].data(), zz[2].data(), x, t));
    uint64_t v = 0;
    for (uint32_t k = 0; k < t; k++) {
        v ^= prep[k] ^ parity[k];
    }
    for (uint32_t k = 0; k < t; k++) {
        const auto &s = info.sites[k];
        if (!s.active()) {
            continue;
        }
        uint64_t fix = x[k] ^ zread[k];
        if (!fix) {
            continue;
        }
        uint32_t boff = offset + s.block * BlockInfo::kN;
        for (auto l : s.logical.support()) {
            auto p = static_cast<uint8_t>(s.logical.get(l));
            if (p & 1) {
                apply_block_logical(boff, l, true, fix);
            }
            if (p & 2) {
                apply_block_logical(boff, l, false, fix);
            }
        }
    }
    return v;
}

void Decoder::ec1(const Node &n, uint32_t offset, RecordSource &src) {
    std::vector<uint64_t> v;
    v.reserve(n.children.size());
    walk_children(n, offset, src, &v);
    uint32_t per_rep = copies1_ * checks1_;
    if (v.size() != 3 * per_rep) {
        throw std::logic_error("1-EC must hold 3 rounds of outer-stabilizer hooks");
    }
    uint32_t block1 = offset / n1_;
    uint64_t *last = &last1_[size_t{block1} * per_rep];
    bool first_half[2] = {!seen1_[2 * block1], !seen1_[2 * block1 + 1]};
    seen1_[2 * block1] = seen1_[2 * block1 + 1] = 1;
    uint32_t m = checks1_ / 2;
    uint64_t all_agree = ~uint64_t{0}, any_agree = 0;
    std::vector<uint64_t> syn(checks1_);
    for (uint32_t j = 0; j < copies1_; j++) {
        uint64_t agree = ~uint64_t{0};
        for (uint32_t s = 0; s < checks1_; s++) {
            agree &= ~(v[j * checks1_ + s] ^ v[per_rep + j * checks1_ + s]);
        }
        stats_.ec_round_disagreements += std::popcount(~agree);
        all_agree &= agree;
        any_agree |= agree;
        for (uint32_t s = 0; s < checks1_; s++) {
            syn[s] = (agree & v[j * checks1_ + s]) | (~agree & v[2 * per_rep + j * checks1_ + s]);
        }
        uint64_t *lj = last + j * checks1_;
        for (int half = 0; half < 2; half++) {
            if (first_half[half]) {
                std::copy_n(syn.begin() + half * m, m, lj + half * m);
                continue;
            }
            std::vector<uint64_t> d(m);
            uint64_t any = 0;
            for (uint32_t b = 0; b < m; b++) {
                d[b] = syn[half * m + b] ^ lj[half * m + b];
                any |= d[b];
            }
            if (!any) {
                continue;
            }
            for (uint32_t pos = 1; pos < (1u << m); pos++) {
                uint64_t mask = ~uint64_t{0};
                for (uint32_t b = 0; b < m; b++) {
                    mask &= ((pos >> b) & 1) ? d[b] : ~d[b];
                }
                if (!mask) {
                    continue;
                }
                auto [blk, lg] = builder_.outer_site(j, pos - 1);
                apply_block_logical(offset + blk * BlockInfo::kN, lg, half == 1, mask);
            }
        }
    }
    stats_.copy_conflicts += std::popcount(any_agree & ~all_agree);
}

std::vector<uint64_t> Decoder::decode_memory(const MemoryExperiment &m, RecordSource &src) {
    decode(*m.root, 0, src);
    const auto &bi = block_info();
    const auto &code = builder_.code(m.level);
    if (readout_.size() != m.readout_qubits.size()) {
        throw std::logic_error("readout length does not match the memory experiment");
    }
    std::vector<uint64_t> val(code.n, 0);
    for (size_t i = 0; i < m.readout_qubits.size(); i++) {
        uint32_t q = m.readout_qubits[i];
        val[q] = readout_[i] ^ frame_.x[q];
    }
    constexpr uint32_t S = 2 * BlockInfo::kChecks;
    uint32_t nb0 = code.n / BlockInfo::kN;
    for (uint32_t b = 0; b < nb0; b++) {
        uint32_t boff = b * BlockInfo::kN;
        uint64_t d[BlockInfo::kChecks];
        uint64_t any = 0;
        for (uint32_t s = 0; s < BlockInfo::kChecks; s++) {
            d[s] = last0_[size_t{b} * S + BlockInfo::kChecks + s];
            for (auto i : bi.check_support[s]) {
                d[s] ^= val[boff + BlockInfo::data(i)];
            }
            any |= d[s];
        }
        if (!any) {
            continue;
        }
        for (uint32_t pattern = 1; pattern < 16; pattern++) {
            uint64_t mask = ~uint64_t{0};
            for (uint32_t s = 0; s < BlockInfo::kChecks; s++) {
                mask &= ((pattern >> s) & 1) ? d[s] : ~d[s];
            }
            val[boff + BlockInfo::data(position_of_syndrome0_[pattern] - 1)] ^= mask;
        }
    }
    if (m.level == 1) {
        uint32_t per0 = n1_ / BlockInfo::kN;
        uint32_t mm = checks1_ / 2;
        for (uint32_t u = 0; u < code.n / n1_; u++) {
            uint32_t uoff = u * n1_;
            std::vector<uint64_t> lz(size_t{per0} * 7, 0);
            for (uint32_t b = 0; b < per0; b++) {
                for (uint32_t l = 0; l < 7; l++) {
                    for (auto q : lrep_z_[l]) {
                        lz[b * 7 + l] ^= val[uoff + b * BlockInfo::kN + q];
                    }
                }
            }
            for (uint32_t j = 0; j < copies1_; j++) {
                std::vector<uint64_t> d(mm);
                uint64_t any = 0;
                for (uint32_t s = 0; s < mm; s++) {
                    d[s] = last1_[(size_t{u} * copies1_ + j) * checks1_ + mm + s];
                    for (uint32_t i = 0; i + 1 < (1u << mm); i++) {
                        if (((i + 1) >> s) & 1) {
                            auto [blk, lg] = builder_.outer_site(j, i);
                            d[s] ^= lz[blk * 7 + lg];
                        }
                    }
                    any |= d[s];
                }
                if (!any) {
                    continue;
                }
                for (uint32_t pos = 1; pos < (1u << mm); pos++) {
                    uint64_t mask = ~uint64_t{0};
                    for (uint32_t s = 0; s < mm; s++) {
                        mask &= ((pos >> s) & 1) ? d[s] : ~d[s];
                    }
                    auto [blk, lg] = builder_.outer_site(j, pos - 1);
                    for (auto q : lrep_x_[lg]) {
                        val[uoff + blk * BlockInfo::kN + q] ^= mask;
                    }
                }
            }
        }
    }
    std::vector<uint64_t> out;
    for (const auto &sup : m.observable_support) {
        uint64_t o = 0;
        for (auto q : sup) {
            o ^= val[q];
        }
        out.push_back(o);
    }
    return out;
}

std::string Correction::to_text() const {
    std::string s = "FRAME " + SparsePauli::from_dense(frame).str() + "\nFLIPS";
    for (const auto &f : flips) {
        s += " " + f;
    }
    return s + "\n";
}

Correction decode_hierarchical(const Builder &builder, const MemoryExperiment &m, const FlatProgram &program,
                               const std::vector<uint8_t> &record) {
    if (record.size() != program.dfs_to_record.size()) {
        throw std::invalid_argument("record has " + std::to_string(record.size()) + " bits but the program measures " +
                                    std::to_string(program.dfs_to_record.size()));
    }
    Decoder dec(builder, m.root->scope);
    FlatRecordSource src(program, FlatRecordSource::pack({record}));
    auto pred = dec.decode_memory(m, src);
    Correction c{dec.frame().lane(0), {}};
    for (size_t o = 0; o < pred.size(); o++) {
        if (pred[o] & 1) {
            c.flips.push_back(m.observable_names[o]);
        }
    }
    return c;
}

}  // namespace hline

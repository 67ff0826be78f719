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

#include "hline/tableau.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hline {

uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

uint64_t derive_seed(uint64_t seed, uint64_t index) { return mix64(mix64(seed) ^ mix64(index + 0x632BE59BD9B4E019ULL)); }

PauliString Fault::to_pauli(size_t n) const {
    PauliString p(n);
    p.set(q0, p0);
    if (q1 != kNoQubit) {
        p.set(q1, p1);
    }
    return p;
}

Tableau::Tableau(size_t n) : n_(n), w_((n + 63) / 64), x_((2 * n + 1) * w_, 0), z_((2 * n + 1) * w_, 0), r_(2 * n + 1, 0) {
    for (size_t q = 0; q < n; q++) {
        xrow(q)[q >> 6] |= uint64_t{1} << (q & 63);
        zrow(n + q)[q >> 6] |= uint64_t{1} << (q & 63);
    }
}

void Tableau::h(size_t q) {
    size_t k = q >> 6;
    uint64_t m = uint64_t{1} << (q & 63);
    for (size_t i = 0; i < 2 * n_; i++) {
        uint64_t &xw = xrow(i)[k];
        uint64_t &zw = zrow(i)[k];
        bool x = xw & m, z = zw & m;
        if (x && z) {
            r_[i] = (r_[i] + 2) & 3;
        }
        if (x != z) {
            xw ^= m;
            zw ^= m;
        }
    }
}

void Tableau::cx(size_t c, size_t t) {
    if (c == t) {
        throw InvalidGateError("CX control equals target");
    }
    size_t kc = c >> 6, kt = t >> 6;
    uint64_t mc = uint64_t{1} << (c & 63), mt = uint64_t{1} << (t & 63);
    for (size_t i = 0; i < 2 * n_; i++) {
        uint64_t *xr = xrow(i);
        uint64_t *zr = zrow(i);
        bool xc = xr[kc] & mc, zc = zr[kc] & mc, xt = xr[kt] & mt, zt = zr[kt] & mt;
        if (xc && zt && (xt == zc)) {
            r_[i] = (r_[i] + 2) & 3;
        }
        if (xc) {
            xr[kt] ^= mt;
        }
        if (zt) {
            zr[kc] ^= mc;
        }
    }
}

void Tableau::apply_pauli1(size_t q, Pauli1 p) {
    if (p == Pauli1::I) {
        return;
    }
    bool px = static_cast<uint8_t>(p) & 1, pz = static_cast<uint8_t>(p) & 2;
    size_t k = q >> 6;
    uint64_t m = uint64_t{1} << (q & 63);
    for (size_t i = 0; i < 2 * n_; i++) {
        bool x = xrow(i)[k] & m, z = zrow(i)[k] & m;
        if ((px && z) != (pz && x)) {
            r_[i] = (r_[i] + 2) & 3;
        }
    }
}

void Tableau::apply_pauli(const PauliString &p) {
    if (p.num_qubits() != n_) {
        throw DimensionError("Pauli size does not match tableau");
    }
    for (size_t i = 0; i < 2 * n_; i++) {
        uint64_t acc = 0;
        for (size_t k = 0; k < w_; k++) {
            acc ^= (xrow(i)[k] & p.zs.word(k)) ^ (zrow(i)[k] & p.xs.word(k));
        }
        if (std::popcount(acc) & 1) {
            r_[i] = (r_[i] + 2) & 3;
        }
    }
}

void Tableau::rowmult(size_t h, size_t i) {
    // row h := row i * row h, the left factor being row i as in the standard rowsum.
    int plus = 0, minus = 0;
    uint64_t *hx = xrow(h), *hz = zrow(h);
    const uint64_t *ix = xrow(i), *iz = zrow(i);
    for (size_t k = 0; k < w_; k++) {
        uint64_t x1 = ix[k], z1 = iz[k], x2 = hx[k], z2 = hz[k];
        uint64_t p = (x1 & z1 & ~x2 & z2) | (x1 & ~z1 & x2 & z2) | (~x1 & z1 & x2 & ~z2);
        uint64_t m = (x1 & z1 & x2 & ~z2) | (x1 & ~z1 & ~x2 & z2) | (~x1 & z1 & x2 & z2);
        plus += std::popcount(p);
        minus += std::popcount(m);
        hx[k] = x1 ^ x2;
        hz[k] = z1 ^ z2;
    }
    r_[h] = static_cast<uint8_t>((r_[h] + r_[i] + plus - minus + 4 * (2 * n_ + 4)) & 3);
}

void Tableau::rowcopy(size_t dst, size_t src) {
    std::copy_n(xrow(src), w_, xrow(dst));
    std::copy_n(zrow(src), w_, zrow(dst));
    r_[dst] = r_[src];
}

void Tableau::rowclear(size_t i) {
    std::fill_n(xrow(i), w_, 0);
    std::fill_n(zrow(i), w_, 0);
    r_[i] = 0;
}

bool Tableau::is_deterministic_z(size_t q) const {
    size_t k = q >> 6;
    uint64_t m = uint64_t{1} << (q & 63);
    for (size_t i = n_; i < 2 * n_; i++) {
        if (xrow(i)[k] & m) {
            return false;
        }
    }
    return true;
}

bool Tableau::mz(size_t q, bool random_outcome) {
    size_t k = q >> 6;
    uint64_t m = uint64_t{1} << (q & 63);
    size_t p = SIZE_MAX;
    for (size_t i = n_; i < 2 * n_; i++) {
        if (xrow(i)[k] & m) {
            p = i;
            break;
        }
    }
    if (p != SIZE_MAX) {
        for (size_t i = 0; i < 2 * n_; i++) {
            if (i != p && (xrow(i)[k] & m)) {
                rowmult(i, p);
            }
        }
        rowcopy(p - n_, p);
        rowclear(p);
        zrow(p)[k] |= m;
        r_[p] = random_outcome ? 2 : 0;
        return random_outcome;
    }
    size_t scratch = 2 * n_;
    rowclear(scratch);
    for (size_t i = 0; i < n_; i++) {
        if (xrow(i)[k] & m) {
            rowmult(scratch, i + n_);
        }
    }
    return r_[scratch] == 2;
}

PauliString Tableau::row(size_t i) const {
    PauliString p(n_);
    std::copy_n(xrow(i), w_, p.xs.data());
    std::copy_n(zrow(i), w_, p.zs.data());
    p.phase = r_[i];
    return p;
}

std::optional<int> Tableau::expectation(const PauliString &p) const {
    if (p.num_qubits() != n_) {
        throw DimensionError("Pauli size does not match tableau");
    }
    for (size_t i = 0; i < n_; i++) {
        if (!pauli_commutes(p, stabilizer(i))) {
            return std::nullopt;
        }
    }
    PauliString acc(n_);
    for (size_t i = 0; i < n_; i++) {
        if (!pauli_commutes(p, destabilizer(i))) {
            acc = stabilizer(i) * acc;
        }
    }
    if (acc.xs != p.xs || acc.zs != p.zs) {
        throw std::logic_error("stabilizer decomposition failed");
    }
    uint8_t rel = static_cast<uint8_t>((acc.phase - p.phase + 4) & 3);
    if (rel == 0) {
        return 1;
    }
    if (rel == 2) {
        return -1;
    }
    throw std::logic_error("non-Hermitian stabilizer product");
}

size_t Tableau::stabilizer_rank() const {
    std::vector<std::vector<uint64_t>> rows;
    for (size_t i = n_; i < 2 * n_; i++) {
        std::vector<uint64_t> r(2 * w_);
        std::copy_n(xrow(i), w_, r.begin());
        std::copy_n(zrow(i), w_, r.begin() + w_);
        rows.push_back(std::move(r));
    }
    size_t rank = 0;
    for (size_t col = 0; col < 2 * n_ && rank < rows.size(); col++) {
        size_t word = col < n_ ? col >> 6 : w_ + ((col - n_) >> 6);
        uint64_t m = uint64_t{1} << ((col < n_ ? col : col - n_) & 63);
        size_t piv = rank;
        while (piv < rows.size() && !(rows[piv][word] & m)) {
            piv++;
        }
        if (piv == rows.size()) {
            continue;
        }
        std::swap(rows[piv], rows[rank]);
        for (size_t i = 0; i < rows.size(); i++) {
            if (i != rank && (rows[i][word] & m)) {
                for (size_t k = 0; k < 2 * w_; k++) {
                    rows[i][k] ^= rows[rank][k];
                }
            }
        }
        rank++;
    }
    return rank;
}

bool Tableau::is_consistent() const {
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = 0; j < n_; j++) {
            if (!pauli_commutes(stabilizer(i), stabilizer(j))) {
                return false;
            }
            if (pauli_commutes(stabilizer(i), destabilizer(j)) == (i == j)) {
                return false;
            }
        }
    }
    return true;
}

namespace {

void apply_fault(Tableau &t, const Fault &f) {
    t.apply_pauli1(f.q0, f.p0);
    if (f.q1 != Fault::kNoQubit) {
        t.apply_pauli1(f.q1, f.p1);
    }
}

}  // namespace

TableauRun tableau_run(const Circuit &c, const std::vector<Fault> &faults, uint64_t seed, const PauliString *input_error) {
    std::vector<std::vector<const Fault *>> by_layer(c.layers.size());
    std::vector<const Fault *> inputs;
    for (const auto &f : faults) {
        if (f.layer == Fault::kInputLayer) {
            inputs.push_back(&f);
            continue;
        }
        if (f.layer >= c.layers.size()) {
            throw std::out_of_range("fault layer " + std::to_string(f.layer) + " out of range");
        }
        if (!f.is_idle() && f.op >= c.layers[f.layer].size()) {
            throw std::out_of_range("fault op index out of range");
        }
        if (f.q0 >= c.num_qubits || (f.q1 != Fault::kNoQubit && f.q1 >= c.num_qubits)) {
            throw std::out_of_range("fault qubit out of range");
        }
        by_layer[f.layer].push_back(&f);
    }
    TableauRun run{{}, Tableau(c.num_qubits)};
    Tableau &t = run.final_state;
    if (input_error) {
        t.apply_pauli(*input_error);
    }
    for (auto *f : inputs) {
        apply_fault(t, *f);
    }
    uint64_t resets = 0;
    for (size_t l = 0; l < c.layers.size(); l++) {
        for (const auto &op : c.layers[l]) {
            switch (op.kind) {
                case GateKind::CX:
                    t.cx(op.a, op.b);
                    break;
                case GateKind::H:
                    t.h(op.a);
                    break;
                case GateKind::RZ:
                    t.reset(op.a, random_bit(seed, 1, resets++));
                    break;
                case GateKind::MZ: {
                    uint64_t k = run.record.size();
                    run.record.push_back(t.mz(op.a, random_bit(seed, 0, k)));
                    break;
                }
            }
        }
        for (auto *f : by_layer[l]) {
            apply_fault(t, *f);
        }
    }
    return run;
}

std::vector<uint8_t> tableau_simulate(const Circuit &c, const std::vector<Fault> &faults, uint64_t seed) {
    return tableau_run(c, faults, seed).record;
}

PauliString pauli_difference(const Tableau &reference, const Tableau &faulty) {
    size_t n = reference.num_qubits();
    PauliString q(n);
    for (size_t i = 0; i < n; i++) {
        PauliString g = reference.stabilizer(i);
        auto e = faulty.expectation(g);
        if (!e.has_value()) {
            throw std::logic_error("states are not related by a Pauli");
        }
        if (*e == -1) {
            q *= reference.destabilizer(i);
        }
    }
    q.phase = 0;
    return q;
}

}  // namespace hline

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

#include "hline/pauli.h"

#include <algorithm>
#include <bit>
#include <charconv>

namespace hline {

char pauli1_char(Pauli1 p) { return "IXZY"[static_cast<uint8_t>(p)]; }

BitVec &BitVec::operator^=(const BitVec &other) {
    if (other.n_ != n_) {
        throw DimensionError("bit vector length mismatch");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

bool BitVec::any() const {
    for (auto w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

size_t BitVec::popcount() const {
    size_t c = 0;
    for (auto w : words_) {
        c += std::popcount(w);
    }
    return c;
}

std::vector<uint32_t> BitVec::ones() const {
    std::vector<uint32_t> out;
    for (size_t k = 0; k < words_.size(); k++) {
        uint64_t w = words_[k];
        while (w) {
            out.push_back(static_cast<uint32_t>(k * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

void BitVec::clear() { std::fill(words_.begin(), words_.end(), 0); }

PauliString PauliString::from_dense(std::string_view text) {
    uint8_t phase = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        phase = text[0] == '-' ? 2 : 0;
        text.remove_prefix(1);
    }
    if (!text.empty() && text[0] == 'i') {
        phase = (phase + 1) & 3;
        text.remove_prefix(1);
    }
    PauliString p(text.size());
    for (size_t q = 0; q < text.size(); q++) {
        switch (text[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.set(q, Pauli1::X);
                break;
            case 'Y':
                p.set(q, Pauli1::Y);
                break;
            case 'Z':
                p.set(q, Pauli1::Z);
                break;
            default:
                throw std::invalid_argument("bad Pauli character in '" + std::string(text) + "'");
        }
    }
    p.phase = phase;
    return p;
}

PauliString PauliString::from_sparse(std::string_view text, size_t n) { return SparsePauli::parse(text).to_dense(n); }

size_t PauliString::weight() const {
    size_t w = 0;
    for (size_t k = 0; k < xs.num_words(); k++) {
        w += std::popcount(xs.word(k) | zs.word(k));
    }
    return w;
}

std::vector<uint32_t> PauliString::support() const {
    BitVec u = xs;
    for (size_t k = 0; k < u.num_words(); k++) {
        u.word(k) |= zs.word(k);
    }
    return u.ones();
}

PauliString &PauliString::operator*=(const PauliString &other) {
    if (other.num_qubits() != num_qubits()) {
        throw DimensionError("Pauli length mismatch: " + std::to_string(num_qubits()) + " vs " +
                             std::to_string(other.num_qubits()));
    }
    // Per-qubit phase of sigma(a) * sigma(b): +i for XY, YZ, ZX and -i for the reverse orders.
    int plus = 0;
    int minus = 0;
    for (size_t k = 0; k < xs.num_words(); k++) {
        uint64_t x1 = xs.word(k), z1 = zs.word(k);
        uint64_t x2 = other.xs.word(k), z2 = other.zs.word(k);
        uint64_t p = (x1 & z1 & ~x2 & z2) | (x1 & ~z1 & x2 & z2) | (~x1 & z1 & x2 & ~z2);
        uint64_t m = (x1 & z1 & x2 & ~z2) | (x1 & ~z1 & ~x2 & z2) | (~x1 & z1 & x2 & z2);
        plus += std::popcount(p);
        minus += std::popcount(m);
        xs.word(k) = x1 ^ x2;
        zs.word(k) = z1 ^ z2;
    }
    phase = static_cast<uint8_t>((phase + other.phase + plus - minus + 400) & 3);
    return *this;
}

PauliString PauliString::operator*(const PauliString &other) const {
    PauliString r = *this;
    r *= other;
    return r;
}

std::string PauliString::str() const {
    static const char *signs[] = {"+", "+i", "-", "-i"};
    std::string s = signs[phase];
    for (size_t q = 0; q < num_qubits(); q++) {
        s.push_back(get(q) == Pauli1::I ? '_' : pauli1_char(get(q)));
    }
    return s;
}

std::string PauliString::sparse_str() const { return SparsePauli::from_dense(*this).str(); }

PauliString pauli_compose(const PauliString &a, const PauliString &b) { return a * b; }

bool pauli_commutes(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError("Pauli length mismatch");
    }
    uint64_t acc = 0;
    for (size_t k = 0; k < a.xs.num_words(); k++) {
        acc ^= (a.xs.word(k) & b.zs.word(k)) ^ (a.zs.word(k) & b.xs.word(k));
    }
    return std::popcount(acc) % 2 == 0;
}

PauliString conjugate_by_cnot(const PauliString &p, size_t control, size_t target) {
    if (control == target) {
        throw InvalidGateError("CNOT control equals target");
    }
    if (control >= p.num_qubits() || target >= p.num_qubits()) {
        throw DimensionError("CNOT qubit out of range");
    }
    PauliString r = p;
    bool xc = p.xs.get(control), zc = p.zs.get(control);
    bool xt = p.xs.get(target), zt = p.zs.get(target);
    // Sign flips exactly when the input carries X_c Z_t with matching parity x_t == z_c (XZ -> -YY, YY -> -XZ).
    if (xc && zt && (xt == zc)) {
        r.phase = static_cast<uint8_t>((r.phase + 2) & 3);
    }
    r.xs.set(target, xt ^ xc);
    r.zs.set(control, zc ^ zt);
    return r;
}

PauliString conjugate_by_h(const PauliString &p, size_t q) {
    PauliString r = p;
    bool x = p.xs.get(q), z = p.zs.get(q);
    if (x && z) {
        r.phase = static_cast<uint8_t>((r.phase + 2) & 3);
    }
    r.xs.set(q, z);
    r.zs.set(q, x);
    return r;
}

SparsePauli SparsePauli::parse(std::string_view text) {
    SparsePauli out;
    if (text == "I" || text.empty()) {
        return out;
    }
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        Pauli1 p;
        if (c == 'X') {
            p = Pauli1::X;
        } else if (c == 'Y') {
            p = Pauli1::Y;
        } else if (c == 'Z') {
            p = Pauli1::Z;
        } else {
            throw std::invalid_argument("bad sparse Pauli term in '" + std::string(text) + "'");
        }
        i++;
        size_t j = i;
        while (j < text.size() && text[j] != '*') {
            j++;
        }
        uint32_t q = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, q);
        if (ec != std::errc() || ptr != text.data() + j || j == i) {
            throw std::invalid_argument("bad qubit index in '" + std::string(text) + "'");
        }
        out.terms.emplace_back(q, p);
        i = j + 1;
    }
    std::sort(out.terms.begin(), out.terms.end());
    for (size_t k = 1; k < out.terms.size(); k++) {
        if (out.terms[k].first == out.terms[k - 1].first) {
            throw std::invalid_argument("repeated qubit in '" + std::string(text) + "'");
        }
    }
    return out;
}

SparsePauli SparsePauli::from_dense(const PauliString &p) {
    SparsePauli out;
    for (uint32_t q : p.support()) {
        out.terms.emplace_back(q, p.get(q));
    }
    return out;
}

PauliString SparsePauli::to_dense(size_t n) const {
    PauliString p(n);
    for (auto [q, t] : terms) {
        if (q >= n) {
            throw DimensionError("sparse Pauli qubit " + std::to_string(q) + " out of range");
        }
        p.set(q, t);
    }
    return p;
}

Pauli1 SparsePauli::get(uint32_t q) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), std::pair<uint32_t, Pauli1>{q, Pauli1::I});
    if (it != terms.end() && it->first == q) {
        return it->second;
    }
    return Pauli1::I;
}

bool SparsePauli::is_x_type() const {
    return std::all_of(terms.begin(), terms.end(), [](auto &t) { return t.second == Pauli1::X; });
}

bool SparsePauli::is_z_type() const {
    return std::all_of(terms.begin(), terms.end(), [](auto &t) { return t.second == Pauli1::Z; });
}

bool SparsePauli::has_y() const {
    return std::any_of(terms.begin(), terms.end(), [](auto &t) { return t.second == Pauli1::Y; });
}

SparsePauli SparsePauli::shifted(uint32_t offset) const {
    SparsePauli r = *this;
    for (auto &t : r.terms) {
        t.first += offset;
    }
    return r;
}

SparsePauli SparsePauli::operator*(const SparsePauli &other) const {
    SparsePauli r;
    size_t i = 0, j = 0;
    while (i < terms.size() || j < other.terms.size()) {
        if (j == other.terms.size() || (i < terms.size() && terms[i].first < other.terms[j].first)) {
            r.terms.push_back(terms[i++]);
        } else if (i == terms.size() || other.terms[j].first < terms[i].first) {
            r.terms.push_back(other.terms[j++]);
        } else {
            auto p = static_cast<Pauli1>(static_cast<uint8_t>(terms[i].second) ^ static_cast<uint8_t>(other.terms[j].second));
            if (p != Pauli1::I) {
                r.terms.emplace_back(terms[i].first, p);
            }
            i++;
            j++;
        }
    }
    return r;
}

bool SparsePauli::commutes(const SparsePauli &other) const {
    size_t i = 0, j = 0;
    int anti = 0;
    while (i < terms.size() && j < other.terms.size()) {
        if (terms[i].first < other.terms[j].first) {
            i++;
        } else if (other.terms[j].first < terms[i].first) {
            j++;
        } else {
            auto a = terms[i].second, b = other.terms[j].second;
            if (a != b) {
                anti ^= 1;
            }
            i++;
            j++;
        }
    }
    return anti == 0;
}

std::string SparsePauli::str() const {
    if (terms.empty()) {
        return "I";
    }
    std::string s;
    for (size_t k = 0; k < terms.size(); k++) {
        if (k) {
            s.push_back('*');
        }
        s.push_back(pauli1_char(terms[k].second));
        s += std::to_string(terms[k].first);
    }
    return s;
}

}  // namespace hline

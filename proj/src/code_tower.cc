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

#include "hline/code_tower.h"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <boost/multiprecision/cpp_int.hpp>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace hline {

using boost::multiprecision::cpp_int;

uint64_t qubit_budget_from_env() {
    const char *v = std::getenv("HAMMING_LINE_BUDGET");
    if (!v || !*v) {
        return kDefaultQubitBudget;
    }
    uint64_t b = 0;
    auto [p, ec] = std::from_chars(v, v + std::char_traits<char>::length(v), b);
    if (ec != std::errc() || *p != '\0') {
        throw std::invalid_argument(std::string("bad HAMMING_LINE_BUDGET value '") + v + "'");
    }
    return b;
}

std::vector<uint32_t> StabilizerCode::data_qubits() const {
    std::vector<uint32_t> out;
    for (uint32_t q = 0; q < n; q++) {
        if (layout[q].role == QubitRole::Data) {
            out.push_back(q);
        }
    }
    return out;
}

namespace {

// Incremental GF(2) row reduction keyed by pivot column.
struct Gf2Basis {
    explicit Gf2Basis(size_t n) : n(n) {}

    BitVec reduce(BitVec v) const {
        for (size_t i = 0; i < rows.size(); i++) {
            if (v.get(pivots[i])) {
                v ^= rows[i];
            }
        }
        return v;
    }
    bool add(const BitVec &v) {
        BitVec r = reduce(v);
        auto ones = r.ones();
        if (ones.empty()) {
            return false;
        }
        size_t p = ones.front();
        for (auto &row : rows) {
            if (row.get(p)) {
                row ^= r;
            }
        }
        rows.push_back(r);
        pivots.push_back(p);
        return true;
    }

    size_t n;
    std::vector<BitVec> rows;
    std::vector<size_t> pivots;
};

bool lex_less(const BitVec &a, const BitVec &b) {
    auto wa = a.popcount(), wb = b.popcount();
    if (wa != wb) {
        return wa < wb;
    }
    return a.ones() < b.ones();
}

SparsePauli typed(const BitVec &v, Pauli1 p) {
    SparsePauli s;
    for (auto q : v.ones()) {
        s.terms.emplace_back(q, p);
    }
    return s;
}

}  // namespace

StabilizerCode hamming_code(int m) {
    if (m < 3 || m > 12) {
        throw std::invalid_argument("Hamming code parameter m must be in 3..12, got " + std::to_string(m));
    }
    uint32_t n = (1u << m) - 1;
    StabilizerCode c;
    c.n = n;
    c.k = n - 2 * m;
    c.level = 0;
    std::vector<BitVec> checks;
    for (int b = 0; b < m; b++) {
        BitVec v(n);
        for (uint32_t i = 0; i < n; i++) {
            if (((i + 1) >> b) & 1) {
                v.set(i, true);
            }
        }
        checks.push_back(v);
    }
    for (auto &v : checks) {
        c.stabilizers.push_back(typed(v, Pauli1::X));
    }
    for (auto &v : checks) {
        c.stabilizers.push_back(typed(v, Pauli1::Z));
    }
    c.num_outer = 2 * m;
    c.outer_per_copy = 2 * m;

    // Weight-3 codewords {a, b, a^b} (1-indexed), lexicographic by sorted support.
    std::vector<std::array<uint32_t, 3>> triples;
    for (uint32_t a = 1; a <= n; a++) {
        for (uint32_t b = a + 1; b <= n; b++) {
            uint32_t x = a ^ b;
            if (x > b) {
                triples.push_back({a - 1, b - 1, x - 1});
            }
        }
    }
    std::sort(triples.begin(), triples.end());
    Gf2Basis basis(n);
    for (auto &v : checks) {
        basis.add(v);
    }
    std::vector<BitVec> zs;
    for (auto &t : triples) {
        if (zs.size() == c.k) {
            break;
        }
        BitVec v(n);
        for (auto q : t) {
            v.set(q, true);
        }
        if (basis.add(v)) {
            zs.push_back(v);
        }
    }
    if (zs.size() != c.k) {
        throw std::logic_error("failed to complete logical basis");
    }
    // Gram matrix G_ij = <z_i, z_j>; X duals are rows of G^-1 applied to the z's.
    size_t k = c.k;
    std::vector<BitVec> g(k, BitVec(2 * k));
    for (size_t i = 0; i < k; i++) {
        for (size_t j = 0; j < k; j++) {
            BitVec t = zs[i];
            size_t cnt = 0;
            for (size_t w = 0; w < t.num_words(); w++) {
                cnt += std::popcount(t.word(w) & zs[j].word(w));
            }
            g[i].set(j, cnt & 1);
        }
        g[i].set(k + i, true);
    }
    for (size_t col = 0; col < k; col++) {
        size_t piv = col;
        while (piv < k && !g[piv].get(col)) {
            piv++;
        }
        if (piv == k) {
            throw std::logic_error("logical Gram matrix is singular");
        }
        std::swap(g[piv], g[col]);
        for (size_t i = 0; i < k; i++) {
            if (i != col && g[i].get(col)) {
                g[i] ^= g[col];
            }
        }
    }
    for (size_t i = 0; i < k; i++) {
        BitVec x(n);
        for (size_t j = 0; j < k; j++) {
            if (g[i].get(k + j)) {
                x ^= zs[j];
            }
        }
        BitVec best = x;
        for (uint32_t mask = 1; mask < (1u << m); mask++) {
            BitVec y = x;
            for (int b = 0; b < m; b++) {
                if ((mask >> b) & 1) {
                    y ^= checks[b];
                }
            }
            if (lex_less(y, best)) {
                best = y;
            }
        }
        c.logical_x.push_back(typed(best, Pauli1::X));
        c.logical_z.push_back(typed(zs[i], Pauli1::Z));
    }
    for (uint32_t q = 0; q < n; q++) {
        c.layout.push_back({q, QubitRole::Data});
    }
    return c;
}

StabilizerCode triple_code() {
    StabilizerCode c;
    c.n = 3;
    c.k = 1;
    c.stabilizers = {SparsePauli::parse("Z0"), SparsePauli::parse("Z2")};
    c.logical_x = {SparsePauli::parse("X1")};
    c.logical_z = {SparsePauli::parse("Z1")};
    c.layout = {{0, QubitRole::Entangle}, {1, QubitRole::Data}, {2, QubitRole::Cat}};
    return c;
}

StabilizerCode trivial_code() {
    StabilizerCode c;
    c.n = 1;
    c.k = 1;
    c.logical_x = {SparsePauli::parse("X0")};
    c.logical_z = {SparsePauli::parse("Z0")};
    c.layout = {{0, QubitRole::Data}};
    return c;
}

namespace {

void append_shifted(SparsePauli &dst, const SparsePauli &src, uint32_t offset) {
    for (auto [q, p] : src.terms) {
        dst.terms.emplace_back(q + offset, p);
    }
}

// Lifts an outer-code Pauli of copy j through logical j of each inner copy.
SparsePauli lift(const SparsePauli &outer_op, const StabilizerCode &inner, uint32_t j) {
    SparsePauli out;
    for (auto [i, p] : outer_op.terms) {
        uint32_t off = i * inner.n;
        switch (p) {
            case Pauli1::X:
                append_shifted(out, inner.logical_x[j], off);
                break;
            case Pauli1::Z:
                append_shifted(out, inner.logical_z[j], off);
                break;
            case Pauli1::Y:
                append_shifted(out, inner.logical_x[j] * inner.logical_z[j], off);
                break;
            case Pauli1::I:
                break;
        }
    }
    return out;
}

}  // namespace

StabilizerCode interleave_concat(const StabilizerCode &outer, const StabilizerCode &inner) {
    StabilizerCode c;
    c.n = outer.n * inner.n;
    c.k = outer.k * inner.k;
    c.level = inner.level;
    for (uint32_t j = 0; j < inner.k; j++) {
        for (const auto &s : outer.stabilizers) {
            c.stabilizers.push_back(lift(s, inner, j));
        }
    }
    c.num_outer = static_cast<uint32_t>(c.stabilizers.size());
    c.outer_per_copy = static_cast<uint32_t>(outer.stabilizers.size());
    for (uint32_t i = 0; i < outer.n; i++) {
        for (const auto &s : inner.stabilizers) {
            c.stabilizers.push_back(s.shifted(i * inner.n));
        }
    }
    for (uint32_t j = 0; j < inner.k; j++) {
        for (uint32_t l = 0; l < outer.k; l++) {
            c.logical_x.push_back(lift(outer.logical_x[l], inner, j));
            c.logical_z.push_back(lift(outer.logical_z[l], inner, j));
        }
    }
    for (uint32_t i = 0; i < outer.n; i++) {
        for (const auto &r : inner.reserved) {
            c.reserved.push_back({r.level, r.x.shifted(i * inner.n), r.z.shifted(i * inner.n)});
        }
        for (const auto &e : inner.layout) {
            c.layout.push_back({e.position + i * inner.n, e.role});
        }
        c.children.push_back({i * inner.n, (i + 1) * inner.n});
    }
    return c;
}

StabilizerCode reserve_logical(const StabilizerCode &code) {
    if (code.k == 0) {
        throw std::invalid_argument("cannot reserve a logical qubit of a code with k = 0");
    }
    size_t best = 0;
    for (size_t i = 1; i < code.k; i++) {
        if (code.logical_z[i] < code.logical_z[best]) {
            best = i;
        }
    }
    StabilizerCode c = code;
    c.reserved.push_back({code.level, code.logical_x[best], code.logical_z[best]});
    c.logical_x.erase(c.logical_x.begin() + best);
    c.logical_z.erase(c.logical_z.begin() + best);
    c.k--;
    return c;
}

StabilizerCode pair_interleave(const StabilizerCode &code) {
    StabilizerCode c;
    c.n = 2 * code.n;
    c.k = 2 * code.k;
    c.level = code.level;
    for (uint32_t copy = 0; copy < 2; copy++) {
        for (const auto &s : code.stabilizers) {
            c.stabilizers.push_back(s.shifted(copy * code.n));
        }
    }
    for (uint32_t l = 0; l < c.k; l++) {
        uint32_t copy = l & 1;
        c.logical_x.push_back(code.logical_x[l / 2].shifted(copy * code.n));
        c.logical_z.push_back(code.logical_z[l / 2].shifted(copy * code.n));
    }
    for (uint32_t copy = 0; copy < 2; copy++) {
        for (const auto &r : code.reserved) {
            c.reserved.push_back({r.level, r.x.shifted(copy * code.n), r.z.shifted(copy * code.n)});
        }
        for (const auto &e : code.layout) {
            c.layout.push_back({e.position + copy * code.n, e.role});
        }
        c.children.push_back({copy * code.n, (copy + 1) * code.n});
    }
    return c;
}

StabilizerCode build_tower(int r, uint64_t budget) {
    if (r < 0) {
        throw std::invalid_argument("level must be nonnegative");
    }
    for (int m = 0; m <= r; m++) {
        uint64_t n = 0;
        try {
            n = tower_n(m);
        } catch (const std::overflow_error &) {
            throw BudgetError("C_" + std::to_string(m) + " is too large to materialize", UINT64_MAX);
        }
        if (n > budget) {
            throw BudgetError("C_" + std::to_string(m) + " has n = " + std::to_string(n) + " qubits, over the budget of " +
                                  std::to_string(budget),
                              n);
        }
    }
    StabilizerCode c = interleave_concat(hamming_code(4), triple_code());
    c.level = 0;
    c.children.clear();
    for (int m = 0; m < r; m++) {
        StabilizerCode inner = pair_interleave(reserve_logical(c));
        uint32_t child = c.n;
        c = interleave_concat(hamming_code(m + 5), inner);
        c.level = m + 1;
        c.children.clear();
        for (uint32_t b = 0; b < c.n / child; b++) {
            c.children.push_back({b * child, (b + 1) * child});
        }
    }
    return c;
}

namespace {

struct Recursion {
    cpp_int n, k, d, s;
};

Recursion recurse(int r) {
    Recursion v{45, 7, 3, 8};
    for (int m = 0; m < r; m++) {
        cpp_int big = (cpp_int(1) << (m + 5)) - 1;
        cpp_int kin = 2 * (v.k - 1);
        v.s = 2 * (m + 5) * kin;
        v.n = 2 * big * v.n;
        v.k = (big - 2 * (m + 5)) * kin;
        v.d *= 3;
    }
    return v;
}

}  // namespace

uint64_t tower_n(int r) {
    auto v = recurse(r);
    if (v.n > std::numeric_limits<uint64_t>::max()) {
        throw std::overflow_error("n_r exceeds 64 bits");
    }
    return static_cast<uint64_t>(v.n);
}

uint64_t tower_k(int r) {
    auto v = recurse(r);
    if (v.k > std::numeric_limits<uint64_t>::max()) {
        throw std::overflow_error("k_r exceeds 64 bits");
    }
    return static_cast<uint64_t>(v.k);
}

std::vector<double> tower_rates(int max_r) {
    std::vector<double> out;
    long double n = 45, k = 7;
    for (int m = 0; m <= max_r; m++) {
        out.push_back(static_cast<double>(k / n));
        long double big = std::ldexp(1.0L, m + 5) - 1;
        long double kin = 2 * (k - 1);
        n = 2 * big * n;
        k = (big - 2 * (m + 5)) * kin;
    }
    return out;
}

double plain_tower_rate(int m) {
    long double p = 1;
    for (int i = 4; i <= m; i++) {
        long double big = std::ldexp(1.0L, i) - 1;
        p *= (big - 2 * i) / big;
    }
    return static_cast<double>(p);
}

CodeParams tower_params(int r, const DepthModel *depth) {
    if (r < 0) {
        throw std::invalid_argument("level must be nonnegative");
    }
    auto v = recurse(r);
    CodeParams p;
    p.r = r;
    p.n = v.n.str();
    p.k = v.k.str();
    p.d = v.d.str();
    p.s = v.s.str();
    p.rate = tower_rates(r).back();
    if (depth && depth->T0 > 0) {
        if (r == 0) {
            p.T = depth->T0;
        } else {
            double t = depth->T1;
            double c = depth->T1 / (static_cast<double>(tower_n(1)) * depth->T0);
            for (int m = 2; m <= r; m++) {
                t *= c * static_cast<double>(recurse(m).n);
            }
            p.T = t;
        }
    }
    return p;
}

std::string code_to_text(const StabilizerCode &c, const std::vector<std::string> &header) {
    std::ostringstream out;
    for (const auto &h : header) {
        out << "# " << h << "\n";
    }
    out << "N " << c.n << "\nK " << c.k << "\nLEVEL " << c.level << "\n";
    out << "OUTER " << c.num_outer << " " << c.outer_per_copy << "\n";
    for (const auto &s : c.stabilizers) {
        out << "STAB " << s.str() << "\n";
    }
    for (uint32_t i = 0; i < c.k; i++) {
        out << "LOGICAL " << i << " " << c.logical_x[i].str() << " " << c.logical_z[i].str() << "\n";
    }
    for (const auto &r : c.reserved) {
        out << "RESERVED " << r.level << " " << r.x.str() << " " << r.z.str() << "\n";
    }
    for (uint32_t q = 0; q < c.n; q++) {
        out << "POS " << q << " " << c.layout[q].position << " ROLE " << role_name(c.layout[q].role) << "\n";
    }
    for (const auto &ch : c.children) {
        out << "CHILD " << ch.begin << " " << ch.end << "\n";
    }
    return out.str();
}

StabilizerCode code_from_text(std::string_view text) {
    StabilizerCode c;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_no = 0;
    auto fail = [&](const std::string &msg) { throw ParseError(line_no, msg); };
    while (std::getline(in, line)) {
        line_no++;
        if (auto h = line.find('#'); h != std::string::npos) {
            line.resize(h);
        }
        std::istringstream ls(line);
        std::string cmd;
        if (!(ls >> cmd)) {
            continue;
        }
        try {
            if (cmd == "N") {
                ls >> c.n;
            } else if (cmd == "K") {
                ls >> c.k;
            } else if (cmd == "LEVEL") {
                ls >> c.level;
            } else if (cmd == "OUTER") {
                ls >> c.num_outer >> c.outer_per_copy;
            } else if (cmd == "STAB") {
                std::string s;
                ls >> s;
                c.stabilizers.push_back(SparsePauli::parse(s));
            } else if (cmd == "LOGICAL") {
                uint32_t i;
                std::string x, z;
                ls >> i >> x >> z;
                if (i != c.logical_x.size()) {
                    fail("logical index out of order");
                }
                c.logical_x.push_back(SparsePauli::parse(x));
                c.logical_z.push_back(SparsePauli::parse(z));
            } else if (cmd == "RESERVED") {
                int lvl;
                std::string x, z;
                ls >> lvl >> x >> z;
                c.reserved.push_back({lvl, SparsePauli::parse(x), SparsePauli::parse(z)});
            } else if (cmd == "POS") {
                uint32_t q, p;
                std::string kw, role;
                ls >> q >> p >> kw >> role;
                if (kw != "ROLE" || q != c.layout.size()) {
                    fail("malformed POS line");
                }
                QubitRole rr;
                if (role == "data") {
                    rr = QubitRole::Data;
                } else if (role == "cat") {
                    rr = QubitRole::Cat;
                } else if (role == "entangle") {
                    rr = QubitRole::Entangle;
                } else {
                    fail("unknown role '" + role + "'");
                }
                c.layout.push_back({p, rr});
            } else if (cmd == "CHILD") {
                ChildSpan s;
                ls >> s.begin >> s.end;
                c.children.push_back(s);
            } else {
                fail("unknown record '" + cmd + "'");
            }
        } catch (const std::invalid_argument &e) {
            fail(e.what());
        }
        if (ls.fail()) {
            fail("malformed '" + cmd + "' line");
        }
    }
    if (c.logical_x.size() != c.k || c.layout.size() != c.n) {
        throw ParseError(line_no, "code description is incomplete");
    }
    return c;
}

}  // namespace hline

namespace hline {

PauliSpan::PauliSpan(uint32_t n, const std::vector<SparsePauli> &generators) : n_(n) {
    for (const auto &g : generators) {
        add(g.to_dense(n));
    }
}

BitVec PauliSpan::pack(const PauliString &p) const {
    if (p.num_qubits() != n_) {
        throw DimensionError("Pauli size does not match the span");
    }
    BitVec v(2 * size_t{n_});
    for (auto q : p.support()) {
        auto t = static_cast<uint8_t>(p.get(q));
        v.set(q, t & 1);
        v.set(n_ + q, (t >> 1) & 1);
    }
    return v;
}

void PauliSpan::reduce_bits(BitVec &v) const {
    for (size_t i = 0; i < rows_.size(); i++) {
        if (v.get(pivots_[i])) {
            v ^= rows_[i];
        }
    }
}

void PauliSpan::add(const PauliString &p) {
    BitVec v = pack(p);
    reduce_bits(v);
    auto ones = v.ones();
    if (ones.empty()) {
        return;
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(ones.front());
}

PauliString PauliSpan::reduce(const PauliString &p) const {
    BitVec v = pack(p);
    reduce_bits(v);
    PauliString out(n_);
    for (uint32_t q = 0; q < n_; q++) {
        out.set(q, static_cast<Pauli1>(uint8_t{v.get(q)} | (uint8_t{v.get(n_ + q)} << 1)));
    }
    return out;
}

std::vector<SparsePauli> data_logicals_up_to(const StabilizerCode &c, uint32_t max_weight) {
    auto data = c.data_qubits();
    PauliSpan span(c.n, c.stabilizers);
    std::vector<SparsePauli> found;
    SparsePauli cur;
    std::function<void(size_t)> extend = [&](size_t from) {
        if (!cur.empty()) {
            bool central = std::all_of(c.stabilizers.begin(), c.stabilizers.end(),
                                       [&](const SparsePauli &s) { return s.commutes(cur); });
            if (central && !span.contains(cur.to_dense(c.n))) {
                found.push_back(cur);
            }
        }
        if (cur.weight() == max_weight) {
            return;
        }
        for (size_t i = from; i < data.size(); i++) {
            for (Pauli1 p : {Pauli1::X, Pauli1::Y, Pauli1::Z}) {
                cur.terms.push_back({data[i], p});
                extend(i + 1);
                cur.terms.pop_back();
            }
        }
    };
    extend(0);
    return found;
}

}  // namespace hline

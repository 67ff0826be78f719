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

#include "hline/builder.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hline {

namespace {

uint32_t mask_of(const std::vector<uint32_t> &positions) {
    uint32_t m = 0;
    for (auto p : positions) {
        m |= 1u << p;
    }
    return m;
}

std::vector<uint32_t> hamming_positions(const SparsePauli &p) {
    std::vector<uint32_t> out;
    for (auto [q, t] : p.terms) {
        out.push_back(q);
    }
    return out;
}

BlockInfo make_block_info() {
    BlockInfo bi;
    auto h = hamming_code(4);
    for (uint32_t b = 0; b < BlockInfo::kChecks; b++) {
        bi.check_support[b] = hamming_positions(h.stabilizers[b]);
    }
    for (uint32_t l = 0; l < 7; l++) {
        bi.lx[l] = hamming_positions(h.logical_x[l]);
        bi.lz[l] = hamming_positions(h.logical_z[l]);
    }
    // Same rule as reserve_logical: lexicographically smallest Z representative.
    for (uint32_t l = 1; l < 7; l++) {
        if (bi.lz[l] < bi.lz[bi.reserved]) {
            bi.reserved = l;
        }
    }
    for (uint32_t l = 0; l < 7; l++) {
        if (l != bi.reserved) {
            bi.data_logicals.push_back(l);
        }
    }
    return bi;
}

}  // namespace

const BlockInfo &block_info() {
    static const BlockInfo bi = make_block_info();
    return bi;
}

SparsePauli BlockInfo::stabilizer(bool x_type, uint32_t b) const {
    SparsePauli s;
    for (auto i : check_support[b]) {
        s.terms.emplace_back(data(i), x_type ? Pauli1::X : Pauli1::Z);
    }
    return s;
}

SparsePauli BlockInfo::logical_rep(const PauliString &logical) const {
    if (logical.num_qubits() != 7) {
        throw DimensionError("block logical Pauli must act on 7 logical qubits");
    }
    uint32_t xm = 0, zm = 0;
    for (uint32_t l = 0; l < 7; l++) {
        auto p = static_cast<uint8_t>(logical.get(l));
        if (p & 1) {
            xm ^= mask_of(lx[l]);
        }
        if (p & 2) {
            zm ^= mask_of(lz[l]);
        }
    }
    uint32_t span[16];
    for (uint32_t s = 0; s < 16; s++) {
        span[s] = 0;
        for (uint32_t b = 0; b < kChecks; b++) {
            if ((s >> b) & 1) {
                span[s] ^= mask_of(check_support[b]);
            }
        }
    }
    int best_w = 1 << 30;
    uint32_t bx = 0, bz = 0;
    for (uint32_t a = 0; a < 16; a++) {
        for (uint32_t c = 0; c < 16; c++) {
            uint32_t x = xm ^ span[a], z = zm ^ span[c];
            if (x & z) {
                continue;
            }
            int w = std::popcount(x | z);
            if (w < best_w) {
                best_w = w;
                bx = x;
                bz = z;
            }
        }
    }
    if (best_w == (1 << 30)) {
        throw std::invalid_argument("no Y-free representative for block logical " + logical.str());
    }
    SparsePauli out;
    for (uint32_t i = 0; i < kHammingN; i++) {
        if ((bx >> i) & 1) {
            out.terms.emplace_back(data(i), Pauli1::X);
        } else if ((bz >> i) & 1) {
            out.terms.emplace_back(data(i), Pauli1::Z);
        }
    }
    return out;
}

Builder::Builder(int max_level, uint64_t budget) : max_level_(max_level) {
    if (max_level < 0 || max_level > 1) {
        throw std::invalid_argument("gadget circuits are built for levels 0 and 1 only");
    }
    for (int r = 0; r <= max_level; r++) {
        codes_.emplace(r, build_tower(r, budget));
    }
}

LineLayout Builder::layout(int r, uint32_t nblocks) const {
    const auto &c = code(r);
    LineLayout l;
    for (uint32_t b = 0; b < nblocks; b++) {
        for (uint32_t q = 0; q < c.n; q++) {
            l.positions.push_back(b * c.n + c.layout[q].position);
            l.roles.push_back(c.layout[q].role);
        }
    }
    return l;
}

namespace {

// Appends the three ZZ check rounds of the unitary cat preparation to `layers`.
void append_cat_rounds(std::vector<Layer> &layers, const std::vector<uint32_t> &triples) {
    size_t t = triples.size();
    Layer init, had;
    for (size_t k = 0; k < t; k++) {
        init.push_back(Operation::rz(BlockInfo::cat(triples[k])));
        if (k > 0) {
            init.push_back(Operation::rz(BlockInfo::ent(triples[k])));
        }
        had.push_back(Operation::h(BlockInfo::cat(triples[k])));
    }
    layers.push_back(init);
    layers.push_back(had);
    for (int round = 0; round < 3; round++) {
        Layer a, b1, b2, b3, b4, m, r;
        for (size_t k = 1; k < t; k++) {
            uint32_t cp = BlockInfo::cat(triples[k - 1]);
            uint32_t c = BlockInfo::cat(triples[k]);
            uint32_t d = BlockInfo::data(triples[k]);
            uint32_t e = BlockInfo::ent(triples[k]);
            a.push_back(Operation::cx(cp, e));
            // CX(c, e) across the data qubit d between them.
            b1.push_back(Operation::cx(c, d));
            b2.push_back(Operation::cx(d, e));
            b3.push_back(Operation::cx(c, d));
            b4.push_back(Operation::cx(d, e));
            m.push_back(Operation::mz(e));
            r.push_back(Operation::rz(e));
        }
        for (auto *l : {&a, &b1, &b2, &b3, &b4, &m}) {
            layers.push_back(*l);
        }
        if (round < 2) {
            layers.push_back(r);
        }
    }
}

std::vector<uint32_t> support_triples(const SparsePauli &op, uint32_t scope) {
    if (op.empty()) {
        throw std::invalid_argument("cannot measure the identity");
    }
    for (auto [q, p] : op.terms) {
        if (q >= scope || q % 3 != 1) {
            throw std::invalid_argument("operator " + op.str() + " is not supported on data qubits of its blocks");
        }
        if (p == Pauli1::Y) {
            throw std::invalid_argument("operator " + op.str() + " has a Y factor, which the gate set cannot control");
        }
    }
    std::vector<uint32_t> triples;
    for (uint32_t t = op.min_qubit() / 3; t <= op.max_qubit() / 3; t++) {
        triples.push_back(t);
    }
    if (triples.size() < 2) {
        throw std::invalid_argument("operator " + op.str() + " spans fewer than 2 cat sites");
    }
    return triples;
}

}  // namespace

NodeRef Builder::build_cat_prep(int level, const std::vector<uint32_t> &sites, uint32_t nblocks) {
    if (sites.size() < 2) {
        throw std::invalid_argument("cat span needs at least 2 sites");
    }
    for (size_t k = 1; k < sites.size(); k++) {
        if (sites[k] != sites[k - 1] + 1) {
            throw std::invalid_argument("cat span must be consecutive and increasing");
        }
    }
    if (level == 0) {
        uint32_t scope = nblocks * BlockInfo::kN;
        if (sites.back() >= scope / 3) {
            throw std::invalid_argument("cat site out of range");
        }
        std::vector<Layer> layers;
        append_cat_rounds(layers, sites);
        return make_leaf(Role::CatPrep, scope, std::move(layers), "catprep0");
    }
    if (level != 1 || max_level_ < 1) {
        throw std::invalid_argument("cat preparation is built for levels 0 and 1");
    }
    uint32_t nb = zero_blocks(1) * nblocks;
    if (sites.back() >= nb) {
        throw std::invalid_argument("cat site out of range");
    }
    std::vector<Hook1Site> hs;
    for (auto b : sites) {
        hs.push_back({b, PauliString(7)});
    }
    // Cat preparation alone is the prefix of a level-1 hook with no active sites.
    auto full = hook1(hs, nb, "catprep1");
    std::vector<Placement> steps;
    for (const auto &c : full->children) {
        auto k = step_kind(c.tag);
        if (k == StepKind::PrepX || k == StepKind::ZZ || (k == StepKind::Ec && steps.size() + 1 < full->children.size() - 3)) {
            steps.push_back(c);
        }
    }
    return make_seq(Role::CatPrep, nb * BlockInfo::kN, std::move(steps), "catprep1");
}

NodeRef Builder::hook0(const SparsePauli &op, uint32_t nblocks, const std::string &label) {
    std::string key = "h0|" + op.str() + "|" + std::to_string(nblocks);
    if (auto it = cache_.find(key); it != cache_.end()) {
        return it->second;
    }
    uint32_t scope = nblocks * BlockInfo::kN;
    auto triples = support_triples(op, scope);
    auto info = std::make_shared<Hook0Info>();
    info->op = op;
    for (auto t : triples) {
        info->sites.push_back({BlockInfo::cat(t), BlockInfo::data(t), BlockInfo::ent(t), op.get(BlockInfo::data(t))});
    }
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Leaf;
    n->role = Role::Hook0;
    n->scope = scope;
    n->label = label;
    n->blocks = nblocks;
    append_cat_rounds(n->layers, triples);
    Layer pre, cx, post, had, meas;
    for (const auto &s : info->sites) {
        if (s.pauli == Pauli1::Z) {
            pre.push_back(Operation::h(s.data));
            post.push_back(Operation::h(s.data));
        }
        if (s.pauli != Pauli1::I) {
            cx.push_back(Operation::cx(s.cat, s.data));
        }
        had.push_back(Operation::h(s.cat));
        meas.push_back(Operation::mz(s.cat));
    }
    if (!pre.empty()) {
        n->layers.push_back(pre);
    }
    n->layers.push_back(cx);
    if (!post.empty()) {
        n->layers.push_back(post);
    }
    n->layers.push_back(had);
    n->layers.push_back(meas);
    n->hook0 = info;
    finalize_node(*n);
    cache_[key] = n;
    return n;
}

NodeRef Builder::ec_layer(uint32_t nblocks) {
    std::string key = "ecl|" + std::to_string(nblocks);
    if (auto it = cache_.find(key); it != cache_.end()) {
        return it->second;
    }
    auto ec = build_ec(0);
    std::vector<Placement> ch;
    for (uint32_t b = 0; b < nblocks; b++) {
        ch.push_back({ec, b * BlockInfo::kN, b});
    }
    auto n = make_par(Role::EcLayer, nblocks * BlockInfo::kN, std::move(ch), "eclayer" + std::to_string(nblocks));
    const_cast<Node &>(*n).blocks = nblocks;
    cache_[key] = n;
    return n;
}

NodeRef Builder::meas0(const SparsePauli &op, uint32_t nblocks, const std::string &label) {
    std::string key = "m0|" + op.str() + "|" + std::to_string(nblocks);
    if (auto it = cache_.find(key); it != cache_.end()) {
        return it->second;
    }
    auto h = hook0(op, nblocks, label);
    auto ec = ec_layer(nblocks);
    auto n = make_seq(Role::Meas0, nblocks * BlockInfo::kN, {{h, 0, 1}, {ec, 0, 0}, {h, 0, 2}, {ec, 0, 0}, {h, 0, 3}},
                      "meas0:" + label);
    const_cast<Node &>(*n).blocks = nblocks;
    cache_[key] = n;
    return n;
}

NodeRef Builder::build_ec(int level) {
    std::string key = "ec|" + std::to_string(level);
    if (auto it = cache_.find(key); it != cache_.end()) {
        return it->second;
    }
    NodeRef n;
    const auto &bi = block_info();
    if (level == 0) {
        std::vector<Placement> ch;
        for (uint32_t rep = 1; rep <= 3; rep++) {
            for (int xz = 0; xz < 2; xz++) {
                for (uint32_t b = 0; b < BlockInfo::kChecks; b++) {
                    std::string label = std::string(xz == 0 ? "X" : "Z") + std::to_string(b);
                    ch.push_back({hook0(bi.stabilizer(xz == 0, b), 1, label), 0, rep});
                }
            }
        }
        n = make_seq(Role::Ec0, BlockInfo::kN, std::move(ch), "ec0");
        const_cast<Node &>(*n).blocks = 1;
    } else if (level == 1) {
        if (max_level_ < 1) {
            throw std::invalid_argument("builder was created without level 1");
        }
        uint32_t nb = zero_blocks(1);
        uint32_t copies = code(1).num_outer / code(1).outer_per_copy;
        std::vector<NodeRef> hooks;
        for (uint32_t j = 0; j < copies; j++) {
            for (uint32_t s = 0; s < code(1).outer_per_copy; s++) {
                std::string label = "c" + std::to_string(j) + (s < 5 ? ":X" : ":Z") + std::to_string(s % 5);
                hooks.push_back(hook1(outer_stabilizer_sites(j, s), nb, label));
            }
        }
        std::vector<Placement> ch;
        for (uint32_t rep = 1; rep <= 3; rep++) {
            for (auto &h : hooks) {
                ch.push_back({h, 0, rep});
            }
        }
        n = make_seq(Role::Ec1, block_size(1), std::move(ch), "ec1");
        const_cast<Node &>(*n).blocks = nb;
    } else {
        throw std::invalid_argument("EC gadgets are built for levels 0 and 1");
    }
    cache_[key] = n;
    return n;
}

std::pair<uint32_t, uint32_t> Builder::outer_site(uint32_t copy, uint32_t pos) const {
    return {2 * pos + (copy & 1), block_info().data_logicals.at(copy / 2)};
}

std::vector<Hook1Site> Builder::outer_stabilizer_sites(uint32_t copy, uint32_t s) const {
    const auto &c1 = code(1);
    uint32_t m = c1.outer_per_copy / 2;
    uint32_t hn = (1u << m) - 1;
    bool x_type = s < m;
    uint32_t bit = s % m;
    std::vector<std::pair<uint32_t, PauliString>> active;
    for (uint32_t i = 0; i < hn; i++) {
        if (((i + 1) >> bit) & 1) {
            auto [blk, lg] = outer_site(copy, i);
            PauliString p(7);
            p.set(lg, x_type ? Pauli1::X : Pauli1::Z);
            active.emplace_back(blk, p);
        }
    }
    std::vector<Hook1Site> out;
    uint32_t first = active.front().first, last = active.back().first;
    size_t a = 0;
    for (uint32_t b = first; b <= last; b++) {
        if (a < active.size() && active[a].first == b) {
            out.push_back({b, active[a].second});
            a++;
        } else {
            out.push_back({b, PauliString(7)});
        }
    }
    return out;
}

std::vector<Hook1Site> Builder::level1_sites(const PauliString &logical, uint32_t nblocks1) const {
    const auto &c1 = code(1);
    if (logical.num_qubits() != c1.k * nblocks1) {
        throw DimensionError("level-1 observable must act on k_1 logical qubits per block");
    }
    static const StabilizerCode h5 = hamming_code(5);
    uint32_t per0 = zero_blocks(1);
    std::map<uint32_t, PauliString> acc;
    for (uint32_t L : logical.support()) {
        uint32_t u = L / c1.k, lam = L % c1.k;
        uint32_t j = lam / h5.k, l = lam % h5.k;
        auto p = static_cast<uint8_t>(logical.get(L));
        for (int part = 0; part < 2; part++) {
            if (!((p >> part) & 1)) {
                continue;
            }
            const auto &rep = part == 0 ? h5.logical_x[l] : h5.logical_z[l];
            for (auto [i, t] : rep.terms) {
                auto [blk, lg] = outer_site(j, i);
                blk += u * per0;
                auto it = acc.try_emplace(blk, PauliString(7)).first;
                PauliString f(7);
                f.set(lg, part == 0 ? Pauli1::X : Pauli1::Z);
                it->second *= f;
            }
        }
    }
    if (acc.empty()) {
        throw std::invalid_argument("cannot measure the identity");
    }
    std::vector<Hook1Site> out;
    for (uint32_t b = acc.begin()->first; b <= acc.rbegin()->first; b++) {
        auto it = acc.find(b);
        PauliString p = it == acc.end() ? PauliString(7) : it->second;
        p.phase = 0;
        out.push_back({b, p});
    }
    return out;
}

NodeRef Builder::hook1(const std::vector<Hook1Site> &sites, uint32_t nblocks, const std::string &label) {
    if (sites.size() < 2) {
        throw std::invalid_argument("level-1 hook needs at least 2 span blocks");
    }
    const auto &bi = block_info();
    uint32_t scope = nblocks * BlockInfo::kN;
    PauliString xr(7), zr(7);
    xr.set(bi.reserved, Pauli1::X);
    zr.set(bi.reserved, Pauli1::Z);
    auto xr_rep = bi.logical_rep(xr);
    auto zr_rep = bi.logical_rep(zr);
    auto all_ec = ec_layer(nblocks);
    std::vector<Placement> steps;
    auto add_step = [&](StepKind kind, uint32_t round, std::vector<Placement> ms, const std::string &name) {
        if (ms.empty()) {
            return;
        }
        steps.push_back({make_par(Role::Step, scope, std::move(ms), label + ":" + name), 0, step_tag(kind, round)});
        steps.push_back({all_ec, 0, step_tag(StepKind::Ec)});
    };
    std::vector<Placement> prep;
    auto mx = meas0(xr_rep, 1, "XR");
    for (const auto &s : sites) {
        prep.push_back({mx, s.block * BlockInfo::kN, s.block});
    }
    add_step(StepKind::PrepX, 0, std::move(prep), "prep");
    auto zz = meas0(zr_rep * zr_rep.shifted(BlockInfo::kN), 2, "ZRZR");
    for (uint32_t round = 0; round < 3; round++) {
        for (uint32_t parity = 0; parity < 2; parity++) {
            std::vector<Placement> ms;
            for (size_t k = parity; k + 1 < sites.size(); k += 2) {
                ms.push_back({zz, sites[k].block * BlockInfo::kN, sites[k].block});
            }
            add_step(StepKind::ZZ, round, std::move(ms), "zz" + std::to_string(round) + (parity ? "o" : "e"));
        }
    }
    std::vector<Placement> par, zread;
    auto mz = meas0(zr_rep, 1, "ZR");
    for (const auto &s : sites) {
        if (s.active()) {
            PauliString l = s.logical * xr;
            l.phase = 0;
            par.push_back({meas0(bi.logical_rep(l), 1, "XR*" + s.logical.str().substr(1)), s.block * BlockInfo::kN, s.block});
            zread.push_back({mz, s.block * BlockInfo::kN, s.block});
        } else {
            par.push_back({mx, s.block * BlockInfo::kN, s.block});
        }
    }
    add_step(StepKind::Parity, 0, std::move(par), "parity");
    add_step(StepKind::ZRead, 0, std::move(zread), "zread");
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Seq;
    n->role = Role::Hook1;
    n->scope = scope;
    n->label = label;
    n->blocks = nblocks;
    n->children = std::move(steps);
    auto info = std::make_shared<Hook1Info>();
    info->first_block = sites.front().block;
    info->last_block = sites.back().block;
    info->sites = sites;
    n->hook1 = info;
    finalize_node(*n);
    return n;
}

NodeRef Builder::build_hook(const ObservableSpec &obs) {
    if (obs.blocks.empty() || obs.blocks.size() > 2) {
        throw std::invalid_argument("an observable names one or two blocks");
    }
    if (obs.blocks.size() == 2 && obs.blocks[1] != obs.blocks[0] + 1) {
        throw std::invalid_argument("observable blocks must be adjacent and in line order");
    }
    uint32_t nb = static_cast<uint32_t>(obs.blocks.size());
    if (obs.level == 0) {
        if (obs.pauli.num_qubits() != 7 * nb) {
            throw DimensionError("level-0 observable must act on 7 logical qubits per block");
        }
        SparsePauli op;
        for (uint32_t u = 0; u < nb; u++) {
            PauliString part(7);
            for (uint32_t l = 0; l < 7; l++) {
                part.set(l, obs.pauli.get(7 * u + l));
            }
            if (!part.is_identity()) {
                op = op * block_info().logical_rep(part).shifted(u * BlockInfo::kN);
            }
        }
        return hook0(op, nb, "obs:" + obs.pauli.str().substr(1));
    }
    if (obs.level == 1) {
        return hook1(level1_sites(obs.pauli, nb), nb * zero_blocks(1), "obs:" + SparsePauli::from_dense(obs.pauli).str());
    }
    throw std::invalid_argument("hooks are built for levels 0 and 1");
}

NodeRef Builder::build_meas(const ObservableSpec &obs) {
    uint32_t nb = static_cast<uint32_t>(obs.blocks.size());
    auto h = build_hook(obs);
    if (obs.level == 0) {
        auto ec = ec_layer(nb);
        auto n = make_seq(Role::Meas0, nb * BlockInfo::kN, {{h, 0, 1}, {ec, 0, 0}, {h, 0, 2}, {ec, 0, 0}, {h, 0, 3}},
                          "meas0:" + h->label);
        const_cast<Node &>(*n).blocks = nb;
        return n;
    }
    auto ec = build_ec(1);
    std::vector<Placement> layer;
    for (uint32_t u = 0; u < nb; u++) {
        layer.push_back({ec, u * block_size(1), u});
    }
    auto ecl = make_par(Role::Generic, nb * block_size(1), std::move(layer), "ec1layer");
    auto n = make_seq(Role::Meas1, nb * block_size(1), {{h, 0, 1}, {ecl, 0, 0}, {h, 0, 2}, {ecl, 0, 0}, {h, 0, 3}},
                      "meas1:" + h->label);
    const_cast<Node &>(*n).blocks = nb * zero_blocks(1);
    return n;
}

MemoryExperiment build_memory_experiment(Builder &b, int r, uint32_t cycles, std::vector<uint32_t> observables) {
    if (cycles < 1) {
        throw std::invalid_argument("memory experiment needs at least one cycle");
    }
    const auto &c = b.code(r);
    MemoryExperiment m;
    m.level = r;
    m.cycles = cycles;
    Layer reset, read;
    for (uint32_t q = 0; q < c.n; q++) {
        reset.push_back(Operation::rz(q));
    }
    m.readout_qubits = c.data_qubits();
    for (auto q : m.readout_qubits) {
        read.push_back(Operation::mz(q));
    }
    auto ec = b.build_ec(r);
    std::vector<Placement> ch;
    ch.push_back({make_leaf(Role::Reset, c.n, {reset}, "reset"), 0, 0});
    for (uint32_t k = 0; k <= cycles; k++) {
        ch.push_back({ec, 0, k});
    }
    ch.push_back({make_leaf(Role::Readout, c.n, {read}, "readout"), 0, 0});
    m.root = make_seq(Role::Memory, c.n, std::move(ch), "memory" + std::to_string(r));
    const_cast<Node &>(*m.root).blocks = c.n / BlockInfo::kN;
    if (observables.empty()) {
        for (uint32_t l = 0; l < c.k; l++) {
            observables.push_back(l);
        }
    }
    for (auto l : observables) {
        if (l >= c.k) {
            throw std::invalid_argument("logical index " + std::to_string(l) + " out of range");
        }
        m.observable_names.push_back("Z" + std::to_string(l));
        std::vector<uint32_t> sup;
        for (auto [q, p] : c.logical_z[l].terms) {
            sup.push_back(q);
        }
        m.observable_support.push_back(sup);
    }
    return m;
}

FlatProgram flatten_memory(const Builder &b, const MemoryExperiment &m, uint64_t max_operations) {
    auto fp = flatten(m.root, b.layout(m.level), max_operations);
    uint64_t base = m.root->measurements - m.readout_qubits.size();
    std::vector<uint64_t> index_of(b.code(m.level).n, UINT64_MAX);
    for (size_t i = 0; i < m.readout_qubits.size(); i++) {
        index_of[m.readout_qubits[i]] = fp.dfs_to_record[base + i];
    }
    for (size_t o = 0; o < m.observable_names.size(); o++) {
        ObservableEntry e{m.observable_names[o], {}};
        for (auto q : m.observable_support[o]) {
            e.indices.push_back(index_of[q]);
        }
        fp.circuit.observables.push_back(std::move(e));
    }
    return fp;
}

DepthModel measured_depth_model() {
    Builder b(1);
    ObservableSpec o0{0, {0}, PauliString(7)};
    o0.pauli.set(0, Pauli1::Z);
    ObservableSpec o1{1, {0}, PauliString(b.code(1).k)};
    o1.pauli.set(0, Pauli1::Z);
    return {static_cast<double>(b.build_meas(o0)->depth), static_cast<double>(b.build_meas(o1)->depth)};
}

}  // namespace hline

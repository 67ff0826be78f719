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

#include "hline/verifier.h"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hline {

const char *adj_class_name(AdjClass c) {
    switch (c) {
        case AdjClass::Clean:
            return "clean";
        case AdjClass::SingleDataError:
            return "single-data-error";
        case AdjClass::AdjacentPair:
            return "adjacent-pair";
        case AdjClass::Violation:
            return "violation";
    }
    return "?";
}

Gadget make_gadget(Builder &b, NodeRef node, uint32_t nblocks, std::string name) {
    Gadget g;
    g.name = std::move(name);
    g.nblocks = nblocks;
    g.layout = b.layout(0, nblocks);
    g.program = flatten(node, g.layout);
    g.measures = node->role == Role::Hook0 || node->role == Role::Meas0;
    std::vector<Placement> ch{{b.ec_layer(nblocks), 0, 0}};
    if (g.measures) {
        ch.push_back({node, 0, 0});
    }
    ch.push_back({node, 0, 0});
    g.lead_in = make_seq(Role::Generic, node->scope, std::move(ch), "lead-in:" + g.name);
    g.lead_in_program = flatten(g.lead_in, g.layout);
    g.lead_in_depth = static_cast<uint32_t>(g.lead_in_program.circuit.layers.size() - g.program.circuit.layers.size());
    g.node = std::move(node);
    return g;
}

std::vector<Fault> enumerate_fault_locations(const Circuit &c, bool include_idle) {
    std::vector<Fault> out;
    for (uint32_t l = 0; l < c.layers.size(); l++) {
        const auto &layer = c.layers[l];
        for (uint32_t i = 0; i < layer.size(); i++) {
            const auto &op = layer[i];
            if (op.two_qubit()) {
                for (int a = 0; a < 4; a++) {
                    for (int d = 0; d < 4; d++) {
                        if (a || d) {
                            out.push_back({l, i, op.a, op.b, static_cast<Pauli1>(a), static_cast<Pauli1>(d)});
                        }
                    }
                }
            } else {
                for (int a = 1; a < 4; a++) {
                    out.push_back({l, i, op.a, Fault::kNoQubit, static_cast<Pauli1>(a), Pauli1::I});
                }
            }
        }
        if (!include_idle) {
            continue;
        }
        std::vector<uint8_t> busy(c.num_qubits, 0);
        for (const auto &op : layer) {
            busy[op.a] = 1;
            if (op.two_qubit()) {
                busy[op.b] = 1;
            }
        }
        for (uint32_t q = 0; q < c.num_qubits; q++) {
            if (!busy[q]) {
                for (int a = 1; a < 4; a++) {
                    out.push_back({l, Fault::kIdleOp, q, Fault::kNoQubit, static_cast<Pauli1>(a), Pauli1::I});
                }
            }
        }
    }
    return out;
}

std::vector<std::vector<Fault>> enumerate_fault_locations(const Circuit &c, int weight, bool include_idle,
                                                          uint64_t max_sets) {
    if (weight != 1 && weight != 2) {
        throw std::invalid_argument("fault weight must be 1 or 2");
    }
    auto singles = enumerate_fault_locations(c, include_idle);
    uint64_t n = singles.size();
    uint64_t count = weight == 1 ? n : n * (n - 1) / 2;
    if (count > max_sets) {
        throw std::length_error(std::to_string(count) + " fault sets exceed the limit of " + std::to_string(max_sets));
    }
    std::vector<std::vector<Fault>> out;
    out.reserve(count);
    if (weight == 1) {
        for (const auto &f : singles) {
            out.push_back({f});
        }
        return out;
    }
    for (uint64_t i = 0; i < n; i++) {
        for (uint64_t j = i + 1; j < n; j++) {
            out.push_back({singles[i], singles[j]});
        }
    }
    return out;
}

namespace {

struct HammingTables {
    uint16_t check[BlockInfo::kChecks];
    uint16_t span[16];
    uint8_t position[16];  // syndrome -> 1-indexed position
};

const HammingTables &hamming_tables() {
    static const HammingTables t = [] {
        HammingTables h{};
        const auto &bi = block_info();
        for (uint32_t b = 0; b < BlockInfo::kChecks; b++) {
            for (auto i : bi.check_support[b]) {
                h.check[b] |= uint16_t(1u << i);
            }
        }
        for (uint32_t a = 0; a < 16; a++) {
            for (uint32_t b = 0; b < BlockInfo::kChecks; b++) {
                if ((a >> b) & 1) {
                    h.span[a] ^= h.check[b];
                }
            }
        }
        for (uint32_t i = 0; i < BlockInfo::kHammingN; i++) {
            uint32_t syn = 0;
            for (uint32_t b = 0; b < BlockInfo::kChecks; b++) {
                syn |= ((h.check[b] >> i) & 1u) << b;
            }
            h.position[syn] = static_cast<uint8_t>(i + 1);
        }
        return h;
    }();
    return t;
}

uint32_t syndrome_of(uint16_t mask) {
    const auto &h = hamming_tables();
    uint32_t s = 0;
    for (uint32_t b = 0; b < BlockInfo::kChecks; b++) {
        s |= (std::popcount(uint32_t(mask & h.check[b])) & 1u) << b;
    }
    return s;
}

}  // namespace

AdjClass classify_residual(const PauliString &residual, const LineLayout &layout, bool modulo_logicals,
                           PauliString *min_rep) {
    size_t n = residual.num_qubits();
    if (n % BlockInfo::kN) {
        throw DimensionError("residual must cover whole 0-blocks");
    }
    const auto &h = hamming_tables();
    PauliString rep(n);
    for (size_t base = 0; base < n; base += BlockInfo::kN) {
        uint16_t xm = 0, zm = 0;
        for (uint32_t i = 0; i < BlockInfo::kHammingN; i++) {
            auto p = static_cast<uint8_t>(residual.get(base + BlockInfo::data(i)));
            xm |= uint16_t((p & 1u) << i);
            zm |= uint16_t(((p >> 1) & 1u) << i);
        }
        uint16_t bx = xm, bz = zm;
        if (modulo_logicals) {
            uint32_t px = h.position[syndrome_of(xm)], pz = h.position[syndrome_of(zm)];
            bx = px ? uint16_t(1u << (px - 1)) : 0;
            bz = pz ? uint16_t(1u << (pz - 1)) : 0;
        } else {
            int best = 99;
            for (uint32_t a = 0; a < 16; a++) {
                for (uint32_t c = 0; c < 16; c++) {
                    uint16_t x = xm ^ h.span[a], z = zm ^ h.span[c];
                    int w = std::popcount(uint32_t(x | z));
                    if (w < best) {
                        best = w;
                        bx = x;
                        bz = z;
                    }
                }
            }
        }
        for (uint32_t i = 0; i < BlockInfo::kHammingN; i++) {
            rep.set(base + BlockInfo::data(i), static_cast<Pauli1>(((bx >> i) & 1) | (((bz >> i) & 1) << 1)));
        }
    }
    auto sup = rep.support();
    AdjClass c = AdjClass::Violation;
    if (sup.empty()) {
        c = AdjClass::Clean;
    } else if (sup.size() == 1) {
        c = AdjClass::SingleDataError;
    } else if (sup.size() == 2) {
        auto pos = [&](uint32_t q) { return layout.positions.empty() ? q : layout.positions[q]; };
        uint32_t a = pos(sup[0]), b = pos(sup[1]);
        if (a + 1 == b || b + 1 == a) {
            c = AdjClass::AdjacentPair;
        }
    }
    if (min_rep) {
        *min_rep = std::move(rep);
    }
    return c;
}

FaultEffect classify_fault(const Builder &b, const Gadget &g, const std::vector<Fault> &faults,
                           const PauliString *input_error, uint64_t seed) {
    const auto &c = g.lead_in_program.circuit;
    uint32_t n = c.num_qubits;
    std::vector<Fault> shifted;
    for (auto f : faults) {
        if (f.layer != Fault::kInputLayer && f.layer >= g.program.circuit.layers.size()) {
            throw std::out_of_range("fault layer " + std::to_string(f.layer) + " is outside the gadget");
        }
        f.layer = f.layer == Fault::kInputLayer ? g.lead_in_depth - 1 : f.layer + g.lead_in_depth;
        shifted.push_back(f);
    }
    if (input_error) {
        if (input_error->num_qubits() != n) {
            throw DimensionError("input error size does not match the gadget");
        }
        for (auto q : input_error->support()) {
            shifted.push_back({g.lead_in_depth - 1, Fault::kIdleOp, q, Fault::kNoQubit, input_error->get(q), Pauli1::I});
        }
    }
    auto ref = tableau_run(c, {}, seed);
    auto bad = tableau_run(c, shifted, seed);
    FaultEffect e;
    uint64_t skip = g.lead_in_program.dfs_to_record.size() - g.program.dfs_to_record.size();
    for (size_t i = skip; i < ref.record.size(); i++) {
        if (ref.record[i] != bad.record[i]) {
            e.measurement_flips.push_back(i - skip);
        }
    }
    auto decode = [&](const std::vector<uint8_t> &rec, uint64_t *v) {
        std::vector<uint64_t> words(rec.begin(), rec.end());
        Decoder dec(b, n);
        FlatRecordSource src(g.lead_in_program, words);
        for (const auto &ch : g.lead_in->children) {
            *v = dec.decode(*ch.node, ch.offset, src);
        }
        return dec.frame().lane(0);
    };
    uint64_t v_ref = 0, v_bad = 0;
    PauliString d_ref = decode(ref.record, &v_ref);
    PauliString d_bad = decode(bad.record, &v_bad);
    if (g.measures) {
        e.outcome_wrong.push_back((v_ref ^ v_bad) & 1);
    }
    PauliString r = pauli_difference(ref.final_state, bad.final_state);
    PauliString data(n);
    for (uint32_t q = 1; q < n; q += 3) {
        data.set(q, static_cast<Pauli1>(static_cast<uint8_t>(r.get(q)) ^ static_cast<uint8_t>(d_ref.get(q)) ^
                                        static_cast<uint8_t>(d_bad.get(q))));
    }
    // Helpers end in Z eigenstates, so the data part alone decides equality of the two states.
    auto same_state = [&](const PauliString &p) { return ref.final_state.expectation(p).has_value(); };
    e.adj_classification = AdjClass::Violation;
    e.residual_data_error = data;
    if (same_state(data)) {
        e.adj_classification = AdjClass::Clean;
        e.residual_data_error = PauliString(n);
        return e;
    }
    for (uint32_t q = 1; q < n; q += 3) {
        for (int p = 1; p < 4; p++) {
            PauliString t = data;
            t.set(q, static_cast<Pauli1>(static_cast<uint8_t>(t.get(q)) ^ p));
            if (same_state(t)) {
                e.adj_classification = AdjClass::SingleDataError;
                e.residual_data_error = PauliString(n);
                e.residual_data_error.set(q, static_cast<Pauli1>(p));
                return e;
            }
        }
    }
    return e;
}

std::vector<FaultEffect> classify_lanes(const Builder &b, const Gadget &g,
                                        const std::vector<std::vector<Fault>> &lane_faults,
                                        const std::vector<PauliString> *lane_inputs, bool modulo_logicals) {
    const auto &c = g.program.circuit;
    size_t lanes = std::max(lane_faults.size(), lane_inputs ? lane_inputs->size() : 0);
    std::vector<std::vector<Fault>> faults = lane_faults;
    faults.resize(lanes);
    auto run = flat_frame_run(c, faults, nullptr, lane_inputs);
    Decoder dec(b, c.num_qubits);
    dec.assume_zero_reference();
    FlatRecordSource src(g.program, run.flips);
    uint64_t v = dec.decode(*g.node, 0, src);
    std::vector<FaultEffect> out(lanes);
    for (size_t j = 0; j < lanes; j++) {
        auto &e = out[j];
        for (size_t i = 0; i < run.flips.size(); i++) {
            if ((run.flips[i] >> j) & 1) {
                e.measurement_flips.push_back(i);
            }
        }
        if (g.measures) {
            e.outcome_wrong.push_back((v >> j) & 1);
        }
        PauliString r(c.num_qubits);
        for (uint32_t q = 1; q < c.num_qubits; q += 3) {
            uint64_t x = run.final_frame.x[q] ^ dec.frame().x[q];
            uint64_t z = run.final_frame.z[q] ^ dec.frame().z[q];
            r.set(q, static_cast<Pauli1>(((x >> j) & 1) | (((z >> j) & 1) << 1)));
        }
        e.adj_classification = classify_residual(r, g.layout, modulo_logicals, &e.residual_data_error);
    }
    return out;
}

const std::vector<std::string> &property_ids() {
    static const std::vector<std::string> ids = {"hook-faulty-execution", "ec-faulty-inputs",
                                                 "ec-faulty-execution",   "meas-faulty-inputs",
                                                 "meas-faulty-execution", "ec-arbitrary-inputs"};
    return ids;
}

std::vector<Gadget> hook_gadgets(Builder &b) {
    const auto &bi = block_info();
    std::vector<Gadget> out;
    for (int xz = 0; xz < 2; xz++) {
        for (uint32_t s = 0; s < BlockInfo::kChecks; s++) {
            std::string label = std::string(xz == 0 ? "X" : "Z") + std::to_string(s);
            out.push_back(make_gadget(b, b.hook0(bi.stabilizer(xz == 0, s), 1, label), 1, "hook:" + label));
        }
    }
    for (int xz = 0; xz < 2; xz++) {
        for (uint32_t l = 0; l < 7; l++) {
            PauliString p(7);
            p.set(l, xz == 0 ? Pauli1::X : Pauli1::Z);
            out.push_back(make_gadget(b, b.build_hook({0, {0}, p}), 1, "hook:" + p.str().substr(1)));
        }
    }
    PauliString zz(14);
    zz.set(bi.reserved, Pauli1::Z);
    zz.set(7 + bi.reserved, Pauli1::Z);
    out.push_back(make_gadget(b, b.build_hook({0, {0, 1}, zz}), 2, "hook:" + zz.str().substr(1)));
    return out;
}

std::vector<Gadget> meas_gadgets(Builder &b) {
    const auto &bi = block_info();
    std::vector<Gadget> out;
    for (int xz = 0; xz < 2; xz++) {
        for (uint32_t l = 0; l < 7; l++) {
            PauliString p(7);
            p.set(l, xz == 0 ? Pauli1::X : Pauli1::Z);
            out.push_back(make_gadget(b, b.build_meas({0, {0}, p}), 1, "meas:" + p.str().substr(1)));
        }
    }
    PauliString zz(14);
    zz.set(bi.reserved, Pauli1::Z);
    zz.set(7 + bi.reserved, Pauli1::Z);
    out.push_back(make_gadget(b, b.build_meas({0, {0, 1}, zz}), 2, "meas:" + zz.str().substr(1)));
    return out;
}

namespace {

// Single-qubit Paulis on every qubit, then both-nontrivial Paulis on neighbouring line positions.
std::vector<PauliString> single_and_adjacent_inputs(uint32_t n, const LineLayout &layout) {
    std::vector<uint32_t> at(n);
    for (uint32_t q = 0; q < n; q++) {
        at[layout.positions.empty() ? q : layout.positions[q]] = q;
    }
    std::vector<PauliString> out;
    for (uint32_t q = 0; q < n; q++) {
        for (int p = 1; p < 4; p++) {
            PauliString e(n);
            e.set(q, static_cast<Pauli1>(p));
            out.push_back(std::move(e));
        }
    }
    for (uint32_t i = 0; i + 1 < n; i++) {
        for (int p = 1; p < 4; p++) {
            for (int r = 1; r < 4; r++) {
                PauliString e(n);
                e.set(at[i], static_cast<Pauli1>(p));
                e.set(at[i + 1], static_cast<Pauli1>(r));
                out.push_back(std::move(e));
            }
        }
    }
    return out;
}

PauliString random_input(uint32_t n, std::mt19937_64 &rng, uint32_t min_weight) {
    std::uniform_int_distribution<int> pick(0, 3);
    while (true) {
        PauliString e(n);
        for (uint32_t q = 0; q < n; q++) {
            e.set(q, static_cast<Pauli1>(pick(rng)));
        }
        if (e.weight() >= min_weight) {
            return e;
        }
    }
}

struct Task {
    uint32_t gadget;
    std::vector<Fault> faults;
    std::optional<PauliString> input;
};

enum class Check { NoViolation, CleanOutput, CorrectAndClean, CorrectAndNoViolation };

std::string check_failure(Check check, const FaultEffect &e) {
    bool wrong = !e.outcome_wrong.empty() && e.outcome_wrong[0];
    switch (check) {
        case Check::NoViolation:
            return e.adj_classification == AdjClass::Violation ? "residual damage exceeds one adjacent pair" : "";
        case Check::CleanOutput:
            return e.adj_classification != AdjClass::Clean ? "output not clean" : "";
        case Check::CorrectAndClean:
            if (wrong) {
                return "wrong measurement outcome";
            }
            return e.adj_classification != AdjClass::Clean ? "output not clean" : "";
        case Check::CorrectAndNoViolation:
            if (wrong) {
                return "wrong measurement outcome";
            }
            return e.adj_classification == AdjClass::Violation ? "residual damage exceeds one adjacent pair" : "";
    }
    return "";
}

void run_tasks(const Builder &b, const std::vector<Gadget> &gadgets, const std::vector<Task> &tasks, Check check,
               bool modulo_logicals, uint32_t workers, Verdict &v) {
    // Batches of up to 64 tasks sharing a gadget.
    std::vector<std::pair<size_t, size_t>> batches;
    for (size_t i = 0; i < tasks.size();) {
        size_t j = i;
        while (j < tasks.size() && j - i < 64 && tasks[j].gadget == tasks[i].gadget) {
            j++;
        }
        batches.push_back({i, j});
        i = j;
    }
    std::vector<std::vector<Counterexample>> found(batches.size());
    auto work = [&](size_t w, size_t nw) {
        for (size_t k = w; k < batches.size(); k += nw) {
            auto [lo, hi] = batches[k];
            const auto &g = gadgets[tasks[lo].gadget];
            std::vector<std::vector<Fault>> lf;
            std::vector<PauliString> li;
            bool any_input = false;
            for (size_t t = lo; t < hi; t++) {
                lf.push_back(tasks[t].faults);
                li.push_back(tasks[t].input ? *tasks[t].input : PauliString(g.program.circuit.num_qubits));
                any_input |= tasks[t].input.has_value();
            }
            auto eff = classify_lanes(b, g, lf, any_input ? &li : nullptr, modulo_logicals);
            for (size_t t = lo; t < hi; t++) {
                auto why = check_failure(check, eff[t - lo]);
                if (!why.empty()) {
                    found[k].push_back({g.name, tasks[t].faults,
                                        tasks[t].input ? SparsePauli::from_dense(*tasks[t].input).str() : "",
                                        std::move(eff[t - lo]), why});
                }
            }
        }
    };
    size_t nw = std::max<size_t>(1, std::min<size_t>(workers, batches.size()));
    if (nw == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> th;
        for (size_t w = 0; w < nw; w++) {
            th.emplace_back(work, w, nw);
        }
        for (auto &t : th) {
            t.join();
        }
    }
    for (auto &f : found) {
        for (auto &c : f) {
            v.counterexamples.push_back(std::move(c));
        }
    }
    v.domain += tasks.size();
    for (const auto &t : tasks) {
        if (std::any_of(t.faults.begin(), t.faults.end(), [](const Fault &f) { return f.is_idle(); })) {
            v.idle_domain++;
        }
    }
}

void add_single_faults(std::vector<Task> &tasks, const std::vector<Gadget> &gadgets, bool include_idle) {
    for (uint32_t i = 0; i < gadgets.size(); i++) {
        for (const auto &f : enumerate_fault_locations(gadgets[i].program.circuit, include_idle)) {
            tasks.push_back({i, {f}, std::nullopt});
        }
    }
}

void add_inputs(std::vector<Task> &tasks, const std::vector<Gadget> &gadgets) {
    for (uint32_t i = 0; i < gadgets.size(); i++) {
        uint32_t n = gadgets[i].program.circuit.num_qubits;
        for (auto &e : single_and_adjacent_inputs(n, gadgets[i].layout)) {
            tasks.push_back({i, {}, std::move(e)});
        }
    }
}

}  // namespace

Verdict verify_property(const Builder &cb, const std::string &id, const VerifyOptions &opt) {
    if (std::find(property_ids().begin(), property_ids().end(), id) == property_ids().end()) {
        throw std::invalid_argument("unknown property id '" + id + "'");
    }
    // Gadgets are cached in the builder; building them does not change any built circuit.
    auto &b = const_cast<Builder &>(cb);
    Verdict v;
    v.property = id;
    std::vector<Gadget> gadgets;
    std::vector<Task> tasks;
    Check check = Check::NoViolation;
    bool modulo_logicals = false;
    if (id == "hook-faulty-execution") {
        gadgets = hook_gadgets(b);
        if (opt.two_faults) {
            for (uint32_t i = 0; i < gadgets.size(); i++) {
                for (auto &s : enumerate_fault_locations(gadgets[i].program.circuit, 2, opt.include_idle,
                                                         uint64_t{1} << 26)) {
                    tasks.push_back({i, std::move(s), std::nullopt});
                }
            }
        } else {
            add_single_faults(tasks, gadgets, opt.include_idle);
        }
    } else if (id == "meas-faulty-inputs" || id == "meas-faulty-execution") {
        gadgets = meas_gadgets(b);
        if (id == "meas-faulty-inputs") {
            add_inputs(tasks, gadgets);
            check = Check::CorrectAndClean;
        } else {
            add_single_faults(tasks, gadgets, opt.include_idle);
            check = Check::CorrectAndNoViolation;
        }
    } else {
        gadgets.push_back(make_gadget(b, b.build_ec(0), 1, "ec0"));
        if (id == "ec-faulty-inputs") {
            add_inputs(tasks, gadgets);
            check = Check::CleanOutput;
        } else if (id == "ec-faulty-execution") {
            add_single_faults(tasks, gadgets, opt.include_idle);
        } else {
            // Pauli inputs span the error group: singles, adjacent pairs, random heavier inputs, and
            // every single fault paired with a random input.
            modulo_logicals = true;
            add_inputs(tasks, gadgets);
            std::mt19937_64 rng(opt.seed);
            uint32_t n = gadgets[0].program.circuit.num_qubits;
            for (uint32_t i = 0; i < opt.random_inputs; i++) {
                tasks.push_back({0, {}, random_input(n, rng, 3)});
            }
            for (const auto &f : enumerate_fault_locations(gadgets[0].program.circuit, opt.include_idle)) {
                tasks.push_back({0, {f}, random_input(n, rng, 0)});
            }
        }
    }
    v.gadgets = static_cast<uint32_t>(gadgets.size());
    run_tasks(b, gadgets, tasks, check, modulo_logicals, opt.workers, v);
    return v;
}

std::string Verdict::report() const {
    std::ostringstream o;
    o << "property: " << property << "\n";
    o << "level: 0\n";
    o << "gadgets: " << gadgets << "\n";
    o << "domain: " << domain << " (" << idle_domain << " with idle faults)\n";
    o << "result: " << (pass() ? "pass" : "fail") << "\n";
    o << counterexamples.size() << " counterexamples\n";
    for (const auto &c : counterexamples) {
        o << c.gadget;
        for (const auto &f : c.faults) {
            o << " layer=" << f.layer << " op=";
            if (f.is_idle()) {
                o << "idle";
            } else {
                o << f.op;
            }
            o << " fault=" << pauli1_char(f.p0) << f.q0;
            if (f.q1 != Fault::kNoQubit) {
                o << "," << pauli1_char(f.p1) << f.q1;
            }
        }
        if (!c.input.empty()) {
            o << " input=" << c.input;
        }
        o << " : " << c.reason << "; class=" << adj_class_name(c.effect.adj_classification)
          << " residual=" << SparsePauli::from_dense(c.effect.residual_data_error).str()
          << " flips=" << c.effect.measurement_flips.size() << "\n";
    }
    return o.str();
}

}  // namespace hline

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

#include "hline/circuit.h"

#include <charconv>
#include <sstream>

namespace hline {

const char *gate_name(GateKind k) {
    switch (k) {
        case GateKind::CX:
            return "CX";
        case GateKind::H:
            return "H";
        case GateKind::RZ:
            return "RZ";
        case GateKind::MZ:
            return "MZ";
    }
    return "?";
}

const char *role_name(QubitRole r) {
    switch (r) {
        case QubitRole::Data:
            return "data";
        case QubitRole::Cat:
            return "cat";
        case QubitRole::Entangle:
            return "entangle";
    }
    return "?";
}

Circuit::Circuit(uint32_t n) : num_qubits(n), positions(n), roles(n, QubitRole::Data) {
    for (uint32_t q = 0; q < n; q++) {
        positions[q] = q;
    }
}

uint64_t Circuit::num_measurements() const {
    uint64_t m = 0;
    for (const auto &layer : layers) {
        for (const auto &op : layer) {
            m += op.kind == GateKind::MZ;
        }
    }
    return m;
}

uint64_t Circuit::num_operations() const {
    uint64_t m = 0;
    for (const auto &layer : layers) {
        m += layer.size();
    }
    return m;
}

void Circuit::validate() const {
    if (positions.size() != num_qubits || roles.size() != num_qubits) {
        throw std::invalid_argument("layout size does not match qubit count");
    }
    std::vector<size_t> seen(num_qubits, SIZE_MAX);
    for (size_t l = 0; l < layers.size(); l++) {
        for (const auto &op : layers[l]) {
            auto touch = [&](uint32_t q) {
                if (q >= num_qubits) {
                    throw std::invalid_argument("qubit " + std::to_string(q) + " out of range in layer " +
                                                std::to_string(l));
                }
                if (seen[q] == l) {
                    throw std::invalid_argument("qubit " + std::to_string(q) + " used twice in layer " +
                                                std::to_string(l));
                }
                seen[q] = l;
            };
            touch(op.a);
            if (op.two_qubit()) {
                touch(op.b);
            }
        }
    }
    uint64_t m = num_measurements();
    for (const auto &d : detectors) {
        for (auto i : d.indices) {
            if (i >= m) {
                throw std::invalid_argument("detector index out of range");
            }
        }
    }
    for (const auto &o : observables) {
        for (auto i : o.indices) {
            if (i >= m) {
                throw std::invalid_argument("observable index out of range");
            }
        }
    }
}

std::vector<LocalityViolation> check_locality(const Circuit &c) {
    std::vector<LocalityViolation> out;
    for (size_t l = 0; l < c.layers.size(); l++) {
        for (size_t k = 0; k < c.layers[l].size(); k++) {
            const auto &op = c.layers[l][k];
            if (!op.two_qubit()) {
                continue;
            }
            int64_t d = static_cast<int64_t>(c.positions[op.a]) - static_cast<int64_t>(c.positions[op.b]);
            if (d != 1 && d != -1) {
                out.push_back({l, k, op.a, op.b});
            }
        }
    }
    return out;
}

std::string circuit_to_text(const Circuit &c, const std::vector<std::string> &header) {
    std::ostringstream out;
    for (const auto &h : header) {
        out << "# " << h << "\n";
    }
    out << "QUBITS " << c.num_qubits << "\n";
    for (uint32_t q = 0; q < c.num_qubits; q++) {
        out << "POS " << q << " " << c.positions[q] << "\n";
    }
    for (uint32_t q = 0; q < c.num_qubits; q++) {
        out << "ROLE " << q << " " << role_name(c.roles[q]) << "\n";
    }
    uint64_t m = 0;
    for (const auto &layer : c.layers) {
        for (const auto &op : layer) {
            switch (op.kind) {
                case GateKind::CX:
                    out << "CX " << op.a << " " << op.b << "\n";
                    break;
                case GateKind::H:
                    out << "H " << op.a << "\n";
                    break;
                case GateKind::RZ:
                    out << "RZ " << op.a << "\n";
                    break;
                case GateKind::MZ:
                    out << "MZ " << op.a << " " << m++ << "\n";
                    break;
            }
        }
        out << "TICK\n";
    }
    for (const auto &d : c.detectors) {
        out << "DETECTOR " << d.level << " " << d.gadget << " " << d.rep << " " << d.stab;
        for (auto i : d.indices) {
            out << " " << i;
        }
        out << "\n";
    }
    for (const auto &o : c.observables) {
        out << "OBSERVABLE " << o.name;
        for (auto i : o.indices) {
            out << " " << i;
        }
        out << "\n";
    }
    return out.str();
}

namespace {

struct LineTokens {
    std::vector<std::string_view> toks;
    size_t line;

    template <typename T>
    T num(size_t i) const {
        if (i >= toks.size()) {
            throw ParseError(line, "missing argument");
        }
        T v{};
        auto [p, ec] = std::from_chars(toks[i].data(), toks[i].data() + toks[i].size(), v);
        if (ec != std::errc() || p != toks[i].data() + toks[i].size()) {
            throw ParseError(line, "bad number '" + std::string(toks[i]) + "'");
        }
        return v;
    }
    void expect_count(size_t n) const {
        if (toks.size() != n) {
            throw ParseError(line, "expected " + std::to_string(n - 1) + " arguments for " + std::string(toks[0]));
        }
    }
};

}  // namespace

Circuit circuit_from_text(std::string_view text) {
    Circuit c;
    bool have_qubits = false;
    Layer current;
    bool pending = false;
    uint64_t m = 0;
    size_t line_no = 0;
    size_t start = 0;
    while (start < text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        line_no++;
        if (auto h = line.find('#'); h != std::string_view::npos) {
            line = line.substr(0, h);
        }
        LineTokens lt{{}, line_no};
        size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
                i++;
            }
            size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
                j++;
            }
            if (j > i) {
                lt.toks.push_back(line.substr(i, j - i));
            }
            i = j;
        }
        if (lt.toks.empty()) {
            continue;
        }
        auto cmd = lt.toks[0];
        if (cmd != "QUBITS" && !have_qubits) {
            throw ParseError(line_no, "QUBITS header must come first");
        }
        auto qubit = [&](size_t k) {
            auto q = lt.num<uint32_t>(k);
            if (q >= c.num_qubits) {
                throw ParseError(line_no, "qubit " + std::to_string(q) + " out of range");
            }
            return q;
        };
        if (cmd == "QUBITS") {
            lt.expect_count(2);
            if (have_qubits) {
                throw ParseError(line_no, "duplicate QUBITS");
            }
            c = Circuit(lt.num<uint32_t>(1));
            have_qubits = true;
        } else if (cmd == "POS") {
            lt.expect_count(3);
            c.positions[qubit(1)] = lt.num<uint32_t>(2);
        } else if (cmd == "ROLE") {
            lt.expect_count(3);
            auto r = lt.toks[2];
            QubitRole role;
            if (r == "data") {
                role = QubitRole::Data;
            } else if (r == "cat") {
                role = QubitRole::Cat;
            } else if (r == "entangle") {
                role = QubitRole::Entangle;
            } else {
                throw ParseError(line_no, "unknown role '" + std::string(r) + "'");
            }
            c.roles[qubit(1)] = role;
        } else if (cmd == "CX") {
            lt.expect_count(3);
            current.push_back(Operation::cx(qubit(1), qubit(2)));
            pending = true;
        } else if (cmd == "H") {
            lt.expect_count(2);
            current.push_back(Operation::h(qubit(1)));
            pending = true;
        } else if (cmd == "RZ") {
            lt.expect_count(2);
            current.push_back(Operation::rz(qubit(1)));
            pending = true;
        } else if (cmd == "MZ") {
            lt.expect_count(3);
            current.push_back(Operation::mz(qubit(1)));
            if (lt.num<uint64_t>(2) != m) {
                throw ParseError(line_no, "record index out of order, expected " + std::to_string(m));
            }
            m++;
            pending = true;
        } else if (cmd == "TICK") {
            lt.expect_count(1);
            c.layers.push_back(std::move(current));
            current.clear();
            pending = false;
        } else if (cmd == "DETECTOR") {
            if (lt.toks.size() < 5) {
                throw ParseError(line_no, "DETECTOR needs level gadget rep stab");
            }
            DetectorEntry d;
            d.level = lt.num<int>(1);
            d.gadget = std::string(lt.toks[2]);
            d.rep = lt.num<int>(3);
            d.stab = std::string(lt.toks[4]);
            for (size_t k = 5; k < lt.toks.size(); k++) {
                d.indices.push_back(lt.num<uint64_t>(k));
            }
            c.detectors.push_back(std::move(d));
        } else if (cmd == "OBSERVABLE") {
            if (lt.toks.size() < 2) {
                throw ParseError(line_no, "OBSERVABLE needs a name");
            }
            ObservableEntry o;
            o.name = std::string(lt.toks[1]);
            for (size_t k = 2; k < lt.toks.size(); k++) {
                o.indices.push_back(lt.num<uint64_t>(k));
            }
            c.observables.push_back(std::move(o));
        } else {
            throw ParseError(line_no, "unknown instruction '" + std::string(cmd) + "'");
        }
    }
    if (pending) {
        c.layers.push_back(std::move(current));
    }
    if (!have_qubits) {
        throw ParseError(line_no, "missing QUBITS header");
    }
    try {
        c.validate();
    } catch (const std::invalid_argument &e) {
        throw ParseError(line_no, e.what());
    }
    return c;
}

}  // namespace hline

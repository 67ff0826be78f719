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

#include "hline/program.h"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace hline {

const char *role_label(Role r) {
    switch (r) {
        case Role::Generic:
            return "generic";
        case Role::Reset:
            return "reset";
        case Role::Readout:
            return "readout";
        case Role::CatPrep:
            return "catprep";
        case Role::Hook0:
            return "hook0";
        case Role::Ec0:
            return "ec0";
        case Role::Meas0:
            return "meas0";
        case Role::EcLayer:
            return "eclayer";
        case Role::Step:
            return "step";
        case Role::Hook1:
            return "hook1";
        case Role::Ec1:
            return "ec1";
        case Role::Meas1:
            return "meas1";
        case Role::Memory:
            return "memory";
    }
    return "?";
}

namespace {

void leaf_schedule(Node &n) {
    size_t L = n.layers.size();
    std::vector<std::vector<NoiseSlot>> per_layer(L);
    std::vector<int64_t> last(n.scope, -1);
    for (size_t l = 0; l < L; l++) {
        auto touch = [&](uint32_t q) {
            if (q >= n.scope) {
                throw std::invalid_argument("leaf '" + n.label + "' touches qubit outside its scope");
            }
            if (last[q] == static_cast<int64_t>(l)) {
                throw std::invalid_argument("leaf '" + n.label + "' uses a qubit twice in one layer");
            }
            if (last[q] < static_cast<int64_t>(l) - 1) {
                per_layer[l - 1].push_back({q, static_cast<uint32_t>(l - 1 - last[q]), true});
            }
            per_layer[l].push_back({q, 1, false});
            last[q] = static_cast<int64_t>(l);
        };
        for (const auto &op : n.layers[l]) {
            touch(op.a);
            if (op.two_qubit()) {
                touch(op.b);
            }
        }
    }
    if (L > 0) {
        for (uint32_t q = 0; q < n.scope; q++) {
            if (last[q] < static_cast<int64_t>(L) - 1) {
                per_layer[L - 1].push_back({q, static_cast<uint32_t>(L - 1 - last[q]), true});
            }
        }
    }
    n.slot_start.assign(1, 0);
    for (auto &v : per_layer) {
        n.slots.insert(n.slots.end(), v.begin(), v.end());
        n.slot_start.push_back(static_cast<uint32_t>(n.slots.size()));
    }
}

}  // namespace

void finalize_node(Node &n) {
    n.depth = 0;
    n.measurements = 0;
    n.operations = 0;
    n.idle.clear();
    if (n.kind == NodeKind::Leaf) {
        n.depth = n.layers.size();
        for (const auto &layer : n.layers) {
            n.operations += layer.size();
            for (const auto &op : layer) {
                n.measurements += op.kind == GateKind::MZ;
            }
        }
        leaf_schedule(n);
        return;
    }
    for (const auto &c : n.children) {
        if (c.offset + c.node->scope > n.scope) {
            throw std::invalid_argument("child '" + c.node->label + "' exceeds the scope of '" + n.label + "'");
        }
        n.measurements += c.node->measurements;
        n.operations += c.node->operations;
        if (n.kind == NodeKind::Seq) {
            n.depth += c.node->depth;
        } else {
            n.depth = std::max(n.depth, c.node->depth);
        }
    }
    if (n.kind == NodeKind::Seq) {
        for (uint32_t i = 0; i < n.children.size(); i++) {
            const auto &c = n.children[i];
            uint64_t d = c.node->depth;
            if (d == 0) {
                continue;
            }
            if (c.offset > 0) {
                n.idle.push_back({i, 0, c.offset, d});
            }
            if (c.offset + c.node->scope < n.scope) {
                n.idle.push_back({i, c.offset + c.node->scope, n.scope, d});
            }
        }
    } else {
        std::vector<std::pair<uint32_t, uint32_t>> ranges;
        for (uint32_t i = 0; i < n.children.size(); i++) {
            const auto &c = n.children[i];
            ranges.emplace_back(c.offset, c.offset + c.node->scope);
            if (c.node->depth < n.depth) {
                n.idle.push_back({i, c.offset, c.offset + c.node->scope, n.depth - c.node->depth});
            }
        }
        std::sort(ranges.begin(), ranges.end());
        uint32_t cursor = 0;
        uint32_t last = static_cast<uint32_t>(n.children.size());
        for (auto [b, e] : ranges) {
            if (b < cursor) {
                throw std::invalid_argument("parallel children of '" + n.label + "' overlap");
            }
            if (b > cursor && n.depth > 0) {
                n.idle.push_back({last, cursor, b, n.depth});
            }
            cursor = e;
        }
        if (cursor < n.scope && n.depth > 0) {
            n.idle.push_back({last, cursor, n.scope, n.depth});
        }
    }
}

NodeRef make_leaf(Role role, uint32_t scope, std::vector<Layer> layers, std::string label) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Leaf;
    n->role = role;
    n->scope = scope;
    n->label = std::move(label);
    n->layers = std::move(layers);
    finalize_node(*n);
    return n;
}

NodeRef make_seq(Role role, uint32_t scope, std::vector<Placement> children, std::string label) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Seq;
    n->role = role;
    n->scope = scope;
    n->label = std::move(label);
    n->children = std::move(children);
    finalize_node(*n);
    return n;
}

NodeRef make_par(Role role, uint32_t scope, std::vector<Placement> children, std::string label) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Par;
    n->role = role;
    n->scope = scope;
    n->label = std::move(label);
    n->children = std::move(children);
    finalize_node(*n);
    return n;
}

namespace {

struct Flattener {
    std::vector<Layer> layers;
    std::vector<std::vector<uint64_t>> meas_dfs;
    struct PendingDetector {
        DetectorEntry entry;
        std::vector<uint64_t> dfs;
    };
    std::vector<PendingDetector> detectors;
    uint64_t gadget_counter = 0;

    void emit(const Node &n, uint32_t qoff, uint64_t lbase, uint64_t dfs, const std::string &gadget, int rep) {
        if (n.kind == NodeKind::Leaf) {
            uint64_t k = 0;
            for (size_t l = 0; l < n.layers.size(); l++) {
                for (const auto &op : n.layers[l]) {
                    Operation g = op;
                    g.a += qoff;
                    if (g.two_qubit()) {
                        g.b += qoff;
                    }
                    layers[lbase + l].push_back(g);
                    if (op.kind == GateKind::MZ) {
                        meas_dfs[lbase + l].push_back(dfs + k++);
                    }
                }
            }
            if (n.role == Role::Hook0 && n.hook0) {
                uint32_t t = static_cast<uint32_t>(n.hook0->sites.size());
                std::string where = "q" + std::to_string(qoff) + ":" + n.label;
                PendingDetector checks{{0, gadget, rep, "cat:" + where, {}}, {}};
                for (uint64_t i = 0; i < 3 * (t - 1); i++) {
                    checks.dfs.push_back(dfs + i);
                }
                PendingDetector v{{0, gadget, rep, where, {}}, {}};
                for (uint64_t i = 0; i < t; i++) {
                    v.dfs.push_back(dfs + 3 * (t - 1) + i);
                }
                detectors.push_back(std::move(checks));
                detectors.push_back(std::move(v));
            } else if (n.role == Role::CatPrep) {
                PendingDetector checks{{0, gadget, rep, "cat:q" + std::to_string(qoff), {}}, {}};
                for (uint64_t i = 0; i < n.measurements; i++) {
                    checks.dfs.push_back(dfs + i);
                }
                detectors.push_back(std::move(checks));
            } else if (n.measurements > 0) {
                PendingDetector all{{0, gadget, rep, std::string(role_label(n.role)) + ":q" + std::to_string(qoff), {}}, {}};
                for (uint64_t i = 0; i < n.measurements; i++) {
                    all.dfs.push_back(dfs + i);
                }
                detectors.push_back(std::move(all));
            }
            return;
        }
        std::string g = gadget;
        bool is_gadget = n.role == Role::Ec0 || n.role == Role::Meas0 || n.role == Role::Hook1 || n.role == Role::Ec1 ||
                         n.role == Role::Meas1;
        if (is_gadget) {
            g = std::string(role_label(n.role)) + "#" + std::to_string(gadget_counter++);
        }
        uint64_t l = lbase, d = dfs;
        for (const auto &c : n.children) {
            int r = rep;
            if (n.role == Role::Ec0 || n.role == Role::Meas0 || n.role == Role::Ec1 || n.role == Role::Meas1) {
                r = static_cast<int>(c.tag);
            }
            emit(*c.node, qoff + c.offset, l, d, g, r);
            d += c.node->measurements;
            if (n.kind == NodeKind::Seq) {
                l += c.node->depth;
            }
        }
    }
};

}  // namespace

FlatProgram flatten(const NodeRef &root, const LineLayout &layout, uint64_t max_operations) {
    if (root->operations > max_operations) {
        throw std::length_error("program has " + std::to_string(root->operations) +
                                " operations, over the flattening limit of " + std::to_string(max_operations));
    }
    Flattener f;
    f.layers.resize(root->depth);
    f.meas_dfs.resize(root->depth);
    f.emit(*root, 0, 0, 0, "top", 0);
    FlatProgram out{Circuit(root->scope), std::vector<uint64_t>(root->measurements)};
    if (!layout.positions.empty()) {
        out.circuit.positions = layout.positions;
        out.circuit.roles = layout.roles;
    }
    uint64_t r = 0;
    for (size_t l = 0; l < f.layers.size(); l++) {
        for (auto d : f.meas_dfs[l]) {
            out.dfs_to_record[d] = r++;
        }
    }
    out.circuit.layers = std::move(f.layers);
    for (auto &p : f.detectors) {
        for (auto d : p.dfs) {
            p.entry.indices.push_back(out.dfs_to_record[d]);
        }
        out.circuit.detectors.push_back(std::move(p.entry));
    }
    return out;
}

std::vector<ProgramLocalityViolation> check_locality(const NodeRef &root) {
    std::vector<ProgramLocalityViolation> out;
    std::unordered_set<const Node *> seen;
    std::function<void(const Node &)> visit = [&](const Node &n) {
        if (!seen.insert(&n).second) {
            return;
        }
        if (n.kind == NodeKind::Leaf) {
            for (const auto &layer : n.layers) {
                for (const auto &op : layer) {
                    if (op.two_qubit() && op.a + 1 != op.b && op.b + 1 != op.a) {
                        out.push_back({n.label, op.a, op.b});
                    }
                }
            }
            return;
        }
        for (const auto &c : n.children) {
            visit(*c.node);
        }
    };
    visit(*root);
    return out;
}

size_t count_distinct_nodes(const NodeRef &root) {
    std::unordered_set<const Node *> seen;
    std::function<void(const Node &)> visit = [&](const Node &n) {
        if (!seen.insert(&n).second) {
            return;
        }
        for (const auto &c : n.children) {
            visit(*c.node);
        }
    };
    visit(*root);
    return seen.size();
}

}  // namespace hline

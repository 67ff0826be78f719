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

#include "hline/sim.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hline/decoder.h"

namespace hline {

Interval wilson_interval(uint64_t k, uint64_t n, double z) {
    if (n == 0) {
        return {0, 1};
    }
    if (k > n) {
        throw std::invalid_argument("more successes than trials");
    }
    double ph = double(k) / double(n), z2 = z * z, nn = double(n);
    double den = 1 + z2 / nn;
    double mid = (ph + z2 / (2 * nn)) / den;
    double half = z * std::sqrt(ph * (1 - ph) / nn + z2 / (4 * nn * nn)) / den;
    return {k == 0 ? 0.0 : std::max(0.0, mid - half), k == n ? 1.0 : std::min(1.0, mid + half)};
}

double per_cycle_rate(double p_fail, uint32_t cycles) {
    if (cycles == 0) {
        throw std::invalid_argument("cycles must be positive");
    }
    if (p_fail >= 1) {
        return 1;
    }
    return -std::expm1(std::log1p(-p_fail) / cycles);
}

NoisyShot sample_noisy_shot(const Circuit &c, const NoiseModel &noise, uint64_t seed) {
    if (!(noise.p >= 0 && noise.p < 1)) {
        throw std::invalid_argument("noise strength must lie in [0, 1)");
    }
    NoisyShot shot;
    std::mt19937_64 rng(derive_seed(seed, 0));
    std::bernoulli_distribution hit(noise.p);
    std::uniform_int_distribution<int> kind(1, 3);
    std::vector<uint32_t> op_of(c.num_qubits);
    for (uint32_t l = 0; l < c.layers.size() && noise.p > 0; l++) {
        std::fill(op_of.begin(), op_of.end(), Fault::kIdleOp);
        for (uint32_t i = 0; i < c.layers[l].size(); i++) {
            const auto &op = c.layers[l][i];
            op_of[op.a] = i;
            if (op.two_qubit()) {
                op_of[op.b] = i;
            }
        }
        for (uint32_t q = 0; q < c.num_qubits; q++) {
            if (op_of[q] == Fault::kIdleOp && !noise.idle_noise) {
                continue;
            }
            if (hit(rng)) {
                shot.faults.push_back({l, op_of[q], q, Fault::kNoQubit, static_cast<Pauli1>(kind(rng)), Pauli1::I});
            }
        }
    }
    shot.record = tableau_simulate(c, shot.faults, derive_seed(seed, 1));
    return shot;
}

double ExperimentResult::rate(size_t o) const {
    uint64_t k = o < failures.size() ? failures[o] : any_failures;
    return shots ? per_cycle_rate(double(k) / double(shots), cycles) : 0;
}

Interval ExperimentResult::interval(size_t o) const {
    uint64_t k = o < failures.size() ? failures[o] : any_failures;
    auto w = wilson_interval(k, shots);
    return {per_cycle_rate(w.low, cycles), per_cycle_rate(w.high, cycles)};
}

ExperimentResult merge_results(const ExperimentResult &a, const ExperimentResult &b) {
    if (a.level != b.level || a.cycles != b.cycles || a.p != b.p || a.seed != b.seed ||
        a.observable_names != b.observable_names) {
        throw std::invalid_argument("results come from different settings");
    }
    ExperimentResult m = a;
    m.shots += b.shots;
    for (size_t i = 0; i < m.failures.size(); i++) {
        m.failures[i] += b.failures[i];
    }
    m.any_failures += b.any_failures;
    m.faults_sampled += b.faults_sampled;
    return m;
}

ExperimentResult estimate_logical_error(Builder &b, const SimConfig &cfg) {
    if (cfg.level < 0 || cfg.level > b.max_level()) {
        throw std::invalid_argument("level " + std::to_string(cfg.level) + " is not available");
    }
    if (cfg.shots < 1) {
        throw std::invalid_argument("at least one shot is needed");
    }
    if (cfg.first_shot % 64) {
        throw std::invalid_argument("first_shot must be a multiple of 64");
    }
    if (!(cfg.noise.p >= 0 && cfg.noise.p < 1)) {
        throw std::invalid_argument("noise strength must lie in [0, 1)");
    }
    auto m = build_memory_experiment(b, cfg.level, cfg.cycles, cfg.observables);
    ExperimentResult res;
    res.level = cfg.level;
    res.cycles = cfg.cycles;
    res.p = cfg.noise.p;
    res.seed = cfg.seed;
    res.shots = cfg.shots;
    res.observable_names = m.observable_names;
    size_t nobs = m.observable_names.size();
    uint64_t batches = (cfg.shots + 63) / 64;
    struct Part {
        std::vector<uint64_t> failures;
        uint64_t any = 0;
        uint64_t faults = 0;
    };
    std::vector<Part> parts(batches);
    auto work = [&](uint64_t w, uint64_t nw) {
        for (uint64_t i = w; i < batches; i += nw) {
            uint64_t lanes = std::min<uint64_t>(64, cfg.shots - i * 64);
            uint64_t mask = lanes == 64 ? ~uint64_t{0} : (uint64_t{1} << lanes) - 1;
            FrameSource src(m.root->scope, cfg.noise, derive_seed(cfg.seed, cfg.first_shot / 64 + i));
            Decoder dec(b, m.root->scope);
            auto pred = dec.decode_memory(m, src);
            auto &part = parts[i];
            part.failures.resize(nobs);
            uint64_t any = 0;
            for (size_t o = 0; o < nobs; o++) {
                part.failures[o] = std::popcount(pred[o] & mask);
                any |= pred[o];
            }
            part.any = std::popcount(any & mask);
            part.faults = src.faults_sampled();
        }
    };
    uint64_t nw = std::max<uint64_t>(1, std::min<uint64_t>(cfg.workers, batches));
    if (nw == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> th;
        for (uint64_t w = 0; w < nw; w++) {
            th.emplace_back(work, w, nw);
        }
        for (auto &t : th) {
            t.join();
        }
    }
    res.failures.assign(nobs, 0);
    for (const auto &p : parts) {
        for (size_t o = 0; o < nobs; o++) {
            res.failures[o] += p.failures[o];
        }
        res.any_failures += p.any;
        res.faults_sampled += p.faults;
    }
    return res;
}

std::vector<double> parse_p_grid(const std::string &spec) {
    auto num = [&](const std::string &s) {
        size_t used = 0;
        double v = 0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception &) {
            throw std::invalid_argument("bad number '" + s + "' in p grid");
        }
        if (used != s.size()) {
            throw std::invalid_argument("bad number '" + s + "' in p grid");
        }
        return v;
    };
    auto c1 = spec.find(':');
    if (c1 == std::string::npos) {
        return {num(spec)};
    }
    auto c2 = spec.find(':', c1 + 1);
    if (c2 == std::string::npos) {
        throw std::invalid_argument("p grid must look like a:b:steps");
    }
    double a = num(spec.substr(0, c1)), b = num(spec.substr(c1 + 1, c2 - c1 - 1));
    double sd = num(spec.substr(c2 + 1));
    if (sd < 1 || sd != std::floor(sd)) {
        throw std::invalid_argument("p grid step count must be a positive integer");
    }
    int steps = static_cast<int>(sd);
    if (!(a > 0 && b > 0)) {
        throw std::invalid_argument("log grid endpoints must be positive");
    }
    if (steps == 1) {
        return {a};
    }
    std::vector<double> out;
    for (int i = 0; i < steps; i++) {
        out.push_back(std::exp(std::log(a) + (std::log(b) - std::log(a)) * i / (steps - 1)));
    }
    return out;
}

SweepResult threshold_sweep(Builder &b, const std::vector<int> &levels, const std::vector<double> &p_grid,
                            uint32_t cycles, uint64_t shots, uint64_t seed, uint32_t workers, bool idle_noise,
                            bool per_observable) {
    if (levels.empty() || p_grid.empty()) {
        throw std::invalid_argument("sweep needs at least one level and one p");
    }
    SweepResult out;
    std::vector<int> lv = levels;
    std::sort(lv.begin(), lv.end());
    std::map<std::pair<int, size_t>, ExperimentResult> by;
    for (int r : lv) {
        for (size_t i = 0; i < p_grid.size(); i++) {
            SimConfig cfg;
            cfg.level = r;
            cfg.cycles = cycles;
            cfg.noise = {p_grid[i], idle_noise};
            cfg.shots = shots;
            cfg.seed = seed;
            cfg.workers = workers;
            auto res = estimate_logical_error(b, cfg);
            size_t nobs = res.observable_names.size();
            for (size_t o = 0; o <= nobs; o++) {
                if (o < nobs && !per_observable) {
                    continue;
                }
                auto iv = res.interval(o);
                out.rows.push_back({r, p_grid[i], cycles, shots, o < nobs ? res.observable_names[o] : "any",
                                    o < nobs ? res.failures[o] : res.any_failures, res.rate(o), iv.low, iv.high, seed});
            }
            by.emplace(std::make_pair(r, i), std::move(res));
        }
    }
    for (int r : lv) {
        for (size_t i = 0; i + 1 < p_grid.size(); i++) {
            const auto &a = by.at({r, i}), &c = by.at({r, i + 1});
            size_t o = a.observable_names.size();
            if (p_grid[i + 1] > p_grid[i] && c.interval(o).high < a.interval(o).low) {
                std::ostringstream s;
                s << "level " << r << ": rate drops from p=" << p_grid[i] << " to p=" << p_grid[i + 1]
                  << " beyond the intervals";
                out.notes.push_back(s.str());
            }
        }
    }
    for (size_t k = 0; k + 1 < lv.size(); k++) {
        int lo = lv[k], hi = lv[k + 1];
        int below = -1, above = -1;
        for (size_t i = 0; i < p_grid.size(); i++) {
            const auto &a = by.at({lo, i}), &c = by.at({hi, i});
            auto ia = a.interval(a.observable_names.size()), ic = c.interval(c.observable_names.size());
            if (ic.high < ia.low && below < 0) {
                below = static_cast<int>(i);
            }
            if (ic.low > ia.high) {
                above = static_cast<int>(i);
            }
        }
        std::ostringstream s;
        if (below >= 0 && above > below) {
            s << "crossing between levels " << lo << " and " << hi << " lies in p=(" << p_grid[below] << ", "
              << p_grid[above] << ")";
        } else {
            s << "no separated crossing between levels " << lo << " and " << hi << " on this grid";
        }
        out.notes.push_back(s.str());
    }
    return out;
}

std::string SweepResult::csv() const {
    std::ostringstream o;
    o << "level,p,cycles,shots,observable,failures,rate,ci_low,ci_high,seed\n";
    o.precision(6);
    for (const auto &r : rows) {
        o << r.level << "," << r.p << "," << r.cycles << "," << r.shots << "," << r.observable << "," << r.failures
          << "," << r.rate << "," << r.ci_low << "," << r.ci_high << "," << r.seed << "\n";
    }
    return o.str();
}

PercolationBound percolation_bound(const PercolationParams &params, double p0, int r) {
    if (params.V.empty()) {
        throw std::invalid_argument("percolation volumes are empty");
    }
    if (r < 0) {
        throw std::invalid_argument("level must be nonnegative");
    }
    auto vol = [&](int k) { return params.V[std::min<size_t>(k, params.V.size() - 1)]; };
    for (double v : params.V) {
        if (!(v >= 1)) {
            throw std::invalid_argument("rectangle volumes must be at least 1");
        }
    }
    auto run = [&](double p, PercolationBound *b) {
        bool decreasing = true;
        double cur = p;
        if (b) {
            b->p.push_back(cur);
        }
        for (int k = 0; k < r; k++) {
            double v = vol(k);
            if (b && b->bound_void_from < 0 && v * cur >= 1) {
                b->bound_void_from = k;
            }
            double next = v * v * cur * cur;
            if (next > cur) {
                decreasing = false;
            }
            cur = next;
            if (b) {
                b->p.push_back(cur);
            }
        }
        return decreasing;
    };
    PercolationBound out;
    out.divergent = vol(0) * p0 >= 1;
    run(p0, &out);
    double lo = 0, hi = 1;
    for (int it = 0; it < 200; it++) {
        double mid = 0.5 * (lo + hi);
        (run(mid, nullptr) ? lo : hi) = mid;
    }
    out.threshold = lo;
    return out;
}

namespace {

struct VolumeCount {
    uint64_t meas = 0;
    uint64_t ec = 0;
};

VolumeCount count_recs(const Node &n, Role meas, Role ec, std::map<const Node *, VolumeCount> &memo) {
    if (n.role == meas) {
        return {1, 0};
    }
    if (n.role == ec) {
        return {0, 1};
    }
    if (auto it = memo.find(&n); it != memo.end()) {
        return it->second;
    }
    VolumeCount v;
    for (const auto &c : n.children) {
        auto s = count_recs(*c.node, meas, ec, memo);
        v.meas += s.meas;
        v.ec += s.ec;
    }
    memo[&n] = v;
    return v;
}

}  // namespace

std::vector<double> measure_volumes(Builder &b) {
    std::vector<double> v;
    PauliString z0(7);
    z0.set(0, Pauli1::Z);
    auto m0 = b.build_meas({0, {0}, z0});
    auto e0 = b.build_ec(0);
    v.push_back(double(m0->operations + e0->operations));
    if (b.max_level() >= 1) {
        PauliString z1(b.code(1).k);
        z1.set(0, Pauli1::Z);
        auto m1 = b.build_meas({1, {0}, z1});
        auto e1 = b.build_ec(1);
        std::map<const Node *, VolumeCount> memo;
        auto a = count_recs(*m1, Role::Meas0, Role::Ec0, memo);
        auto c = count_recs(*e1, Role::Meas0, Role::Ec0, memo);
        v.push_back(double(a.meas + a.ec + c.meas + c.ec));
    }
    return v;
}

}  // namespace hline

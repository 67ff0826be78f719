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

#ifndef HLINE_SIM_H
#define HLINE_SIM_H

#include <cstdint>
#include <string>
#include <vector>

#include "hline/builder.h"
#include "hline/frame.h"

namespace hline {

struct Interval {
    double low = 0;
    double high = 0;
};

/// Wilson score interval for k successes in n trials (z = 1.96 gives 95%).
Interval wilson_interval(uint64_t k, uint64_t n, double z = 1.959963984540054);
/// 1 - (1 - p_fail)^(1/cycles).
double per_cycle_rate(double p_fail, uint32_t cycles);

struct NoisyShot {
    std::vector<uint8_t> record;
    std::vector<Fault> faults;
};

/// Draws i.i.d. depolarizing faults after every layer (on touched qubits, and idle ones when
/// enabled) and runs the tableau simulator with them.
NoisyShot sample_noisy_shot(const Circuit &c, const NoiseModel &noise, uint64_t seed);

struct SimConfig {
    int level = 0;
    uint32_t cycles = 1;
    NoiseModel noise;
    uint64_t shots = 1;
    uint64_t seed = 0;
    uint32_t workers = 1;
    /// Index of the first shot; shots are drawn in batches of 64 seeded by batch index, so a run
    /// can be split into pieces that start at multiples of 64.
    uint64_t first_shot = 0;
    /// Logical qubits to track (empty: all).
    std::vector<uint32_t> observables;
};

struct ExperimentResult {
    int level = 0;
    uint32_t cycles = 0;
    double p = 0;
    uint64_t seed = 0;
    uint64_t shots = 0;
    std::vector<std::string> observable_names;
    std::vector<uint64_t> failures;
    /// Shots where any tracked observable failed.
    uint64_t any_failures = 0;
    uint64_t faults_sampled = 0;

    /// Per-cycle rate and its 95% interval for observable `o`, or for "any" when o == names.size().
    double rate(size_t o) const;
    Interval interval(size_t o) const;
};

/// Adds counts of a run over disjoint shots with the same settings.
ExperimentResult merge_results(const ExperimentResult &a, const ExperimentResult &b);

/// Monte Carlo memory experiment (reset, cycles+1 ECs, readout) with the bit-sliced frame
/// simulator; each shot is decoded and every predicted logical flip counts as a failure.
ExperimentResult estimate_logical_error(Builder &b, const SimConfig &cfg);

struct SweepRow {
    int level;
    double p;
    uint32_t cycles;
    uint64_t shots;
    std::string observable;
    uint64_t failures;
    double rate;
    double ci_low;
    double ci_high;
    uint64_t seed;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    /// Human-readable notes: crossings between consecutive levels and monotonicity violations.
    std::vector<std::string> notes;
    std::string csv() const;
};

/// Geometric grid "a:b:steps" (inclusive ends, log spacing); a single value is a one-point grid.
std::vector<double> parse_p_grid(const std::string &spec);

SweepResult threshold_sweep(Builder &b, const std::vector<int> &levels, const std::vector<double> &p_grid,
                            uint32_t cycles, uint64_t shots, uint64_t seed, uint32_t workers = 1,
                            bool idle_noise = true, bool per_observable = true);

struct PercolationParams {
    double c = 0.5;
    int r_star = 0;
    double p_star = 0;
    /// V[k] is the volume of a level-(k+1) rectangle; the last entry repeats for higher levels.
    std::vector<double> V{1.0};
};

struct PercolationBound {
    std::vector<double> p;  // p_0 .. p_r
    /// The base assumption V_1 * p_0 < 1 fails.
    bool divergent = false;
    /// First k with V_{k+1} * p_k >= 1, or -1.
    int bound_void_from = -1;
    /// Largest p_0 whose sequence is nonincreasing through level r.
    double threshold = 0;
};

PercolationBound percolation_bound(const PercolationParams &params, double p0, int r);

/// Rectangle volumes measured on built circuits: V_0 counts operation locations of a 0-Rec
/// (0-Meas of a logical Z plus one 0-EC); V_1 counts 0-Recs (0-Meas and 0-EC instances outside
/// any 0-Meas) of a 1-Rec (1-Meas of a logical Z plus one 1-EC).
std::vector<double> measure_volumes(Builder &b);

}  // namespace hline

#endif

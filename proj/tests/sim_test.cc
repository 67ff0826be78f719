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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

using namespace hline;

namespace {

Builder &builder() {
    static Builder b(0);
    return b;
}

SimConfig config(double p, uint64_t shots, uint64_t seed) {
    SimConfig c;
    c.level = 0;
    c.cycles = 1;
    c.noise = {p, true};
    c.shots = shots;
    c.seed = seed;
    return c;
}

}  // namespace

TEST(sim, wilson_interval_properties) {
    for (uint64_t n : {1, 10, 1000}) {
        for (uint64_t k = 0; k <= n; k += std::max<uint64_t>(1, n / 7)) {
            auto w = wilson_interval(k, n);
            double ph = double(k) / n;
            ASSERT_LE(w.low, ph + 1e-12);
            ASSERT_GE(w.high, ph - 1e-12);
            ASSERT_GE(w.low, 0);
            ASSERT_LE(w.high, 1);
        }
    }
    auto w = wilson_interval(0, 100);
    ASSERT_EQ(w.low, 0);
    ASSERT_NEAR(w.high, 0.037, 0.001);
    ASSERT_THROW(wilson_interval(3, 2), std::invalid_argument);
}

TEST(sim, per_cycle_rate_inverts_accumulation) {
    double d = 0.01;
    double total = 1 - std::pow(1 - d, 5);
    ASSERT_NEAR(per_cycle_rate(total, 5), d, 1e-12);
    ASSERT_EQ(per_cycle_rate(0, 3), 0);
    ASSERT_EQ(per_cycle_rate(1, 3), 1);
    ASSERT_THROW(per_cycle_rate(0.5, 0), std::invalid_argument);
}

TEST(sim, noisy_shot_at_zero_noise_matches_noiseless) {
    auto fp = flatten(builder().build_ec(0), builder().layout(0));
    auto shot = sample_noisy_shot(fp.circuit, {0, true}, 4);
    ASSERT_TRUE(shot.faults.empty());
    ASSERT_EQ(shot.record, tableau_simulate(fp.circuit, {}, derive_seed(4, 1)));
    ASSERT_THROW(sample_noisy_shot(fp.circuit, {1.0, true}, 4), std::invalid_argument);
}

TEST(sim, noisy_shot_is_reproducible) {
    auto fp = flatten(builder().hook0(block_info().stabilizer(true, 0), 1, "X0"), builder().layout(0));
    auto a = sample_noisy_shot(fp.circuit, {0.999, true}, 17);
    auto b = sample_noisy_shot(fp.circuit, {0.999, true}, 17);
    ASSERT_EQ(a.record, b.record);
    ASSERT_EQ(a.faults.size(), b.faults.size());
    for (size_t i = 0; i < a.faults.size(); i++) {
        ASSERT_EQ(a.faults[i].q0, b.faults[i].q0);
        ASSERT_EQ(a.faults[i].layer, b.faults[i].layer);
        ASSERT_EQ(a.faults[i].p0, b.faults[i].p0);
    }
    auto c = sample_noisy_shot(fp.circuit, {0.999, false}, 17);
    ASSERT_LT(c.faults.size(), a.faults.size());
}

TEST(sim, noisy_shot_fault_frequency_is_binomial) {
    Circuit c(1);
    c.layers.push_back({Operation::h(0)});
    const double p = 0.05;
    const int shots = 100000;
    int hits = 0;
    for (int s = 0; s < shots; s++) {
        hits += int(sample_noisy_shot(c, {p, true}, s).faults.size());
    }
    double sd = std::sqrt(shots * p * (1 - p));
    ASSERT_LT(std::abs(hits - shots * p), 3 * sd);
}

TEST(sim, zero_noise_gives_zero_failures) {
    auto r = estimate_logical_error(builder(), config(0, 100, 1));
    ASSERT_EQ(r.shots, 100u);
    ASSERT_EQ(r.any_failures, 0u);
    for (auto f : r.failures) {
        ASSERT_EQ(f, 0u);
    }
    ASSERT_EQ(r.faults_sampled, 0u);
    ASSERT_EQ(r.observable_names.size(), 7u);
}

TEST(sim, results_are_reproducible_and_worker_independent) {
    auto cfg = config(0.01, 300, 9);
    cfg.cycles = 2;
    auto a = estimate_logical_error(builder(), cfg);
    auto b = estimate_logical_error(builder(), cfg);
    cfg.workers = 3;
    auto c = estimate_logical_error(builder(), cfg);
    for (const auto *x : {&b, &c}) {
        ASSERT_EQ(a.failures, x->failures);
        ASSERT_EQ(a.any_failures, x->any_failures);
        ASSERT_EQ(a.faults_sampled, x->faults_sampled);
    }
    // Noise this strong must produce failures, or the comparison above says nothing.
    ASSERT_GT(a.any_failures, 0u);
    ASSERT_LE(a.any_failures, a.shots);
    for (size_t o = 0; o <= a.failures.size(); o++) {
        auto iv = a.interval(o);
        ASSERT_LE(iv.low, a.rate(o));
        ASSERT_GE(iv.high, a.rate(o));
    }
}

TEST(sim, merged_halves_equal_full_run) {
    auto full = estimate_logical_error(builder(), config(0.01, 256, 21));
    auto h1 = config(0.01, 128, 21);
    auto h2 = h1;
    h2.first_shot = 128;
    auto m = merge_results(estimate_logical_error(builder(), h1), estimate_logical_error(builder(), h2));
    ASSERT_EQ(m.shots, full.shots);
    ASSERT_EQ(m.failures, full.failures);
    ASSERT_EQ(m.any_failures, full.any_failures);
    ASSERT_EQ(m.faults_sampled, full.faults_sampled);
    h2.first_shot = 100;
    ASSERT_THROW(estimate_logical_error(builder(), h2), std::invalid_argument);
    auto other = config(0.02, 128, 21);
    ASSERT_THROW(merge_results(full, estimate_logical_error(builder(), other)), std::invalid_argument);
}

TEST(sim, invalid_configs_throw) {
    ASSERT_THROW(estimate_logical_error(builder(), config(0.01, 0, 1)), std::invalid_argument);
    ASSERT_THROW(estimate_logical_error(builder(), config(1.0, 10, 1)), std::invalid_argument);
    auto c = config(0.01, 10, 1);
    c.level = 1;
    ASSERT_THROW(estimate_logical_error(builder(), c), std::invalid_argument);
}

TEST(sim, sweep_shape_and_csv) {
    auto s = threshold_sweep(builder(), {0}, {0.0}, 1, 64, 5);
    ASSERT_EQ(s.rows.size(), 8u);  // 7 logicals plus "any"
    for (const auto &r : s.rows) {
        ASSERT_EQ(r.failures, 0u);
    }
    auto grid = parse_p_grid("1e-3:4e-3:3");
    ASSERT_EQ(grid.size(), 3u);
    ASSERT_NEAR(grid[1], 2e-3, 1e-12);
    auto t = threshold_sweep(builder(), {0}, grid, 1, 64, 5, 1, true, false);
    ASSERT_EQ(t.rows.size(), grid.size());
    auto csv = t.csv();
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    ASSERT_EQ(line, "level,p,cycles,shots,observable,failures,rate,ci_low,ci_high,seed");
    size_t n = 0;
    while (std::getline(in, line)) {
        n++;
    }
    ASSERT_EQ(n, grid.size());
    auto again = threshold_sweep(builder(), {0}, grid, 1, 64, 5, 1, true, false);
    ASSERT_EQ(again.csv(), csv);
    ASSERT_THROW(threshold_sweep(builder(), {}, grid, 1, 64, 5), std::invalid_argument);
}

TEST(sim, p_grid_parsing) {
    ASSERT_EQ(parse_p_grid("0.01"), std::vector<double>{0.01});
    auto g = parse_p_grid("1e-4:5e-2:10");
    ASSERT_EQ(g.size(), 10u);
    ASSERT_NEAR(g.front(), 1e-4, 1e-15);
    ASSERT_NEAR(g.back(), 5e-2, 1e-12);
    for (size_t i = 1; i < g.size(); i++) {
        ASSERT_GT(g[i], g[i - 1]);
    }
    for (const char *bad : {"", "x", "1e-3:", "1e-3:1e-2", "1e-3:1e-2:0", "0:1:3", "1e-3:1e-2:2.5"}) {
        ASSERT_THROW(parse_p_grid(bad), std::invalid_argument) << bad;
    }
}

TEST(sim, percolation_closed_form_at_unit_volume) {
    PercolationParams params;
    params.V = {1.0};
    auto b = percolation_bound(params, 0.25, 6);
    ASSERT_EQ(b.p.size(), 7u);
    for (int r = 0; r <= 6; r++) {
        ASSERT_EQ(b.p[r], std::pow(0.25, std::pow(2.0, r))) << r;
    }
    ASSERT_FALSE(b.divergent);
    ASSERT_NEAR(b.threshold, 1.0, 1e-9);
}

TEST(sim, percolation_examples) {
    PercolationParams params;
    params.V = {100.0};
    auto b = percolation_bound(params, 1e-5, 3);
    ASSERT_NEAR(b.p[1], 1e-6, 1e-18);
    ASSERT_FALSE(b.divergent);
    ASSERT_EQ(b.bound_void_from, -1);
    ASSERT_NEAR(b.threshold, 1e-4, 1e-10);
    // The flag follows V * p_0 >= 1 exactly.
    ASSERT_TRUE(percolation_bound(params, 0.01, 2).divergent);
    ASSERT_FALSE(percolation_bound(params, std::nextafter(0.01, 0.0), 2).divergent);
    ASSERT_TRUE(percolation_bound(params, 0.5, 2).divergent);
    params.V = {};
    ASSERT_THROW(percolation_bound(params, 0.1, 2), std::invalid_argument);
    params.V = {0.5};
    ASSERT_THROW(percolation_bound(params, 0.1, 2), std::invalid_argument);
}

TEST(sim, percolation_is_nonincreasing_below_threshold) {
    PercolationParams params;
    params.V = {30.0, 500.0};
    auto top = percolation_bound(params, 1e-6, 5).threshold;
    for (double p : {top * 0.99, top * 0.5, top * 0.01}) {
        auto b = percolation_bound(params, p, 5);
        for (size_t i = 1; i < b.p.size(); i++) {
            ASSERT_LE(b.p[i], b.p[i - 1]) << p << " " << i;
        }
    }
    auto above = percolation_bound(params, top * 1.01, 5);
    bool rose = false;
    for (size_t i = 1; i < above.p.size(); i++) {
        rose |= above.p[i] > above.p[i - 1];
    }
    ASSERT_TRUE(rose);
}

TEST(sim, level0_volume_counts_operations) {
    auto v = measure_volumes(builder());
    ASSERT_EQ(v.size(), 1u);
    ASSERT_GT(v[0], 1000);
}

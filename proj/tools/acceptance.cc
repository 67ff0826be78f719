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

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "hline/acceptance.h"

using namespace hline;

int main(int argc, char **argv) {
    CLI::App app{"hline acceptance checks; one line per criterion"};
    AcceptanceOptions opt;
    std::vector<int> only;
    app.add_option("--workers", opt.workers)->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed);
    app.add_option("--slope-shots", opt.slope_shots, "shots per p for the slope fit")->check(CLI::PositiveNumber);
    app.add_option("--crossing-grid", opt.crossing_grid, "a:b:steps for the crossing search");
    app.add_option("--crossing-shots-level0", opt.crossing_shots_level0)->check(CLI::PositiveNumber);
    app.add_option("--crossing-shots-level1", opt.crossing_shots_level1)->check(CLI::PositiveNumber);
    app.add_option("--only", only, "criterion ids to run")->delimiter(',')->check(CLI::Range(1, kNumCriteria));
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (only.empty()) {
        for (int i = 1; i <= kNumCriteria; i++) {
            only.push_back(i);
        }
    }
    bool all = true;
    for (int id : only) {
        auto t0 = std::chrono::steady_clock::now();
        auto r = check_criterion(id, opt);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all &= r.pass;
        std::cout << "criterion " << id << " (" << r.name << "): " << (r.pass ? "PASS" : "FAIL") << " | " << r.detail
                  << " [" << secs << " s]" << std::endl;
    }
    return all ? 0 : 1;
}

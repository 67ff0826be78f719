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

#ifndef HLINE_ACCEPTANCE_H
#define HLINE_ACCEPTANCE_H

#include <cstdint>
#include <string>

namespace hline {

struct AcceptanceOptions {
    uint32_t workers = 1;
    uint64_t seed = 1;
    /// Shots per noise strength for the low-noise slope.
    uint64_t slope_shots = 1'000'000;
    /// Crossing search: log grid over [1e-4, 5e-2] and shots per point at each level.
    std::string crossing_grid = "1e-4:5e-2:6";
    uint64_t crossing_shots_level0 = 6400;
    uint64_t crossing_shots_level1 = 64;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

constexpr int kNumCriteria = 11;

/// Runs acceptance check `id` (1..kNumCriteria).
CriterionResult check_criterion(int id, const AcceptanceOptions &opt = {});

}  // namespace hline

#endif

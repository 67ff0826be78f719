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

#include "hline/acceptance.h"

#include <gtest/gtest.h>

using namespace hline;

class CriterionTest : public ::testing::TestWithParam<int> {};

TEST_P(CriterionTest, holds) {
    auto r = check_criterion(GetParam());
    EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
    std::cout << r.name << ": " << r.detail << "\n";
}

INSTANTIATE_TEST_SUITE_P(acceptance, CriterionTest, ::testing::Range(1, kNumCriteria + 1),
                         [](const auto &info) { return "criterion_" + std::to_string(info.param); });

TEST(acceptance, unknown_criterion_throws) {
    ASSERT_THROW(check_criterion(0), std::out_of_range);
    ASSERT_THROW(check_criterion(kNumCriteria + 1), std::out_of_range);
}

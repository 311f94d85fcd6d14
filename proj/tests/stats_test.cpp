// Copyright 2026 The majmem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "majmem/stats.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "majmem/parallel.hpp"

using namespace majmem;

TEST(pairwise_sum, exact_on_integers) {
    std::vector<double> x(1001);
    for (size_t i = 0; i < x.size(); i++) {
        x[i] = static_cast<double>(i);
    }
    EXPECT_EQ(pairwise_sum(x), 500500.0);
    EXPECT_EQ(pairwise_sum(std::vector<double>{}), 0.0);
}

TEST(linear_fit, exact_line) {
    LinearFit f = linear_fit({1, 2, 3, 4}, {3, 5, 7, 9});
    EXPECT_NEAR(f.slope, 2.0, 1e-14);
    EXPECT_NEAR(f.intercept, 1.0, 1e-14);
    EXPECT_NEAR(f.r2, 1.0, 1e-14);
    EXPECT_EQ(f.n, 4u);
}

TEST(linear_fit, noisy_line) {
    LinearFit f = linear_fit({0, 1, 2, 3}, {0, 1.2, 1.8, 3.1});
    EXPECT_GT(f.r2, 0.9);
    EXPECT_LT(f.r2, 1.0);
}

TEST(rank_correlation, monotone_and_ties) {
    EXPECT_NEAR(rank_correlation({1, 2, 3, 4}, {10, 20, 35, 100}), 1.0, 1e-14);
    EXPECT_NEAR(rank_correlation({1, 2, 3, 4}, {4, 3, 2, 1}), -1.0, 1e-14);
    double r = rank_correlation({1, 2, 2, 3}, {1, 3, 2, 4});
    EXPECT_GT(r, 0.5);
    EXPECT_LT(r, 1.0);
}

TEST(parallel_for, covers_every_index_and_reports_lowest_error) {
    std::vector<int> hit(100, 0);
    parallel_for(hit.size(), 3, [&](size_t i) { hit[i]++; });
    EXPECT_EQ(std::count(hit.begin(), hit.end(), 1), 100);
    try {
        parallel_for(50, 3, [](size_t i) {
            if (i % 10 == 7) {
                throw std::runtime_error(std::to_string(i));
            }
        });
        FAIL() << "expected an exception";
    } catch (const std::runtime_error &e) {
        EXPECT_STREQ(e.what(), "7");
    }
}

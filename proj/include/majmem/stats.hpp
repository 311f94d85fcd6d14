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

#ifndef MAJMEM_STATS_HPP
#define MAJMEM_STATS_HPP

#include <cstddef>
#include <vector>

namespace majmem {

/// Sum in a fixed binary-tree order, independent of how the values were produced.
double pairwise_sum(const double *x, size_t n);
double pairwise_sum(const std::vector<double> &x);

struct LinearFit {
    double slope = 0;
    double intercept = 0;
    double r2 = 0;
    size_t n = 0;
};

/// Ordinary least squares y = slope x + intercept. r2 is the coefficient of
/// determination (1 for a perfect fit, 0 when y is constant).
LinearFit linear_fit(const std::vector<double> &x, const std::vector<double> &y);

/// Spearman rank correlation with average ranks for ties.
double rank_correlation(const std::vector<double> &x, const std::vector<double> &y);

}  // namespace majmem

#endif

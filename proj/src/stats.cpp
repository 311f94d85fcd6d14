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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "majmem/errors.hpp"

using namespace majmem;

double majmem::pairwise_sum(const double *x, size_t n) {
    if (n <= 8) {
        double s = 0;
        for (size_t i = 0; i < n; i++) {
            s += x[i];
        }
        return s;
    }
    size_t h = n / 2;
    return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

double majmem::pairwise_sum(const std::vector<double> &x) {
    return pairwise_sum(x.data(), x.size());
}

LinearFit majmem::linear_fit(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw ConfigError("linear_fit: need at least two (x, y) pairs of equal length");
    }
    const double n = static_cast<double>(x.size());
    double mx = pairwise_sum(x) / n;
    double my = pairwise_sum(y) / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < x.size(); i++) {
        double dx = x[i] - mx;
        double dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0) {
        throw ConfigError("linear_fit: all x values coincide");
    }
    LinearFit f;
    f.n = x.size();
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r2 = syy == 0 ? 0.0 : (sxy * sxy) / (sxx * syy);
    return f;
}

namespace {

std::vector<double> ranks(const std::vector<double> &v) {
    std::vector<size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    size_t i = 0;
    while (i < idx.size()) {
        size_t j = i;
        while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) {
            j++;
        }
        double avg = 0.5 * static_cast<double>(i + j);
        for (size_t k = i; k <= j; k++) {
            r[idx[k]] = avg;
        }
        i = j + 1;
    }
    return r;
}

}  // namespace

double majmem::rank_correlation(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw ConfigError("rank_correlation: need at least two pairs of equal length");
    }
    std::vector<double> rx = ranks(x);
    std::vector<double> ry = ranks(y);
    double n = static_cast<double>(x.size());
    double mx = pairwise_sum(rx) / n;
    double my = pairwise_sum(ry) / n;
    double sxy = 0, sxx = 0, syy = 0;
    for (size_t i = 0; i < rx.size(); i++) {
        sxy += (rx[i] - mx) * (ry[i] - my);
        sxx += (rx[i] - mx) * (rx[i] - mx);
        syy += (ry[i] - my) * (ry[i] - my);
    }
    if (sxx == 0 || syy == 0) {
        return 0;
    }
    return sxy / std::sqrt(sxx * syy);
}

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

#include "majmem/localization.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "majmem/errors.hpp"

using namespace majmem;

TEST(transfer_matrix, unit_determinant) {
    for (double zeta : {0.1, -0.7, 1.3, 5.0}) {
        for (double e : {-1.0, 0.0, 0.015625, 0.8}) {
            EXPECT_NEAR(transfer_matrix(zeta, e).determinant(), 1.0, 1e-12);
        }
    }
}

TEST(lyapunov_exponent, refuses_clean_chain) {
    EXPECT_THROW(lyapunov_exponent(UniformStream{0.125, 0.0, 1, 0}, 1000, 0.0), ConfigError);
}

TEST(lyapunov_exponent, vector_and_stream_agree) {
    UniformStream stream{0.125, 0.0625, 9, 0};
    std::vector<double> mus(20000);
    for (size_t j = 0; j < mus.size(); j++) {
        mus[j] = stream(j);
    }
    for (double e : {-0.5, 0.0156, 0.4}) {
        EXPECT_NEAR(lyapunov_exponent(mus, e), lyapunov_exponent(stream, mus.size(), e), 1e-12);
        EXPECT_NEAR(lyapunov_transfer_product(mus, e), lyapunov_transfer_product(stream, mus.size(), e), 1e-12);
    }
}

TEST(lyapunov_exponent, matches_transfer_product) {
    UniformStream stream{0.125, 0.0625, 4, 0};
    for (double e : {-0.9, -0.3, 0.015625, 0.2, 0.95}) {
        double z = lyapunov_exponent(stream, 200000, e);
        double t = lyapunov_transfer_product(stream, 200000, e);
        EXPECT_NEAR(z, t, 5e-3) << "E = " << e;
    }
}

TEST(lyapunov_scan, batched_kernel_matches_reference) {
    UniformStream stream{0.25, 0.125, 6, 0};
    std::vector<double> energies;
    for (int k = 0; k < 21; k++) {
        energies.push_back(-1.0 + 0.1 * k);
    }
    LyapunovScan fast = lyapunov_scan(stream, 50000, energies, 2);
    LyapunovScan ref = lyapunov_scan_reference(stream, 50000, energies);
    ASSERT_EQ(fast.exponents.size(), energies.size());
    for (size_t k = 0; k < energies.size(); k++) {
        EXPECT_NEAR(fast.exponents[k], ref.exponents[k], 1e-10);
    }
    EXPECT_EQ(lyapunov_scan(stream, 50000, energies, 1).exponents, fast.exponents);
}

TEST(lyapunov_scan, positive_with_minimum_near_mu_squared) {
    const double mu = 0.125;
    for (double ratio : {1.5, 2.0, 2.5}) {
        UniformStream stream{mu, mu / ratio, 1, 0};
        std::vector<double> energies;
        for (int k = 0; k <= 80; k++) {
            energies.push_back(-1.0 + 0.025 * k);
        }
        LyapunovScan s = lyapunov_scan(stream, 200000, energies);
        auto it = std::min_element(s.exponents.begin(), s.exponents.end());
        for (double l : s.exponents) {
            EXPECT_GT(l, 0.0);
        }
        EXPECT_NEAR(energies[it - s.exponents.begin()], mu * mu, 0.05) << "ratio " << ratio;
    }
}

TEST(lyapunov_energy_grid, covers_band_and_refines) {
    std::vector<double> g = lyapunov_energy_grid(0.25);
    EXPECT_EQ(g.size(), 640u);
    EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
    EXPECT_EQ(g.front(), -1.0);
    EXPECT_EQ(g.back(), 1.0);
    size_t near = std::count_if(g.begin(), g.end(), [](double e) { return std::abs(e - 0.0625) <= 0.1; });
    EXPECT_GE(near, 128u);
}

TEST(minimal_lyapunov, below_every_grid_point) {
    MinimalLyapunov m = minimal_lyapunov(0.125, 2.0, 100000, 3);
    for (double l : m.scan.exponents) {
        EXPECT_LE(m.ell_min, l);
    }
    EXPECT_GT(m.ell_min, 0.0);
    EXPECT_NEAR(m.energy, 0.015625, 0.05);
}

TEST(xi_effective, strong_disorder_is_short) {
    ChainParams p;
    p.n = 64;
    p.mu = 0.5;
    p.eta = 0.5;
    p.disorder = UniformIID{3};
    PotentialRealization pot = realize_potential(p, 0);
    XiEffResult x = xi_effective(pot);
    EXPECT_FALSE(x.saturated);
    EXPECT_GT(x.xi_eff, 0.0);
    EXPECT_LT(x.xi_eff, 64.0 / 4);
    EXPECT_EQ(x.per_row_fits.size(), 128u);
    for (const RowFit &f : x.per_row_fits) {
        if (f.used) {
            EXPECT_GE(f.r2, 0.5);
            EXPECT_LE(f.xi, x.xi_eff);
        }
    }
    EXPECT_EQ(xi_effective(pot).xi_eff, x.xi_eff);
    EXPECT_THROW(xi_effective(PotentialRealization{{0.5, 0.5, 0.5}, std::nullopt}), ConfigError);
}

TEST(xi_effective, fixed_point_potential_is_long) {
    // a = 2 drives y_j to 1/2, so the potential flattens to mu.
    PotentialRealization flat{logistic_potential(64, 0.5, 0.25, 0.2845, 2.0), std::nullopt};
    PotentialRealization chaotic{logistic_potential(64, 0.5, 0.25, 0.2845, 3.9914), std::nullopt};
    XiEffResult f = xi_effective(flat);
    EXPECT_TRUE(f.saturated);
    EXPECT_GT(f.xi_eff, xi_effective(chaotic).xi_eff);
}

TEST(pseudorandom_scan, ranked_and_deterministic) {
    std::vector<double> y1s{0.1, 0.2845, 0.5, 0.7};
    std::vector<double> as{2.0, 3.7, 3.9914};
    auto a = pseudorandom_scan(y1s, as, 64, 0.5, 0.25, 1);
    auto b = pseudorandom_scan(y1s, as, 64, 0.5, 0.25, 2);
    ASSERT_EQ(a.size(), 12u);
    for (size_t k = 0; k < a.size(); k++) {
        EXPECT_EQ(a[k].xi_eff, b[k].xi_eff);
        EXPECT_EQ(a[k].y1, b[k].y1);
        EXPECT_EQ(a[k].a, b[k].a);
        if (k > 0) {
            EXPECT_LE(a[k - 1].xi_eff, a[k].xi_eff);
        }
    }
    // Fixed-point potentials are extended: no decay fit, infinite xi_eff, long end.
    for (size_t k = a.size() - 4; k < a.size(); k++) {
        EXPECT_EQ(a[k].a, 2.0);
        EXPECT_TRUE(std::isinf(a[k].xi_eff));
    }
}

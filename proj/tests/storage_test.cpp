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

#include "majmem/storage.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "majmem/chain.hpp"
#include "majmem/errors.hpp"
#include "majmem/oracle.hpp"

using namespace majmem;

namespace {

SkewMatrix homogeneous(size_t n, double mu) {
    return one_particle_hamiltonian(std::vector<double>(n, mu));
}

SkewMatrix disordered(size_t n, double mu, double eta, uint64_t seed, uint64_t r = 0) {
    ChainParams p;
    p.n = n;
    p.mu = mu;
    p.eta = eta;
    p.disorder = UniformIID{seed};
    return one_particle_hamiltonian(p, realize_potential(p, r));
}

Syndrome make_syndrome(uint64_t code, size_t n) {
    Syndrome s;
    s.bits = syndrome_bits(code, n);
    return s;
}

}  // namespace

TEST(syndrome_bits, little_endian) {
    EXPECT_EQ(syndrome_bits(0b101, 4), (std::vector<uint8_t>{1, 0, 1}));
    EXPECT_EQ(syndrome_bits(0, 2), (std::vector<uint8_t>{0}));
}

TEST(encoded_state, validation) {
    EncodedState e;
    EXPECT_NO_THROW(e.validate());
    e.alpha0 = 1;
    EXPECT_THROW(e.validate(), ConfigError);
    e.alpha1 = 0;
    EXPECT_NO_THROW(e.validate());
}

TEST(corrected_amplitude, initial_time) {
    SkewMatrix h = homogeneous(4, 0.3);
    for (int sigma : {0, 1}) {
        EXPECT_NEAR(std::abs(corrected_amplitude(sigma, make_syndrome(0, 4), h, 0.0) - 1.0), 0.0, 1e-14);
        for (uint64_t code = 1; code < 8; code++) {
            EXPECT_NEAR(std::abs(corrected_amplitude(sigma, make_syndrome(code, 4), h, 0.0)), 0.0, 1e-14);
        }
    }
}

TEST(corrected_amplitude, matches_oracle_up_to_common_phase) {
    SkewMatrix h = homogeneous(3, 0.5);
    oracle::ManyBody mb(h);
    auto exact = oracle::oracle_syndromes(mb, 1.5);
    // Fix the global phase from the largest amplitude, then require every
    // (sigma, s) amplitude to agree with that single phase.
    std::complex<double> phase;
    double best = -1;
    std::complex<double> amp[4][2];
    for (uint64_t code = 0; code < 4; code++) {
        for (int sigma : {0, 1}) {
            amp[code][sigma] = corrected_amplitude(sigma, make_syndrome(code, 3), h, 1.5);
            if (std::abs(amp[code][sigma]) > best) {
                best = std::abs(amp[code][sigma]);
                phase = exact[code].amp[sigma] / amp[code][sigma];
            }
        }
    }
    EXPECT_NEAR(std::abs(phase), 1.0, 1e-10);
    for (uint64_t code = 0; code < 4; code++) {
        for (int sigma : {0, 1}) {
            EXPECT_NEAR(std::abs(phase * amp[code][sigma] - exact[code].amp[sigma]), 0.0, 1e-8);
            // The amplitude squared is the syndrome probability.
            EXPECT_NEAR(std::norm(amp[code][sigma]), exact[code].prob[sigma], 1e-8);
        }
    }
}

TEST(conditional_fidelity, initial_time_and_bounds) {
    SkewMatrix h = homogeneous(5, 0.4);
    EncodedState enc;
    EXPECT_NEAR(conditional_fidelity(make_syndrome(0, 5), enc, h, 0.0), 1.0, 1e-14);
    EncodedState single;
    single.alpha0 = 1;
    single.alpha1 = 0;
    for (uint64_t code = 0; code < 16; code++) {
        double f = conditional_fidelity(make_syndrome(code, 5), single, h, 2.5);
        EXPECT_LE(f, 1 + 1e-8);
        EXPECT_GE(f, 0.0);
        double g = conditional_fidelity(make_syndrome(code, 5), enc, h, 2.5);
        EXPECT_LE(g, 1 + 1e-8);
    }
    const std::complex<double> amp[2] = {0.0, 0.0};
    const double prob[2] = {0.0, 0.0};
    EXPECT_THROW(conditional_fidelity(enc, amp, prob), NumericalError);
}

TEST(conditional_fidelity, matches_oracle) {
    SkewMatrix h = homogeneous(3, 0.5);
    oracle::ManyBody mb(h);
    EncodedState enc;
    auto exact = oracle::oracle_syndromes(mb, 2.0);
    for (uint64_t code = 0; code < 4; code++) {
        double expect = conditional_fidelity(enc, exact[code].amp, exact[code].prob);
        EXPECT_NEAR(conditional_fidelity(make_syndrome(code, 3), enc, h, 2.0), expect, 1e-8);
    }
}

TEST(exact_fidelity, initial_time_and_limit) {
    EncodedState enc;
    FidelityEstimate e = exact_fidelity(enc, homogeneous(7, 0.6), 0.0);
    EXPECT_NEAR(e.value, 1.0, 1e-14);
    EXPECT_EQ(e.std_error, 0.0);
    EXPECT_EQ(e.mode, EstimateMode::Exact);
    EXPECT_THROW(exact_fidelity(enc, homogeneous(13, 0.6), 1.0), ConfigError);
}

TEST(exact_fidelity, matches_oracle) {
    std::mt19937_64 gen(17);
    std::uniform_real_distribution<double> u;
    for (size_t n : {2, 4, 6, 8}) {
        SkewMatrix h = disordered(n, 0.8 * u(gen), 0.4 * u(gen), n);
        oracle::ManyBody mb(h);
        for (EncodedState enc : {EncodedState{}, EncodedState{{0.6, 0}, {0, 0.8}}}) {
            double t = 5 * u(gen);
            EXPECT_NEAR(exact_fidelity(enc, h, t).value, oracle::oracle_fidelity(mb, enc, t), 1e-8) << "N = " << n;
        }
    }
}

TEST(exact_fidelity, cosine_law_small_perturbation) {
    const size_t n = 6;
    const double mu = 0.1;
    MemoryModel model(homogeneous(n, mu));
    EncodedState enc;
    const double period = 2 * M_PI / model.splitting();
    double worst = 0;
    for (double t : uniform_grid(period, 41)) {
        worst = std::max(worst, std::abs(exact_fidelity(enc, model, t).value - cosine_baseline(model, t)));
    }
    EXPECT_LE(worst, 8 * mu * std::sqrt(6.0));
}

TEST(exact_fidelity, sector_symmetry_for_homogeneous_chain) {
    MemoryModel model(homogeneous(6, 0.45));
    EncodedState even{{1, 0}, {0, 0}};
    EncodedState odd{{0, 0}, {1, 0}};
    for (double t : {0.7, 3.0, 11.0}) {
        EXPECT_NEAR(exact_fidelity(even, model, t).value, exact_fidelity(odd, model, t).value, 1e-10);
    }
}

TEST(monte_carlo, initial_time_is_exact) {
    MemoryModel model(homogeneous(10, 0.5));
    MonteCarloOptions opt;
    opt.n_samples = 200;
    FidelityEstimate e = monte_carlo_fidelity(EncodedState{}, model, 0.0, Rng(3), opt);
    EXPECT_NEAR(e.value, 1.0, 1e-12);
    EXPECT_NEAR(e.std_error, 0.0, 1e-12);
    EXPECT_EQ(e.mode, EstimateMode::MonteCarlo);
}

TEST(monte_carlo, agrees_with_exact) {
    MemoryModel model(homogeneous(8, 0.5));
    MonteCarloOptions opt;
    opt.n_samples = 100000;
    FidelityEstimate mc = monte_carlo_fidelity(EncodedState{}, model, 3.0, Rng(8), opt);
    double exact = exact_fidelity(EncodedState{}, model, 3.0).value;
    EXPECT_LE(std::abs(mc.value - exact), 3 * mc.std_error);
    EXPECT_GT(mc.std_error, 0.0);

    MemoryModel random(disordered(11, 0.5, 0.3, 4));
    opt.n_samples = 20000;
    for (double t : {2.0, 9.0}) {
        FidelityEstimate e = monte_carlo_fidelity(EncodedState{}, random, t, Rng(9), opt);
        EXPECT_LE(std::abs(e.value - exact_fidelity(EncodedState{}, random, t).value), 3 * e.std_error);
    }
}

TEST(monte_carlo, fast_path_matches_reference_per_sample) {
    for (size_t n : {3, 9, 20}) {
        MemoryModel model(disordered(n, 0.6, 0.3, 21));
        MonteCarloOptions opt;
        opt.n_samples = 60;
        opt.cross_check = true;
        for (double t : {0.0, 1.3, 8.0}) {
            auto fast = monte_carlo_samples(EncodedState{}, model, t, Rng(5), opt);
            auto ref = monte_carlo_samples_reference(EncodedState{}, model, t, Rng(5), opt.n_samples);
            ASSERT_EQ(fast.size(), ref.size());
            for (size_t i = 0; i < fast.size(); i++) {
                EXPECT_NEAR(fast[i], ref[i], 1e-9) << "N = " << n << " t = " << t << " sample " << i;
            }
        }
    }
}

TEST(monte_carlo, deterministic_and_worker_independent) {
    MemoryModel model(disordered(16, 0.5, 0.25, 2));
    MonteCarloOptions opt;
    opt.n_samples = 300;
    opt.workers = 1;
    auto a = monte_carlo_samples(EncodedState{}, model, 6.0, Rng(11), opt);
    auto b = monte_carlo_samples(EncodedState{}, model, 6.0, Rng(11), opt);
    EXPECT_EQ(a, b);
    opt.workers = 3;
    auto c = monte_carlo_samples(EncodedState{}, model, 6.0, Rng(11), opt);
    // Each sample owns its stream, so the per-sample values do not depend on scheduling.
    EXPECT_EQ(a, c);
    EXPECT_EQ(summarize_samples(a, 6.0).value, summarize_samples(c, 6.0).value);
    auto d = monte_carlo_samples(EncodedState{}, model, 6.0, Rng(12), opt);
    EXPECT_NE(a, d);
}

TEST(estimate_fidelity, auto_mode_switches_at_limit) {
    EstimatorParams est;
    est.mc.n_samples = 50;
    MemoryModel small(homogeneous(6, 0.5));
    MemoryModel large(homogeneous(14, 0.5));
    EXPECT_EQ(estimate_fidelity(EncodedState{}, small, 1.0, 0, est).mode, EstimateMode::Exact);
    EXPECT_EQ(estimate_fidelity(EncodedState{}, large, 1.0, 0, est).mode, EstimateMode::MonteCarlo);
    est.mode = EstimatorParams::Mode::MonteCarlo;
    EXPECT_EQ(estimate_fidelity(EncodedState{}, small, 1.0, 0, est).mode, EstimateMode::MonteCarlo);
}

TEST(storage_time, zero_threshold_is_censored) {
    EstimatorParams est;
    StorageTimeResult r = storage_time(EncodedState{}, homogeneous(6, 0.5), uniform_grid(20, 11), 0.0, est);
    EXPECT_TRUE(r.censored());
    EXPECT_EQ(r.t_max(), 20.0);
    EXPECT_EQ(r.grid.size(), 11u);
}

TEST(storage_time, cosine_law_prediction) {
    SkewMatrix h = homogeneous(6, 0.1);
    MemoryModel model(h);
    auto cosine_crossing = [&](double f0) { return 2 * std::acos(std::sqrt(f0)) / model.splitting(); };

    // Mid-oscillation threshold: the bulk-mode ripple is small next to the
    // slope of the cosine, so the crossing lands within one grid step.
    std::vector<double> grid = uniform_grid(2 * cosine_crossing(0.5), 64);
    StorageTimeResult r = storage_time(EncodedState{}, h, grid, 0.5, EstimatorParams{});
    ASSERT_FALSE(r.censored());
    EXPECT_NEAR(*r.t, cosine_crossing(0.5), grid[1] - grid[0]);

    // Near F = 1 the cosine is flat and the O(mu^2) ripple moves the crossing
    // by several steps; it must still sit where the ripple band puts it.
    const double f0 = 0.99;
    grid = uniform_grid(2 * cosine_crossing(f0), 64);
    double ripple = 0;
    for (double t : grid) {
        ripple = std::max(ripple, std::abs(exact_fidelity(EncodedState{}, model, t).value - cosine_baseline(model, t)));
    }
    r = storage_time(EncodedState{}, h, grid, f0, EstimatorParams{});
    ASSERT_FALSE(r.censored());
    const double step = grid[1] - grid[0];
    EXPECT_GE(*r.t, cosine_crossing(std::min(1.0, f0 + ripple)) - step);
    EXPECT_LE(*r.t, cosine_crossing(f0 - ripple) + step);
}

TEST(storage_time, multiple_thresholds_and_grid_checks) {
    MemoryModel model(homogeneous(8, 0.7));
    std::vector<double> grid = uniform_grid(40, 81);
    StorageScan scan = storage_time(EncodedState{}, model, grid, {0.97, 0.9, 0.2}, EstimatorParams{});
    ASSERT_EQ(scan.results.size(), 3u);
    ASSERT_FALSE(scan.results[0].censored());
    ASSERT_FALSE(scan.results[1].censored());
    EXPECT_LE(*scan.results[0].t, *scan.results[1].t);
    for (const FidelityEstimate &e : scan.curve) {
        if (e.t < *scan.results[0].t) {
            EXPECT_GE(e.value, 0.97);
        }
    }
    EXPECT_THROW(storage_time(EncodedState{}, model, {0.0, 2.0, 1.0}, {0.9}, EstimatorParams{}), ConfigError);
}

TEST(cosine_baseline, trivial_cases) {
    EXPECT_EQ(cosine_baseline(homogeneous(5, 0.3), 0.0), 1.0);
    // The clean chain has an exact zero mode.
    EXPECT_NEAR(cosine_baseline(homogeneous(5, 0.0), 123.0), 1.0, 1e-20);
}

TEST(uniform_grid, endpoints) {
    std::vector<double> g = uniform_grid(10, 5);
    EXPECT_EQ(g, (std::vector<double>{0, 2.5, 5, 7.5, 10}));
    EXPECT_THROW(uniform_grid(0, 5), ConfigError);
    EXPECT_THROW(uniform_grid(1, 1), ConfigError);
}

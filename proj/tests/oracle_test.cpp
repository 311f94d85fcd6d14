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

#include "majmem/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "majmem/errors.hpp"
#include "majmem/stats.hpp"

using namespace majmem;
using namespace majmem::oracle;

namespace {

constexpr std::complex<double> kI(0, 1);

double max_abs(const DenseOperator &m) {
    return m.cwiseAbs().maxCoeff();
}

}  // namespace

TEST(build_majoranas, single_site_is_x_and_y) {
    auto c = build_majoranas(1);
    ASSERT_EQ(c.size(), 2u);
    DenseOperator x(2, 2), y(2, 2);
    x << 0, 1, 1, 0;
    y << 0, -kI, kI, 0;
    EXPECT_EQ(c[0], x);
    EXPECT_EQ(c[1], y);
}

TEST(build_majoranas, anticommutators_exact) {
    auto c = build_majoranas(4);
    const Eigen::Index dim = c[0].rows();
    for (size_t p = 0; p < c.size(); p++) {
        for (size_t q = 0; q < c.size(); q++) {
            DenseOperator ac = c[p] * c[q] + c[q] * c[p];
            DenseOperator expect = DenseOperator::Identity(dim, dim) * (p == q ? 2.0 : 0.0);
            EXPECT_EQ(max_abs(ac - expect), 0.0);
        }
    }
    EXPECT_THROW(build_majoranas(11), ConfigError);
    EXPECT_NO_THROW(build_majoranas(11, 11));
}

TEST(parity_operator, is_product_of_z) {
    const size_t n = 3;
    DenseOperator p = parity_operator(n);
    for (Eigen::Index b = 0; b < p.rows(); b++) {
        int ones = __builtin_popcountll(static_cast<unsigned long long>(b));
        EXPECT_EQ(p(b, b), std::complex<double>(ones % 2 ? -1.0 : 1.0, 0.0));
    }
    EXPECT_EQ(max_abs(p - DenseOperator(p.diagonal().asDiagonal())), 0.0);
}

TEST(many_body, hamiltonian_matches_pauli_form_and_commutes_with_parity) {
    std::vector<double> mus{0.3, -0.2, 0.5, 0.1};
    ManyBody mb(one_particle_hamiltonian(mus));
    EXPECT_LE(max_abs(mb.hamiltonian() - pauli_chain_hamiltonian(mus)), 1e-14);
    DenseOperator p = parity_operator(4);
    EXPECT_LE(max_abs(mb.hamiltonian() * p - p * mb.hamiltonian()), 1e-14);
}

TEST(many_body, spectrum_is_free_fermion) {
    ChainParams params;
    params.n = 6;
    params.mu = 0.4;
    params.eta = 0.3;
    params.disorder = UniformIID{8};
    params.absdelta_minus_w = 0.15;
    SkewMatrix h = one_particle_hamiltonian(params, realize_potential(params, 0));
    ManyBody mb(h);
    WilliamsonForm w = williamson(h);
    double e0 = 0;
    for (double l : w.lambdas) {
        e0 -= l / 2;
    }
    std::vector<double> free;
    for (uint32_t occ = 0; occ < 64; occ++) {
        double e = e0;
        for (size_t j = 0; j < 6; j++) {
            e += ((occ >> j) & 1) ? w.lambdas[j] : 0.0;
        }
        free.push_back(e);
    }
    std::sort(free.begin(), free.end());
    std::vector<double> spec = mb.spectrum();
    for (size_t k = 0; k < spec.size(); k++) {
        EXPECT_NEAR(spec[k], free[k], 1e-8);
    }
}

TEST(many_body, code_states_have_definite_parity_and_syndrome) {
    ManyBody mb(one_particle_hamiltonian(std::vector<double>(5, 0.2)));
    DenseOperator p = parity_operator(5);
    for (int sigma : {0, 1}) {
        const StateVector &g = mb.code_state(sigma);
        EXPECT_NEAR(g.norm(), 1.0, 1e-12);
        EXPECT_NEAR((p * g - (sigma ? -1.0 : 1.0) * g).norm(), 0.0, 1e-12);
        EXPECT_NEAR((mb.project_syndrome(std::vector<uint8_t>(4, 0), g) - g).norm(), 0.0, 1e-12);
    }
}

TEST(oracle_fidelity, initial_time) {
    ManyBody mb(one_particle_hamiltonian(std::vector<double>{0.4, 0.7, 0.1, 0.3}));
    EXPECT_NEAR(oracle_fidelity(mb, EncodedState{}, 0.0), 1.0, 1e-12);
}

TEST(oracle_fidelity, cosine_law) {
    const double mu = 0.1;
    SkewMatrix h = one_particle_hamiltonian(std::vector<double>(6, mu));
    ManyBody mb(h);
    double delta = williamson(h).lambdas[0];
    double worst = 0;
    for (int k = 0; k <= 20; k++) {
        double t = k * 2 * M_PI / delta / 20;
        double c = std::cos(delta * t / 2);
        worst = std::max(worst, std::abs(oracle_fidelity(mb, EncodedState{}, t) - c * c));
    }
    EXPECT_LE(worst, 8 * mu * std::sqrt(6.0));
}

TEST(oracle_magnetization, trivial_cases) {
    EXPECT_NEAR(oracle_magnetization(std::vector<double>(4, 0.5), 0.0), 1.0, 1e-12);
    for (double t : {0.5, 3.0, 10.0}) {
        EXPECT_NEAR(oracle_magnetization(std::vector<double>(5, 0.0), t), 1.0, 1e-12);
    }
    EXPECT_THROW(oracle_magnetization(std::vector<double>(11, 0.5), 1.0), ConfigError);
}

TEST(oracle_magnetization, initial_exponential_decay) {
    std::vector<double> ts, logs;
    for (int k = 1; k <= 8; k++) {
        double t = 0.25 * k;
        double m = oracle_magnetization(std::vector<double>(10, 0.5), t);
        ASSERT_GT(m, 0.0);
        ts.push_back(t);
        logs.push_back(std::log(m));
    }
    LinearFit f = linear_fit(ts, logs);
    EXPECT_LT(f.slope, 0.0);
    EXPECT_GE(f.r2, 0.9);
}

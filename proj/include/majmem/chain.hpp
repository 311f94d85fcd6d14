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

#ifndef MAJMEM_CHAIN_HPP
#define MAJMEM_CHAIN_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "majmem/skewlin.hpp"

namespace majmem {

struct NoDisorder {};

struct UniformIID {
    uint64_t seed = 0;
};

/// x_j = 1 - 2 y_j with y_{j+1} = a y_j (1 - y_j).
struct Logistic {
    double y1 = 0.5;
    double a = 4.0;
};

using Disorder = std::variant<NoDisorder, UniformIID, Logistic>;

std::string describe(const Disorder &d);

struct ChainParams {
    size_t n = 2;
    double j_coupling = 1.0;
    double mu = 0.0;
    double eta = 0.0;
    Disorder disorder = NoDisorder{};
    /// Coefficient of the range-3 term c_{2j-1} c_{2j+2}. Zero means w = |Delta|.
    double absdelta_minus_w = 0.0;

    /// Throws ConfigError on violated invariants.
    void validate() const;
};

struct PotentialRealization {
    std::vector<double> mus;
    std::optional<uint64_t> seed_used;

    size_t size() const {
        return mus.size();
    }
};

/// Uniform variate on [-1, 1] for (seed, realization, site). Shared by the
/// finite-chain builder and the streaming Lyapunov generator so both see the
/// same disorder.
double disorder_variate(uint64_t seed, uint64_t realization, uint64_t site);

PotentialRealization realize_potential(const ChainParams &p, uint64_t realization_index);

/// Logistic-map potential mu + eta (1 - 2 y_j).
std::vector<double> logistic_potential(size_t n, double mu, double eta, double y1, double a);

/// 2N x 2N one-particle matrix of H0 + V. Index 2j is c_{2j+1} in one-based
/// Majorana labels.
SkewMatrix one_particle_hamiltonian(const ChainParams &p, const PotentialRealization &pot);

/// Same, with J = 1 and no range-3 term.
SkewMatrix one_particle_hamiltonian(const std::vector<double> &mus);

/// N x N tridiagonal H_+ = (T + S)(T^dagger + S) - I. Spectrum is lambda_j^2 - 1.
Eigen::MatrixXd anderson_h_plus(const PotentialRealization &pot);

/// 2N x 2N off-diagonal hopping matrix H_s = i U (H0 + V) U^dagger. Spectrum is +-lambda_j.
Eigen::MatrixXd anderson_h_s(const PotentialRealization &pot);

/// epsilon = max_j |mu_j| + ||Delta| - w|.
double perturbation_strength(const ChainParams &p, const PotentialRealization &pot);

/// k-th smallest eigenvalue of H_+ (k = 0 is the bottom) by Sturm bisection.
/// Needs O(N) memory, so it reaches chain lengths far beyond dense solves.
double h_plus_eigenvalue(const std::vector<double> &mus, size_t k);

}  // namespace majmem

#endif

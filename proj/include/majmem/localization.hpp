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

#ifndef MAJMEM_LOCALIZATION_HPP
#define MAJMEM_LOCALIZATION_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "majmem/chain.hpp"

namespace majmem {

/// mu_n = mu + eta (2u - 1), u drawn from (seed, realization, site). Sites are
/// generated on demand so chains of 10^7 sites need no storage.
struct UniformStream {
    double mu = 0;
    double eta = 0;
    uint64_t seed = 0;
    uint64_t realization = 0;

    double operator()(uint64_t site) const {
        return mu + eta * disorder_variate(seed, realization, site);
    }
};

/// ell(E) = -(1/N) sum_{j=2}^{N} log|z_j| with z_1 = 0,
/// z_{n+1} = mu_{n+1} / (mu_n^2 - E - mu_n z_n) and the closing
/// z_N = (mu_N^2 - E - 1) / mu_N. This is the growth rate of psi_n.
double lyapunov_exponent(const std::vector<double> &mus, double energy);
double lyapunov_exponent(const UniformStream &stream, uint64_t n_sites, double energy);

/// (1/n) log ||T(mu_n) ... T(mu_1)|| with periodic renormalization.
double lyapunov_transfer_product(const std::vector<double> &mus, double energy);
double lyapunov_transfer_product(const UniformStream &stream, uint64_t n_sites, double energy);

/// T(zeta) = [[(zeta^2 - E)/zeta, -zeta], [1/zeta, 0]]. det T = 1.
Eigen::Matrix2d transfer_matrix(double zeta, double energy);

/// 512 uniform points on [-1, 1] and 128 on [mu^2 - 0.1, mu^2 + 0.1], sorted.
std::vector<double> lyapunov_energy_grid(double mu);

struct LyapunovScan {
    std::vector<double> energies;
    std::vector<double> exponents;
    uint64_t n_sites = 0;
    double mu = 0;
    double eta = 0;
    uint64_t seed = 0;
};

/// ell(E) on every grid energy, parallel over blocks of energies that share
/// one pass over the disorder.
LyapunovScan lyapunov_scan(const UniformStream &stream, uint64_t n_sites, const std::vector<double> &energies,
                           int workers = 0);

/// One energy at a time, no threads. Kept as the baseline for the batched kernel.
LyapunovScan lyapunov_scan_reference(const UniformStream &stream, uint64_t n_sites,
                                     const std::vector<double> &energies);

struct MinimalLyapunov {
    double ell_min = 0;
    double energy = 0;
    LyapunovScan scan;
};

/// Grid minimum followed by golden-section refinement between the grid
/// neighbours of the minimizer.
MinimalLyapunov minimal_lyapunov(double mu, double ratio, uint64_t n_sites, uint64_t seed = 0, int workers = 0);

struct RowFit {
    size_t p = 0;
    double xi = 0;
    double r2 = 0;
    bool used = false;
};

struct XiEffResult {
    double xi_eff = 0;
    bool saturated = false;  // no row produced a usable decay fit; xi_eff is then +inf
    std::vector<RowFit> per_row_fits;
    PotentialRealization potential;
};

/// Effective localization length from the bulk eigenvectors of H_s.
XiEffResult xi_effective(const PotentialRealization &pot);

struct PseudorandomCandidate {
    double y1 = 0;
    double a = 0;
    double xi_eff = 0;
};

/// xi_eff for every (y1, a) pair with mu_j = mu + eta (1 - 2 y_j), sorted
/// ascending by xi_eff (ties by input order).
std::vector<PseudorandomCandidate> pseudorandom_scan(const std::vector<double> &y1s, const std::vector<double> &as,
                                                     size_t n, double mu, double eta, int workers = 0);

}  // namespace majmem

#endif

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

#ifndef MAJMEM_GAUSSIAN_HPP
#define MAJMEM_GAUSSIAN_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "majmem/rng.hpp"
#include "majmem/skewlin.hpp"

namespace majmem {

enum class Parity : uint8_t { Even = 0, Odd = 1, Mixed = 2 };

/// Covariance matrix M_pq = (-i/2) <[c_p, c_q]> plus its parity sector.
struct GaussianState {
    SkewMatrix m;
    Parity parity = Parity::Even;

    size_t n_sites() const {
        return m.n_modes();
    }
    /// max |M^T M - I|. Zero for pure states.
    double purity_defect() const;
};

/// Outcomes of the N-1 stabilizers S_j = (-i) c_{2j} c_{2j+1} (one-based c labels).
/// bits[j] = 1 means S_j was measured as -1.
struct Syndrome {
    std::vector<uint8_t> bits;
    double prob = 1;

    int parity() const;
};

GaussianState ground_state(size_t n, int sigma);

/// M <- R M R^T.
GaussianState evolve(const GaussianState &state, const OrthogonalMatrix &r);

/// Measures all stabilizers in order, drawing each outcome from its
/// conditional distribution. Returns the record and the post-measurement state.
std::pair<Syndrome, GaussianState> sample_syndrome(const GaussianState &state, Rng &rng);

/// In-place kernel behind sample_syndrome. `m` is a dense covariance matrix
/// that is overwritten with the post-measurement state; `bits` receives the
/// outcomes. Returns the probability of the drawn record.
double sample_syndrome_inplace(Eigen::MatrixXd &m, Rng &rng, std::vector<uint8_t> &bits);

/// <g_sigma(t)| Q_s |g_sigma(t)> = 2^{-N} sqrt(det(M + M_s)).
double syndrome_probability(const GaussianState &state, const Syndrome &s);

/// Linear form sum_p alpha_p c_p.
using MajoranaForm = Eigen::VectorXcd;

MajoranaForm majorana_form(size_t dim, size_t p, std::complex<double> coeff = 1.0);

/// <psi| L_1 ... L_2m |psi> by Wick's theorem.
std::complex<double> wick_expectation(const GaussianState &state, const std::vector<MajoranaForm> &ops);

/// Same, with the forms stacked as the rows of `alpha`.
std::complex<double> wick_expectation(const Eigen::MatrixXd &m, const Eigen::MatrixXcd &alpha);

}  // namespace majmem

#endif

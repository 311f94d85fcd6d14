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

#ifndef MAJMEM_ORACLE_HPP
#define MAJMEM_ORACLE_HPP

// Brute-force 2^N simulator. Nothing here uses covariance matrices, Pfaffians
// or canonical forms; it exists to check the code that does.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "majmem/chain.hpp"
#include "majmem/skewlin.hpp"
#include "majmem/storage.hpp"

namespace majmem::oracle {

using DenseOperator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

constexpr size_t kDefaultLimit = 10;

/// Jordan-Wigner Majoranas c_{2j} = Z...Z X_j, c_{2j+1} = Z...Z Y_j (zero-based),
/// with qubit 0 the most significant tensor factor.
std::vector<DenseOperator> build_majoranas(size_t n, size_t limit = kDefaultLimit);

/// (-1)^{sum n_j} = prod_j (-i) c_{2j} c_{2j+1} = prod_j Z_j.
DenseOperator parity_operator(size_t n, size_t limit = kDefaultLimit);

/// -(1/2) sum X_j X_{j+1} + (1/2) sum mu_j Z_j, built from Pauli matrices.
DenseOperator pauli_chain_hamiltonian(const std::vector<double> &mus, size_t limit = kDefaultLimit);

/// Many-body H = (i/4) sum_{pq} A_pq c_p c_q and its exact eigensystem, split
/// by fermion parity.
class ManyBody {
   public:
    explicit ManyBody(const SkewMatrix &a, size_t limit = kDefaultLimit);

    size_t n_sites() const {
        return n_;
    }
    const DenseOperator &hamiltonian() const {
        return h_;
    }
    /// Ground state of H0 (the mu = 0 chain) with parity (-1)^sigma.
    const StateVector &code_state(int sigma) const {
        return code_[sigma];
    }
    /// e^{iHt} psi.
    StateVector evolve(const StateVector &psi, double t) const;
    /// All 2^N eigenvalues, ascending.
    std::vector<double> spectrum() const;
    /// M_pq = -i <psi| c_p c_q |psi> for p != q.
    Eigen::MatrixXd covariance(const StateVector &psi) const;

    StateVector apply_majorana(size_t p, const StateVector &psi) const;
    /// Q_s psi.
    StateVector project_syndrome(const std::vector<uint8_t> &bits, const StateVector &psi) const;
    /// C(s) psi for the decoder's correction of `bits`.
    StateVector apply_correction(const std::vector<uint8_t> &bits, const StateVector &psi) const;

   private:
    size_t n_;
    DenseOperator h_;
    std::vector<uint32_t> sector_index_[2];
    Eigen::VectorXd evals_[2];
    Eigen::MatrixXcd evecs_[2];
    StateVector code_[2];
};

struct SyndromeTerm {
    uint64_t code = 0;
    double prob[2] = {0, 0};
    std::complex<double> amp[2];
};

std::vector<SyndromeTerm> oracle_syndromes(const ManyBody &mb, double t);

/// sum_s |<g| C(s) Q_s e^{iHt} |g>|^2 with |g> entangled with a reference qubit.
double oracle_fidelity(const ManyBody &mb, const EncodedState &enc, double t);
double oracle_fidelity(const ChainParams &p, const PotentialRealization &pot, const EncodedState &enc, double t);

/// (1/N) sum_j <g(t)| X_j |g(t)> for |g> = |+>^N.
double oracle_magnetization(const std::vector<double> &mus, double t, size_t limit = kDefaultLimit);

}  // namespace majmem::oracle

#endif

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

#ifndef MAJMEM_STORAGE_HPP
#define MAJMEM_STORAGE_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "majmem/decoder.hpp"
#include "majmem/gaussian.hpp"
#include "majmem/rng.hpp"
#include "majmem/skewlin.hpp"

namespace majmem {

/// alpha0 |g_0> |0_R> + alpha1 |g_1> |1_R>. Defaults to the maximally entangled state.
struct EncodedState {
    std::complex<double> alpha0{0.70710678118654752440, 0};
    std::complex<double> alpha1{0.70710678118654752440, 0};

    void validate() const;
    /// |alpha_sigma|^2.
    double weight(int sigma) const {
        return std::norm(sigma ? alpha1 : alpha0);
    }
};

enum class EstimateMode { Exact, MonteCarlo };

struct FidelityEstimate {
    double t = 0;
    double value = 0;
    double std_error = 0;
    size_t n_samples = 0;
    EstimateMode mode = EstimateMode::Exact;
};

struct StorageTimeResult {
    double f0 = 0;
    /// First grid time with F < f0; empty when censored at the end of the grid.
    std::optional<double> t;
    std::vector<double> grid;

    bool censored() const {
        return !t.has_value();
    }
    double t_max() const {
        return grid.empty() ? 0.0 : grid.back();
    }
};

/// Everything about a fixed one-particle Hamiltonian that fidelity
/// evaluations reuse: canonical form and size.
class MemoryModel {
   public:
    explicit MemoryModel(const SkewMatrix &h);

    size_t n_sites() const {
        return n_;
    }
    const SkewMatrix &hamiltonian() const {
        return h_;
    }
    const WilliamsonForm &form() const {
        return form_;
    }
    /// Splitting delta = lambda_1, unclamped.
    double splitting() const {
        return form_.lambdas.front();
    }

    /// Covariance matrix of e^{iHt} |g_sigma>. The Heisenberg rotation of the
    /// Majoranas is R(t) = exp(Ht); the state rotates with R(t)^T = R(-t).
    GaussianState evolved_state(int sigma, double t) const;

    /// 2N x 2N real matrix whose rows are the forms L'_1 ... L'_2N with
    /// e^{iHt} proportional to L'_1 L'_2 ... L'_2N.
    Eigen::MatrixXd evolution_forms(double t) const;

   private:
    size_t n_;
    SkewMatrix h_;
    WilliamsonForm form_;
};

/// <g_sigma| C(s) e^{iHt} |g_sigma> through Wick's theorem on the
/// concatenated correction and evolution forms.
std::complex<double> corrected_amplitude(int sigma, const Syndrome &s, const SkewMatrix &h, double t);
std::complex<double> corrected_amplitude(const MemoryModel &model, int sigma, const Correction &c, double t);

/// Per-syndrome data for one time point.
struct SyndromeTerm {
    uint64_t code = 0;  // bit j is s_j
    double prob[2] = {0, 0};
    std::complex<double> amp[2];
};

/// All 2^{N-1} syndromes for sectors 0 and 1.
std::vector<SyndromeTerm> enumerate_syndromes(const MemoryModel &model, double t);

std::vector<uint8_t> syndrome_bits(uint64_t code, size_t n);

/// Correction-averaged fidelity for one syndrome. The reference qubit makes
/// the two sectors add incoherently inside the overlap:
/// f_s = |sum_sigma |alpha_sigma|^2 A_sigma(s)|^2 / pi(s).
double conditional_fidelity(const Syndrome &s, const EncodedState &enc, const SkewMatrix &h, double t);
double conditional_fidelity(const EncodedState &enc, const std::complex<double> amp[2], const double prob[2]);

FidelityEstimate exact_fidelity(const EncodedState &enc, const SkewMatrix &h, double t, size_t exact_limit = 12);
FidelityEstimate exact_fidelity(const EncodedState &enc, const MemoryModel &model, double t, size_t exact_limit = 12);

/// Precomputation that turns each Monte Carlo amplitude into a small
/// Pfaffian. With Z the Wick matrix of the evolution forms alone, the full
/// matrix is [[X, Y], [-Y^T, Z]] and pf = pf(Z) pf(X + Y Z^{-1} Y^T); the
/// complement only involves the 2q Majoranas touched by the correction.
class FastAmplitude {
   public:
    FastAmplitude(const MemoryModel &model, int sigma, double t);

    std::complex<double> amplitude(const Correction &c) const;
    /// <g_sigma| e^{iHt} |g_sigma>.
    std::complex<double> loschmidt() const {
        return pf_z_;
    }
    bool degenerate() const {
        return degenerate_;
    }

   private:
    const MemoryModel *model_;
    int sigma_;
    double t_;
    std::complex<double> pf_z_;
    Eigen::MatrixXcd q_;
    bool degenerate_ = false;
};

struct MonteCarloOptions {
    size_t n_samples = 10000;
    int workers = 0;  // 0 leaves the OpenMP default
    /// Compare every sampled record probability with |A_sigma(s)|^2.
    bool cross_check = false;
};

/// Per-sample f_s values, parallel kernel. Sample i draws from rng.substream(i).
std::vector<double> monte_carlo_samples(const EncodedState &enc, const MemoryModel &model, double t, const Rng &rng,
                                        const MonteCarloOptions &opt);

/// Serial reference: same random draws, but every amplitude and probability
/// is computed from scratch by the full Wick Pfaffian and determinant formula.
std::vector<double> monte_carlo_samples_reference(const EncodedState &enc, const MemoryModel &model, double t,
                                                  const Rng &rng, size_t n_samples);

FidelityEstimate summarize_samples(const std::vector<double> &f, double t);

FidelityEstimate monte_carlo_fidelity(const EncodedState &enc, const SkewMatrix &h, double t, size_t n_samples,
                                      const Rng &rng, int workers = 0);
FidelityEstimate monte_carlo_fidelity(const EncodedState &enc, const MemoryModel &model, double t,
                                      const Rng &rng, const MonteCarloOptions &opt);

struct EstimatorParams {
    enum class Mode { Auto, Exact, MonteCarlo } mode = Mode::Auto;
    size_t exact_limit = 12;
    MonteCarloOptions mc;
    /// Time index k uses rng.substream(k).
    Rng rng{0};
};

FidelityEstimate estimate_fidelity(const EncodedState &enc, const MemoryModel &model, double t, size_t time_index,
                                   const EstimatorParams &est);

struct StorageScan {
    std::vector<StorageTimeResult> results;  // one per threshold, input order
    std::vector<FidelityEstimate> curve;     // evaluated points, stops after the last crossing
};

/// Walks the grid and records, per threshold, the first time with F < f0.
/// Evaluation stops once every threshold has been crossed.
StorageScan storage_time(const EncodedState &enc, const MemoryModel &model, const std::vector<double> &grid,
                         const std::vector<double> &f0s, const EstimatorParams &est);
StorageTimeResult storage_time(const EncodedState &enc, const SkewMatrix &h, const std::vector<double> &grid,
                               double f0, const EstimatorParams &est);

/// `points` uniform times on [0, t_max], both ends included.
std::vector<double> uniform_grid(double t_max, size_t points);

/// cos^2(delta t / 2) with delta = lambda_1.
double cosine_baseline(const SkewMatrix &h, double t);
double cosine_baseline(const MemoryModel &model, double t);

}  // namespace majmem

#endif

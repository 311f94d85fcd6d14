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

#include <omp.h>

#include <cmath>
#include <string>

#include "majmem/errors.hpp"
#include "majmem/parallel.hpp"
#include "majmem/stats.hpp"

using namespace majmem;

namespace {

using cd = std::complex<double>;
constexpr cd kI(0, 1);

// Below this reciprocal condition number the Schur route is abandoned for the
// full Pfaffian.
constexpr double kSchurRcond = 1e-10;

Eigen::MatrixXcd stack_forms(const std::vector<MajoranaForm> &head, const Eigen::MatrixXd &tail) {
    Eigen::MatrixXcd alpha(head.size() + tail.rows(), tail.cols());
    for (size_t i = 0; i < head.size(); i++) {
        alpha.row(i) = head[i].transpose();
    }
    alpha.bottomRows(tail.rows()) = tail.cast<cd>();
    return alpha;
}

cd minus_i_pow(size_t q) {
    switch (q % 4) {
        case 0:
            return 1;
        case 1:
            return -kI;
        case 2:
            return -1;
        default:
            return kI;
    }
}

}  // namespace

void EncodedState::validate() const {
    double norm = std::norm(alpha0) + std::norm(alpha1);
    if (!(std::abs(norm - 1) <= 1e-12)) {
        throw ConfigError("EncodedState: |alpha0|^2 + |alpha1|^2 must be 1, got " + std::to_string(norm));
    }
}

MemoryModel::MemoryModel(const SkewMatrix &h) : n_(h.n_modes()), h_(h), form_(williamson(h)) {
    if (n_ < 2) {
        throw ConfigError("MemoryModel: need at least two sites");
    }
}

GaussianState MemoryModel::evolved_state(int sigma, double t) const {
    return evolve(ground_state(n_, sigma), expm_skew(form_, -t));
}

Eigen::MatrixXd MemoryModel::evolution_forms(double t) const {
    const Eigen::MatrixXd &w = form_.modes;
    Eigen::MatrixXd a(w.rows(), w.cols());
    for (size_t j = 0; j < n_; j++) {
        double c = std::cos(form_.lambdas[j] * t / 2);
        double s = std::sin(form_.lambdas[j] * t / 2);
        a.row(2 * j) = w.row(2 * j);
        a.row(2 * j + 1) = c * w.row(2 * j) - s * w.row(2 * j + 1);
    }
    return a;
}

std::complex<double> majmem::corrected_amplitude(const MemoryModel &model, int sigma, const Correction &c, double t) {
    const size_t n = model.n_sites();
    Eigen::MatrixXcd alpha = stack_forms(correction_operator_forms(c, n), model.evolution_forms(t));
    return wick_expectation(ground_state(n, sigma).m.dense(), alpha);
}

std::complex<double> majmem::corrected_amplitude(int sigma, const Syndrome &s, const SkewMatrix &h, double t) {
    MemoryModel model(h);
    return corrected_amplitude(model, sigma, decode(s, model.n_sites()), t);
}

std::vector<uint8_t> majmem::syndrome_bits(uint64_t code, size_t n) {
    std::vector<uint8_t> bits(n - 1);
    for (size_t j = 0; j + 1 < n; j++) {
        bits[j] = static_cast<uint8_t>((code >> j) & 1);
    }
    return bits;
}

std::vector<SyndromeTerm> majmem::enumerate_syndromes(const MemoryModel &model, double t) {
    const size_t n = model.n_sites();
    if (n > 30) {
        throw ConfigError("enumerate_syndromes: N = " + std::to_string(n) + " is too large to enumerate");
    }
    Eigen::MatrixXd forms = model.evolution_forms(t);
    GaussianState ground[2] = {ground_state(n, 0), ground_state(n, 1)};
    GaussianState evolved[2] = {model.evolved_state(0, t), model.evolved_state(1, t)};
    const uint64_t count = uint64_t{1} << (n - 1);
    std::vector<SyndromeTerm> out(count);
    for (uint64_t code = 0; code < count; code++) {
        Syndrome s;
        s.bits = syndrome_bits(code, n);
        Eigen::MatrixXcd alpha = stack_forms(correction_operator_forms(decode(s, n), n), forms);
        SyndromeTerm &term = out[code];
        term.code = code;
        for (int sigma = 0; sigma < 2; sigma++) {
            term.amp[sigma] = wick_expectation(ground[sigma].m.dense(), alpha);
            term.prob[sigma] = syndrome_probability(evolved[sigma], s);
        }
    }
    return out;
}

double majmem::conditional_fidelity(const EncodedState &enc, const std::complex<double> amp[2], const double prob[2]) {
    double pi = enc.weight(0) * prob[0] + enc.weight(1) * prob[1];
    if (!(pi >= 1e-300)) {
        throw NumericalError("conditional_fidelity: syndrome has vanishing probability", pi);
    }
    cd overlap = enc.weight(0) * amp[0] + enc.weight(1) * amp[1];
    return std::norm(overlap) / pi;
}

double majmem::conditional_fidelity(const Syndrome &s, const EncodedState &enc, const SkewMatrix &h, double t) {
    MemoryModel model(h);
    Correction c = decode(s, model.n_sites());
    cd amp[2];
    double prob[2];
    for (int sigma = 0; sigma < 2; sigma++) {
        amp[sigma] = corrected_amplitude(model, sigma, c, t);
        prob[sigma] = syndrome_probability(model.evolved_state(sigma, t), s);
    }
    return conditional_fidelity(enc, amp, prob);
}

FidelityEstimate majmem::exact_fidelity(const EncodedState &enc, const MemoryModel &model, double t,
                                        size_t exact_limit) {
    enc.validate();
    if (model.n_sites() > exact_limit) {
        throw ConfigError("exact_fidelity: N = " + std::to_string(model.n_sites()) + " exceeds the exact limit " +
                          std::to_string(exact_limit));
    }
    std::vector<SyndromeTerm> terms = enumerate_syndromes(model, t);
    std::vector<double> contrib(terms.size());
    for (size_t i = 0; i < terms.size(); i++) {
        // pi(s) f_s; zero-probability syndromes have zero amplitude as well.
        contrib[i] = std::norm(enc.weight(0) * terms[i].amp[0] + enc.weight(1) * terms[i].amp[1]);
    }
    FidelityEstimate f;
    f.t = t;
    f.value = pairwise_sum(contrib);
    f.mode = EstimateMode::Exact;
    f.n_samples = terms.size();
    return f;
}

FidelityEstimate majmem::exact_fidelity(const EncodedState &enc, const SkewMatrix &h, double t, size_t exact_limit) {
    if (h.n_modes() > exact_limit) {
        throw ConfigError("exact_fidelity: N = " + std::to_string(h.n_modes()) + " exceeds the exact limit " +
                          std::to_string(exact_limit));
    }
    return exact_fidelity(enc, MemoryModel(h), t, exact_limit);
}

FastAmplitude::FastAmplitude(const MemoryModel &model, int sigma, double t) : model_(&model), sigma_(sigma), t_(t) {
    const size_t dim = 2 * model.n_sites();
    Eigen::MatrixXd forms = model.evolution_forms(t);
    Eigen::MatrixXd m0 = ground_state(model.n_sites(), sigma).m.dense();
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(dim, dim) + kI * m0.cast<cd>();
    Eigen::MatrixXcd k = g * forms.transpose().cast<cd>();
    Eigen::MatrixXcd zfull = forms.cast<cd>() * k;
    Eigen::MatrixXcd z(dim, dim);
    for (size_t c = 0; c < dim; c++) {
        z(c, c) = 0;
        for (size_t r = 0; r < c; r++) {
            z(r, c) = zfull(r, c);
            z(c, r) = -zfull(r, c);
        }
    }
    Eigen::MatrixXcd work = z;
    pf_z_ = pfaffian_inplace(work);

    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(z);
    if (!(lu.rcond() >= kSchurRcond)) {
        degenerate_ = true;
        return;
    }
    Eigen::MatrixXcd q = kI * m0.cast<cd>();
    q.noalias() += k * lu.solve(k.transpose());
    q_ = (q - q.transpose()) / 2.0;
}

std::complex<double> FastAmplitude::amplitude(const Correction &c) const {
    if (degenerate_) {
        return corrected_amplitude(*model_, sigma_, c, t_);
    }
    const size_t q = c.weight();
    if (q == 0) {
        return pf_z_;
    }
    Eigen::MatrixXcd sub(2 * q, 2 * q);
    for (size_t a = 0; a < 2 * q; a++) {
        size_t pa = 2 * c.sites[a / 2] + (a % 2);
        for (size_t b = 0; b < 2 * q; b++) {
            size_t pb = 2 * c.sites[b / 2] + (b % 2);
            sub(a, b) = q_(pa, pb);
        }
    }
    return pf_z_ * minus_i_pow(q) * pfaffian_inplace(sub);
}

std::vector<double> majmem::monte_carlo_samples(const EncodedState &enc, const MemoryModel &model, double t,
                                                const Rng &rng, const MonteCarloOptions &opt) {
    enc.validate();
    const size_t n = model.n_sites();
    const double w0 = enc.weight(0);
    bool active[2] = {enc.weight(0) > 0, enc.weight(1) > 0};
    Eigen::MatrixXd start[2];
    std::optional<FastAmplitude> fast[2];
    for (int sigma = 0; sigma < 2; sigma++) {
        if (active[sigma]) {
            start[sigma] = model.evolved_state(sigma, t).m.dense();
            fast[sigma].emplace(model, sigma, t);
        }
    }

    std::vector<double> f(opt.n_samples);
    TaskErrors errors;
    const long long count = static_cast<long long>(opt.n_samples);
#pragma omp parallel num_threads(resolve_workers(opt.workers))
    {
        Eigen::MatrixXd m;
        std::vector<uint8_t> bits;
#pragma omp for schedule(dynamic, 8)
        for (long long i = 0; i < count; i++) {
            try {
                Rng r = rng.substream(static_cast<uint64_t>(i));
                int sigma = r.uniform() < w0 ? 0 : 1;
                m = start[sigma];
                double p = sample_syndrome_inplace(m, r, bits);
                Correction c = decode(bits, n);
                cd amp[2] = {0, 0};
                double prob[2] = {0, 0};
                for (int tau = 0; tau < 2; tau++) {
                    if (active[tau]) {
                        amp[tau] = fast[tau]->amplitude(c);
                        prob[tau] = std::norm(amp[tau]);
                    }
                }
                if (opt.cross_check && !(std::abs(prob[sigma] - p) <= 1e-9)) {
                    throw NumericalError("monte_carlo: sampled record probability disagrees with |A|^2 (sample " +
                                             std::to_string(i) + ", t = " + std::to_string(t) + ")",
                                         std::abs(prob[sigma] - p));
                }
                f[static_cast<size_t>(i)] = conditional_fidelity(enc, amp, prob);
            } catch (...) {
                errors.record(static_cast<size_t>(i), std::current_exception());
            }
        }
    }
    errors.rethrow();
    return f;
}

std::vector<double> majmem::monte_carlo_samples_reference(const EncodedState &enc, const MemoryModel &model, double t,
                                                          const Rng &rng, size_t n_samples) {
    enc.validate();
    const size_t n = model.n_sites();
    const double w0 = enc.weight(0);
    GaussianState evolved[2] = {model.evolved_state(0, t), model.evolved_state(1, t)};
    std::vector<double> f(n_samples);
    for (size_t i = 0; i < n_samples; i++) {
        Rng r = rng.substream(i);
        int sigma = r.uniform() < w0 ? 0 : 1;
        auto [s, post] = sample_syndrome(evolved[sigma], r);
        Correction c = decode(s, n);
        cd amp[2];
        double prob[2];
        for (int tau = 0; tau < 2; tau++) {
            amp[tau] = corrected_amplitude(model, tau, c, t);
            prob[tau] = syndrome_probability(evolved[tau], s);
        }
        f[i] = conditional_fidelity(enc, amp, prob);
    }
    return f;
}

FidelityEstimate majmem::summarize_samples(const std::vector<double> &f, double t) {
    FidelityEstimate e;
    e.t = t;
    e.mode = EstimateMode::MonteCarlo;
    e.n_samples = f.size();
    if (f.empty()) {
        throw ConfigError("monte_carlo_fidelity: need at least one sample");
    }
    const double n = static_cast<double>(f.size());
    e.value = pairwise_sum(f) / n;
    if (f.size() > 1) {
        std::vector<double> dev(f.size());
        for (size_t i = 0; i < f.size(); i++) {
            dev[i] = (f[i] - e.value) * (f[i] - e.value);
        }
        e.std_error = std::sqrt(pairwise_sum(dev) / (n - 1) / n);
    }
    return e;
}

FidelityEstimate majmem::monte_carlo_fidelity(const EncodedState &enc, const MemoryModel &model, double t,
                                              const Rng &rng, const MonteCarloOptions &opt) {
    if (opt.n_samples < 1) {
        throw ConfigError("monte_carlo_fidelity: need at least one sample");
    }
    return summarize_samples(monte_carlo_samples(enc, model, t, rng, opt), t);
}

FidelityEstimate majmem::monte_carlo_fidelity(const EncodedState &enc, const SkewMatrix &h, double t,
                                              size_t n_samples, const Rng &rng, int workers) {
    MonteCarloOptions opt;
    opt.n_samples = n_samples;
    opt.workers = workers;
    return monte_carlo_fidelity(enc, MemoryModel(h), t, rng, opt);
}

FidelityEstimate majmem::estimate_fidelity(const EncodedState &enc, const MemoryModel &model, double t,
                                           size_t time_index, const EstimatorParams &est) {
    bool exact = est.mode == EstimatorParams::Mode::Exact ||
                 (est.mode == EstimatorParams::Mode::Auto && model.n_sites() <= est.exact_limit);
    if (exact) {
        return exact_fidelity(enc, model, t, std::max(est.exact_limit, model.n_sites()));
    }
    return monte_carlo_fidelity(enc, model, t, est.rng.substream(time_index), est.mc);
}

StorageScan majmem::storage_time(const EncodedState &enc, const MemoryModel &model, const std::vector<double> &grid,
                                 const std::vector<double> &f0s, const EstimatorParams &est) {
    for (size_t k = 1; k < grid.size(); k++) {
        if (!(grid[k] > grid[k - 1])) {
            throw ConfigError("storage_time: time grid must be strictly increasing");
        }
    }
    StorageScan scan;
    for (double f0 : f0s) {
        StorageTimeResult r;
        r.f0 = f0;
        r.grid = grid;
        scan.results.push_back(std::move(r));
    }
    size_t open = scan.results.size();
    for (size_t k = 0; k < grid.size() && open > 0; k++) {
        FidelityEstimate f = estimate_fidelity(enc, model, grid[k], k, est);
        scan.curve.push_back(f);
        for (auto &r : scan.results) {
            if (!r.t && f.value < r.f0) {
                r.t = grid[k];
                open--;
            }
        }
    }
    return scan;
}

StorageTimeResult majmem::storage_time(const EncodedState &enc, const SkewMatrix &h, const std::vector<double> &grid,
                                       double f0, const EstimatorParams &est) {
    return storage_time(enc, MemoryModel(h), grid, {f0}, est).results.front();
}

std::vector<double> majmem::uniform_grid(double t_max, size_t points) {
    if (points < 2 || !(t_max > 0)) {
        throw ConfigError("uniform_grid: need t_max > 0 and at least two points");
    }
    std::vector<double> g(points);
    for (size_t k = 0; k < points; k++) {
        g[k] = t_max * static_cast<double>(k) / static_cast<double>(points - 1);
    }
    return g;
}

double majmem::cosine_baseline(const MemoryModel &model, double t) {
    double c = std::cos(model.splitting() * t / 2);
    return c * c;
}

double majmem::cosine_baseline(const SkewMatrix &h, double t) {
    return cosine_baseline(MemoryModel(h), t);
}

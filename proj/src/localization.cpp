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

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <iostream>
#include <numeric>
#include <string>

#include "majmem/errors.hpp"
#include "majmem/parallel.hpp"
#include "majmem/stats.hpp"

using namespace majmem;

namespace {

constexpr double kLn2 = 0.69314718055994530942;
constexpr double kTiny = 1e-300;
constexpr double kRetryShift = 1e-12;

struct ResonanceError {
    uint64_t site;
};

// Accumulates sum log|x| as a renormalized product; values far from 1 bypass
// the product so it cannot overflow between renormalizations.
struct LogAccumulator {
    double prod = 1;
    long long exponent = 0;
    double direct = 0;
    int pending = 0;

    void add(double x) {
        if (x > 1e-16 && x < 1e16) {
            prod *= x;
            if (++pending == 16) {
                renormalize();
            }
        } else {
            direct += std::log(x);
        }
    }
    void renormalize() {
        int e;
        prod = std::frexp(prod, &e);
        exponent += e;
        pending = 0;
    }
    double log() const {
        return std::log(prod) + static_cast<double>(exponent) * kLn2 + direct;
    }
};

template <typename MuAt>
double z_recursion(const MuAt &mu_at, uint64_t n, double e) {
    if (n < 2) {
        throw ConfigError("lyapunov_exponent: need at least two sites");
    }
    LogAccumulator acc;
    double z = 0;
    double mu_prev = mu_at(0);
    for (uint64_t k = 1; k < n; k++) {
        double mu = mu_at(k);
        if (mu == 0) {
            throw ResonanceError{k};
        }
        if (k + 1 == n) {
            z = (mu * mu - e - 1) / mu;
        } else {
            double denom = mu_prev * mu_prev - e - mu_prev * z;
            if (!(std::abs(denom) >= kTiny)) {
                throw ResonanceError{k};
            }
            z = mu / denom;
        }
        if (z == 0) {
            throw ResonanceError{k};
        }
        acc.add(std::abs(z));
        mu_prev = mu;
    }
    return -acc.log() / static_cast<double>(n);
}

template <typename MuAt>
double z_recursion_retry(const MuAt &mu_at, uint64_t n, double e) {
    try {
        return z_recursion(mu_at, n, e);
    } catch (const ResonanceError &r) {
        std::cerr << "lyapunov: resonance at site " << r.site << " for E = " << e << ", retrying at E + 1e-12\n";
    }
    try {
        return z_recursion(mu_at, n, e + kRetryShift);
    } catch (const ResonanceError &r) {
        throw NumericalError("lyapunov_exponent: resonance at site " + std::to_string(r.site) +
                                 " persists after energy shift",
                             e);
    }
}

template <typename MuAt>
double transfer_product(const MuAt &mu_at, uint64_t n, double e) {
    Eigen::Matrix2d p = Eigen::Matrix2d::Identity();
    double log_scale = 0;
    for (uint64_t k = 0; k < n; k++) {
        double zeta = mu_at(k);
        if (zeta == 0) {
            throw NumericalError("lyapunov_transfer_product: zero potential at site " + std::to_string(k), 0);
        }
        Eigen::Matrix2d t;
        t << (zeta * zeta - e) / zeta, -zeta, 1 / zeta, 0;
        p = t * p;
        if ((k & 31) == 31) {
            double s = p.cwiseAbs().maxCoeff();
            p /= s;
            log_scale += std::log(s);
        }
    }
    Eigen::JacobiSVD<Eigen::Matrix2d> svd(p);
    return (log_scale + std::log(svd.singularValues()(0))) / static_cast<double>(n);
}

// Shares one pass over the disorder between `count` energies. Lanes that
// hit a resonance are reported through `failed` and redone by the scalar path.
template <int B, typename MuAt>
void z_recursion_batch(const MuAt &mu_at, uint64_t n, const double *energies, int count, double *out, bool *failed) {
    double z[B];
    double prod[B];
    long long ex[B];
    double direct[B];
    for (int b = 0; b < B; b++) {
        z[b] = 0;
        prod[b] = 1;
        ex[b] = 0;
        direct[b] = 0;
        failed[b] = false;
    }
    double e[B];
    for (int b = 0; b < B; b++) {
        e[b] = b < count ? energies[b] : energies[0];
    }
    double mu_prev = mu_at(0);
    for (uint64_t k = 1; k < n; k++) {
        double mu = mu_at(k);
        bool last = k + 1 == n;
        for (int b = 0; b < B; b++) {
            double zn;
            if (last) {
                zn = (mu * mu - e[b] - 1) / mu;
            } else {
                double denom = mu_prev * mu_prev - e[b] - mu_prev * z[b];
                if (!(std::abs(denom) >= kTiny)) {
                    failed[b] = true;
                    denom = 1;
                }
                zn = mu / denom;
            }
            z[b] = zn;
            double a = std::abs(zn);
            if (a > 1e-16 && a < 1e16) {
                prod[b] *= a;
            } else if (a > 0) {
                direct[b] += std::log(a);
            } else {
                failed[b] = true;
            }
        }
        if ((k & 15) == 0) {
            for (int b = 0; b < B; b++) {
                int x;
                prod[b] = std::frexp(prod[b], &x);
                ex[b] += x;
            }
        }
        mu_prev = mu;
    }
    for (int b = 0; b < count; b++) {
        double total = std::log(prod[b]) + static_cast<double>(ex[b]) * kLn2 + direct[b];
        out[b] = -total / static_cast<double>(n);
    }
}

}  // namespace

double majmem::lyapunov_exponent(const std::vector<double> &mus, double energy) {
    return z_recursion_retry([&](uint64_t k) { return mus[k]; }, mus.size(), energy);
}

double majmem::lyapunov_exponent(const UniformStream &stream, uint64_t n_sites, double energy) {
    if (stream.eta == 0) {
        throw ConfigError("lyapunov_exponent: eta = 0 is the clean chain, which has no Lyapunov exponent");
    }
    return z_recursion_retry(stream, n_sites, energy);
}

double majmem::lyapunov_transfer_product(const std::vector<double> &mus, double energy) {
    return transfer_product([&](uint64_t k) { return mus[k]; }, mus.size(), energy);
}

double majmem::lyapunov_transfer_product(const UniformStream &stream, uint64_t n_sites, double energy) {
    if (stream.eta == 0) {
        throw ConfigError("lyapunov_transfer_product: eta must be positive");
    }
    return transfer_product(stream, n_sites, energy);
}

Eigen::Matrix2d majmem::transfer_matrix(double zeta, double energy) {
    if (zeta == 0) {
        throw ConfigError("transfer_matrix: zeta must be non-zero");
    }
    Eigen::Matrix2d t;
    t << (zeta * zeta - energy) / zeta, -zeta, 1 / zeta, 0;
    return t;
}

std::vector<double> majmem::lyapunov_energy_grid(double mu) {
    std::vector<double> g;
    g.reserve(640);
    for (int k = 0; k < 512; k++) {
        g.push_back(-1.0 + 2.0 * k / 511.0);
    }
    double c = mu * mu;
    for (int k = 0; k < 128; k++) {
        g.push_back(c - 0.1 + 0.2 * k / 127.0);
    }
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

LyapunovScan majmem::lyapunov_scan(const UniformStream &stream, uint64_t n_sites, const std::vector<double> &energies,
                                   int workers) {
    if (stream.eta == 0) {
        throw ConfigError("lyapunov_scan: eta = 0 is the clean chain, which has no Lyapunov exponent");
    }
    constexpr int kBatch = 8;
    LyapunovScan scan;
    scan.energies = energies;
    scan.exponents.assign(energies.size(), 0.0);
    scan.n_sites = n_sites;
    scan.mu = stream.mu;
    scan.eta = stream.eta;
    scan.seed = stream.seed;
    const size_t blocks = (energies.size() + kBatch - 1) / kBatch;
    parallel_for(blocks, workers, [&](size_t blk) {
        size_t begin = blk * kBatch;
        int count = static_cast<int>(std::min<size_t>(kBatch, energies.size() - begin));
        bool failed[kBatch];
        z_recursion_batch<kBatch>(stream, n_sites, energies.data() + begin, count, scan.exponents.data() + begin,
                                  failed);
        for (int b = 0; b < count; b++) {
            if (failed[b]) {
                scan.exponents[begin + b] = z_recursion_retry(stream, n_sites, energies[begin + b]);
            }
        }
    });
    return scan;
}

LyapunovScan majmem::lyapunov_scan_reference(const UniformStream &stream, uint64_t n_sites,
                                             const std::vector<double> &energies) {
    LyapunovScan scan;
    scan.energies = energies;
    scan.n_sites = n_sites;
    scan.mu = stream.mu;
    scan.eta = stream.eta;
    scan.seed = stream.seed;
    for (double e : energies) {
        scan.exponents.push_back(lyapunov_exponent(stream, n_sites, e));
    }
    return scan;
}

MinimalLyapunov majmem::minimal_lyapunov(double mu, double ratio, uint64_t n_sites, uint64_t seed, int workers) {
    if (!(ratio > 0) || !(mu > 0)) {
        throw ConfigError("minimal_lyapunov: mu and mu/eta must be positive");
    }
    UniformStream stream{mu, mu / ratio, seed, 0};
    MinimalLyapunov out;
    out.scan = lyapunov_scan(stream, n_sites, lyapunov_energy_grid(mu), workers);
    const auto &ex = out.scan.exponents;
    const auto &en = out.scan.energies;
    size_t i = static_cast<size_t>(std::min_element(ex.begin(), ex.end()) - ex.begin());
    out.ell_min = ex[i];
    out.energy = en[i];

    double lo = en[i == 0 ? 0 : i - 1];
    double hi = en[i + 1 == en.size() ? i : i + 1];
    const double phi = 0.5 * (std::sqrt(5.0) - 1);
    double x1 = hi - phi * (hi - lo);
    double x2 = lo + phi * (hi - lo);
    double f1 = lyapunov_exponent(stream, n_sites, x1);
    double f2 = lyapunov_exponent(stream, n_sites, x2);
    for (int it = 0; it < 30; it++) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = lyapunov_exponent(stream, n_sites, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = lyapunov_exponent(stream, n_sites, x2);
        }
    }
    double fx = std::min(f1, f2);
    if (fx < out.ell_min) {
        out.ell_min = fx;
        out.energy = f1 < f2 ? x1 : x2;
    }
    return out;
}

XiEffResult majmem::xi_effective(const PotentialRealization &pot) {
    const size_t n = pot.size();
    if (n < 8) {
        throw ConfigError("xi_effective: need N >= 8");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(anderson_h_s(pot));
    if (eig.info() != Eigen::Success) {
        throw NumericalError("xi_effective: eigensolver did not converge", 0);
    }
    const Eigen::VectorXd &w = eig.eigenvalues();
    std::vector<size_t> order(2 * n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return std::abs(w(a)) < std::abs(w(b)); });
    // The two eigenvalues closest to zero are the boundary modes.
    Eigen::MatrixXd phi(2 * n, 2 * n - 2);
    for (size_t k = 2; k < 2 * n; k++) {
        phi.col(k - 2) = eig.eigenvectors().col(order[k]).cwiseAbs();
    }
    Eigen::MatrixXd t = phi * phi.transpose();

    XiEffResult out;
    out.potential = pot;
    double best = 0;
    bool any = false;
    for (size_t p = 0; p < 2 * n; p++) {
        // Left half fits against the right half and vice versa.
        size_t q_lo = p < n ? n - 1 : 0;
        size_t q_hi = p < n ? 2 * n : n;
        std::vector<double> xs;
        std::vector<double> ys;
        for (size_t q = q_lo; q < q_hi; q++) {
            if (q == p || !(t(p, q) >= kTiny)) {
                continue;
            }
            xs.push_back(std::abs(static_cast<double>(p) - static_cast<double>(q)));
            ys.push_back(std::log(t(p, q)));
        }
        RowFit row;
        row.p = p;
        if (xs.size() >= 3) {
            LinearFit f = linear_fit(xs, ys);
            row.r2 = f.r2;
            if (f.slope < 0) {
                row.xi = -1 / f.slope;
                row.used = f.r2 >= 0.5;
            }
        }
        if (row.used) {
            best = any ? std::max(best, row.xi) : row.xi;
            any = true;
        }
        out.per_row_fits.push_back(row);
    }
    if (any) {
        out.xi_eff = best;
    } else {
        // Nothing decays: the eigenvectors are extended on this chain.
        out.xi_eff = std::numeric_limits<double>::infinity();
        out.saturated = true;
    }
    return out;
}

std::vector<PseudorandomCandidate> majmem::pseudorandom_scan(const std::vector<double> &y1s,
                                                             const std::vector<double> &as, size_t n, double mu,
                                                             double eta, int workers) {
    std::vector<PseudorandomCandidate> out;
    for (double y1 : y1s) {
        for (double a : as) {
            if (!(y1 >= 0 && y1 <= 1 && a >= 0 && a <= 4)) {
                throw ConfigError("pseudorandom_scan: need y1 in [0, 1] and a in [0, 4]");
            }
            out.push_back({y1, a, 0});
        }
    }
    parallel_for(out.size(), workers, [&](size_t i) {
        PotentialRealization pot{logistic_potential(n, mu, eta, out[i].y1, out[i].a), std::nullopt};
        out[i].xi_eff = xi_effective(pot).xi_eff;
    });
    std::stable_sort(out.begin(), out.end(),
                     [](const PseudorandomCandidate &x, const PseudorandomCandidate &y) { return x.xi_eff < y.xi_eff; });
    return out;
}

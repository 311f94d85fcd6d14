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

#include "majmem/chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "majmem/errors.hpp"
#include "majmem/rng.hpp"

using namespace majmem;

std::string majmem::describe(const Disorder &d) {
    if (std::holds_alternative<UniformIID>(d)) {
        return "uniform:" + std::to_string(std::get<UniformIID>(d).seed);
    }
    if (std::holds_alternative<Logistic>(d)) {
        const auto &l = std::get<Logistic>(d);
        char buf[96];
        std::snprintf(buf, sizeof(buf), "logistic:%.17g:%.17g", l.y1, l.a);
        return buf;
    }
    return "none";
}

void ChainParams::validate() const {
    if (n < 2) {
        throw ConfigError("chain: N must be at least 2");
    }
    if (!(eta >= 0)) {
        throw ConfigError("chain: eta must be non-negative");
    }
    if (const auto *l = std::get_if<Logistic>(&disorder)) {
        if (!(l->y1 >= 0 && l->y1 <= 1)) {
            throw ConfigError("chain: logistic y1 must lie in [0, 1]");
        }
        if (!(l->a >= 0 && l->a <= 4)) {
            throw ConfigError("chain: logistic a must lie in [0, 4]");
        }
    }
}

double majmem::disorder_variate(uint64_t seed, uint64_t realization, uint64_t site) {
    return 2 * Rng(seed).substream(realization).uniform_at(site) - 1;
}

std::vector<double> majmem::logistic_potential(size_t n, double mu, double eta, double y1, double a) {
    std::vector<double> mus(n);
    double y = y1;
    for (size_t j = 0; j < n; j++) {
        mus[j] = mu + eta * (1 - 2 * y);
        y = a * y * (1 - y);
    }
    return mus;
}

PotentialRealization majmem::realize_potential(const ChainParams &p, uint64_t realization_index) {
    p.validate();
    PotentialRealization pot;
    if (const auto *u = std::get_if<UniformIID>(&p.disorder)) {
        pot.mus.resize(p.n);
        for (size_t j = 0; j < p.n; j++) {
            pot.mus[j] = p.mu + p.eta * disorder_variate(u->seed, realization_index, j);
        }
        pot.seed_used = u->seed;
    } else if (const auto *l = std::get_if<Logistic>(&p.disorder)) {
        pot.mus = logistic_potential(p.n, p.mu, p.eta, l->y1, l->a);
    } else {
        pot.mus.assign(p.n, p.mu);
    }
    return pot;
}

SkewMatrix majmem::one_particle_hamiltonian(const ChainParams &p, const PotentialRealization &pot) {
    const size_t n = pot.size();
    if (n != p.n) {
        throw ConfigError("one_particle_hamiltonian: potential length " + std::to_string(n) + " does not match N = " +
                          std::to_string(p.n));
    }
    SkewMatrix h(2 * n);
    for (size_t j = 0; j < n; j++) {
        h.set(2 * j, 2 * j + 1, -pot.mus[j]);
    }
    for (size_t j = 0; j + 1 < n; j++) {
        h.set(2 * j + 1, 2 * j + 2, p.j_coupling);
    }
    if (p.absdelta_minus_w != 0) {
        for (size_t j = 0; j + 1 < n; j++) {
            h.set(2 * j, 2 * j + 3, p.absdelta_minus_w);
        }
    }
    return h;
}

SkewMatrix majmem::one_particle_hamiltonian(const std::vector<double> &mus) {
    ChainParams p;
    p.n = mus.size();
    PotentialRealization pot{mus, std::nullopt};
    SkewMatrix h(2 * p.n);
    if (p.n == 0) {
        return h;
    }
    return one_particle_hamiltonian(p, pot);
}

Eigen::MatrixXd majmem::anderson_h_plus(const PotentialRealization &pot) {
    const size_t n = pot.size();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    for (size_t j = 0; j < n; j++) {
        h(j, j) = pot.mus[j] * pot.mus[j];
    }
    if (n > 0) {
        h(n - 1, n - 1) -= 1;
    }
    for (size_t j = 0; j + 1 < n; j++) {
        h(j, j + 1) = pot.mus[j + 1];
        h(j + 1, j) = pot.mus[j + 1];
    }
    return h;
}

Eigen::MatrixXd majmem::anderson_h_s(const PotentialRealization &pot) {
    const size_t n = pot.size();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (size_t j = 0; j < n; j++) {
        h(2 * j, 2 * j + 1) = pot.mus[j];
        h(2 * j + 1, 2 * j) = pot.mus[j];
    }
    for (size_t j = 0; j + 1 < n; j++) {
        h(2 * j + 1, 2 * j + 2) = -1;
        h(2 * j + 2, 2 * j + 1) = -1;
    }
    return h;
}

double majmem::perturbation_strength(const ChainParams &p, const PotentialRealization &pot) {
    double m = 0;
    for (double x : pot.mus) {
        m = std::max(m, std::abs(x));
    }
    return m + std::abs(p.absdelta_minus_w);
}

namespace {

// Number of eigenvalues of H_+ strictly below x (Sturm sequence count).
size_t sturm_count(const std::vector<double> &mus, double x) {
    const size_t n = mus.size();
    size_t count = 0;
    double q = 1;
    for (size_t j = 0; j < n; j++) {
        double d = mus[j] * mus[j] - (j + 1 == n ? 1.0 : 0.0);
        double e2 = j == 0 ? 0.0 : mus[j] * mus[j];
        q = d - x - (j == 0 ? 0.0 : e2 / q);
        if (q == 0) {
            q = -std::numeric_limits<double>::epsilon() * (std::abs(d) + std::abs(x) + 1);
        }
        if (q < 0) {
            count++;
        }
    }
    return count;
}

}  // namespace

double majmem::h_plus_eigenvalue(const std::vector<double> &mus, size_t k) {
    if (k >= mus.size()) {
        throw ConfigError("h_plus_eigenvalue: index out of range");
    }
    // Gershgorin bound.
    double r = 0;
    for (size_t j = 0; j < mus.size(); j++) {
        double off = (j + 1 < mus.size() ? std::abs(mus[j + 1]) : 0.0) + std::abs(mus[j]);
        r = std::max(r, mus[j] * mus[j] + 1 + off);
    }
    double lo = -r;
    double hi = r;
    for (int it = 0; it < 200 && hi - lo > 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(lo));
         it++) {
        double mid = 0.5 * (lo + hi);
        if (sturm_count(mus, mid) > k) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

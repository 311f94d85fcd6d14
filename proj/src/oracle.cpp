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

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "majmem/decoder.hpp"
#include "majmem/errors.hpp"

using namespace majmem;
using namespace majmem::oracle;

namespace {

using cd = std::complex<double>;
constexpr cd kI(0, 1);

void check_limit(size_t n, size_t limit) {
    if (n == 0 || n > limit || n > 20) {
        throw ConfigError("oracle: N = " + std::to_string(n) + " outside [1, " + std::to_string(limit) + "]");
    }
}

// c_p |b> = phase |target>. Qubit j lives in bit n-1-j.
struct Action {
    uint32_t target;
    cd phase;
};

Action majorana_on(size_t n, size_t p, uint32_t b) {
    const size_t j = p / 2;
    const uint32_t bit = static_cast<uint32_t>(n - 1 - j);
    // Z string over qubits 0..j-1, which sit in the higher bits.
    int z = std::popcount(b >> (bit + 1)) & 1;
    double sign = z ? -1.0 : 1.0;
    uint32_t bj = (b >> bit) & 1;
    Action a;
    a.target = b ^ (uint32_t{1} << bit);
    if (p % 2 == 0) {
        a.phase = sign;
    } else {
        a.phase = sign * (bj ? -kI : kI);
    }
    return a;
}

StateVector apply(size_t n, size_t p, const StateVector &psi) {
    StateVector out = StateVector::Zero(psi.size());
    for (uint32_t b = 0; b < static_cast<uint32_t>(psi.size()); b++) {
        Action a = majorana_on(n, p, b);
        out(a.target) += a.phase * psi(b);
    }
    return out;
}

// (-i) c_p c_q psi.
StateVector apply_bilinear(size_t n, size_t p, size_t q, const StateVector &psi) {
    return -kI * apply(n, p, apply(n, q, psi));
}

DenseOperator quadratic_hamiltonian(size_t n, const Eigen::MatrixXd &a) {
    const uint32_t dim = uint32_t{1} << n;
    DenseOperator h = DenseOperator::Zero(dim, dim);
    for (size_t p = 0; p < 2 * n; p++) {
        for (size_t q = p + 1; q < 2 * n; q++) {
            if (a(p, q) == 0) {
                continue;
            }
            // (i/4)(A_pq c_p c_q + A_qp c_q c_p) = (i/2) A_pq c_p c_q for p != q.
            for (uint32_t b = 0; b < dim; b++) {
                Action first = majorana_on(n, q, b);
                Action second = majorana_on(n, p, first.target);
                h(second.target, b) += 0.5 * kI * a(p, q) * second.phase * first.phase;
            }
        }
    }
    return h;
}

void fix_phase(StateVector &v) {
    Eigen::Index k;
    v.cwiseAbs().maxCoeff(&k);
    v *= std::abs(v(k)) / v(k);
}

}  // namespace

std::vector<DenseOperator> majmem::oracle::build_majoranas(size_t n, size_t limit) {
    check_limit(n, limit);
    const uint32_t dim = uint32_t{1} << n;
    std::vector<DenseOperator> cs;
    for (size_t p = 0; p < 2 * n; p++) {
        DenseOperator c = DenseOperator::Zero(dim, dim);
        for (uint32_t b = 0; b < dim; b++) {
            Action a = majorana_on(n, p, b);
            c(a.target, b) = a.phase;
        }
        cs.push_back(std::move(c));
    }
    return cs;
}

DenseOperator majmem::oracle::parity_operator(size_t n, size_t limit) {
    check_limit(n, limit);
    auto c = build_majoranas(n, limit);
    const Eigen::Index dim = c[0].rows();
    DenseOperator p = DenseOperator::Identity(dim, dim);
    for (size_t j = 0; j < n; j++) {
        p = p * (-kI * c[2 * j] * c[2 * j + 1]);
    }
    return p;
}

DenseOperator majmem::oracle::pauli_chain_hamiltonian(const std::vector<double> &mus, size_t limit) {
    const size_t n = mus.size();
    check_limit(n, limit);
    Eigen::Matrix2cd x, z, id;
    x << 0, 1, 1, 0;
    z << 1, 0, 0, -1;
    id.setIdentity();
    auto embed = [&](const std::vector<const Eigen::Matrix2cd *> &f) {
        DenseOperator out = *f[0];
        for (size_t k = 1; k < f.size(); k++) {
            DenseOperator next(out.rows() * 2, out.cols() * 2);
            for (Eigen::Index r = 0; r < out.rows(); r++) {
                for (Eigen::Index c = 0; c < out.cols(); c++) {
                    next.block(2 * r, 2 * c, 2, 2) = out(r, c) * *f[k];
                }
            }
            out = std::move(next);
        }
        return out;
    };
    const Eigen::Index dim = Eigen::Index{1} << n;
    DenseOperator h = DenseOperator::Zero(dim, dim);
    for (size_t j = 0; j < n; j++) {
        std::vector<const Eigen::Matrix2cd *> f(n, &id);
        f[j] = &z;
        h += 0.5 * mus[j] * embed(f);
        if (j + 1 < n) {
            std::vector<const Eigen::Matrix2cd *> g(n, &id);
            g[j] = &x;
            g[j + 1] = &x;
            h -= 0.5 * embed(g);
        }
    }
    return h;
}

ManyBody::ManyBody(const SkewMatrix &a, size_t limit) : n_(a.n_modes()) {
    check_limit(n_, limit);
    h_ = quadratic_hamiltonian(n_, a.dense());
    DenseOperator h0 = quadratic_hamiltonian(n_, one_particle_hamiltonian(std::vector<double>(n_, 0.0)).dense());
    const uint32_t dim = uint32_t{1} << n_;
    for (uint32_t b = 0; b < dim; b++) {
        sector_index_[std::popcount(b) & 1].push_back(b);
    }
    for (int s = 0; s < 2; s++) {
        const auto &idx = sector_index_[s];
        const Eigen::Index d = static_cast<Eigen::Index>(idx.size());
        DenseOperator hs(d, d);
        DenseOperator h0s(d, d);
        for (Eigen::Index r = 0; r < d; r++) {
            for (Eigen::Index c = 0; c < d; c++) {
                hs(r, c) = h_(idx[r], idx[c]);
                h0s(r, c) = h0(idx[r], idx[c]);
            }
        }
        Eigen::SelfAdjointEigenSolver<DenseOperator> eig(hs);
        evals_[s] = eig.eigenvalues();
        evecs_[s] = eig.eigenvectors();
        Eigen::SelfAdjointEigenSolver<DenseOperator> eig0(h0s);
        StateVector g = StateVector::Zero(dim);
        for (Eigen::Index r = 0; r < d; r++) {
            g(idx[r]) = eig0.eigenvectors()(r, 0);
        }
        fix_phase(g);
        code_[s] = g;
    }
}

StateVector ManyBody::evolve(const StateVector &psi, double t) const {
    StateVector out = StateVector::Zero(psi.size());
    for (int s = 0; s < 2; s++) {
        const auto &idx = sector_index_[s];
        StateVector part(idx.size());
        for (size_t r = 0; r < idx.size(); r++) {
            part(r) = psi(idx[r]);
        }
        StateVector coeff = evecs_[s].adjoint() * part;
        for (Eigen::Index k = 0; k < coeff.size(); k++) {
            coeff(k) *= std::exp(kI * evals_[s](k) * t);
        }
        part = evecs_[s] * coeff;
        for (size_t r = 0; r < idx.size(); r++) {
            out(idx[r]) = part(r);
        }
    }
    return out;
}

std::vector<double> ManyBody::spectrum() const {
    std::vector<double> e;
    for (int s = 0; s < 2; s++) {
        for (Eigen::Index k = 0; k < evals_[s].size(); k++) {
            e.push_back(evals_[s](k));
        }
    }
    std::sort(e.begin(), e.end());
    return e;
}

Eigen::MatrixXd ManyBody::covariance(const StateVector &psi) const {
    const size_t dim = 2 * n_;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (size_t p = 0; p < dim; p++) {
        for (size_t q = 0; q < dim; q++) {
            if (p != q) {
                m(p, q) = (-kI * psi.dot(apply(n_, p, apply(n_, q, psi)))).real();
            }
        }
    }
    return m;
}

StateVector ManyBody::apply_majorana(size_t p, const StateVector &psi) const {
    return apply(n_, p, psi);
}

StateVector ManyBody::project_syndrome(const std::vector<uint8_t> &bits, const StateVector &psi) const {
    StateVector v = psi;
    for (size_t j = 0; j + 1 < n_; j++) {
        StateVector sv = apply_bilinear(n_, 2 * j + 1, 2 * j + 2, v);
        double sign = bits[j] ? -1.0 : 1.0;
        v = 0.5 * (v + sign * sv);
    }
    return v;
}

StateVector ManyBody::apply_correction(const std::vector<uint8_t> &bits, const StateVector &psi) const {
    Correction c = decode(bits, n_);
    StateVector v = psi;
    for (auto it = c.sites.rbegin(); it != c.sites.rend(); ++it) {
        v = apply_bilinear(n_, 2 * *it, 2 * *it + 1, v);
    }
    return v;
}

std::vector<oracle::SyndromeTerm> majmem::oracle::oracle_syndromes(const ManyBody &mb, double t) {
    const size_t n = mb.n_sites();
    StateVector evolved[2] = {mb.evolve(mb.code_state(0), t), mb.evolve(mb.code_state(1), t)};
    const uint64_t count = uint64_t{1} << (n - 1);
    std::vector<SyndromeTerm> out(count);
    for (uint64_t code = 0; code < count; code++) {
        std::vector<uint8_t> bits = syndrome_bits(code, n);
        out[code].code = code;
        for (int s = 0; s < 2; s++) {
            StateVector projected = mb.project_syndrome(bits, evolved[s]);
            out[code].prob[s] = projected.squaredNorm();
            out[code].amp[s] = mb.code_state(s).dot(mb.apply_correction(bits, projected));
        }
    }
    return out;
}

double majmem::oracle::oracle_fidelity(const ManyBody &mb, const EncodedState &enc, double t) {
    enc.validate();
    const size_t n = mb.n_sites();
    // Columns are the components of |g> along |0_R> and |1_R>.
    StateVector g[2] = {enc.alpha0 * mb.code_state(0), enc.alpha1 * mb.code_state(1)};
    StateVector ug[2] = {mb.evolve(g[0], t), mb.evolve(g[1], t)};
    const uint64_t count = uint64_t{1} << (n - 1);
    double f = 0;
    for (uint64_t code = 0; code < count; code++) {
        std::vector<uint8_t> bits = syndrome_bits(code, n);
        cd overlap = 0;
        for (int r = 0; r < 2; r++) {
            overlap += g[r].dot(mb.apply_correction(bits, mb.project_syndrome(bits, ug[r])));
        }
        f += std::norm(overlap);
    }
    return f;
}

double majmem::oracle::oracle_fidelity(const ChainParams &p, const PotentialRealization &pot, const EncodedState &enc,
                                       double t) {
    return oracle_fidelity(ManyBody(one_particle_hamiltonian(p, pot)), enc, t);
}

double majmem::oracle::oracle_magnetization(const std::vector<double> &mus, double t, size_t limit) {
    const size_t n = mus.size();
    check_limit(n, limit);
    ManyBody mb(one_particle_hamiltonian(mus), limit);
    const Eigen::Index dim = Eigen::Index{1} << n;
    StateVector plus = StateVector::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
    StateVector psi = mb.evolve(plus, t);
    double m = 0;
    for (size_t j = 0; j < n; j++) {
        uint32_t flip = uint32_t{1} << (n - 1 - j);
        cd x = 0;
        for (uint32_t b = 0; b < static_cast<uint32_t>(dim); b++) {
            x += std::conj(psi(b ^ flip)) * psi(b);
        }
        m += x.real();
    }
    return m / static_cast<double>(n);
}

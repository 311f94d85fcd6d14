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

#include "majmem/gaussian.hpp"

#include <cmath>
#include <string>

#include "majmem/errors.hpp"

using namespace majmem;

namespace {

constexpr double kDeterministic = 1e-12;
constexpr double kProbSlack = 1e-9;

int sector_sign(Parity p) {
    if (p == Parity::Mixed) {
        throw ConfigError("operation needs a state of definite parity");
    }
    return p == Parity::Even ? 1 : -1;
}

}  // namespace

double GaussianState::purity_defect() const {
    const auto &d = m.dense();
    if (d.size() == 0) {
        return 0;
    }
    return (d.transpose() * d - Eigen::MatrixXd::Identity(d.rows(), d.cols())).cwiseAbs().maxCoeff();
}

int Syndrome::parity() const {
    int p = 0;
    for (uint8_t b : bits) {
        p ^= b & 1;
    }
    return p;
}

GaussianState majmem::ground_state(size_t n, int sigma) {
    if (n < 2) {
        throw ConfigError("ground_state: N must be at least 2");
    }
    if (sigma != 0 && sigma != 1) {
        throw ConfigError("ground_state: sigma must be 0 or 1");
    }
    GaussianState g;
    g.m = SkewMatrix(2 * n);
    g.m.set(0, 2 * n - 1, sigma ? -1.0 : 1.0);
    for (size_t j = 0; j + 1 < n; j++) {
        g.m.set(2 * j + 1, 2 * j + 2, 1.0);
    }
    g.parity = sigma ? Parity::Odd : Parity::Even;
    return g;
}

GaussianState majmem::evolve(const GaussianState &state, const OrthogonalMatrix &r) {
    if (r.dim() != state.m.dim()) {
        throw ConfigError("evolve: dimension mismatch (" + std::to_string(r.dim()) + " vs " +
                          std::to_string(state.m.dim()) + ")");
    }
    Eigen::MatrixXd out = r.dense() * state.m.dense() * r.dense().transpose();
    GaussianState g;
    g.m = SkewMatrix::from_dense(out, 1e-8);
    g.parity = state.parity;
    return g;
}

double majmem::sample_syndrome_inplace(Eigen::MatrixXd &m, Rng &rng, std::vector<uint8_t> &bits) {
    const Eigen::Index dim = m.rows();
    const Eigen::Index n = dim / 2;
    bits.assign(n > 0 ? n - 1 : 0, 0);
    double prob = 1;
    Eigen::VectorXd u;
    Eigen::VectorXd v;
    for (Eigen::Index j = 0; j + 1 < n; j++) {
        const Eigen::Index a = 2 * j + 1;
        const Eigen::Index b = 2 * j + 2;
        double p0 = 0.5 * (1 + m(a, b));
        if (p0 < -kProbSlack || p0 > 1 + kProbSlack) {
            throw NumericalError("sample_syndrome: outcome probability outside [0, 1] at stabilizer " +
                                     std::to_string(j),
                                 p0);
        }
        p0 = std::min(1.0, std::max(0.0, p0));
        int s;
        if (p0 > 1 - kDeterministic) {
            s = 0;
        } else if (p0 < kDeterministic) {
            s = 1;
        } else {
            s = rng.uniform() < p0 ? 0 : 1;
        }
        double p = s == 0 ? p0 : 1 - p0;
        bits[j] = static_cast<uint8_t>(s);
        prob *= p;

        // Projecting onto the outcome is a rank-2 correction of the block that
        // later steps still read: row 0 and everything past b. Every read
        // lies in the upper triangle, so only that triangle is kept current
        // and the lower one is restored at the end.
        const double coef = (s == 0 ? 1.0 : -1.0) / (2 * p);
        const Eigen::Index t0 = b + 1;
        const Eigen::Index len = dim - t0;
        const double u0 = -m(0, a);
        const double v0 = -m(0, b);
        if (len > 0) {
            u = coef * m.row(a).segment(t0, len).transpose();
            v = m.row(b).segment(t0, len).transpose();
            for (Eigen::Index q = 0; q < len; q++) {
                const Eigen::Index col = t0 + q;
                m.col(col).segment(t0, q) += u.head(q) * (-v(q)) + v.head(q) * u(q);
                m(0, col) -= u0 * coef * v(q) - u(q) * v0;
            }
        }
        // The measured pair is now in a definite state and decouples.
        m.row(a).setZero();
        m.row(b).setZero();
        m.col(a).setZero();
        m.col(b).setZero();
        m(a, b) = s == 0 ? 1.0 : -1.0;
    }
    for (Eigen::Index c = 0; c < dim; c++) {
        for (Eigen::Index r = c + 1; r < dim; r++) {
            m(r, c) = -m(c, r);
        }
    }
    return prob;
}

std::pair<Syndrome, GaussianState> majmem::sample_syndrome(const GaussianState &state, Rng &rng) {
    Eigen::MatrixXd m = state.m.dense();
    Syndrome s;
    s.prob = sample_syndrome_inplace(m, rng, s.bits);
    GaussianState out;
    out.m = SkewMatrix::from_dense(m, 1e-8);
    out.parity = state.parity;
    return {std::move(s), std::move(out)};
}

double majmem::syndrome_probability(const GaussianState &state, const Syndrome &s) {
    const size_t n = state.n_sites();
    if (s.bits.size() + 1 != n) {
        throw ConfigError("syndrome_probability: syndrome length " + std::to_string(s.bits.size()) +
                          " does not match N - 1 = " + std::to_string(n - 1));
    }
    int sign = sector_sign(state.parity) * (s.parity() ? -1 : 1);
    Eigen::MatrixXd sum = state.m.dense();
    sum(0, 2 * n - 1) += sign;
    sum(2 * n - 1, 0) -= sign;
    for (size_t j = 0; j + 1 < n; j++) {
        double x = s.bits[j] ? -1.0 : 1.0;
        sum(2 * j + 1, 2 * j + 2) += x;
        sum(2 * j + 2, 2 * j + 1) -= x;
    }
    // sqrt(det) = |pf|; the Pfaffian avoids squaring and re-rooting.
    double pf = pfaffian_dense(sum);
    return std::ldexp(std::abs(pf), -static_cast<int>(n));
}

MajoranaForm majmem::majorana_form(size_t dim, size_t p, std::complex<double> coeff) {
    MajoranaForm f = MajoranaForm::Zero(dim);
    f(p) = coeff;
    return f;
}

std::complex<double> majmem::wick_expectation(const Eigen::MatrixXd &m, const Eigen::MatrixXcd &alpha) {
    const Eigen::Index k = alpha.rows();
    if (k % 2 != 0) {
        throw ConfigError("wick_expectation: odd number of Majorana forms");
    }
    if (alpha.cols() != m.rows()) {
        throw ConfigError("wick_expectation: form length does not match the state");
    }
    if (k == 0) {
        return 1.0;
    }
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    g += std::complex<double>(0, 1) * m.cast<std::complex<double>>();
    Eigen::MatrixXcd a = alpha * g * alpha.transpose();
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(k, k);
    for (Eigen::Index c = 0; c < k; c++) {
        for (Eigen::Index r = 0; r < c; r++) {
            w(r, c) = a(r, c);
            w(c, r) = -a(r, c);
        }
    }
    return pfaffian_inplace(w);
}

std::complex<double> majmem::wick_expectation(const GaussianState &state, const std::vector<MajoranaForm> &ops) {
    Eigen::MatrixXcd alpha(ops.size(), state.m.dim());
    for (size_t i = 0; i < ops.size(); i++) {
        if (static_cast<size_t>(ops[i].size()) != state.m.dim()) {
            throw ConfigError("wick_expectation: form length does not match the state");
        }
        alpha.row(i) = ops[i].transpose();
    }
    return wick_expectation(state.m.dense(), alpha);
}

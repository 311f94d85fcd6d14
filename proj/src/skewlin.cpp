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

#include "majmem/skewlin.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "majmem/errors.hpp"

using namespace majmem;

namespace {

// Eigenvalues of iA (normalized so max|A| = 1) below this are treated as one
// cluster around zero and handed to a rescaled sub-problem.
constexpr double kZeroCluster = 1e-9;
constexpr double kDegenerate = 1e-10;
constexpr double kReportClamp = 1e-12;

double inf_norm(const Eigen::MatrixXd &a) {
    return a.cwiseAbs().rowwise().sum().maxCoeff();
}

// Modified Gram-Schmidt on rows [begin, end).
void orthonormalize_rows(Eigen::MatrixXd &w, Eigen::Index begin, Eigen::Index end) {
    for (Eigen::Index r = begin; r < end; r++) {
        for (Eigen::Index s = begin; s < r; s++) {
            w.row(r) -= w.row(r).dot(w.row(s)) * w.row(s);
        }
        w.row(r).normalize();
    }
}

struct Raw {
    std::vector<double> lambdas;
    Eigen::MatrixXd modes;
};

Raw williamson_raw(const Eigen::MatrixXd &a) {
    const Eigen::Index dim = a.rows();
    const Eigen::Index n = dim / 2;
    Raw out;
    out.lambdas.assign(n, 0.0);
    double scale = a.cwiseAbs().maxCoeff();
    if (n == 0) {
        out.modes.resize(0, 0);
        return out;
    }
    if (scale == 0) {
        out.modes = Eigen::MatrixXd::Identity(dim, dim);
        return out;
    }

    Eigen::MatrixXcd ia = std::complex<double>(0, 1) * (a / scale).cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(ia);
    if (eig.info() != Eigen::Success) {
        throw NumericalError("williamson: Hermitian eigensolver did not converge", scale);
    }
    const Eigen::VectorXd &w = eig.eigenvalues();
    const Eigen::MatrixXcd &v = eig.eigenvectors();

    // Eigenvalues come in +-lambda pairs. The n smallest are -lambda_j; their
    // eigenvectors psi satisfy A psi = i lambda psi. Near-zero pairs cannot be
    // split this way (any mix of psi and conj(psi) is an eigenvector), so they
    // are collected and solved again on their own subspace.
    Eigen::Index k = 0;
    while (k < n && std::abs(w(n - 1 - k)) < kZeroCluster) {
        k++;
    }

    Eigen::MatrixXd modes(dim, dim);
    std::vector<double> lambdas(n);
    Eigen::Index row = 0;

    if (k > 0) {
        Eigen::MatrixXcd cluster = v.middleCols(n - k, 2 * k);
        Eigen::MatrixXd span(dim, 4 * k);
        span << cluster.real(), cluster.imag();
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(span, Eigen::ComputeThinU);
        Eigen::MatrixXd basis = svd.matrixU().leftCols(2 * k);
        Eigen::MatrixXd sub = basis.transpose() * a * basis;
        sub = (sub - sub.transpose()) / 2;
        Raw inner = williamson_raw(sub);
        modes.topRows(2 * k) = inner.modes * basis.transpose();
        for (Eigen::Index j = 0; j < k; j++) {
            lambdas[j] = inner.lambdas[j];
        }
        row = 2 * k;
    }

    const double root2 = std::sqrt(2.0);
    for (Eigen::Index j = k; j < n; j++) {
        // Ascending lambda = descending index among the negative eigenvalues.
        Eigen::Index col = n - 1 - j;
        lambdas[j] = -w(col) * scale;
        modes.row(row) = root2 * v.col(col).real().transpose();
        modes.row(row + 1) = root2 * v.col(col).imag().transpose();
        row += 2;
    }

    // Clean out rounding inside degenerate clusters. Pairs stay in place, so
    // the canonical structure is only touched at rounding level.
    Eigen::Index start = k;
    for (Eigen::Index j = k + 1; j <= n; j++) {
        if (j == n || std::abs(lambdas[j] - lambdas[start]) >= kDegenerate * scale) {
            orthonormalize_rows(modes, 2 * start, 2 * j);
            start = j;
        }
    }

    out.lambdas = std::move(lambdas);
    out.modes = std::move(modes);
    return out;
}

}  // namespace

SkewMatrix::SkewMatrix(size_t dim) : m_(Eigen::MatrixXd::Zero(dim, dim)) {
    if (dim % 2 != 0) {
        throw ConfigError("SkewMatrix: dimension must be even, got " + std::to_string(dim));
    }
}

SkewMatrix SkewMatrix::from_dense(const Eigen::MatrixXd &m, double tol) {
    if (m.rows() != m.cols()) {
        throw ConfigError("SkewMatrix: matrix is not square");
    }
    if (m.rows() % 2 != 0) {
        throw ConfigError("SkewMatrix: dimension must be even, got " + std::to_string(m.rows()));
    }
    double asym = (m + m.transpose()).cwiseAbs().maxCoeff();
    if (m.size() > 0 && !(asym <= tol)) {
        throw ConfigError("SkewMatrix: input is not antisymmetric (max |A + A^T| = " + std::to_string(asym) + ")");
    }
    SkewMatrix s;
    s.m_ = (m - m.transpose()) / 2;
    return s;
}

std::vector<double> WilliamsonForm::reported_lambdas() const {
    std::vector<double> r = lambdas;
    for (double &x : r) {
        if (x < kReportClamp) {
            x = 0;
        }
    }
    return r;
}

OrthogonalMatrix OrthogonalMatrix::from_dense(const Eigen::MatrixXd &r, double tol) {
    if (r.rows() != r.cols()) {
        throw ConfigError("OrthogonalMatrix: matrix is not square");
    }
    Eigen::MatrixXd defect = r * r.transpose() - Eigen::MatrixXd::Identity(r.rows(), r.cols());
    double err = r.size() ? defect.cwiseAbs().maxCoeff() : 0.0;
    if (!(err <= tol)) {
        throw NumericalError("OrthogonalMatrix: R R^T deviates from identity", err);
    }
    double det = r.size() ? r.determinant() : 1.0;
    if (!(std::abs(det - 1) <= tol)) {
        throw NumericalError("OrthogonalMatrix: determinant is not +1", std::abs(det - 1));
    }
    return trusted(r);
}

OrthogonalMatrix OrthogonalMatrix::identity(size_t dim) {
    return trusted(Eigen::MatrixXd::Identity(dim, dim));
}

OrthogonalMatrix OrthogonalMatrix::trusted(Eigen::MatrixXd r) {
    OrthogonalMatrix o;
    o.r_ = std::move(r);
    return o;
}

WilliamsonForm majmem::williamson(const SkewMatrix &a) {
    Raw raw = williamson_raw(a.dense());
    WilliamsonForm f;
    f.lambdas = std::move(raw.lambdas);
    f.modes = std::move(raw.modes);

    const Eigen::Index dim = a.dense().rows();
    if (dim == 0) {
        return f;
    }
    Eigen::MatrixXd scaled = f.modes;
    for (size_t j = 0; j < f.lambdas.size(); j++) {
        scaled.row(2 * j) = f.lambdas[j] * f.modes.row(2 * j + 1);
        scaled.row(2 * j + 1) = -f.lambdas[j] * f.modes.row(2 * j);
    }
    Eigen::MatrixXd recon = f.modes.transpose() * scaled;
    f.residual = (recon - a.dense()).cwiseAbs().maxCoeff();
    double orth = (f.modes * f.modes.transpose() - Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff();
    double bound = 1e-9 * std::max(inf_norm(a.dense()), 1e-300);
    if (!(f.residual <= bound) && f.residual > 1e-14) {
        throw NumericalError("williamson: reconstruction residual above tolerance", f.residual);
    }
    if (!(orth <= 1e-9)) {
        throw NumericalError("williamson: mode matrix is not orthogonal", orth);
    }
    return f;
}

OrthogonalMatrix majmem::expm_skew(const WilliamsonForm &w, double t) {
    // Each canonical plane rotates by lambda_j t:
    // exp(lambda t [[0,1],[-1,0]]) = [[cos, sin], [-sin, cos]].
    const Eigen::MatrixXd &m = w.modes;
    Eigen::MatrixXd rotated(m.rows(), m.cols());
    for (size_t j = 0; j < w.lambdas.size(); j++) {
        double c = std::cos(w.lambdas[j] * t);
        double s = std::sin(w.lambdas[j] * t);
        rotated.row(2 * j) = c * m.row(2 * j) + s * m.row(2 * j + 1);
        rotated.row(2 * j + 1) = -s * m.row(2 * j) + c * m.row(2 * j + 1);
    }
    return OrthogonalMatrix::trusted(m.transpose() * rotated);
}

OrthogonalMatrix majmem::expm_skew(const SkewMatrix &a, double t) {
    return expm_skew(williamson(a), t);
}

double majmem::pfaffian(const SkewMatrix &a) {
    return pfaffian_dense(a.dense());
}

std::complex<double> majmem::pfaffian(const Eigen::MatrixXcd &a) {
    if (a.rows() != a.cols()) {
        throw ConfigError("pfaffian: matrix is not square");
    }
    return pfaffian_dense(a);
}

double majmem::det_skew(const SkewMatrix &a) {
    double pf = pfaffian(a);
    return pf * pf;
}

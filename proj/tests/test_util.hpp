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

#ifndef MAJMEM_TEST_UTIL_HPP
#define MAJMEM_TEST_UTIL_HPP

#include <Eigen/Dense>
#include <random>

#include "majmem/skewlin.hpp"

namespace majmem::testing {

inline Eigen::MatrixXd random_skew_dense(Eigen::Index dim, std::mt19937_64 &rng, double scale = 1.0) {
    std::normal_distribution<double> d(0.0, scale);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index c = 0; c < dim; c++) {
        for (Eigen::Index r = 0; r < c; r++) {
            a(r, c) = d(rng);
            a(c, r) = -a(r, c);
        }
    }
    return a;
}

inline SkewMatrix random_skew(Eigen::Index dim, std::mt19937_64 &rng, double scale = 1.0) {
    return SkewMatrix::from_dense(random_skew_dense(dim, rng, scale));
}

/// Haar-ish orthogonal matrix from the QR of a Gaussian matrix.
inline Eigen::MatrixXd random_orthogonal(Eigen::Index dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> d;
    Eigen::MatrixXd g(dim, dim);
    for (Eigen::Index i = 0; i < g.size(); i++) {
        g.data()[i] = d(rng);
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    return qr.householderQ() * Eigen::MatrixXd::Identity(dim, dim);
}

/// exp(A) by scaling and squaring of a truncated Taylor series.
inline Eigen::MatrixXd expm_taylor(const Eigen::MatrixXd &a) {
    double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    while (norm > 0.05) {
        norm /= 2;
        squarings++;
    }
    Eigen::MatrixXd s = a / std::ldexp(1.0, squarings);
    Eigen::MatrixXd term = Eigen::MatrixXd::Identity(a.rows(), a.cols());
    Eigen::MatrixXd sum = term;
    for (int k = 1; k < 30; k++) {
        term = term * s / k;
        sum += term;
    }
    for (int i = 0; i < squarings; i++) {
        sum = sum * sum;
    }
    return sum;
}

}  // namespace majmem::testing

#endif

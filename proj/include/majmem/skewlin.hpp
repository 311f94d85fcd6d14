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

#ifndef MAJMEM_SKEWLIN_HPP
#define MAJMEM_SKEWLIN_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <vector>

namespace majmem {

/// Real antisymmetric matrix of even dimension. Antisymmetry is validated on
/// construction; afterwards the value is immutable except through set(), which
/// writes both triangles.
class SkewMatrix {
   public:
    SkewMatrix() = default;
    explicit SkewMatrix(size_t dim);

    /// Throws ConfigError if `m` is not square, has odd size, or deviates from
    /// antisymmetry by more than `tol` (absolute). The stored value is exactly
    /// (m - m^T) / 2.
    static SkewMatrix from_dense(const Eigen::MatrixXd &m, double tol = 1e-12);

    size_t dim() const {
        return static_cast<size_t>(m_.rows());
    }
    size_t n_modes() const {
        return dim() / 2;
    }
    double operator()(size_t p, size_t q) const {
        return m_(p, q);
    }
    void set(size_t p, size_t q, double v) {
        m_(p, q) = v;
        m_(q, p) = -v;
    }
    const Eigen::MatrixXd &dense() const {
        return m_;
    }

   private:
    Eigen::MatrixXd m_;
};

/// A = modes^T * blockdiag(lambda_j [[0,1],[-1,0]]) * modes.
/// Rows 2j and 2j+1 of `modes` are the canonical Majorana modes of pair j.
struct WilliamsonForm {
    std::vector<double> lambdas;  // ascending, raw (never clamped)
    Eigen::MatrixXd modes;
    double residual = 0;  // max-abs reconstruction error

    size_t n_modes() const {
        return lambdas.size();
    }
    /// Lambdas with values below 1e-12 reported as exact zero.
    std::vector<double> reported_lambdas() const;
};

class OrthogonalMatrix {
   public:
    OrthogonalMatrix() = default;
    /// Validates R R^T = I and det R = +1 within `tol`.
    static OrthogonalMatrix from_dense(const Eigen::MatrixXd &r, double tol);
    static OrthogonalMatrix identity(size_t dim);
    /// Skips validation. Used for matrices built from an already orthogonal factorization.
    static OrthogonalMatrix trusted(Eigen::MatrixXd r);

    size_t dim() const {
        return static_cast<size_t>(r_.rows());
    }
    const Eigen::MatrixXd &dense() const {
        return r_;
    }

   private:
    Eigen::MatrixXd r_;
};

WilliamsonForm williamson(const SkewMatrix &a);

/// exp(A t). Built from the canonical form so the result is orthogonal to
/// machine precision.
OrthogonalMatrix expm_skew(const SkewMatrix &a, double t);
OrthogonalMatrix expm_skew(const WilliamsonForm &w, double t);

/// Parlett-Reid elimination with partial pivoting. Destroys its argument,
/// which must be fully antisymmetric.
template <typename Scalar>
Scalar pfaffian_inplace(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> &a) {
    using std::abs;
    const Eigen::Index n = a.rows();
    if (n % 2 == 1) {
        return Scalar(0);
    }
    Scalar result(1);
    for (Eigen::Index k = 0; k + 1 < n; k += 2) {
        Eigen::Index kp = k + 1;
        double best = abs(a(k + 1, k));
        for (Eigen::Index i = k + 2; i < n; i++) {
            double v = abs(a(i, k));
            if (v > best) {
                best = v;
                kp = i;
            }
        }
        if (kp != k + 1) {
            a.row(k + 1).swap(a.row(kp));
            a.col(k + 1).swap(a.col(kp));
            result = -result;
        }
        if (a(k + 1, k) == Scalar(0)) {
            return Scalar(0);
        }
        result *= -a(k + 1, k);
        Eigen::Index m = n - k - 2;
        if (m > 0) {
            // Eliminate column k below the pivot pair; the Schur complement of
            // the leading 2x2 block stays antisymmetric.
            Eigen::Matrix<Scalar, Eigen::Dynamic, 1> tau = a.col(k).tail(m) / a(k + 1, k);
            Eigen::Matrix<Scalar, Eigen::Dynamic, 1> v = a.col(k + 1).tail(m);
            auto tail = a.bottomRightCorner(m, m);
            tail.noalias() += tau * v.transpose();
            tail.noalias() -= v * tau.transpose();
        }
    }
    return result;
}

template <typename Derived>
typename Derived::Scalar pfaffian_dense(const Eigen::MatrixBase<Derived> &a) {
    Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> work = a;
    return pfaffian_inplace(work);
}

double pfaffian(const SkewMatrix &a);
std::complex<double> pfaffian(const Eigen::MatrixXcd &a);

/// det(A) = pf(A)^2, non-negative for real antisymmetric input.
double det_skew(const SkewMatrix &a);

}  // namespace majmem

#endif

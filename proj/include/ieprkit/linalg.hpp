// Copyright 2026 The ieprkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

namespace iepr {

/// Dense row-major matrix of doubles. Small and boring on purpose; the
/// toolkit's matrices top out at a few thousand rows.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0.0) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }
    double* row_ptr(int i) { return a_.data() + static_cast<std::size_t>(i) * cols_; }
    const double* row_ptr(int i) const { return a_.data() + static_cast<std::size_t>(i) * cols_; }

    Matrix transposed() const;
    double frobenius_norm() const;
    double max_abs() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

/// Max absolute asymmetry |a_ij - a_ji| over the matrix.
double symmetry_error(const Matrix& a);

/// Throws SpecError when `a` is not square-symmetric within
/// tol * max|a_ij|. `what` names the offending object in the message.
void require_symmetric(const Matrix& a, double tol, const char* what);

/// Frobenius norm of the strictly off-diagonal part.
double offdiag_frobenius(const Matrix& a);

/// Result of a symmetric eigendecomposition. Eigenvalues are ascending and
/// row k of `vectors` is the eigenvector of eigenvalues[k], so
/// vectors * A * vectors^T = diag(eigenvalues). Each row is gauge fixed:
/// its largest-magnitude entry is positive.
struct EighResult {
    std::vector<double> eigenvalues;
    Matrix vectors;
    int sweeps = 0;
};

enum class EigKernel {
    serial,    // cyclic Jacobi, the reference implementation
    parallel,  // round-robin Jacobi with OpenMP over disjoint rotation pairs
    automatic  // serial below kEigParallelThreshold, parallel above
};

inline constexpr int kEigParallelThreshold = 96;
inline constexpr int kEigMaxSweeps = 100;

/// Cyclic Jacobi reference eigensolver. Off-diagonal residual converges to
/// <= 1e-13 * ||A||_F (well inside the 1e-10 contract); throws NumericsError
/// after kEigMaxSweeps sweeps.
EighResult jacobi_eigh_serial(const Matrix& a);

/// Tournament-ordered Jacobi. Each round rotates n/2 disjoint pivot pairs;
/// row and column phases are parallelized with OpenMP. The rotation schedule
/// is fixed, so results are bit-identical for any thread count.
EighResult jacobi_eigh_parallel(const Matrix& a);

EighResult jacobi_eigh(const Matrix& a, EigKernel kernel = EigKernel::automatic);

}  // namespace iepr

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

#include "ieprkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "ieprkit/errors.hpp"

namespace iepr {

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            const double* brow = b.row_ptr(k);
            double* crow = c.row_ptr(i);
            for (int j = 0; j < b.cols(); ++j) crow[j] += aik * brow[j];
        }
    }
    return c;
}

double symmetry_error(const Matrix& a) {
    double e = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j) e = std::max(e, std::abs(a(i, j) - a(j, i)));
    return e;
}

void require_symmetric(const Matrix& a, double tol, const char* what) {
    if (a.rows() != a.cols()) {
        std::ostringstream os;
        os << what << ": matrix is " << a.rows() << "x" << a.cols() << ", expected square";
        throw SpecError(os.str());
    }
    const double scale = a.max_abs();
    const double err = symmetry_error(a);
    if (err > tol * (scale > 0.0 ? scale : 1.0)) {
        std::ostringstream os;
        os << what << ": asymmetry " << err << " exceeds " << tol << " * max|entry|";
        throw SpecError(os.str());
    }
}

double offdiag_frobenius(const Matrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

namespace {

// Rotation parameters annihilating a_pq; classic two-sided Jacobi choice.
struct Rotation {
    int p = 0, q = 0;
    double c = 1.0, s = 0.0, t = 0.0;
};

Rotation make_rotation(const Matrix& a, int p, int q) {
    Rotation r;
    r.p = p;
    r.q = q;
    const double apq = a(p, q);
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    r.t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    r.c = 1.0 / std::sqrt(r.t * r.t + 1.0);
    r.s = r.t * r.c;
    return r;
}

// Sort eigenpairs ascending and fix each row's gauge (largest-|u| entry
// positive). `vcols` holds eigenvectors as columns; the result holds them
// as rows.
EighResult finalize(Matrix& a, Matrix& vcols, int sweeps) {
    const int n = a.rows();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i) < a(j, j); });

    EighResult res;
    res.sweeps = sweeps;
    res.eigenvalues.resize(n);
    res.vectors = Matrix(n, n);
    for (int k = 0; k < n; ++k) {
        const int src = order[k];
        res.eigenvalues[k] = a(src, src);
        for (int i = 0; i < n; ++i) res.vectors(k, i) = vcols(i, src);
    }
    for (int k = 0; k < n; ++k) {
        int imax = 0;
        double vmax = 0.0;
        for (int i = 0; i < n; ++i) {
            const double av = std::abs(res.vectors(k, i));
            if (av > vmax) {
                vmax = av;
                imax = i;
            }
        }
        if (res.vectors(k, imax) < 0.0)
            for (int i = 0; i < n; ++i) res.vectors(k, i) = -res.vectors(k, i);
    }
    return res;
}

void check_input(const Matrix& a) {
    require_symmetric(a, 1e-12, "eigensolver input");
    if (a.rows() == 0) throw SpecError("eigensolver input: empty matrix");
}

// Round-robin (circle method) pairing of m players, m even. Round r pairs
// (pos[0], pos[m-1]), (pos[1], pos[m-2]), ...
std::vector<std::vector<std::pair<int, int>>> tournament_rounds(int n) {
    const int m = (n % 2 == 0) ? n : n + 1;  // pad with a bye slot
    std::vector<int> pos(m);
    std::iota(pos.begin(), pos.end(), 0);
    std::vector<std::vector<std::pair<int, int>>> rounds;
    for (int r = 0; r < m - 1; ++r) {
        std::vector<std::pair<int, int>> pairs;
        for (int k = 0; k < m / 2; ++k) {
            int a = pos[k], b = pos[m - 1 - k];
            if (a >= n || b >= n) continue;  // bye
            if (a > b) std::swap(a, b);
            pairs.emplace_back(a, b);
        }
        rounds.push_back(std::move(pairs));
        // rotate everything except pos[0]
        const int last = pos[m - 1];
        for (int i = m - 1; i >= 2; --i) pos[i] = pos[i - 1];
        pos[1] = last;
    }
    return rounds;
}

}  // namespace

EighResult jacobi_eigh_serial(const Matrix& input) {
    check_input(input);
    const int n = input.rows();
    Matrix a = input;
    Matrix v = Matrix::identity(n);
    const double fro = a.frobenius_norm();
    const double tol = 1e-13 * (fro > 0.0 ? fro : 1.0);

    int sweep = 0;
    while (offdiag_frobenius(a) > tol) {
        if (++sweep > kEigMaxSweeps)
            throw NumericsError("jacobi_eigh_serial: no convergence after 100 sweeps");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (a(p, q) == 0.0) continue;
                const Rotation r = make_rotation(a, p, q);
                const double apq = a(p, q);
                a(p, p) -= r.t * apq;
                a(q, q) += r.t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = a(i, p), aiq = a(i, q);
                    a(i, p) = r.c * aip - r.s * aiq;
                    a(i, q) = r.s * aip + r.c * aiq;
                    a(p, i) = a(i, p);
                    a(q, i) = a(i, q);
                }
                for (int i = 0; i < n; ++i) {
                    const double vip = v(i, p), viq = v(i, q);
                    v(i, p) = r.c * vip - r.s * viq;
                    v(i, q) = r.s * vip + r.c * viq;
                }
            }
        }
    }
    return finalize(a, v, sweep);
}

EighResult jacobi_eigh_parallel(const Matrix& input) {
    check_input(input);
    const int n = input.rows();
    Matrix a = input;
    Matrix v = Matrix::identity(n);
    const double fro = a.frobenius_norm();
    const double tol = 1e-13 * (fro > 0.0 ? fro : 1.0);
    const auto rounds = tournament_rounds(n);

    std::vector<Rotation> rots;
    std::vector<double> tmp_p(n), tmp_q(n);

    int sweep = 0;
    while (offdiag_frobenius(a) > tol) {
        if (++sweep > kEigMaxSweeps)
            throw NumericsError("jacobi_eigh_parallel: no convergence after 100 sweeps");
        for (const auto& round : rounds) {
            rots.clear();
            for (const auto& [p, q] : round)
                if (a(p, q) != 0.0) rots.push_back(make_rotation(a, p, q));
            if (rots.empty()) continue;
            const int nr = static_cast<int>(rots.size());

            // Row phase: B = J^T A. Pairs are disjoint, so each rotation owns
            // its two rows.
#pragma omp parallel for schedule(static)
            for (int k = 0; k < nr; ++k) {
                const Rotation& r = rots[k];
                double* rp = a.row_ptr(r.p);
                double* rq = a.row_ptr(r.q);
                for (int j = 0; j < n; ++j) {
                    const double x = rp[j], y = rq[j];
                    rp[j] = r.c * x - r.s * y;
                    rq[j] = r.s * x + r.c * y;
                }
            }
            // Column phase: A = B J, and accumulate V = V J.
#pragma omp parallel for schedule(static)
            for (int k = 0; k < nr; ++k) {
                const Rotation& r = rots[k];
                for (int i = 0; i < n; ++i) {
                    const double x = a(i, r.p), y = a(i, r.q);
                    a(i, r.p) = r.c * x - r.s * y;
                    a(i, r.q) = r.s * x + r.c * y;
                    const double vx = v(i, r.p), vy = v(i, r.q);
                    v(i, r.p) = r.c * vx - r.s * vy;
                    v(i, r.q) = r.s * vx + r.c * vy;
                }
            }
        }
        // The split row/column phases evaluate (i,j) and (j,i) with different
        // operation orders, so ulp-scale asymmetry creeps in; average it out
        // once per sweep.
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const double m = 0.5 * (a(i, j) + a(j, i));
                a(i, j) = m;
                a(j, i) = m;
            }
        }
    }
    return finalize(a, v, sweep);
}

EighResult jacobi_eigh(const Matrix& a, EigKernel kernel) {
    switch (kernel) {
        case EigKernel::serial: return jacobi_eigh_serial(a);
        case EigKernel::parallel: return jacobi_eigh_parallel(a);
        case EigKernel::automatic:
            return a.rows() >= kEigParallelThreshold ? jacobi_eigh_parallel(a)
                                                     : jacobi_eigh_serial(a);
    }
    return jacobi_eigh_serial(a);
}

}  // namespace iepr

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

#include "ieprkit/extract.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ieprkit/core_model.hpp"
#include "ieprkit/errors.hpp"

namespace iepr::extract {

namespace {

void check_rs_shapes(const Matrix& r, const Matrix& s) {
    if (r.rows() != s.rows() || r.cols() != s.cols())
        throw SpecError("r and s must have the same shape");
    if (r.rows() != r.cols()) throw SpecError("participation matrices must be square");
    for (int m = 0; m < r.rows(); ++m) {
        for (int n = 0; n < r.cols(); ++n) {
            if (r(m, n) < -1e-12 || r(m, n) > 1.0 + 1e-12) {
                std::ostringstream os;
                os << "r out of [0,1] at (" << m << "," << n << "): " << r(m, n);
                throw SpecError(os.str());
            }
            if (s(m, n) != 1.0 && s(m, n) != -1.0) {
                std::ostringstream os;
                os << "s not in {-1,+1} at (" << m << "," << n << ")";
                throw SpecError(os.str());
            }
        }
    }
}

}  // namespace

modal::TransformMatrix reconstruct_U(const Matrix& r, const Matrix& s, double residual_tol) {
    check_rs_shapes(r, s);
    const int n = r.rows();
    modal::TransformMatrix U{Matrix(n, n)};
    for (int m = 0; m < n; ++m)
        for (int j = 0; j < n; ++j)
            U.u(m, j) = s(m, j) * std::sqrt(std::max(0.0, r(m, j)));
    const double res = U.orthogonality_residual();
    if (res > residual_tol) {
        std::ostringstream os;
        os << "participation data is not orthonormal: residual " << res << " exceeds "
           << residual_tol;
        throw ConsistencyError(os.str());
    }
    return U;
}

std::vector<double> bare_frequencies(const Matrix& r, const std::vector<double>& omega_prime) {
    const int n = r.rows();
    if (static_cast<int>(omega_prime.size()) != n)
        throw SpecError("bare_frequencies: omega_prime size mismatch");
    std::vector<double> omega(n, 0.0);
    for (int m = 0; m < n; ++m) {
        double acc = 0.0;
        for (int k = 0; k < n; ++k) acc += r(k, m) * omega_prime[k] * omega_prime[k];
        omega[m] = std::sqrt(acc);
    }
    return omega;
}

Matrix coupling_strengths(const Matrix& r, const Matrix& s,
                          const std::vector<double>& omega_prime,
                          const std::vector<double>& omega_bare) {
    check_rs_shapes(r, s);
    const int n = r.rows();
    if (static_cast<int>(omega_prime.size()) != n ||
        static_cast<int>(omega_bare.size()) != n)
        throw SpecError("coupling_strengths: frequency vector size mismatch");

    Matrix g(n, n);
    for (int m = 0; m < n; ++m) {
        for (int j = m; j < n; ++j) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k)
                acc += s(k, m) * s(k, j) * std::sqrt(r(k, m) * r(k, j)) * omega_prime[k] *
                       omega_prime[k];
            if (m == j) {
                // The diagonal sum reproduces omega_m^2; keep g_mm = 0 and
                // use the identity as a consistency check.
                const double w2 = omega_bare[m] * omega_bare[m];
                if (std::abs(acc - w2) > 1e-9 * w2) {
                    std::ostringstream os;
                    os << "coupling_strengths: diagonal sum " << acc
                       << " does not reproduce omega_bare^2 " << w2 << " for element " << m;
                    throw ConsistencyError(os.str());
                }
                continue;
            }
            const double v = acc / (2.0 * std::sqrt(omega_bare[m] * omega_bare[j]));
            g(m, j) = v;
            g(j, m) = v;
        }
    }
    return g;
}

OrthonormalityReport orthonormality_check(const Matrix& r, const Matrix& s) {
    check_rs_shapes(r, s);
    const int n = r.rows();
    OrthonormalityReport rep;
    rep.row_residual = Matrix(n, n);
    rep.col_residual = Matrix(n, n);
    for (int m = 0; m < n; ++m) {
        for (int j = 0; j < n; ++j) {
            double row = 0.0, col = 0.0;
            for (int k = 0; k < n; ++k) {
                row += s(m, k) * s(j, k) * std::sqrt(r(m, k) * r(j, k));
                col += s(k, m) * s(k, j) * std::sqrt(r(k, m) * r(k, j));
            }
            const double target = m == j ? 1.0 : 0.0;
            rep.row_residual(m, j) = std::abs(row - target);
            rep.col_residual(m, j) = std::abs(col - target);
            rep.max_abs = std::max({rep.max_abs, rep.row_residual(m, j), rep.col_residual(m, j)});
        }
    }
    return rep;
}

Matrix complete_missing_column(const Matrix& u_partial, const std::vector<int>& missing) {
    if (u_partial.rows() != u_partial.cols())
        throw SpecError("complete_missing_column: matrix must be square");
    if (missing.empty()) return u_partial;
    if (missing.size() > 1)
        throw UnsupportedError(
            "complete_missing_column: more than one element lacks potential nodes; "
            "couplings among such elements cannot be determined");
    const int n = u_partial.rows();
    const int col = missing.front();
    if (col < 0 || col >= n) throw SpecError("complete_missing_column: column index out of range");

    // Known columns must be mutually orthonormal.
    for (int a = 0; a < n; ++a) {
        if (a == col) continue;
        for (int b = a; b < n; ++b) {
            if (b == col) continue;
            double dot = 0.0;
            for (int i = 0; i < n; ++i) dot += u_partial(i, a) * u_partial(i, b);
            const double target = a == b ? 1.0 : 0.0;
            if (std::abs(dot - target) > 1e-6) {
                std::ostringstream os;
                os << "complete_missing_column: known columns " << a << " and " << b
                   << " are not orthonormal (dot " << dot << ")";
                throw ConsistencyError(os.str());
            }
        }
    }

    // Project each canonical basis vector out of the span of the known
    // columns and keep the largest remainder; two passes of the projection
    // clean up roundoff.
    std::vector<double> best(n, 0.0);
    double best_norm = -1.0;
    for (int cand = 0; cand < n; ++cand) {
        std::vector<double> w(n, 0.0);
        w[cand] = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            for (int c = 0; c < n; ++c) {
                if (c == col) continue;
                double dot = 0.0;
                for (int i = 0; i < n; ++i) dot += w[i] * u_partial(i, c);
                for (int i = 0; i < n; ++i) w[i] -= dot * u_partial(i, c);
            }
        }
        double nrm = 0.0;
        for (double x : w) nrm += x * x;
        if (nrm > best_norm) {
            best_norm = nrm;
            best = std::move(w);
        }
    }
    const double nrm = std::sqrt(best_norm);
    for (double& x : best) x /= nrm;

    int imax = 0;
    for (int i = 1; i < n; ++i)
        if (std::abs(best[i]) > std::abs(best[imax])) imax = i;
    if (best[imax] < 0.0)
        for (double& x : best) x = -x;

    Matrix out = u_partial;
    for (int i = 0; i < n; ++i) out(i, col) = best[i];
    return out;
}

ExtractionReport extract_all(const modal::NormalModeSet& modes,
                             const std::vector<double>& LJ_nH) {
    modes.validate();
    const int n = modes.n_modes();
    if (static_cast<int>(LJ_nH.size()) != n)
        throw SpecError("extract_all: LJ_nH must list one value per element (0 for linear)");
    if (modes.s.empty())
        throw SpecError(
            "extract_all: sign matrix missing; run the field postprocessing sign "
            "determination (fields subcommand) before extracting");

    const double tol = modes.provenance == modal::Provenance::synthetic
                           ? kSyntheticResidualTol
                           : kFieldResidualTol;

    ExtractionReport rep;
    rep.warnings = modes.warnings;

    if (modes.missing_columns.empty()) {
        rep.U = reconstruct_U(modes.r, modes.s, tol);
    } else {
        // Build what is known, complete the rest from orthonormality.
        Matrix u(n, n);
        for (int m = 0; m < n; ++m)
            for (int j = 0; j < n; ++j)
                if (!modes.column_missing(j))
                    u(m, j) = modes.s(m, j) * std::sqrt(std::max(0.0, modes.r(m, j)));
        u = complete_missing_column(u, modes.missing_columns);
        rep.U.u = std::move(u);
        rep.U.require_orthogonal(tol);
        std::ostringstream os;
        os << "column " << modes.missing_columns.front() << " ('"
           << modes.names[modes.missing_columns.front()]
           << "') completed from orthonormality; its coupling signs are gauge-fixed";
        rep.warnings.push_back(os.str());
    }
    rep.orthonormality_residual = rep.U.orthogonality_residual();

    // Effective r/s straight from the (possibly completed) transform.
    Matrix r_eff(n, n), s_eff(n, n);
    for (int m = 0; m < n; ++m) {
        for (int j = 0; j < n; ++j) {
            const double umj = rep.U.u(m, j);
            r_eff(m, j) = umj * umj;
            s_eff(m, j) = umj < 0.0 ? -1.0 : 1.0;
        }
    }

    BareParameters bare;
    bare.names = modes.names;
    bare.omega = bare_frequencies(r_eff, modes.omega_prime);
    bare.g = coupling_strengths(r_eff, s_eff, modes.omega_prime, bare.omega);
    bare.L_J = LJ_nH;
    bare.alpha.assign(n, 0.0);
    bare.omega_nl.resize(n);
    for (int i = 0; i < n; ++i) {
        if (LJ_nH[i] > 0.0) bare.alpha[i] = model::anharmonicity_from_LJ(bare.omega[i], LJ_nH[i]);
        bare.omega_nl[i] = bare.omega[i] + bare.alpha[i];
    }
    bare.validate();
    rep.bare = std::move(bare);
    return rep;
}

}  // namespace iepr::extract

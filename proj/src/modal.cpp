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

#include "ieprkit/modal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ieprkit/errors.hpp"

namespace iepr::modal {

double TransformMatrix::orthogonality_residual() const {
    const int n = u.rows();
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double dot = 0.0;
            for (int k = 0; k < n; ++k) dot += u(i, k) * u(j, k);
            worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

void TransformMatrix::require_orthogonal(double tol) const {
    const double res = orthogonality_residual();
    if (res > tol) {
        std::ostringstream os;
        os << "transform matrix orthogonality residual " << res << " exceeds " << tol;
        throw ConsistencyError(os.str());
    }
}

std::string to_string(Provenance p) {
    return p == Provenance::synthetic ? "synthetic" : "field_export";
}

Provenance provenance_from_string(const std::string& s) {
    if (s == "synthetic") return Provenance::synthetic;
    if (s == "field_export") return Provenance::field_export;
    throw SpecError("unknown provenance '" + s + "'");
}

std::string to_string(RatioKind k) { return k == RatioKind::iepr ? "iepr" : "cepr"; }

RatioKind ratio_kind_from_string(const std::string& s) {
    if (s == "iepr") return RatioKind::iepr;
    if (s == "cepr") return RatioKind::cepr;
    throw SpecError("unknown ratio kind '" + s + "'");
}

bool NormalModeSet::column_missing(int j) const {
    return std::find(missing_columns.begin(), missing_columns.end(), j) !=
           missing_columns.end();
}

void NormalModeSet::validate() const {
    const int n = n_modes();
    if (n == 0) throw SpecError("NormalModeSet: empty");
    if (static_cast<int>(names.size()) != n || r.rows() != n || r.cols() != n)
        throw SpecError("NormalModeSet: inconsistent sizes (modes vs elements vs r)");
    const bool have_s = !s.empty();
    if (have_s && (s.rows() != n || s.cols() != n))
        throw SpecError("NormalModeSet: sign matrix shape mismatch");
    for (int idx : missing_columns)
        if (idx < 0 || idx >= n) throw SpecError("NormalModeSet: missing column out of range");

    for (int m = 0; m < n; ++m) {
        if (!(omega_prime[m] > 0.0)) throw SpecError("NormalModeSet: omega_prime must be > 0");
        for (int j = 0; j < n; ++j) {
            if (column_missing(j)) continue;
            const double rv = r(m, j);
            if (rv < -1e-12 || rv > 1.0 + 1e-12) {
                std::ostringstream os;
                os << "r out of [0,1] at (" << m << "," << j << "): " << rv;
                throw SpecError(os.str());
            }
            if (have_s && s(m, j) != 1.0 && s(m, j) != -1.0) {
                std::ostringstream os;
                os << "s not in {-1,+1} at (" << m << "," << j << ")";
                throw SpecError(os.str());
            }
        }
    }

    const double tol = provenance == Provenance::synthetic ? 1e-8 : 1e-3;
    if (missing_columns.empty()) {
        for (int m = 0; m < n; ++m) {
            double row = 0.0, col = 0.0;
            for (int j = 0; j < n; ++j) {
                row += r(m, j);
                col += r(j, m);
            }
            if (std::abs(row - 1.0) > tol || std::abs(col - 1.0) > tol) {
                std::ostringstream os;
                os << "NormalModeSet: r row/column sums deviate from 1 beyond " << tol
                   << " (index " << m << ")";
                throw ConsistencyError(os.str());
            }
        }
    }
}

Matrix assemble_H_matrix(const BareParameters& bare) {
    bare.validate();
    const int n = bare.size();
    Matrix H(n, n);
    for (int i = 0; i < n; ++i) {
        H(i, i) = bare.omega[i] * bare.omega[i];
        for (int j = i + 1; j < n; ++j) {
            const double v = 2.0 * bare.g(i, j) * std::sqrt(bare.omega[i] * bare.omega[j]);
            H(i, j) = v;
            H(j, i) = v;
        }
    }
    return H;
}

std::pair<std::vector<double>, TransformMatrix> sym_eig(const Matrix& H,
                                                        std::vector<std::string>* warnings,
                                                        EigKernel kernel) {
    EighResult eig = jacobi_eigh(H, kernel);
    const int n = static_cast<int>(eig.eigenvalues.size());
    if (warnings) {
        for (int k = 0; k + 1 < n; ++k) {
            const double a = eig.eigenvalues[k], b = eig.eigenvalues[k + 1];
            const double scale = std::max(std::abs(a), std::abs(b));
            if (scale > 0.0 && std::abs(b - a) < 1e-10 * scale) {
                std::ostringstream os;
                os << "near-degenerate eigenvalues " << k << " and " << k + 1
                   << "; r/s attribution is basis-dependent";
                warnings->push_back(os.str());
            }
        }
    }
    return {std::move(eig.eigenvalues), TransformMatrix{std::move(eig.vectors)}};
}

std::pair<NormalModeSet, TransformMatrix> forward_synthesize(const BareParameters& bare,
                                                             EigKernel kernel) {
    const Matrix H = assemble_H_matrix(bare);
    NormalModeSet modes;
    auto [lambda, U] = sym_eig(H, &modes.warnings, kernel);
    const int n = static_cast<int>(lambda.size());

    modes.names = bare.names;
    modes.provenance = Provenance::synthetic;
    modes.omega_prime.resize(n);
    modes.r = Matrix(n, n);
    modes.s = Matrix(n, n);
    modes.assignment.resize(n);

    for (int m = 0; m < n; ++m) {
        if (lambda[m] <= 0.0) {
            std::ostringstream os;
            os << "forward_synthesize: eigenvalue " << m << " is " << lambda[m]
               << " MHz^2; circuit is overcoupled or unphysical";
            throw PhysicsError(os.str());
        }
        modes.omega_prime[m] = std::sqrt(lambda[m]);
        int best = 0;
        double rmax = -1.0;
        for (int j = 0; j < n; ++j) {
            const double umj = U.u(m, j);
            modes.r(m, j) = umj * umj;
            modes.s(m, j) = umj < 0.0 ? -1.0 : 1.0;
            if (modes.r(m, j) > rmax) {
                rmax = modes.r(m, j);
                best = j;
            }
        }
        modes.assignment[m] = best;
    }
    return {std::move(modes), std::move(U)};
}

}  // namespace iepr::modal

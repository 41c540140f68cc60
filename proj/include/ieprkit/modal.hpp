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

#include <string>
#include <utility>
#include <vector>

#include "ieprkit/circuit.hpp"
#include "ieprkit/linalg.hpp"

namespace iepr::modal {

/// Orthogonal submatrix linking the representations. Row m is normal mode m,
/// column n is bare element n; the full transformation is the direct sum of
/// two copies of u.
struct TransformMatrix {
    Matrix u;

    int size() const { return u.rows(); }

    /// Max |u u^T - I| entry.
    double orthogonality_residual() const;

    /// Throws ConsistencyError when the residual exceeds tol.
    void require_orthogonal(double tol) const;
};

enum class Provenance { synthetic, field_export };

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

/// Which energy the participation ratios were taken from. The extraction
/// algebra is identical for both; the flag only records the dual in use
/// (inductive participation for capacitive coupling, capacitive for
/// inductive coupling).
enum class RatioKind { iepr, cepr };

std::string to_string(RatioKind k);
RatioKind ratio_kind_from_string(const std::string& s);

/// Normal-mode payload, shaped like an EM eigenmode export: per-mode
/// frequencies plus the participation matrix r (row = mode, column =
/// element) and sign matrix s in {-1,+1}. Columns listed in
/// missing_columns carry no data (elements without potential nodes).
struct NormalModeSet {
    std::vector<std::string> names;
    std::vector<double> omega_prime;  // MHz, ascending
    Matrix r;
    Matrix s;
    Provenance provenance = Provenance::synthetic;
    RatioKind ratio_kind = RatioKind::iepr;
    std::vector<int> assignment;          // per mode: argmax_n r_mn
    std::vector<int> missing_columns;     // element indices without r/s data
    std::vector<std::string> warnings;

    int n_modes() const { return static_cast<int>(omega_prime.size()); }
    bool column_missing(int j) const;

    /// Structural and invariant checks: r in [0,1], s in {-1,+1}, row and
    /// column sums of r equal to 1 and the reconstruction-orthonormality
    /// residual within tolerance (1e-8 synthetic, 1e-3 field export).
    /// Missing columns are exempt. Throws ConsistencyError / SpecError.
    void validate() const;
};

/// Quadratic-form matrix of the linearized circuit, in MHz^2: diagonal
/// omega_m^2, off-diagonal 2 g_mn sqrt(omega_m omega_n).
Matrix assemble_H_matrix(const BareParameters& bare);

/// Symmetric eigendecomposition via the Jacobi kernels. Eigenvalues
/// ascending; rows of the transform are gauge fixed. Emits a warning line
/// per near-degenerate pair (relative gap < 1e-10) into *warnings if given.
std::pair<std::vector<double>, TransformMatrix> sym_eig(
    const Matrix& H, std::vector<std::string>* warnings = nullptr,
    EigKernel kernel = EigKernel::automatic);

/// Forward synthesis of normal-mode data from bare parameters:
/// omega'_m = sqrt(lambda_m), r = u squared elementwise, s = sign(u) with
/// zeros mapped to +1. Throws PhysicsError naming the offending eigenvalue
/// when the spec is overcoupled (negative lambda).
std::pair<NormalModeSet, TransformMatrix> forward_synthesize(
    const BareParameters& bare, EigKernel kernel = EigKernel::automatic);

}  // namespace iepr::modal

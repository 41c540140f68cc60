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
#include <vector>

#include "ieprkit/circuit.hpp"
#include "ieprkit/linalg.hpp"
#include "ieprkit/modal.hpp"

namespace iepr::extract {

/// Residual tolerances for accepting participation data as a valid
/// orthogonal-square set: synthetic data must be exact, measured exports
/// carry quadrature error.
inline constexpr double kSyntheticResidualTol = 1e-8;
inline constexpr double kFieldResidualTol = 1e-3;

struct ExtractionReport {
    BareParameters bare;  // linear stage plus junction-derived alpha
    modal::TransformMatrix U;
    double orthonormality_residual = 0.0;
    std::vector<std::string> warnings;
};

/// u_mn = s_mn sqrt(r_mn). Throws ConsistencyError when the orthogonality
/// residual exceeds `residual_tol` (the data is not a participation set of
/// an orthogonal transform).
modal::TransformMatrix reconstruct_U(const Matrix& r, const Matrix& s,
                                     double residual_tol = kFieldResidualTol);

/// Bare frequencies from column sums: omega_m = sqrt(sum_k r_km omega'_k^2).
std::vector<double> bare_frequencies(const Matrix& r, const std::vector<double>& omega_prime);

/// Coupling strengths
///   g_mn = sum_k s_km s_kn sqrt(r_km r_kn) omega'_k^2 / (2 sqrt(omega_m omega_n)),
/// zero diagonal by convention; the m = n sums are asserted against
/// omega_m^2 as a consistency check.
Matrix coupling_strengths(const Matrix& r, const Matrix& s,
                          const std::vector<double>& omega_prime,
                          const std::vector<double>& omega_bare);

struct OrthonormalityReport {
    Matrix row_residual;  // |sum_k s_mk s_nk sqrt(r_mk r_nk) - delta_mn|
    Matrix col_residual;  // column-form counterpart
    double max_abs = 0.0;
};

OrthonormalityReport orthonormality_check(const Matrix& r, const Matrix& s);

/// Fill in the single unknown column of an otherwise orthonormal square
/// matrix with the unit vector completing the basis, sign fixed so the
/// largest-|entry| is positive. Throws ConsistencyError when the known
/// columns are not orthonormal to 1e-6, UnsupportedError for more than one
/// unknown column.
Matrix complete_missing_column(const Matrix& u_partial, const std::vector<int>& missing);

/// Full inverse pipeline: reconstruct U (completing at most one missing
/// column), recover bare frequencies and couplings, attach junction
/// anharmonicities from LJ_nH (0 entries mean linear elements).
ExtractionReport extract_all(const modal::NormalModeSet& modes,
                             const std::vector<double>& LJ_nH);

}  // namespace iepr::extract

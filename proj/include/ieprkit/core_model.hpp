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

#include <vector>

#include "ieprkit/circuit.hpp"

namespace iepr::model {

/// Linear-stage quantization of a capacitively coupled circuit:
///   f_m = 1 / (2 pi sqrt(L_m C_m)),  g_mn = C_mn sqrt(f_m f_n) / (2 sqrt(C_m C_n)).
/// Junction elements enter through their linear inductance; alpha stays 0
/// at this stage and is attached by anharmonicity_from_LJ afterwards.
BareParameters build_bare_linear(const CircuitSpec& circuit);

/// Inductive dual: g_mn = M_mn sqrt(f_m f_n) / (2 sqrt(L_m L_n)).
BareParameters build_bare_inductive(const CircuitSpec& circuit);

/// Junction anharmonicity in MHz for a bare frequency f (MHz) and junction
/// inductance L_J (nH): alpha = -(2 pi^2 e^2 L_J / h) f^2, i.e. -E_C/h.
double anharmonicity_from_LJ(double omega_bare_MHz, double LJ_nH);

/// Josephson energy E_J/h in GHz: (Phi0 / 2pi)^2 / (L_J h).
double josephson_energy_GHz(double LJ_nH);

/// E_C/E_J for a junction at bare frequency f; the transmon-regime flag is
/// ratio < 1/50.
double charging_ratio(double omega_bare_MHz, double LJ_nH);

/// Direct-form capacitances recovered from a Maxwell capacitance matrix
/// (fF): C_m = row sum, C_mn = -offdiagonal. First order in the coupling;
/// off-diagonals must be <= 0 and the matrix symmetric.
struct MaxwellDirect {
    std::vector<double> C_fF;
    Matrix C_mutual_fF;
};

MaxwellDirect maxwell_to_direct(const Matrix& maxwell_fF);

}  // namespace iepr::model

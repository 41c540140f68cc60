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

#include <array>
#include <string>
#include <vector>

#include "ieprkit/linalg.hpp"
#include "ieprkit/modal.hpp"

namespace iepr::fieldproc {

/// Declared integration path for one element with potential nodes. The
/// traversal order of the polyline fixes the voltage sign convention.
struct PathSpec {
    std::string element;
    std::vector<std::array<double, 3>> polyline_mm;
    std::string orientation_note;
    bool junction = false;  // recovered inductance is a Josephson inductance

    double length_mm() const;
    void validate() const;
};

struct ModeEnergy {
    double freq_MHz = 0.0;
    double total_inductive_energy_J = 0.0;
};

struct FieldSample {
    double s_mm = 0.0;                      // arclength along the path
    std::array<double, 3> E_Vpm{0, 0, 0};   // electric field amplitude
};

/// Pre-sampled eigenmode export: per-mode frequency and total inductive
/// energy, plus tangentially sampled E-field amplitudes along each declared
/// path. samples[mode][path] holds the point list.
struct FieldExport {
    std::vector<ModeEnergy> modes;
    std::vector<PathSpec> paths;
    std::vector<std::vector<std::vector<FieldSample>>> samples;
    std::vector<std::string> elements_without_nodes;

    void validate() const;
};

/// Line integral of the tangential field component along path `n` for mode
/// `m`, composite trapezoid over the sample arclengths. Volts.
double integrate_voltage(const FieldExport& fields, int mode, int path);

/// Phenomenological inductances in nH:
/// L_n = sum_m (V_mn^2 / omega'_m^2) / (4 E_m), evaluated in SI.
std::vector<double> phenomenological_inductance(const Matrix& V_volts,
                                                const std::vector<double>& omega_prime_MHz,
                                                const std::vector<double>& total_energy_J,
                                                const std::vector<std::string>& names);

/// Average inductive energy of one element under one mode, in joules:
/// V^2 / (4 L omega'^2).
double element_inductive_energy(double V_volts, double L_nH, double omega_prime_MHz);

/// Participation ratios, column normalized:
/// r_mn = [V_mn^2/(omega'_m^2 E_m)] / sum_k [V_kn^2/(omega'_k^2 E_k)].
Matrix iepr_from_voltages(const Matrix& V_volts, const std::vector<double>& omega_prime_MHz,
                          const std::vector<double>& total_energy_J,
                          const std::vector<std::string>& names);

/// Sign matrix from voltage signs (zeros map to +1), then row gauge: the
/// largest-|V| entry of each mode row is made positive.
Matrix signs_from_voltages(const Matrix& V_volts);

struct ProcessResult {
    modal::NormalModeSet modes;
    Matrix V_volts;
    std::vector<double> L_nH;   // recovered inductance per element (0 = no path)
    std::vector<double> LJ_nH;  // nonzero only for junction-flagged paths
};

/// Full postprocessing pipeline: integrate voltages, recover inductances,
/// form r and s, and assemble a field_export NormalModeSet. Elements listed
/// in elements_without_nodes become missing columns.
ProcessResult process(const FieldExport& fields);

}  // namespace iepr::fieldproc

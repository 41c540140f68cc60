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

#include "ieprkit/linalg.hpp"
#include "ieprkit/modal.hpp"

namespace iepr::nonlinear {

enum class Method { iepr, epr_formula, oracle };

std::string to_string(Method m);
Method method_from_string(const std::string& s);

/// Normal-representation nonlinear parameters. chi is stored full: its
/// diagonal carries the identity chi_mm = 2 alpha'_m.
struct NonlinearParameters {
    std::vector<double> omega_prime_nl;  // MHz
    std::vector<double> alpha_prime;     // MHz
    Matrix chi;                          // MHz
    Method method = Method::iepr;

    void validate() const;
};

/// Cross-Kerr matrix, full including diagonal:
///   chi_mn = 2 sum_k u_mk^2 u_nk^2 (omega'_m omega'_n / omega_k^2) alpha_k.
Matrix cross_kerr(const modal::TransformMatrix& U, const std::vector<double>& omega_prime,
                  const std::vector<double>& omega_bare, const std::vector<double>& alpha_bare);

/// Self-Kerr: alpha'_m = sum_k u_mk^4 (omega'_m^2 / omega_k^2) alpha_k = chi_mm / 2.
std::vector<double> self_kerr(const modal::TransformMatrix& U,
                              const std::vector<double>& omega_prime,
                              const std::vector<double>& omega_bare,
                              const std::vector<double>& alpha_bare);

/// Renormalized frequencies omega'_m + (1/2) sum_k chi_mk, the k sum
/// including k = m (so the self term alpha'_m is absorbed).
std::vector<double> renormalized_frequencies(const std::vector<double>& omega_prime,
                                             const Matrix& chi);

/// Alternative extractor from junction participations p (rows = modes,
/// columns = junctions) and Josephson energies in MHz (E_J/h):
///   alpha'_m = -omega'_m^2 sum_j p_mj^2 / (8 E_J^j),
///   chi_mn   = -omega'_m omega'_n sum_j p_mj p_nj / (4 E_J^j).
/// For lumped synthetic circuits p equals r restricted to junction columns.
NonlinearParameters epr_formula_kerr(const Matrix& p, const std::vector<double>& omega_prime,
                                     const std::vector<double>& EJ_MHz);

/// Readout-chain dissipation model.
struct LossSpec {
    double Z_t_Ohm = 50.0;     // transmission-line impedance
    double omega_r_MHz = 0.0;  // resonator bare frequency
    double g_rt_MHz = 0.0;     // resonator-line coupling
    double g_qr_MHz = 0.0;     // qubit-resonator coupling
    double Delta_qr_MHz = 0.0; // qubit-resonator detuning
};

struct LossRates {
    double kappa_r_MHz = 0.0;
    double gamma_q_MHz = 0.0;
};

/// kappa_r = 4 g_rt^2 / omega_r and gamma_q = (g_qr / Delta_qr)^2 kappa_r.
LossRates loss_rates(const LossSpec& spec);

}  // namespace iepr::nonlinear

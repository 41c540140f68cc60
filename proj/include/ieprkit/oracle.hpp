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
#include "ieprkit/nonlinear.hpp"

namespace iepr::oracle {

struct FockConfig {
    int levels_per_mode = 6;
    int convergence_levels = 8;
    int max_modes = 3;
    int dimension_cap = 4096;

    void validate() const;
};

/// Truncated-number-basis Hamiltonian together with its basis bookkeeping.
struct FockHamiltonian {
    Matrix h;  // MHz, real symmetric
    int n_modes = 0;
    int levels = 0;

    int dimension() const { return h.rows(); }
    int basis_index(const std::vector<int>& occupation) const;
};

/// Bare nonlinear Hamiltonian in the tensor-product number basis:
///   sum_m [ omega_nl_m n_m + (alpha_m/2) n_m (n_m - 1) ]
///   - sum_{m<n} g_mn (a*_m - a_m)(a*_n - a_n),
/// no rotating-wave approximation. `levels` of 0 means cfg.levels_per_mode.
FockHamiltonian build_fock_hamiltonian(const BareParameters& bare, const FockConfig& cfg,
                                       int levels = 0);

/// Eigenenergies labeled by bare occupation patterns up to two excitations,
/// assigned by maximal overlap with the corresponding product state.
/// Energies are offset so E(00...) = 0.
struct FockSpectrum {
    int n_modes = 0;
    std::vector<std::vector<int>> labels;
    std::vector<double> energies;  // MHz
    std::vector<double> overlaps;  // assignment confidence, |<bare|eig>|
    std::vector<std::string> warnings;

    double energy(const std::vector<int>& label) const;  // OracleError when absent
    bool has(const std::vector<int>& label) const;
};

FockSpectrum labeled_spectrum(const FockHamiltonian& fock, const FockConfig& cfg);

/// Nonlinear parameters read off the labeled spectrum:
///   omega'_nl_i = E(e_i), alpha'_i = E(2 e_i) - 2 E(e_i),
///   chi_ij = E(e_i + e_j) - E(e_i) - E(e_j).
/// For three or more modes this is the per-pair generalization of the
/// two-mode relations.
nonlinear::NonlinearParameters oracle_parameters(const FockSpectrum& spec);

/// Certification rerun at convergence_levels; parameters shifting more than
/// 1% relative are flagged and the oracle result is not certified.
struct ConvergenceReport {
    nonlinear::NonlinearParameters base;
    nonlinear::NonlinearParameters refined;
    double max_shift = 0.0;  // relative
    std::vector<std::string> flagged;
    bool passed = false;
};

ConvergenceReport convergence_check(const BareParameters& bare, const FockConfig& cfg);

/// Convenience: build, diagonalize, label and read off in one call.
nonlinear::NonlinearParameters run_oracle(const BareParameters& bare, const FockConfig& cfg,
                                          int levels = 0,
                                          std::vector<std::string>* warnings = nullptr);

}  // namespace iepr::oracle

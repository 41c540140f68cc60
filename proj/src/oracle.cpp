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

#include "ieprkit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ieprkit/errors.hpp"

namespace iepr::oracle {

namespace {

// Matrix element of (a* - a): d(r, c) = +sqrt(r) when r = c + 1,
// -sqrt(c) when c = r + 1, else 0.
double ladder_diff(int r, int c) {
    if (r == c + 1) return std::sqrt(static_cast<double>(r));
    if (c == r + 1) return -std::sqrt(static_cast<double>(c));
    return 0.0;
}

std::string label_string(const std::vector<int>& label) {
    std::string s = "|";
    for (int v : label) s += std::to_string(v);
    s += ">";
    return s;
}

}  // namespace

void FockConfig::validate() const {
    if (levels_per_mode < 3) throw SpecError("FockConfig: levels_per_mode must be >= 3");
    if (convergence_levels <= levels_per_mode)
        throw SpecError("FockConfig: convergence_levels must exceed levels_per_mode");
    if (max_modes < 1) throw SpecError("FockConfig: max_modes must be >= 1");
    if (dimension_cap < 1) throw SpecError("FockConfig: dimension_cap must be >= 1");
}

int FockHamiltonian::basis_index(const std::vector<int>& occupation) const {
    int idx = 0;
    for (int m = 0; m < n_modes; ++m) idx = idx * levels + occupation[m];
    return idx;
}

FockHamiltonian build_fock_hamiltonian(const BareParameters& bare, const FockConfig& cfg,
                                       int levels) {
    cfg.validate();
    bare.validate();
    const int n_modes = bare.size();
    if (n_modes > cfg.max_modes) {
        std::ostringstream os;
        os << "build_fock_hamiltonian: " << n_modes << " modes exceeds max_modes "
           << cfg.max_modes;
        throw ResourceError(os.str());
    }
    const int L = levels > 0 ? levels : cfg.levels_per_mode;

    double dim_check = 1.0;
    for (int m = 0; m < n_modes; ++m) dim_check *= L;
    if (dim_check > static_cast<double>(cfg.dimension_cap)) {
        std::ostringstream os;
        os << "build_fock_hamiltonian: dimension " << dim_check << " exceeds cap "
           << cfg.dimension_cap;
        throw ResourceError(os.str());
    }
    const int dim = static_cast<int>(dim_check);

    FockHamiltonian fock;
    fock.n_modes = n_modes;
    fock.levels = L;
    fock.h = Matrix(dim, dim);

    std::vector<int> stride(n_modes, 1);
    for (int m = n_modes - 2; m >= 0; --m) stride[m] = stride[m + 1] * L;

    std::vector<std::pair<int, int>> coupled;
    for (int m = 0; m < n_modes; ++m)
        for (int j = m + 1; j < n_modes; ++j)
            if (bare.g(m, j) != 0.0) coupled.emplace_back(m, j);

#pragma omp parallel for schedule(static)
    for (int idx = 0; idx < dim; ++idx) {
        std::vector<int> occ(n_modes);
        int rem = idx;
        for (int m = 0; m < n_modes; ++m) {
            occ[m] = rem / stride[m];
            rem %= stride[m];
        }
        double diag = 0.0;
        for (int m = 0; m < n_modes; ++m) {
            const double nm = occ[m];
            diag += bare.omega_nl[m] * nm + 0.5 * bare.alpha[m] * nm * (nm - 1.0);
        }
        fock.h(idx, idx) = diag;

        // Column idx of the coupling term; writes stay within this column's
        // rows so the loop is race free.
        for (const auto& [m, j] : coupled) {
            const double g = bare.g(m, j);
            for (int dm = -1; dm <= 1; dm += 2) {
                const int nm2 = occ[m] + dm;
                if (nm2 < 0 || nm2 >= L) continue;
                for (int dj = -1; dj <= 1; dj += 2) {
                    const int nj2 = occ[j] + dj;
                    if (nj2 < 0 || nj2 >= L) continue;
                    const int idx2 = idx + dm * stride[m] + dj * stride[j];
                    fock.h(idx2, idx) +=
                        -g * ladder_diff(nm2, occ[m]) * ladder_diff(nj2, occ[j]);
                }
            }
        }
    }
    return fock;
}

FockSpectrum labeled_spectrum(const FockHamiltonian& fock, const FockConfig& cfg) {
    cfg.validate();
    require_symmetric(fock.h, 1e-12, "Fock Hamiltonian");
    const EighResult eig = jacobi_eigh(fock.h);
    const int dim = fock.dimension();
    const int n = fock.n_modes;

    // Labels up to two excitations: ground, e_i, 2 e_i, e_i + e_j.
    std::vector<std::vector<int>> wanted;
    wanted.emplace_back(n, 0);
    for (int i = 0; i < n; ++i) {
        std::vector<int> l(n, 0);
        l[i] = 1;
        wanted.push_back(l);
    }
    for (int i = 0; i < n; ++i) {
        std::vector<int> l(n, 0);
        l[i] = 2;
        wanted.push_back(l);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> l(n, 0);
            l[i] = 1;
            l[j] = 1;
            wanted.push_back(l);
        }

    FockSpectrum spec;
    spec.n_modes = n;
    std::vector<double> raw_energies;
    for (const auto& label : wanted) {
        const int bidx = fock.basis_index(label);
        int best = 0, second = 0;
        double best_ov = -1.0, second_ov = -1.0;
        for (int k = 0; k < dim; ++k) {
            const double ov = std::abs(eig.vectors(k, bidx));
            if (ov > best_ov) {
                second = best;
                second_ov = best_ov;
                best = k;
                best_ov = ov;
            } else if (ov > second_ov) {
                second = k;
                second_ov = ov;
            }
        }
        if (dim > 1 && best_ov - second_ov < 0.05) {
            std::ostringstream os;
            os << "label " << label_string(label) << " is ambiguous: eigenstates " << best
               << " (overlap " << best_ov << ") and " << second << " (overlap " << second_ov
               << ") are both candidates";
            spec.warnings.push_back(os.str());
        }
        spec.labels.push_back(label);
        raw_energies.push_back(eig.eigenvalues[best]);
        spec.overlaps.push_back(best_ov);
    }

    const double e0 = raw_energies.front();  // ground label comes first
    spec.energies.resize(raw_energies.size());
    for (std::size_t i = 0; i < raw_energies.size(); ++i)
        spec.energies[i] = raw_energies[i] - e0;
    return spec;
}

double FockSpectrum::energy(const std::vector<int>& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return energies[i];
    throw OracleError("FockSpectrum: missing label " + label_string(label));
}

bool FockSpectrum::has(const std::vector<int>& label) const {
    return std::find(labels.begin(), labels.end(), label) != labels.end();
}

nonlinear::NonlinearParameters oracle_parameters(const FockSpectrum& spec) {
    const int n = spec.n_modes;
    if (n == 0) throw OracleError("oracle_parameters: empty spectrum");
    nonlinear::NonlinearParameters out;
    out.method = nonlinear::Method::oracle;
    out.omega_prime_nl.resize(n);
    out.alpha_prime.resize(n);
    out.chi = Matrix(n, n);

    for (int i = 0; i < n; ++i) {
        std::vector<int> one(n, 0), two(n, 0);
        one[i] = 1;
        two[i] = 2;
        const double e1 = spec.energy(one);
        const double e2 = spec.energy(two);
        out.omega_prime_nl[i] = e1;
        out.alpha_prime[i] = e2 - 2.0 * e1;
        out.chi(i, i) = 2.0 * out.alpha_prime[i];
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> both(n, 0), ei(n, 0), ej(n, 0);
            both[i] = 1;
            both[j] = 1;
            ei[i] = 1;
            ej[j] = 1;
            const double chi = spec.energy(both) - spec.energy(ei) - spec.energy(ej);
            out.chi(i, j) = chi;
            out.chi(j, i) = chi;
        }
    }
    return out;
}

nonlinear::NonlinearParameters run_oracle(const BareParameters& bare, const FockConfig& cfg,
                                          int levels, std::vector<std::string>* warnings) {
    const FockHamiltonian fock = build_fock_hamiltonian(bare, cfg, levels);
    const FockSpectrum spec = labeled_spectrum(fock, cfg);
    if (warnings)
        warnings->insert(warnings->end(), spec.warnings.begin(), spec.warnings.end());
    return oracle_parameters(spec);
}

ConvergenceReport convergence_check(const BareParameters& bare, const FockConfig& cfg) {
    ConvergenceReport rep;
    rep.base = run_oracle(bare, cfg, cfg.levels_per_mode);
    rep.refined = run_oracle(bare, cfg, cfg.convergence_levels);

    const int n = bare.size();
    // Parameters below 1e-6 MHz (1 Hz) are numerical zeros; comparing them
    // relatively would flag pure roundoff.
    auto shift_of = [](double a, double b) {
        const double scale = std::max(std::abs(b), 1e-6);
        return std::abs(a - b) / scale;
    };
    auto note = [&rep](const std::string& what, double shift) {
        std::ostringstream os;
        os << what << " shifted " << shift * 100.0 << "% between truncation levels";
        rep.flagged.push_back(os.str());
    };

    for (int i = 0; i < n; ++i) {
        double sh = shift_of(rep.base.omega_prime_nl[i], rep.refined.omega_prime_nl[i]);
        rep.max_shift = std::max(rep.max_shift, sh);
        if (sh > 0.01) note("omega'_nl[" + std::to_string(i) + "]", sh);
        sh = shift_of(rep.base.alpha_prime[i], rep.refined.alpha_prime[i]);
        rep.max_shift = std::max(rep.max_shift, sh);
        if (sh > 0.01) note("alpha'[" + std::to_string(i) + "]", sh);
        for (int j = i + 1; j < n; ++j) {
            sh = shift_of(rep.base.chi(i, j), rep.refined.chi(i, j));
            rep.max_shift = std::max(rep.max_shift, sh);
            if (sh > 0.01)
                note("chi[" + std::to_string(i) + "," + std::to_string(j) + "]", sh);
        }
    }
    rep.passed = rep.flagged.empty();
    return rep;
}

}  // namespace iepr::oracle

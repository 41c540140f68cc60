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

#include "ieprkit/nonlinear.hpp"

#include <cmath>
#include <sstream>

#include "ieprkit/errors.hpp"

namespace iepr::nonlinear {

std::string to_string(Method m) {
    switch (m) {
        case Method::iepr: return "IEPR";
        case Method::epr_formula: return "EPR_formula";
        case Method::oracle: return "oracle";
    }
    return "IEPR";
}

Method method_from_string(const std::string& s) {
    if (s == "IEPR") return Method::iepr;
    if (s == "EPR_formula") return Method::epr_formula;
    if (s == "oracle") return Method::oracle;
    throw SpecError("unknown nonlinear method '" + s + "'");
}

void NonlinearParameters::validate() const {
    const int n = static_cast<int>(omega_prime_nl.size());
    if (static_cast<int>(alpha_prime.size()) != n || chi.rows() != n || chi.cols() != n)
        throw SpecError("NonlinearParameters: inconsistent sizes");
    require_symmetric(chi, 1e-12, "chi");
    for (int m = 0; m < n; ++m) {
        const double scale = std::max(1.0, std::abs(chi(m, m)));
        if (std::abs(chi(m, m) - 2.0 * alpha_prime[m]) > 1e-10 * scale) {
            std::ostringstream os;
            os << "NonlinearParameters: chi_mm != 2 alpha'_m at mode " << m;
            throw ConsistencyError(os.str());
        }
    }
}

namespace {

void check_dims(const modal::TransformMatrix& U, const std::vector<double>& omega_prime,
                const std::vector<double>& omega_bare, const std::vector<double>& alpha_bare) {
    const int n = U.size();
    if (static_cast<int>(omega_prime.size()) != n ||
        static_cast<int>(omega_bare.size()) != n ||
        static_cast<int>(alpha_bare.size()) != n)
        throw SpecError("kerr formulas: dimension mismatch between U and frequency vectors");
}

}  // namespace

Matrix cross_kerr(const modal::TransformMatrix& U, const std::vector<double>& omega_prime,
                  const std::vector<double>& omega_bare, const std::vector<double>& alpha_bare) {
    check_dims(U, omega_prime, omega_bare, alpha_bare);
    const int n = U.size();
    Matrix chi(n, n);
    for (int m = 0; m < n; ++m) {
        for (int j = m; j < n; ++j) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k) {
                if (alpha_bare[k] == 0.0) continue;
                const double umk = U.u(m, k);
                const double ujk = U.u(j, k);
                acc += umk * umk * ujk * ujk /
                       (omega_bare[k] * omega_bare[k]) * alpha_bare[k];
            }
            const double v = 2.0 * omega_prime[m] * omega_prime[j] * acc;
            chi(m, j) = v;
            chi(j, m) = v;
        }
    }
    return chi;
}

std::vector<double> self_kerr(const modal::TransformMatrix& U,
                              const std::vector<double>& omega_prime,
                              const std::vector<double>& omega_bare,
                              const std::vector<double>& alpha_bare) {
    check_dims(U, omega_prime, omega_bare, alpha_bare);
    const int n = U.size();
    std::vector<double> alpha(n, 0.0);
    for (int m = 0; m < n; ++m) {
        double acc = 0.0;
        for (int k = 0; k < n; ++k) {
            if (alpha_bare[k] == 0.0) continue;
            const double umk2 = U.u(m, k) * U.u(m, k);
            acc += umk2 * umk2 / (omega_bare[k] * omega_bare[k]) * alpha_bare[k];
        }
        alpha[m] = omega_prime[m] * omega_prime[m] * acc;
    }
    return alpha;
}

std::vector<double> renormalized_frequencies(const std::vector<double>& omega_prime,
                                             const Matrix& chi) {
    const int n = static_cast<int>(omega_prime.size());
    if (chi.rows() != n || chi.cols() != n)
        throw SpecError("renormalized_frequencies: chi shape mismatch");
    std::vector<double> out(n, 0.0);
    for (int m = 0; m < n; ++m) {
        double acc = 0.0;
        for (int k = 0; k < n; ++k) acc += chi(m, k);
        out[m] = omega_prime[m] + 0.5 * acc;
    }
    return out;
}

NonlinearParameters epr_formula_kerr(const Matrix& p, const std::vector<double>& omega_prime,
                                     const std::vector<double>& EJ_MHz) {
    const int n = p.rows();
    const int nj = p.cols();
    if (static_cast<int>(omega_prime.size()) != n)
        throw SpecError("epr_formula_kerr: omega_prime size mismatch");
    if (static_cast<int>(EJ_MHz.size()) != nj)
        throw SpecError("epr_formula_kerr: participation columns must match junction count");
    for (int j = 0; j < nj; ++j)
        if (!(EJ_MHz[j] > 0.0)) throw SpecError("epr_formula_kerr: E_J must be > 0");

    NonlinearParameters out;
    out.method = Method::epr_formula;
    out.alpha_prime.assign(n, 0.0);
    out.chi = Matrix(n, n);
    for (int m = 0; m < n; ++m) {
        for (int k = m; k < n; ++k) {
            double acc = 0.0;
            for (int j = 0; j < nj; ++j) acc += p(m, j) * p(k, j) / (4.0 * EJ_MHz[j]);
            const double v = -omega_prime[m] * omega_prime[k] * acc;
            out.chi(m, k) = v;
            out.chi(k, m) = v;
        }
        out.alpha_prime[m] = 0.5 * out.chi(m, m);
    }
    out.omega_prime_nl = renormalized_frequencies(omega_prime, out.chi);
    out.validate();
    return out;
}

LossRates loss_rates(const LossSpec& spec) {
    if (!(spec.omega_r_MHz > 0.0)) throw SpecError("loss_rates: omega_r must be > 0");
    if (spec.g_qr_MHz != 0.0 && spec.Delta_qr_MHz == 0.0)
        throw SpecError("loss_rates: Delta_qr must be nonzero to evaluate gamma_q");
    LossRates out;
    out.kappa_r_MHz = 4.0 * spec.g_rt_MHz * spec.g_rt_MHz / spec.omega_r_MHz;
    out.gamma_q_MHz =
        spec.g_qr_MHz == 0.0
            ? 0.0
            : (spec.g_qr_MHz / spec.Delta_qr_MHz) * (spec.g_qr_MHz / spec.Delta_qr_MHz) *
                  out.kappa_r_MHz;
    return out;
}

}  // namespace iepr::nonlinear

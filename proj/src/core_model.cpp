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

#include "ieprkit/core_model.hpp"

#include <cmath>
#include <sstream>

#include "ieprkit/constants.hpp"
#include "ieprkit/errors.hpp"

namespace iepr::model {

namespace {

double bare_frequency_MHz(double L_nH, double C_fF) {
    // sqrt(nH * fF) = 1e-12 s, so 1/(2 pi sqrt(LC)) lands in MHz after the
    // 1e12 / 1e6 bookkeeping.
    return 1.0e6 / (2.0 * kPi * std::sqrt(L_nH * C_fF));
}

BareParameters build_bare(const CircuitSpec& circuit, CouplingKind expected) {
    circuit.validate();
    if (circuit.coupling_kind != expected)
        throw SpecError(expected == CouplingKind::capacitive
                            ? "build_bare_linear requires capacitive coupling_kind"
                            : "build_bare_inductive requires inductive coupling_kind");

    const int n = static_cast<int>(circuit.elements.size());
    BareParameters bare;
    bare.names.reserve(n);
    bare.omega.resize(n);
    bare.alpha.assign(n, 0.0);
    bare.omega_nl.resize(n);
    bare.L_J.assign(n, 0.0);
    bare.g = Matrix(n, n);

    for (int i = 0; i < n; ++i) {
        const auto& e = circuit.elements[i];
        bare.names.push_back(e.name);
        bare.omega[i] = bare_frequency_MHz(e.inductance_nH(), e.C_fF);
        bare.omega_nl[i] = bare.omega[i];
        if (e.is_junction()) bare.L_J[i] = *e.LJ_nH;
    }

    for (const auto& c : circuit.couplings) {
        const int i = circuit.index_of(c.a);
        const int j = circuit.index_of(c.b);
        const auto& ea = circuit.elements[i];
        const auto& eb = circuit.elements[j];
        double g = 0.0;
        if (expected == CouplingKind::capacitive) {
            g = *c.C_mutual_fF * std::sqrt(bare.omega[i] * bare.omega[j]) /
                (2.0 * std::sqrt(ea.C_fF * eb.C_fF));
        } else {
            g = *c.M_mutual_nH * std::sqrt(bare.omega[i] * bare.omega[j]) /
                (2.0 * std::sqrt(ea.inductance_nH() * eb.inductance_nH()));
        }
        bare.g(i, j) = g;
        bare.g(j, i) = g;
    }
    return bare;
}

}  // namespace

BareParameters build_bare_linear(const CircuitSpec& circuit) {
    return build_bare(circuit, CouplingKind::capacitive);
}

BareParameters build_bare_inductive(const CircuitSpec& circuit) {
    return build_bare(circuit, CouplingKind::inductive);
}

double anharmonicity_from_LJ(double omega_bare_MHz, double LJ_nH) {
    if (!(omega_bare_MHz > 0.0)) throw SpecError("anharmonicity_from_LJ: omega must be > 0");
    if (!(LJ_nH > 0.0)) throw SpecError("anharmonicity_from_LJ: L_J must be > 0");
    const PhysicalConstants k;
    const double f_Hz = omega_bare_MHz * kMHzToHz;
    const double L_H = LJ_nH * knHToH;
    const double alpha_Hz = -2.0 * kPi * kPi * k.e * k.e * L_H * f_Hz * f_Hz / k.h;
    return alpha_Hz / kMHzToHz;
}

double josephson_energy_GHz(double LJ_nH) {
    if (!(LJ_nH > 0.0)) throw SpecError("josephson_energy: L_J must be > 0");
    const PhysicalConstants k;
    const double L_H = LJ_nH * knHToH;
    const double x = k.phi0() / (2.0 * kPi);
    return x * x / (L_H * k.h) / 1.0e9;
}

double charging_ratio(double omega_bare_MHz, double LJ_nH) {
    const double ec_GHz = -anharmonicity_from_LJ(omega_bare_MHz, LJ_nH) / 1.0e3;
    return ec_GHz / josephson_energy_GHz(LJ_nH);
}

MaxwellDirect maxwell_to_direct(const Matrix& maxwell_fF) {
    if (maxwell_fF.rows() != maxwell_fF.cols())
        throw FormatError("maxwell_to_direct: matrix must be square");
    const int n = maxwell_fF.rows();
    const double scale = maxwell_fF.max_abs();
    if (symmetry_error(maxwell_fF) > 1e-9 * (scale > 0.0 ? scale : 1.0))
        throw FormatError("maxwell_to_direct: matrix asymmetry exceeds 1e-9 relative");

    MaxwellDirect out;
    out.C_fF.assign(n, 0.0);
    out.C_mutual_fF = Matrix(n, n);
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                row += maxwell_fF(i, j);
                continue;
            }
            if (maxwell_fF(i, j) > 0.0) {
                std::ostringstream os;
                os << "maxwell_to_direct: off-diagonal (" << i << "," << j
                   << ") is positive; Maxwell off-diagonals must be <= 0";
                throw FormatError(os.str());
            }
            row += maxwell_fF(i, j);
            out.C_mutual_fF(i, j) = -maxwell_fF(i, j);
        }
        out.C_fF[i] = row;
    }
    return out;
}

}  // namespace iepr::model

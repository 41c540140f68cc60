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

#include "ieprkit/circuit.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "ieprkit/errors.hpp"

namespace iepr {

std::string to_string(ElementKind kind) {
    switch (kind) {
        case ElementKind::transmon: return "transmon";
        case ElementKind::coupler: return "coupler";
        case ElementKind::resonator: return "resonator";
        case ElementKind::cavity: return "cavity";
        case ElementKind::other: return "other";
    }
    return "other";
}

ElementKind element_kind_from_string(const std::string& s) {
    if (s == "transmon") return ElementKind::transmon;
    if (s == "coupler") return ElementKind::coupler;
    if (s == "resonator") return ElementKind::resonator;
    if (s == "cavity") return ElementKind::cavity;
    if (s == "other") return ElementKind::other;
    throw SpecError("unknown element kind '" + s + "'");
}

int CircuitSpec::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i].name == name) return static_cast<int>(i);
    return -1;
}

void CircuitSpec::validate() const {
    if (elements.empty()) throw SpecError("circuit has no elements");

    std::set<std::string> seen;
    for (const auto& e : elements) {
        if (e.name.empty()) throw SpecError("element with empty name");
        if (!seen.insert(e.name).second)
            throw SpecError("duplicate element name '" + e.name + "'");
        if (e.L_nH.has_value() == e.LJ_nH.has_value())
            throw SpecError("element '" + e.name +
                            "': exactly one of L_nH or LJ_nH must be given");
        if (!(e.C_fF > 0.0))
            throw SpecError("element '" + e.name + "': C_fF must be > 0");
        if (!(e.inductance_nH() > 0.0))
            throw SpecError("element '" + e.name + "': inductance must be > 0");
    }

    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& c : couplings) {
        if (c.a == c.b)
            throw SpecError("coupling '" + c.a + "'-'" + c.b + "': endpoints must differ");
        if (index_of(c.a) < 0)
            throw SpecError("coupling references unknown element '" + c.a + "'");
        if (index_of(c.b) < 0)
            throw SpecError("coupling references unknown element '" + c.b + "'");
        auto key = c.a < c.b ? std::make_pair(c.a, c.b) : std::make_pair(c.b, c.a);
        if (!pairs.insert(key).second)
            throw SpecError("duplicate coupling pair '" + key.first + "'-'" + key.second + "'");
        if (c.C_mutual_fF.has_value() == c.M_mutual_nH.has_value())
            throw SpecError("coupling '" + c.a + "'-'" + c.b +
                            "': exactly one of C_mutual_fF or M_mutual_nH must be given");
        const bool capacitive = c.C_mutual_fF.has_value();
        if (capacitive != (coupling_kind == CouplingKind::capacitive))
            throw SpecError("coupling '" + c.a + "'-'" + c.b +
                            "': kind does not match the circuit's coupling_kind");
    }
}

void BareParameters::validate() const {
    const int n = size();
    if (n == 0) throw SpecError("BareParameters: empty");
    const auto want = static_cast<std::size_t>(n);
    if (omega.size() != want || alpha.size() != want || omega_nl.size() != want ||
        L_J.size() != want || g.rows() != n || g.cols() != n)
        throw SpecError("BareParameters: inconsistent field sizes");
    for (int i = 0; i < n; ++i) {
        if (!(omega[i] > 0.0))
            throw SpecError("BareParameters: omega must be > 0 for '" + names[i] + "'");
        if (L_J[i] > 0.0 && alpha[i] > 0.0)
            throw SpecError("BareParameters: alpha must be <= 0 for junction element '" +
                            names[i] + "'");
        if (g(i, i) != 0.0) throw SpecError("BareParameters: g diagonal must be zero");
        const double nl = omega[i] + alpha[i];
        if (std::abs(omega_nl[i] - nl) > 1e-9 * std::abs(nl)) {
            std::ostringstream os;
            os << "BareParameters: omega_nl[" << i << "] != omega + alpha";
            throw SpecError(os.str());
        }
    }
    require_symmetric(g, 1e-12, "BareParameters g");
}

}  // namespace iepr

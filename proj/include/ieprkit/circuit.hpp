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

#include <optional>
#include <string>
#include <vector>

#include "ieprkit/linalg.hpp"

namespace iepr {

enum class ElementKind { transmon, coupler, resonator, cavity, other };

std::string to_string(ElementKind kind);
ElementKind element_kind_from_string(const std::string& s);

/// One lumped element. Exactly one of L_nH (linear inductor) or LJ_nH
/// (Josephson junction modeled as its linear inductance) must be set.
struct ElementSpec {
    std::string name;
    ElementKind kind = ElementKind::other;
    double C_fF = 0.0;
    std::optional<double> L_nH;
    std::optional<double> LJ_nH;
    bool has_nodes = true;

    bool is_junction() const { return LJ_nH.has_value(); }
    double inductance_nH() const { return LJ_nH ? *LJ_nH : *L_nH; }
};

/// Pairwise coupling; exactly one of C_mutual_fF or M_mutual_nH.
struct CouplingSpec {
    std::string a;
    std::string b;
    std::optional<double> C_mutual_fF;
    std::optional<double> M_mutual_nH;
};

enum class CouplingKind { capacitive, inductive };

/// A lumped circuit: the layout stand-in. All couplings in one spec share
/// the same kind.
struct CircuitSpec {
    std::vector<ElementSpec> elements;
    std::vector<CouplingSpec> couplings;
    CouplingKind coupling_kind = CouplingKind::capacitive;

    int index_of(const std::string& name) const;  // -1 when absent

    /// Throws SpecError on any structural violation: duplicate names,
    /// unknown coupling endpoints, a == b, duplicate unordered pairs,
    /// nonpositive values, missing/extra inductance, mixed coupling kinds.
    void validate() const;
};

/// Bare (uncoupled-element) parameters. Frequencies are f = omega/2pi in
/// MHz; g is symmetric with zero diagonal; alpha is 0 for linear elements
/// and omega_nl = omega + alpha elementwise.
struct BareParameters {
    std::vector<std::string> names;
    std::vector<double> omega;     // MHz
    Matrix g;                      // MHz
    std::vector<double> alpha;     // MHz, <= 0 for junction elements
    std::vector<double> omega_nl;  // MHz
    std::vector<double> L_J;       // nH, 0 where absent

    int size() const { return static_cast<int>(names.size()); }
    void validate() const;
};

}  // namespace iepr

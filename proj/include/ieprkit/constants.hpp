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

namespace iepr {

/// CODATA 2018 exact values. Phi0 is derived from the stored e and h so the
/// identity Phi0 = h/(2e) holds exactly.
struct PhysicalConstants {
    double e = 1.602176634e-19;  // elementary charge, C
    double h = 6.62607015e-34;   // Planck constant, J*s

    double phi0() const { return h / (2.0 * e); }  // flux quantum, Wb
};

inline constexpr double kPi = 3.14159265358979323846;

// Unit conversion factors. All toolkit I/O uses MHz (ordinary frequency
// f = omega/2pi), fF, nH and mm; formulas involving Phi0 are evaluated in SI.
inline constexpr double kMHzToHz = 1.0e6;
inline constexpr double kfFToF = 1.0e-15;
inline constexpr double knHToH = 1.0e-9;
inline constexpr double kmmToM = 1.0e-3;

}  // namespace iepr

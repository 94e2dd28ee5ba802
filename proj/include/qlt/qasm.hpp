// Copyright 2026 The QLT Authors
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

#include "qlt/circuit.hpp"

namespace qlt {

/**
 * OpenQASM 3 text for a circuit, one IR gate per line, angles printed with
 * 17 significant digits so the output is byte-stable and round-trips.
 *
 * Registers are listed as `// register <name> <offset> <size>` comments and
 * diagonal-oracle runs are bracketed by `// oracle begin` / `// oracle end`,
 * so both cost models can be recomputed from the file.
 */
std::string to_qasm(const Circuit& c);

/// Parses the subset written by to_qasm.
Circuit parse_qasm(const std::string& text);

/// Euler angles with M = e^{i gamma} U(theta, phi, lambda).
struct EulerAngles {
  double theta = 0.0, phi = 0.0, lambda = 0.0, gamma = 0.0;
};
EulerAngles euler_angles(const Eigen::Matrix2cd& m);
Eigen::Matrix2cd u_matrix(const EulerAngles& e);

}  // namespace qlt

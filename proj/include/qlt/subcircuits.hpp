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

#include <vector>

#include "qlt/circuit.hpp"

namespace qlt {

/**
 * Copy unitary on n_a qubits: qubit 0 is the source, qubits 1..n_a-1 are
 * zeroed targets. A doubling tree of n_a-1 CNOTs in ceil(log2 n_a) layers.
 */
Circuit copy_circuit(int n_a);

/// Appends the copy tree fanning lines[0] onto the remaining lines.
void append_copy(Circuit& host, const std::vector<int>& lines);

/**
 * Controlled version of u on layout [u qubits | control | ancillas].
 *
 * The control is copied onto the ancillas, every layer of u is split into
 * sublayers of at most 1 + ancillas gates, each gate of a sublayer is
 * controlled by its own copy line, and the copy is undone. With no ancillas
 * the gates are simply controlled one after another.
 */
Circuit parallel_controlled(const Circuit& u, int ancillas);

/**
 * Appends C(u) to host. u's qubit i goes to map[i]; lines[0] is the control
 * and lines[1..] are zeroed copy lines. Diagonal-oracle runs of u stay
 * contiguous and are controlled by a single line.
 */
void append_controlled(Circuit& host, const Circuit& u,
                       const std::vector<int>& map,
                       const std::vector<int>& lines);

/**
 * Multi-controlled X on layout [controls (c) | target | work (c-2)].
 * c = 1 gives a CNOT, c = 2 a Toffoli, larger c a balanced AND-tree of
 * Toffolis with size 2c-3 and depth 2*ceil(log2 c)-1.
 */
Circuit decompose_mcx(int c, int work);

/// Appends a multi-controlled X; needs max(0, c-2) zeroed work qubits.
void append_mcx(Circuit& host, const std::vector<int>& controls, int target,
                const std::vector<int>& work);

/**
 * Computes the AND of `controls` pairwise into work qubits until two lines
 * remain (or one, for a single control). Returns the uncomputable circuit on
 * the host width and stores the remaining lines in `roots`.
 */
Circuit and_tree(int width, const std::vector<int>& controls,
                 const std::vector<int>& work, std::vector<int>& roots);

/**
 * Uniformly controlled rotation: for control value j (controls[i] is bit i of
 * j) applies R(angles[j]) to target, R in {RY, RZ}. Gray-code construction
 * with 2^m rotations and 2^m CNOTs; nothing is emitted for all-zero angles.
 */
void append_uniformly_controlled(Circuit& host, GateOp axis,
                                 const std::vector<double>& angles,
                                 const std::vector<int>& controls, int target);

/**
 * Circuit on b qubits mapping |0> to sum_k mu_k |k>. mu has 2^b
 * nonnegative entries with unit norm (to 1e-10).
 */
Circuit prepare_state(const std::vector<double>& mu);

}  // namespace qlt

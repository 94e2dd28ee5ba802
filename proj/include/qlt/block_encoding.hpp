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
#include <vector>

#include "qlt/circuit.hpp"

namespace qlt {

/**
 * A circuit U on n system qubits (indices 0..n-1) and a ancillas (n..n+a-1)
 * with ||A - alpha (<0|^a (x) I) U (|0>^a (x) I)|| <= eps for the encoded A.
 */
struct BlockEncoding {
  Circuit circuit;
  int n = 0;
  int a = 0;
  double alpha = 1.0;
  double eps = 0.0;
  // Diagonal-oracle invocations contained in the circuit.
  int oracle_calls = 0;

  /// The encoded block, unscaled.
  MatrixXc block() const { return extract_block(circuit, n, a); }
};

/// Any n-qubit circuit as a (1, 0, 0) encoding of its unitary.
BlockEncoding unitary_be(const Circuit& u);

/// The identity on n qubits with no gates.
BlockEncoding identity_be(int n);

/**
 * A.B on layout [system | A ancillas | B ancillas]; B runs first.
 * Certificate (alpha_A alpha_B, a_A + a_B, alpha_A eps_B + alpha_B eps_A).
 */
BlockEncoding product_be(const BlockEncoding& A, const BlockEncoding& B);

/// Default number of copy lines used to parallelize controls.
inline constexpr int kDefaultCopies = -1;  // n - 1

/**
 * PREPARE-SELECT-PREPARE^dagger encoding of sum_k lambda_k A_k.
 *
 * Layout: [system | term ancillas (padded to the widest) | control | copies |
 * selector (ceil log2 #terms) | AND-tree work (selector - 2)]. Terms are
 * visited in sibling pairs: an AND-tree on the (X-flipped) high selector bits
 * gives the pair's indicator, the lowest bit splits it into the control qubit,
 * and each term runs controlled through parallel control lines.
 * Certificate (sum lambda_k alpha_k, total ancillas, sum lambda_k eps_k).
 */
BlockEncoding lcu_be(const std::vector<BlockEncoding>& terms,
                     const std::vector<double>& lambdas,
                     int copies = kDefaultCopies);

/// PREPARE amplitudes mu_k = sqrt(lambda_k alpha_k / lambda), padded to 2^b.
std::vector<double> lcu_amplitudes(const std::vector<BlockEncoding>& terms,
                                   const std::vector<double>& lambdas);

/**
 * (1, n, 0) encoding of the entrywise product U o V on layout
 * [system | ancilla n]: CNOT fan, V on the ancillas and U on the system,
 * CNOT fan.
 */
BlockEncoding elementwise_product_be(const Circuit& U, const Circuit& V);

/// The all-1/2^n matrix as H^n o H^n: 4n gates, depth 3.
BlockEncoding uniform_matrix_be(int n);

/**
 * (1, 1, 0) encoding of diag(d), |d_j| <= 1, with one ancilla. For each j the
 * ancilla receives G_j = [[d_j, -s_j], [s_j, conj d_j]], s_j = sqrt(1-|d_j|^2),
 * written as RZ(-phi_j) RY(beta_j) RZ(-phi_j) and synthesized with uniformly
 * controlled rotations (no extra workspace). The whole circuit is one
 * diagonal-oracle invocation.
 */
BlockEncoding diagonal_be_exact(const VectorXc& d,
                                const std::string& name = "diag");

}  // namespace qlt

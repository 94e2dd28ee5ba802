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

#include <optional>
#include <vector>

#include "qlt/block_encoding.hpp"

namespace qlt {

/// Entries e^{x_i y_j} / N.
MatrixXc dlt_matrix(const VectorXc& x, const VectorXc& y);

/**
 * A discrete Laplace transform job. Rows follow x, columns follow y.
 * Chebyshev needs real y; DoubleChebyshev and Taylor accept complex data.
 */
struct QltProblem {
  VectorXc x;
  VectorXc y;
  double eps = 1e-2;
  SeriesKind kind = SeriesKind::Taylor;

  int n() const;
  double x_max() const;
  double y_max() const;
  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct SeriesTerm {
  int k = 0;
  int k2 = 0;  // second index, DoubleChebyshev only
  double lambda = 0.0;
  VectorXc left;   // eigenvalues acting on rows (x side)
  VectorXc right;  // eigenvalues acting on columns (y side)
};

struct SeriesPlan {
  SeriesKind kind = SeriesKind::Taylor;
  int K = 0;
  double product = 0.0;
  double tail_bound = 0.0;    // truncation error bound at K
  double alpha = 1.0;         // certified normalization
  double lambda_sum = 0.0;    // sum of term weights
  double per_factor_eps = 0.0;  // eps / (6 alpha) allotted to each diagonal
  double clamp_excess = 0.0;  // largest |d| - 1 removed by clamping
  bool degenerate = false;    // x or y identically zero
  std::vector<SeriesTerm> terms;
};

/**
 * Chooses K and the per-term diagonals. The error budget is split in thirds:
 * truncation, diagonal synthesis, and the normalization slack alpha - lambda;
 * K is raised until both the tail bound and the slack fit in eps/3.
 * `K_override` bypasses the search (the bound is still reported).
 */
SeriesPlan plan_series(const QltProblem& p,
                       std::optional<int> K_override = std::nullopt);

/// The certified QLT block-encoding for a plan.
BlockEncoding build_qlt(const QltProblem& p, const SeriesPlan& plan,
                        int copies = kDefaultCopies);
BlockEncoding build_qlt(const QltProblem& p);

struct ResourceReport {
  long size = 0;
  long depth = 0;
  long oracle_size = 0;   // diagonal-oracle runs charged as single gates
  long oracle_depth = 0;
  long additional_size = 0;  // everything except the diagonal oracles
  long additional_depth = 0;
  int total_qubits = 0;
  int system_qubits = 0;
  int ancillas = 0;
  int nominal_ancillas = 0;  // 2n + 2 a_be + ceil(log2 #terms)
  std::vector<Register> registers;
  double alpha = 0.0;
  double eps = 0.0;
  int K = 0;
  int terms = 0;
  int controlled_diagonal_calls = 0;
};

ResourceReport resource_report(const BlockEncoding& be, const SeriesPlan& plan);

struct Verification {
  double measured_error = 0.0;
  bool pass = false;
};

inline constexpr int kMaxVerifyQubits = 4;

/// ||dlt_matrix - alpha block|| against p.eps; system size n <= 4.
Verification verify_qlt(const QltProblem& p, const BlockEncoding& be);

}  // namespace qlt

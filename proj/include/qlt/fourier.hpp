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

#include <functional>
#include <vector>

#include "qlt/block_encoding.hpp"

namespace qlt {

enum class DiagonalMethod { ExactRotation, FourierLCU };

/**
 * Description of one diagonal factor. ExactRotation uses `eigenvalues`;
 * FourierLCU samples the periodic function `g` on [0, 1) and needs
 * derivative-bound constants ||g^(M)|| <= C M! / R^M together with the
 * truncation order M.
 */
struct DiagonalSpec {
  DiagonalMethod method = DiagonalMethod::ExactRotation;
  VectorXc eigenvalues;
  std::function<Complex(double)> g;
  double C = 0.0;
  double R = 0.0;
  int M = 0;
  // When positive, fourier_diagonal_be refuses an M whose bound exceeds it.
  double target_eps = 0.0;
};

/**
 * Fourier coefficients a_{-M..M} (index k+M) of a periodic function from
 * 2^m equispaced samples on [0, 1). Requires 2^m >= 8M.
 */
std::vector<Complex> fourier_coefficients(const std::vector<Complex>& samples,
                                          int M);

/// 2 C sqrt(2 pi M^3) e^{1/(12M)} / ((2 pi e R)^M (M-1)), M >= 2.
double fourier_truncation_bound(double C, double R, int M);

/// Smallest M >= 2 with fourier_truncation_bound(C, R, M) <= eps.
int choose_fourier_order(double C, double R, double eps);

struct FourierDiagonalInfo {
  std::vector<Complex> coefficients;  // a_{-M..M}
  double truncation_bound = 0.0;      // eps_M, NaN when M < 2
  double series_error = 0.0;          // max_j |g(j/N) - g_M(j/N)|
  int selector_qubits = 0;
};

/**
 * Block-encoding of diag(g(j/N)) through its truncated Fourier series
 * e^{-2 pi i M x} sum_{m=0}^{2M} a_{m-M} U^m with U = diag(e^{2 pi i j/N}).
 *
 * The polynomial is a linear combination of unitaries: PREPARE loads
 * sqrt(|a|/sum|a|), a diagonal phase circuit on the selector carries arg a,
 * and selector bit i controls U^{2^i} (n controlled phase gates). The
 * certificate is (sum |a_k|, selector qubits, series_error).
 */
BlockEncoding fourier_diagonal_be(const DiagonalSpec& spec, int n,
                                  FourierDiagonalInfo* info = nullptr);

/// Dispatches on spec.method; ExactRotation ignores n and uses the vector.
BlockEncoding diagonal_be(const DiagonalSpec& spec, int n);

/**
 * Appends diag(e^{i phases_j}) on `qubits` (phases.size() == 2^|qubits|),
 * global phase included.
 */
void append_diagonal_phase(Circuit& host, const std::vector<double>& phases,
                           const std::vector<int>& qubits);

}  // namespace qlt

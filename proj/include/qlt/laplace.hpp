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
#include <optional>
#include <vector>

#include "qlt/transform.hpp"

namespace qlt {

/**
 * QLT problem whose rows evaluate the Z-transform: x_j = -ln z_j (principal
 * branch) and y_i = i, so (QLT s)_j = sum_i s_i z_j^{-i} / N.
 */
QltProblem ztransform_problem(const VectorXc& z, double eps = 1e-2,
                              SeriesKind kind = SeriesKind::Taylor);

/// Direct evaluation of sum_i s_i z_j^{-i}.
VectorXc ztransform_direct(const VectorXc& s, const VectorXc& z);

/// max(t0, log(k / (eps (sigma_min - a))) / (sigma_min - a)), floored at 0.
double truncation_M(double k, double a, double t0, double sigma_min, double eps);

/// (M^2 / 2N) (sqrt(sigma^2 + omega^2) sup_ef + sup_efprime).
double discretization_bound(double M, long N, double sigma, double omega,
                            double sup_ef, double sup_efprime);

/// (M/N) sum_i e^{-z_j t_i} f_i with t_i = i M / N.
VectorXc continuous_laplace_quadrature(const std::vector<double>& f_samples,
                                       double M, const VectorXc& z);

/// Squared norm of the ancilla-zero part of U (|0>^a |psi>).
double success_probability(const BlockEncoding& be, const VectorXc& psi);

/**
 * A continuous Laplace transform job: |f(t)| <= k e^{a t} for t >= t0,
 * evaluated on contour points z_j with min Re z_j > a. M <= 0 requests
 * truncation_M. f_prime is optional; central differences are used without it.
 */
struct ContinuousProblem {
  std::function<double(double)> f;
  std::function<double(double)> f_prime;
  double k = 1.0;
  double a = 0.0;
  double t0 = 0.0;
  VectorXc contour;
  double M = 0.0;
  double eps = 1e-2;
  SeriesKind kind = SeriesKind::Taylor;
  std::optional<int> K_override;
  // Closed-form transform, when known, for reporting true errors.
  std::function<Complex(Complex)> exact;
};

struct LaplaceReport {
  bool empty_input = false;
  int n = 0;
  double M = 0.0;
  double dt = 0.0;
  double required_N = 0.0;  // M^2 / eps
  bool meets_required_N = false;
  double L_exponent = 0.0;
  double success_probability = 0.0;

  double truncation_bound = 0.0;             // per point
  double truncation_error = -1.0;            // max_j, needs `exact`
  std::vector<double> discretization_bounds;  // per point
  // The same estimate with the sup taken panel by panel; never larger.
  std::vector<double> panel_discretization_bounds;
  double discretization_error = 0.0;         // max_j |Riemann - int_0^M|

  double qlt_state_budget = 0.0;   // 2 eps / ||QLT f||
  double state_error_riemann = 0.0;
  double combined_budget = 0.0;
  double state_error_exact = -1.0;  // needs `exact`

  VectorXc riemann;
  VectorXc prepared_state;
  SeriesPlan plan;
  ResourceReport resources;
};

/**
 * Builds the QLT with rows x_j = -z_j and columns y_i = i M / N, applies it to
 * the normalized samples of f, post-selects and compares the normalized
 * result with the Riemann sums and (when given) the exact transform.
 */
LaplaceReport prepare_laplace_state(const ContinuousProblem& p);

/**
 * Large-N limit of the success probability for x_i = f(i/N), y_j = g(j/N)
 * and input h: e^{-2 |f| |g|} int |int e^{f(x) g(y)} h(y) dy|^2 dx / int |h|^2.
 */
double success_probability_limit(const std::function<double(double)>& f,
                                  const std::function<double(double)>& g,
                                  const std::function<double(double)>& h);

/// Measured success probability of the QLT for that family at size n.
double success_probability_at(const std::function<double(double)>& f,
                              const std::function<double(double)>& g,
                              const std::function<double(double)>& h, int n,
                              double eps);

}  // namespace qlt

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

#include <numbers>

#include "doctest.h"
#include "qlt/laplace.hpp"

using namespace qlt;
using doctest::Approx;

TEST_CASE("z-transform problem") {
  const VectorXc z = (VectorXc(2) << 2.0, 4.0).finished();
  const VectorXc s = (VectorXc(2) << 1.0, 1.0).finished();
  const VectorXc direct = ztransform_direct(s, z);
  CHECK(std::abs(direct(0) - 1.5) < 1e-15);
  CHECK(std::abs(direct(1) - 1.25) < 1e-15);
  const QltProblem p = ztransform_problem(z, 1e-3);
  // Rows of the transform matrix are the Z-transform up to 1/N.
  CHECK((dlt_matrix(p.x, p.y) * s * 2.0 - direct).norm() < 1e-14);
  const BlockEncoding be = build_qlt(p);
  CHECK(verify_qlt(p, be).pass);

  const VectorXc delta = (VectorXc(2) << 1.0, 0.0).finished();
  const VectorXc out = ztransform_direct(delta, z);
  CHECK(std::abs(out(0) - 1.0) < 1e-15);
  CHECK(std::abs(out(1) - 1.0) < 1e-15);

  VectorXc zero = z;
  zero(1) = 0.0;
  CHECK_THROWS_AS(ztransform_problem(zero), std::invalid_argument);
}

TEST_CASE("unit circle gives the DFT") {
  const int N = 16;
  VectorXc z(N), s(N);
  for (int j = 0; j < N; ++j) {
    z(j) = std::polar(1.0, 2.0 * std::numbers::pi * j / N);
    s(j) = Complex(std::cos(0.3 * j), std::sin(1.1 * j * j));
  }
  const QltProblem p = ztransform_problem(z);
  const VectorXc via_matrix = dlt_matrix(p.x, p.y) * s * static_cast<double>(N);
  for (int j = 0; j < N; ++j) {
    Complex dft(0.0);
    for (int i = 0; i < N; ++i) {
      dft += s(i) * std::polar(1.0, -2.0 * std::numbers::pi * i * j / N);
    }
    CHECK(std::abs(via_matrix(j) - dft) < 1e-9);
  }
}

TEST_CASE("truncation length") {
  CHECK(truncation_M(1.0, -1.0, 0.0, 0.0, 1e-3) == Approx(6.907755278982137).epsilon(1e-14));
  CHECK(truncation_M(2.0, 0.0, 0.0, 1.0, 1e-2) == Approx(5.298317366548036).epsilon(1e-14));
  CHECK(truncation_M(1.0, 0.0, 9.0, 1.0, 0.5) == 9.0);
  CHECK_THROWS_AS(truncation_M(1.0, 1.0, 0.0, 1.0, 1e-2), std::invalid_argument);
}

TEST_CASE("discretization bound") {
  CHECK(discretization_bound(1.0, 100, 1.0, 0.0, 0.0, 0.0) == 0.0);
  CHECK(discretization_bound(1.0, 100, 1.0, 0.0, 1.0, 1.0) == Approx(0.01));
  CHECK(discretization_bound(3.0, 200, 1.0, 2.0, 0.5, 0.7) ==
        Approx(0.5 * discretization_bound(3.0, 100, 1.0, 2.0, 0.5, 0.7)));
}

TEST_CASE("riemann quadrature") {
  const VectorXc z1 = VectorXc::Constant(1, 1.0);
  CHECK(continuous_laplace_quadrature(std::vector<double>(8, 0.0), 1.0, z1).norm() == 0.0);

  const int N = 1024;
  const double M = 7.0;
  std::vector<double> f(N);
  for (int i = 0; i < N; ++i) f[i] = std::exp(-i * M / N);
  const Complex r = continuous_laplace_quadrature(f, M, z1)(0);
  const double trunc = std::exp(-M);  // k = 1, a = -1, sigma = 1
  const double disc = discretization_bound(M, N, 1.0, 0.0, 1.0, 1.0);
  CHECK(std::abs(r - 0.5) <= trunc + disc);

  const double sigma = 0.8;
  std::vector<double> ones(N, 1.0);
  const Complex g = continuous_laplace_quadrature(ones, M, VectorXc::Constant(1, sigma))(0);
  const double q = std::exp(-sigma * M / N);
  CHECK(std::abs(g - (M / N) * (1.0 - std::pow(q, N)) / (1.0 - q)) < 1e-12);
}

TEST_CASE("success probability") {
  const VectorXc e0 = (VectorXc(2) << 1.0, 0.0).finished();
  CHECK(success_probability(uniform_matrix_be(1), e0) == Approx(0.5));
  const VectorXc f0 = (VectorXc(4) << 1.0, 0.0, 0.0, 0.0).finished();
  CHECK(success_probability(uniform_matrix_be(2), f0) == Approx(0.25));
  CHECK(success_probability(identity_be(1), e0) == Approx(1.0));
  CHECK_THROWS_AS(success_probability(identity_be(1), 2.0 * e0), std::invalid_argument);
}

TEST_CASE("continuous laplace pipeline") {
  ContinuousProblem p;
  p.f = [](double t) { return std::exp(-t); };
  p.f_prime = [](double t) { return -std::exp(-t); };
  p.k = 1.0;
  p.a = -1.0;
  p.eps = 1e-2;
  p.exact = [](Complex z) { return 1.0 / (1.0 + z); };
  p.contour.resize(8);
  for (int j = 0; j < 8; ++j) p.contour(j) = 1.0 + j / 7.0;

  SUBCASE("real contour") {
    const LaplaceReport r = prepare_laplace_state(p);
    CHECK(r.n == 3);
    CHECK(r.M == Approx(std::log(50.0) / 2.0));
    CHECK(r.truncation_error >= 0.0);
    CHECK(r.truncation_error <= r.truncation_bound);
    for (double b : r.discretization_bounds) CHECK(r.discretization_error <= b + 1e-15);
    CHECK(r.state_error_exact <= r.combined_budget);
    CHECK(r.success_probability > 0.0);
    CHECK(r.success_probability <= 1.0);
    CHECK_FALSE(r.meets_required_N);
    CHECK(r.prepared_state.norm() == Approx(1.0));
    CHECK(std::isfinite(r.combined_budget));
    CHECK(r.combined_budget < 1.0);
    for (int j = 0; j < 8; ++j) {
      // int_0^M e^{-(1+z)t} dt in closed form.
      const Complex z = p.contour(j);
      const Complex truncated = (1.0 - std::exp(-(1.0 + z) * r.M)) / (1.0 + z);
      const double err = std::abs(r.riemann(j) - truncated);
      CHECK(err <= r.panel_discretization_bounds[j]);
      CHECK(r.panel_discretization_bounds[j] <= r.discretization_bounds[j]);
    }
  }
  SUBCASE("complex contour") {
    for (int j = 0; j < 8; ++j) p.contour(j) += Complex(0.0, 1.0);
    const LaplaceReport r = prepare_laplace_state(p);
    CHECK(r.truncation_error <= r.truncation_bound);
    CHECK(r.state_error_exact <= r.combined_budget);
  }
  SUBCASE("zero input") {
    p.f = [](double) { return 0.0; };
    const LaplaceReport r = prepare_laplace_state(p);
    CHECK(r.empty_input);
    CHECK(r.riemann.norm() == 0.0);
  }
  SUBCASE("contour left of the growth rate") {
    p.contour(0) = -2.0;
    CHECK_THROWS_AS(prepare_laplace_state(p), std::invalid_argument);
  }
}

TEST_CASE("success probability limit") {
  const auto half = [](double) { return 0.5; };
  const auto one = [](double) { return 1.0; };
  CHECK(success_probability_limit(half, half, one) == Approx(1.0).epsilon(1e-12));
  for (int n = 1; n <= 3; ++n) {
    CHECK(success_probability_at(half, half, one, n, 1e-2) == Approx(1.0).epsilon(1e-9));
  }
  const auto lin = [](double s) { return s; };
  const double limit = success_probability_limit(lin, lin, one);
  CHECK(limit > 0.0);
  CHECK(limit < 1.0);
  const double p3 = success_probability_at(lin, lin, one, 3, 1e-3);
  CHECK(std::abs(p3 - limit) < 0.2);
}

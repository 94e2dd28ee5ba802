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

#include "qlt/fourier.hpp"

#include <bit>
#include <limits>
#include <numbers>
#include <numeric>

#include "qlt/subcircuits.hpp"

namespace qlt {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Angle reduced to (-pi, pi].
double wrap(double a) {
  a = std::remainder(a, kTwoPi);
  return a == -std::numbers::pi ? std::numbers::pi : a;
}

int ceil_log2(std::size_t v) {
  int r = 0;
  while ((std::size_t{1} << r) < v) ++r;
  return r;
}

}  // namespace

std::vector<Complex> fourier_coefficients(const std::vector<Complex>& samples,
                                          int M) {
  if (M < 0) throw std::invalid_argument("fourier_coefficients: M must be >= 0");
  const std::size_t S = samples.size();
  if (S == 0 || !std::has_single_bit(S)) {
    throw std::invalid_argument("fourier_coefficients: need 2^m samples");
  }
  if (S < 8 * static_cast<std::size_t>(M)) {
    throw std::invalid_argument(
        "fourier_coefficients: undersampled, need 2^m >= 8M");
  }
  std::vector<Complex> a(2 * M + 1);
  for (int k = -M; k <= M; ++k) {
    Complex acc(0.0);
    for (std::size_t s = 0; s < S; ++s) {
      // k*s reduced mod S keeps the twiddle argument exact.
      const long long ks = (static_cast<long long>(k) * static_cast<long long>(s)) %
                           static_cast<long long>(S);
      acc += samples[s] * std::polar(1.0, -kTwoPi * static_cast<double>(ks) /
                                               static_cast<double>(S));
    }
    a[k + M] = acc / static_cast<double>(S);
  }
  return a;
}

double fourier_truncation_bound(double C, double R, int M) {
  if (M < 2) throw std::invalid_argument("fourier_truncation_bound: M >= 2");
  if (!(C > 0.0)) throw std::invalid_argument("fourier_truncation_bound: C > 0");
  if (!(R > 1.0)) throw std::invalid_argument("fourier_truncation_bound: R > 1");
  const double m = M;
  const double log_v = std::log(2.0 * C) + 0.5 * std::log(kTwoPi * m * m * m) +
                       1.0 / (12.0 * m) -
                       m * std::log(kTwoPi * std::numbers::e * R) -
                       std::log(m - 1.0);
  return std::exp(log_v);
}

int choose_fourier_order(double C, double R, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("choose_fourier_order: eps > 0");
  for (int M = 2; M <= 4096; ++M) {
    if (fourier_truncation_bound(C, R, M) <= eps) return M;
  }
  throw std::domain_error("choose_fourier_order: no M <= 4096 reaches eps");
}

void append_diagonal_phase(Circuit& host, const std::vector<double>& phases,
                           const std::vector<int>& qubits) {
  const std::size_t dim = std::size_t{1} << qubits.size();
  if (phases.size() != dim) {
    throw std::invalid_argument("append_diagonal_phase: need 2^m phases");
  }
  std::vector<double> level = phases;
  std::vector<int> active = qubits;
  while (!active.empty()) {
    const std::size_t half = level.size() / 2;
    std::vector<double> angles(half), mean(half);
    for (std::size_t r = 0; r < half; ++r) {
      angles[r] = level[r + half] - level[r];
      mean[r] = 0.5 * (level[r] + level[r + half]);
    }
    const int top = active.back();
    active.pop_back();
    append_uniformly_controlled(host, GateOp::RZ, angles, active, top);
    level = std::move(mean);
  }
  const double gamma = wrap(level[0]);
  if (gamma != 0.0) {
    const int q = qubits.empty() ? 0 : qubits[0];
    host.add(make_u2(q, std::polar(1.0, gamma) * Eigen::Matrix2cd::Identity()));
  }
}

BlockEncoding fourier_diagonal_be(const DiagonalSpec& spec, int n,
                                  FourierDiagonalInfo* info) {
  if (spec.method != DiagonalMethod::FourierLCU) {
    throw std::invalid_argument("fourier_diagonal_be: spec is not FourierLCU");
  }
  if (!spec.g) throw std::invalid_argument("fourier_diagonal_be: g is missing");
  if (n < 1) throw std::invalid_argument("fourier_diagonal_be: n must be >= 1");
  const int M = spec.M;
  if (M < 0) throw std::invalid_argument("fourier_diagonal_be: M must be >= 0");

  double eps_M = std::numeric_limits<double>::quiet_NaN();
  if (M >= 2 && spec.C > 0.0 && spec.R > 1.0) {
    eps_M = fourier_truncation_bound(spec.C, spec.R, M);
    if (spec.target_eps > 0.0 && eps_M > spec.target_eps) {
      throw std::domain_error("fourier_diagonal_be: truncation bound " +
                              std::to_string(eps_M) + " exceeds target at M=" +
                              std::to_string(M));
    }
  }

  std::size_t S = 64;
  while (S < 32 * static_cast<std::size_t>(std::max(M, 1))) S *= 2;
  std::vector<Complex> samples(S);
  for (std::size_t s = 0; s < S; ++s) {
    samples[s] = spec.g(static_cast<double>(s) / static_cast<double>(S));
  }
  std::vector<Complex> a = fourier_coefficients(samples, M);

  double total = 0.0;
  for (const Complex& c : a) total += std::abs(c);
  if (!(total > 0.0)) throw std::invalid_argument("fourier_diagonal_be: g == 0");
  for (Complex& c : a) {
    if (std::abs(c) < 1e-15 * total) c = 0.0;
  }
  total = 0.0;
  for (const Complex& c : a) total += std::abs(c);

  const std::size_t N = std::size_t{1} << n;
  double series_error = 0.0;
  for (std::size_t j = 0; j < N; ++j) {
    Complex approx(0.0);
    for (int k = -M; k <= M; ++k) {
      const long long kj = (static_cast<long long>(k) * static_cast<long long>(j)) %
                           static_cast<long long>(N);
      approx += a[k + M] * std::polar(1.0, kTwoPi * static_cast<double>(kj) /
                                               static_cast<double>(N));
    }
    const double x = static_cast<double>(j) / static_cast<double>(N);
    series_error = std::max(series_error, std::abs(spec.g(x) - approx));
  }

  const std::size_t terms = 2 * static_cast<std::size_t>(M) + 1;
  const int b = ceil_log2(terms);
  RegisterLayout layout;
  layout.add("system", n);
  const int sel0 = layout.add("fourier_selector", b);
  Circuit c(layout);
  std::vector<int> selector(b);
  std::iota(selector.begin(), selector.end(), sel0);

  std::vector<double> mu(std::size_t{1} << b, 0.0);
  std::vector<double> phases(std::size_t{1} << b, 0.0);
  for (std::size_t m = 0; m < terms; ++m) {
    mu[m] = std::sqrt(std::abs(a[m]) / total);
    if (a[m] != 0.0) phases[m] = std::arg(a[m]);
  }
  double norm2 = 0.0;
  for (double v : mu) norm2 += v * v;
  for (double& v : mu) v /= std::sqrt(norm2);

  const Circuit prep = prepare_state(mu);
  c.append(prep, selector);
  append_diagonal_phase(c, phases, selector);
  for (int i = 0; i < b; ++i) {
    for (int l = 0; l < n; ++l) {
      if (i + l >= n) continue;  // a full turn
      Gate g = make_gate(GateOp::Phase, l,
                         wrap(kTwoPi * static_cast<double>(std::size_t{1} << (i + l)) /
                              static_cast<double>(N)));
      g.controls = {selector[i]};
      c.add(std::move(g));
    }
  }
  c.append(prep.inverse(), selector);
  for (int l = 0; l < n; ++l) {
    const double angle =
        wrap(-kTwoPi * static_cast<double>(M) *
             static_cast<double>(std::size_t{1} << l) / static_cast<double>(N));
    if (angle != 0.0) c.phase(l, angle);
  }

  if (info) {
    info->coefficients = a;
    info->truncation_bound = eps_M;
    info->series_error = series_error;
    info->selector_qubits = b;
  }

  BlockEncoding be;
  be.circuit = std::move(c);
  be.n = n;
  be.a = b;
  be.alpha = total;
  be.eps = series_error + 1e-12;
  be.oracle_calls = 0;
  return be;
}

BlockEncoding diagonal_be(const DiagonalSpec& spec, int n) {
  if (spec.method == DiagonalMethod::FourierLCU) {
    return fourier_diagonal_be(spec, n);
  }
  if (spec.eigenvalues.size() != (Eigen::Index{1} << n)) {
    throw std::invalid_argument("diagonal_be: eigenvalue count is not 2^n");
  }
  return diagonal_be_exact(spec.eigenvalues);
}

}  // namespace qlt

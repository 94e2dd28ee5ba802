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

#include "qlt/numerics.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <string>

namespace qlt {

namespace {

constexpr int kLogDomainThreshold = 120;

// c * e^{a p} * (p / d)^{K+1} / (K+1)!
double scaled_tail(double c, double a, double d, double product, int K) {
  if (!std::isfinite(product) || product < 0.0) {
    throw std::invalid_argument("tail bound: product must be finite and >= 0");
  }
  if (K < 0) throw std::invalid_argument("tail bound: K must be >= 0");
  if (product == 0.0) return 0.0;
  const int m = K + 1;
  if (m <= kLogDomainThreshold) {
    double v = c * std::exp(a * product);
    const double ratio = product / d;
    for (int i = 1; i <= m; ++i) v *= ratio / i;
    if (std::isfinite(v)) return v;
  }
  const double log_v = std::log(c) + a * product +
                       m * std::log(product / d) - log_factorial(m);
  if (log_v > std::log(std::numeric_limits<double>::max())) {
    return std::numeric_limits<double>::infinity();
  }
  return std::exp(log_v);
}

void require_side_condition(double product, int K, const char* who) {
  if (K + 1 < product) {
    throw std::domain_error(std::string(who) +
                            ": requires K+1 >= x_max*y_max");
  }
}

}  // namespace

std::string_view to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::Taylor:
      return "taylor";
    case SeriesKind::Chebyshev:
      return "chebyshev";
    case SeriesKind::DoubleChebyshev:
      return "double_chebyshev";
  }
  return "unknown";
}

SeriesKind series_kind_from_string(std::string_view name) {
  if (name == "taylor") return SeriesKind::Taylor;
  if (name == "chebyshev") return SeriesKind::Chebyshev;
  if (name == "double_chebyshev") return SeriesKind::DoubleChebyshev;
  throw std::invalid_argument("unknown series kind '" + std::string(name) +
                              "'");
}

double log_factorial(int k) {
  if (k < 0) throw std::invalid_argument("log_factorial: negative argument");
  if (k <= 20) {
    double v = 0.0;
    for (int i = 2; i <= k; ++i) v += std::log(static_cast<double>(i));
    return v;
  }
  return std::lgamma(static_cast<double>(k) + 1.0);
}

double taylor_tail_bound(double product, int K) {
  return scaled_tail(1.0, 1.0, 1.0, product, K);
}

double chebyshev_tail_bound(double product, int K) {
  require_side_condition(product, K, "chebyshev_tail_bound");
  return scaled_tail(4.0, 1.0, 2.0, product, K);
}

double complex_double_tail_bound(double product, int K) {
  require_side_condition(product, K, "complex_double_tail_bound");
  return scaled_tail(8.0, 2.5, 2.0, product, K);
}

double tail_bound(SeriesKind kind, double product, int K) {
  switch (kind) {
    case SeriesKind::Taylor:
      return taylor_tail_bound(product, K);
    case SeriesKind::Chebyshev:
      return chebyshev_tail_bound(product, K);
    case SeriesKind::DoubleChebyshev:
      return complex_double_tail_bound(product, K);
  }
  throw std::invalid_argument("tail_bound: unknown kind");
}

TruncationBound truncation_order(SeriesKind kind, double product, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("truncation_order: eps must lie in (0,1)");
  }
  if (!std::isfinite(product) || product < 0.0) {
    throw std::invalid_argument("truncation_order: product must be >= 0");
  }
  int K = 0;
  if (kind != SeriesKind::Taylor) {
    K = std::max(0, static_cast<int>(std::ceil(product)) - 1);
  }
  for (;; ++K) {
    const double b = tail_bound(kind, product, K);
    if (b <= eps) return {K, b, product};
  }
}

Complex bessel_I(int k, Complex z) {
  if (k < 0) throw std::invalid_argument("bessel_I: order must be >= 0");
  const double r = std::abs(z);
  if (!(r <= kBesselDomain)) {
    throw std::domain_error("bessel_I: |z| exceeds 50");
  }
  if (r == 0.0) return k == 0 ? Complex(1.0) : Complex(0.0);

  using LD = long double;
  using CLD = std::complex<LD>;
  const CLD half(static_cast<LD>(z.real()) / 2, static_cast<LD>(z.imag()) / 2);
  const CLD quarter_sq = half * half;

  // (z/2)^k / k!
  CLD term(1.0L);
  for (int i = 1; i <= k; ++i) term *= half / static_cast<LD>(i);
  CLD sum = term;
  LD abs_sum = std::abs(term);
  const LD peak = static_cast<LD>(r) / 2;
  for (int m = 1; m < 100000; ++m) {
    term *= quarter_sq / (static_cast<LD>(m) * static_cast<LD>(m + k));
    sum += term;
    const LD t = std::abs(term);
    abs_sum += t;
    if (m > peak && t <= 1e-18L * std::abs(sum)) break;
    if (t == 0.0L) break;
  }

  // Rounding error of the series is ~ eps_ld * sum|terms|.
  const LD rounding = std::numeric_limits<LD>::epsilon() * abs_sum * 4;
  if (rounding <= 1e-14L * std::abs(sum)) {
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
  }

  // Cancellation: fall back to the trapezoid rule on the periodic integral.
  const int points = 64 + 4 * static_cast<int>(r) + 2 * k;
  Complex acc(0.0);
  for (int j = 0; j < points; ++j) {
    const double t = std::numbers::pi * (j + 0.5) / points;
    acc += std::exp(z * std::cos(t)) * std::cos(k * t);
  }
  return acc / static_cast<double>(points);
}

double chebyshev_T(int k, double t) {
  if (k < 0) throw std::invalid_argument("chebyshev_T: order must be >= 0");
  if (!(std::abs(t) <= 1.0 + 1e-12)) {
    throw std::domain_error("chebyshev_T: argument outside [-1, 1]");
  }
  t = std::clamp(t, -1.0, 1.0);
  if (k == 0) return 1.0;
  if (k == 1) return t;
  return std::cos(k * std::acos(t));
}

double i_k_max(int k, double product) {
  if (k < 0) throw std::invalid_argument("i_k_max: order must be >= 0");
  if (!(product >= 0.0) || !std::isfinite(product)) {
    throw std::invalid_argument("i_k_max: product must be >= 0");
  }
  if (k == 0) return std::exp(product);
  if (product == 0.0) return 0.0;
  if (k <= kLogDomainThreshold) {
    double v = std::exp(product);
    for (int i = 1; i <= k; ++i) v *= (product / 2.0) / i;
    if (std::isfinite(v) && v > 0.0) return v;
  }
  return std::exp(product + k * std::log(product / 2.0) - log_factorial(k));
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("gauss_legendre: order >= 1");
  std::vector<double> nodes(order), weights(order);
  for (int i = 0; i < (order + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= order; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      if (order == 1) p0 = 1.0;
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    nodes[i] = -x;
    nodes[order - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[i] = w;
    weights[order - 1 - i] = w;
  }
  return {nodes, weights};
}

namespace detail {

double power_iteration_norm(const MatrixXc& m) {
  const Eigen::Index cols = m.cols();
  VectorXc v(cols);
  for (Eigen::Index i = 0; i < cols; ++i) {
    v(i) = Complex(1.0 + 1e-3 * static_cast<double>(i % 17),
                   1e-3 * static_cast<double>(i % 5));
  }
  v.normalize();
  double estimate = 0.0;
  for (int iter = 0; iter < 20000; ++iter) {
    VectorXc w = m.adjoint() * (m * v);
    const double next = w.norm();
    if (next == 0.0) return 0.0;
    v = w / next;
    if (iter > 0 && std::abs(next - estimate) <= 1e-12 * next) {
      estimate = next;
      break;
    }
    estimate = next;
  }
  return std::sqrt(estimate);
}

}  // namespace detail

}  // namespace qlt

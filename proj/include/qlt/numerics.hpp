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

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qlt {

using Complex = std::complex<double>;
using VectorXc = Eigen::VectorXcd;
using MatrixXc = Eigen::MatrixXcd;

/** Series used to expand e^{xy}. DoubleChebyshev is the complex-coefficient
 * variant that expands the real and imaginary parts of y separately. */
enum class SeriesKind { Taylor, Chebyshev, DoubleChebyshev };

std::string_view to_string(SeriesKind kind);
SeriesKind series_kind_from_string(std::string_view name);

struct TruncationBound {
  int K = 0;
  double bound = 0.0;
  double product = 0.0;  // x_max * y_max
};

/// e^{p} p^{K+1} / (K+1)!
double taylor_tail_bound(double product, int K);

/// 4 e^{p} (p/2)^{K+1} / (K+1)!; requires K+1 >= p.
double chebyshev_tail_bound(double product, int K);

/// 8 e^{5p/2} (p/2)^{K+1} / (K+1)!; requires K+1 >= p.
double complex_double_tail_bound(double product, int K);

/// Tail bound of the given series kind at order K.
double tail_bound(SeriesKind kind, double product, int K);

/**
 * Smallest truncation order whose tail bound does not exceed eps. For the
 * Chebyshev kinds the scan starts at the first K with K+1 >= product.
 */
TruncationBound truncation_order(SeriesKind kind, double product, double eps);

/// Largest |z| accepted by bessel_I.
inline constexpr double kBesselDomain = 50.0;

/**
 * Modified Bessel function of the first kind I_k(z) for complex z, |z| <= 50.
 *
 * Evaluated by the ascending series sum_m (z/2)^{k+2m} / (m! (m+k)!) in
 * extended precision. When the series loses too many digits to cancellation
 * (large imaginary part) the periodic integral
 * (1/pi) int_0^pi e^{z cos t} cos(k t) dt is used instead; the trapezoid
 * rule converges geometrically on it.
 */
Complex bessel_I(int k, Complex z);

/// cos(k arccos t) for |t| <= 1 (inputs within 1e-12 of the interval are clamped).
double chebyshev_T(int k, double t);

/// e^{p} (p/2)^k / k!, an upper bound of |I_k(z)| for |z| <= p.
double i_k_max(int k, double product);

/// log(k!) exactly for small k, lgamma beyond.
double log_factorial(int k);

/**
 * Largest singular value. Dense SVD up to 64 rows/cols, power iteration on
 * M^H M above (dimension capped at 4096).
 */
template <typename Derived>
double spectral_norm(const Eigen::MatrixBase<Derived>& m);

/// Gauss-Legendre nodes and weights on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int order);

/// Integral of f over [a, b] with a composite Gauss-Legendre rule.
template <typename F>
double integrate(F&& f, double a, double b, int panels = 16, int order = 20) {
  const auto [nodes, weights] = gauss_legendre(order);
  const double h = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      total += weights[i] * f(mid + 0.5 * h * nodes[i]);
    }
  }
  return 0.5 * h * total;
}

namespace detail {
double power_iteration_norm(const MatrixXc& m);
}  // namespace detail

template <typename Derived>
double spectral_norm(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  if (m.rows() > 4096 || m.cols() > 4096) {
    throw std::invalid_argument("spectral_norm: dimension above 4096");
  }
  if (!m.allFinite()) {
    throw std::invalid_argument("spectral_norm: non-finite entry");
  }
  MatrixXc dense = m.template cast<Complex>();
  if (dense.rows() <= 64 && dense.cols() <= 64) {
    Eigen::JacobiSVD<MatrixXc> svd(dense);
    return svd.singularValues()(0);
  }
  return detail::power_iteration_norm(dense);
}

}  // namespace qlt

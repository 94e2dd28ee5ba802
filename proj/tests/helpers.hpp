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

#include <random>

#include "qlt/numerics.hpp"

namespace qlt::testing {

inline VectorXc random_real(std::mt19937_64& rng, Eigen::Index n, double r = 1.0) {
  std::uniform_real_distribution<double> u(-r, r);
  VectorXc v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = u(rng);
  return v;
}

// Entries uniform in the disc of radius r.
inline VectorXc random_complex(std::mt19937_64& rng, Eigen::Index n, double r = 1.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  VectorXc v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    v(i) = std::polar(r * std::sqrt(u(rng)), 2.0 * M_PI * u(rng));
  }
  return v;
}

inline MatrixXc random_unitary(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> g;
  MatrixXc m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<MatrixXc> qr(m);
  return qr.householderQ();
}

}  // namespace qlt::testing

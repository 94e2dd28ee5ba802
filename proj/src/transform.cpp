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

#include "qlt/transform.hpp"

#include <algorithm>
#include <limits>
#include <bit>

namespace qlt {

namespace {

int ceil_log2(std::size_t v) {
  int r = 0;
  while ((std::size_t{1} << r) < v) ++r;
  return r;
}

bool is_real(const VectorXc& v) {
  return (v.imag().array() == 0.0).all();
}

// Scales entries with modulus above one back onto the unit circle.
double clamp_unit(VectorXc& v) {
  double excess = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double m = std::abs(v(i));
    if (m > 1.0) {
      excess = std::max(excess, m - 1.0);
      v(i) /= m;
    }
  }
  return excess;
}

// Sum of the Chebyshev weights (2 - delta_k) I_{k,max} up to K.
double chebyshev_lambda(double product, int K) {
  double s = 0.0;
  for (int k = 0; k <= K; ++k) s += (k == 0 ? 1.0 : 2.0) * i_k_max(k, product);
  return s;
}

double chebyshev_alpha(double product) {
  return std::exp(product) * (2.0 * std::exp(product / 2.0) - 1.0);
}

}  // namespace

MatrixXc dlt_matrix(const VectorXc& x, const VectorXc& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("dlt_matrix: x and y lengths differ");
  }
  const Eigen::Index N = x.size();
  if (N == 0 || (N & (N - 1)) != 0) {
    throw std::invalid_argument("dlt_matrix: length must be a power of two");
  }
  MatrixXc m(N, N);
  for (Eigen::Index i = 0; i < N; ++i) {
    for (Eigen::Index j = 0; j < N; ++j) {
      m(i, j) = std::exp(x(i) * y(j)) / static_cast<double>(N);
    }
  }
  return m;
}

int QltProblem::n() const {
  return std::countr_zero(static_cast<std::uint64_t>(x.size()));
}

double QltProblem::x_max() const { return x.size() ? x.cwiseAbs().maxCoeff() : 0.0; }

double QltProblem::y_max() const { return y.size() ? y.cwiseAbs().maxCoeff() : 0.0; }

void QltProblem::validate() const {
  if (x.size() != y.size()) {
    throw std::invalid_argument("x and y must have the same length");
  }
  const Eigen::Index N = x.size();
  if (N < 2 || (N & (N - 1)) != 0) {
    throw std::invalid_argument("x: length must be a power of two >= 2");
  }
  if (!x.allFinite()) throw std::invalid_argument("x: non-finite entry");
  if (!y.allFinite()) throw std::invalid_argument("y: non-finite entry");
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("eps: must lie in (0, 1)");
  }
  if (kind == SeriesKind::Chebyshev && !is_real(y)) {
    throw std::invalid_argument(
        "y: chebyshev needs real y, use double_chebyshev for complex y");
  }
  if (kind != SeriesKind::Taylor && x_max() * y_max() > kBesselDomain) {
    throw std::invalid_argument("x, y: x_max*y_max exceeds 50");
  }
}

SeriesPlan plan_series(const QltProblem& p, std::optional<int> K_override) {
  p.validate();
  SeriesPlan plan;
  plan.kind = p.kind;
  const Eigen::Index N = p.x.size();
  const double xm = p.x_max(), ym = p.y_max();
  plan.product = xm * ym;

  if (xm == 0.0 || ym == 0.0) {
    plan.degenerate = true;
    plan.K = 0;
    plan.alpha = 1.0;
    plan.lambda_sum = 1.0;
    plan.per_factor_eps = p.eps / 6.0;
    plan.terms.push_back({0, 0, 1.0, VectorXc::Ones(N), VectorXc::Ones(N)});
    return plan;
  }

  const double P = plan.product;
  const double third = p.eps / 3.0;
  switch (p.kind) {
    case SeriesKind::Taylor:
      plan.alpha = std::exp(P);
      break;
    case SeriesKind::Chebyshev:
      plan.alpha = chebyshev_alpha(P);
      break;
    case SeriesKind::DoubleChebyshev:
      plan.alpha = chebyshev_alpha(P) * chebyshev_alpha(P);
      break;
  }

  auto lambda_sum = [&](int K) {
    switch (p.kind) {
      case SeriesKind::Taylor: {
        double s = 0.0, t = 1.0;
        for (int k = 0; k <= K; ++k) {
          s += t;
          t *= P / (k + 1);
        }
        return s;
      }
      case SeriesKind::Chebyshev:
        return chebyshev_lambda(P, K);
      case SeriesKind::DoubleChebyshev: {
        const double c = chebyshev_lambda(P, K);
        return c * c;
      }
    }
    return 0.0;
  };

  if (K_override) {
    if (*K_override < 0) throw std::invalid_argument("K: must be >= 0");
    plan.K = *K_override;
  } else {
    plan.K = truncation_order(p.kind, P, third).K;
    while (plan.alpha - lambda_sum(plan.K) > third) ++plan.K;
  }
  if (p.kind == SeriesKind::Taylor || plan.K + 1 >= P) {
    plan.tail_bound = tail_bound(p.kind, P, plan.K);
  } else {
    plan.tail_bound = std::numeric_limits<double>::infinity();
  }
  plan.lambda_sum = lambda_sum(plan.K);
  plan.per_factor_eps = p.eps / (6.0 * plan.alpha);

  const int K = plan.K;
  switch (p.kind) {
    case SeriesKind::Taylor: {
      const VectorXc xs = p.x / xm, ys = p.y / ym;
      VectorXc left = VectorXc::Ones(N), right = VectorXc::Ones(N);
      double w = 1.0;
      for (int k = 0; k <= K; ++k) {
        SeriesTerm t{k, 0, w, left, right};
        plan.clamp_excess = std::max(plan.clamp_excess, clamp_unit(t.left));
        plan.clamp_excess = std::max(plan.clamp_excess, clamp_unit(t.right));
        plan.terms.push_back(std::move(t));
        left = left.cwiseProduct(xs);
        right = right.cwiseProduct(ys);
        w *= P / (k + 1);
      }
      break;
    }
    case SeriesKind::Chebyshev: {
      for (int k = 0; k <= K; ++k) {
        const double ikm = i_k_max(k, P);
        SeriesTerm t{k, 0, (k == 0 ? 1.0 : 2.0) * ikm, VectorXc(N), VectorXc(N)};
        for (Eigen::Index i = 0; i < N; ++i) {
          t.left(i) = bessel_I(k, ym * p.x(i)) / ikm;
          t.right(i) = chebyshev_T(k, p.y(i).real() / ym);
        }
        plan.clamp_excess = std::max(plan.clamp_excess, clamp_unit(t.left));
        plan.terms.push_back(std::move(t));
      }
      break;
    }
    case SeriesKind::DoubleChebyshev: {
      // e^{xy} = e^{x Re y} e^{(i x) Im y}, each factor expanded separately.
      const Complex I(0.0, 1.0);
      for (int k = 0; k <= K; ++k) {
        for (int k2 = 0; k2 <= K; ++k2) {
          const double m1 = i_k_max(k, P), m2 = i_k_max(k2, P);
          const double w = (k == 0 ? 1.0 : 2.0) * (k2 == 0 ? 1.0 : 2.0) * m1 * m2;
          SeriesTerm t{k, k2, w, VectorXc(N), VectorXc(N)};
          for (Eigen::Index i = 0; i < N; ++i) {
            t.left(i) = bessel_I(k, ym * p.x(i)) * bessel_I(k2, I * ym * p.x(i)) /
                        (m1 * m2);
            t.right(i) = chebyshev_T(k, p.y(i).real() / ym) *
                         chebyshev_T(k2, p.y(i).imag() / ym);
          }
          plan.clamp_excess = std::max(plan.clamp_excess, clamp_unit(t.left));
          plan.terms.push_back(std::move(t));
        }
      }
      break;
    }
  }
  return plan;
}

BlockEncoding build_qlt(const QltProblem& p, const SeriesPlan& plan,
                        int copies) {
  p.validate();
  const int n = p.n();
  const BlockEncoding uniform = uniform_matrix_be(n);
  std::vector<BlockEncoding> terms;
  std::vector<double> lambdas;
  terms.reserve(plan.terms.size());
  for (const auto& t : plan.terms) {
    const BlockEncoding right = diagonal_be_exact(t.right, "diag_y");
    const BlockEncoding left = diagonal_be_exact(t.left, "diag_x");
    terms.push_back(product_be(left, product_be(uniform, right)));
    lambdas.push_back(t.lambda);
  }
  BlockEncoding be = lcu_be(terms, lambdas, copies);
  be.alpha = plan.alpha;
  be.eps = p.eps;
  return be;
}

BlockEncoding build_qlt(const QltProblem& p) {
  return build_qlt(p, plan_series(p));
}

ResourceReport resource_report(const BlockEncoding& be, const SeriesPlan& plan) {
  ResourceReport r;
  const Metrics full = metrics(be.circuit, CostModel::Gates);
  const Metrics oracle = metrics(be.circuit, CostModel::Oracle);
  const Metrics extra = metrics(be.circuit, CostModel::Additional);
  r.size = full.size;
  r.depth = full.depth;
  r.oracle_size = oracle.size;
  r.oracle_depth = oracle.depth;
  r.additional_size = extra.size;
  r.additional_depth = extra.depth;
  r.total_qubits = be.circuit.num_qubits();
  r.system_qubits = be.n;
  r.ancillas = be.a;
  r.nominal_ancillas = 2 * be.n + 2 + ceil_log2(plan.terms.size());
  r.registers = be.circuit.layout().registers();
  r.alpha = be.alpha;
  r.eps = be.eps;
  r.K = plan.K;
  r.terms = static_cast<int>(plan.terms.size());
  r.controlled_diagonal_calls = be.oracle_calls;
  return r;
}

Verification verify_qlt(const QltProblem& p, const BlockEncoding& be) {
  if (p.n() > kMaxVerifyQubits) {
    throw std::length_error("verify_qlt: n = " + std::to_string(p.n()) +
                            " exceeds the dense limit of 4 system qubits");
  }
  if (be.circuit.num_qubits() > kMaxSimulationQubits) {
    throw std::length_error("verify_qlt: circuit has " +
                            std::to_string(be.circuit.num_qubits()) +
                            " qubits, above the simulation limit");
  }
  const MatrixXc diff = dlt_matrix(p.x, p.y) - be.alpha * be.block();
  Verification v;
  v.measured_error = spectral_norm(diff);
  v.pass = v.measured_error <= p.eps;
  return v;
}

}  // namespace qlt

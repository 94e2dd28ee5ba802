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

#include "qlt/laplace.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace qlt {

namespace {

constexpr int kSupGrid = 1 << 14;

bool power_of_two(Eigen::Index v) { return v > 0 && (v & (v - 1)) == 0; }

double sup_on_grid(const std::function<double(double)>& g, double lo, double hi) {
  double s = 0.0;
  for (int i = 0; i <= kSupGrid; ++i) {
    const double t = lo + (hi - lo) * i / kSupGrid;
    s = std::max(s, std::abs(g(t)));
  }
  return s;
}

// sum over panels of (dt^2 / 2) sup_panel |g'|.
double panel_bound(const std::function<double(double)>& abs_gprime, double M, long N) {
  const double dt = M / static_cast<double>(N);
  const int per_panel = std::max(64, kSupGrid / static_cast<int>(N));
  double total = 0.0;
  for (long i = 0; i < N; ++i) {
    double s = 0.0;
    for (int k = 0; k <= per_panel; ++k) {
      s = std::max(s, abs_gprime(dt * (static_cast<double>(i) + static_cast<double>(k) / per_panel)));
    }
    total += 0.5 * dt * dt * s;
  }
  return total;
}

Complex integrate_complex(const std::function<Complex(double)>& g, double lo,
                          double hi) {
  const double re = integrate([&](double t) { return g(t).real(); }, lo, hi, 64);
  const double im = integrate([&](double t) { return g(t).imag(); }, lo, hi, 64);
  return {re, im};
}

// Ancilla-zero part of U (|0>^a |psi>).
VectorXc projected_output(const BlockEncoding& be, const VectorXc& psi) {
  const Eigen::Index dim = Eigen::Index{1} << be.n;
  if (psi.size() != dim) {
    throw std::invalid_argument("state dimension does not match 2^n");
  }
  VectorXc full = VectorXc::Zero(Eigen::Index{1} << be.circuit.num_qubits());
  full.head(dim) = psi;
  return simulate(be.circuit, full).head(dim);
}

}  // namespace

QltProblem ztransform_problem(const VectorXc& z, double eps, SeriesKind kind) {
  if (!power_of_two(z.size()) || z.size() < 2) {
    throw std::invalid_argument("z: length must be a power of two >= 2");
  }
  QltProblem p;
  p.x.resize(z.size());
  p.y.resize(z.size());
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    if (z(j) == 0.0) {
      throw std::invalid_argument("z: entry " + std::to_string(j) + " is zero");
    }
    p.x(j) = -std::log(z(j));
    p.y(j) = static_cast<double>(j);
  }
  p.eps = eps;
  p.kind = kind;
  return p;
}

VectorXc ztransform_direct(const VectorXc& s, const VectorXc& z) {
  VectorXc out(z.size());
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    if (z(j) == 0.0) throw std::invalid_argument("z: zero entry");
    Complex acc(0.0), power(1.0);
    const Complex inv = 1.0 / z(j);
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      acc += s(i) * power;
      power *= inv;
    }
    out(j) = acc;
  }
  return out;
}

double truncation_M(double k, double a, double t0, double sigma_min,
                    double eps) {
  if (!(sigma_min > a)) {
    throw std::invalid_argument("truncation_M: sigma_min must exceed a");
  }
  if (!(eps > 0.0) || !(k > 0.0)) {
    throw std::invalid_argument("truncation_M: k and eps must be positive");
  }
  const double gap = sigma_min - a;
  const double m = std::log(k / (eps * gap)) / gap;
  return std::max({t0, m, 0.0});
}

double discretization_bound(double M, long N, double sigma, double omega,
                            double sup_ef, double sup_efprime) {
  if (N < 1) throw std::invalid_argument("discretization_bound: N >= 1");
  return M * M / (2.0 * static_cast<double>(N)) *
         (std::hypot(sigma, omega) * sup_ef + sup_efprime);
}

VectorXc continuous_laplace_quadrature(const std::vector<double>& f_samples,
                                       double M, const VectorXc& z) {
  const std::size_t N = f_samples.size();
  if (N == 0) throw std::invalid_argument("quadrature: no samples");
  const double dt = M / static_cast<double>(N);
  VectorXc out = VectorXc::Zero(z.size());
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    Complex acc(0.0);
    for (std::size_t i = 0; i < N; ++i) {
      acc += std::exp(-z(j) * (static_cast<double>(i) * dt)) * f_samples[i];
    }
    out(j) = acc * dt;
  }
  return out;
}

double success_probability(const BlockEncoding& be, const VectorXc& psi) {
  if (std::abs(psi.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("success_probability: psi is not normalized");
  }
  return projected_output(be, psi).squaredNorm();
}

LaplaceReport prepare_laplace_state(const ContinuousProblem& p) {
  const Eigen::Index N = p.contour.size();
  if (!power_of_two(N) || N < 2) {
    throw std::invalid_argument("contour: need 2^n >= 2 points");
  }
  if (!p.f) throw std::invalid_argument("f: missing");
  const int n = std::countr_zero(static_cast<std::uint64_t>(N));
  if (n > kMaxVerifyQubits) {
    throw std::length_error("contour: n = " + std::to_string(n) +
                            " exceeds the dense limit of 4 system qubits");
  }
  const double sigma_min = p.contour.real().minCoeff();
  if (!(sigma_min > p.a)) {
    throw std::invalid_argument("contour: min Re z must exceed a");
  }

  LaplaceReport r;
  r.n = n;
  r.M = p.M > 0.0 ? p.M : truncation_M(p.k, p.a, p.t0, sigma_min, p.eps);
  r.dt = r.M / static_cast<double>(N);
  r.required_N = r.M * r.M / p.eps;
  r.meets_required_N = static_cast<double>(N) >= r.required_N;
  r.L_exponent = (p.a + 2.0 * p.contour.cwiseAbs().maxCoeff()) / (sigma_min - p.a);

  std::vector<double> samples(N);
  VectorXc fv(N);
  for (Eigen::Index i = 0; i < N; ++i) {
    samples[i] = p.f(static_cast<double>(i) * r.dt);
    fv(i) = samples[i];
  }
  r.riemann = continuous_laplace_quadrature(samples, r.M, p.contour);
  if (fv.norm() == 0.0) {
    r.empty_input = true;
    return r;
  }

  // Truncation and discretization bounds per contour point.
  auto fprime = p.f_prime ? p.f_prime : [&](double t) {
    const double h = 1e-6 * std::max(1.0, r.M);
    return (p.f(t + h) - p.f(std::max(0.0, t - h))) / (t + h - std::max(0.0, t - h));
  };
  const double gap = sigma_min - p.a;
  r.truncation_bound = p.k * std::exp(-gap * r.M) / gap;
  r.discretization_bounds.resize(N);
  r.panel_discretization_bounds.resize(N);
  double trunc_max = -1.0;
  for (Eigen::Index j = 0; j < N; ++j) {
    const Complex z = p.contour(j);
    const double s = z.real();
    const double sup_ef =
        sup_on_grid([&](double t) { return std::exp(-s * t) * p.f(t); }, 0.0, r.M);
    const double sup_efp =
        sup_on_grid([&](double t) { return std::exp(-s * t) * fprime(t); }, 0.0, r.M);
    r.discretization_bounds[j] =
        discretization_bound(r.M, N, z.real(), z.imag(), sup_ef, sup_efp);
    r.panel_discretization_bounds[j] = panel_bound(
        [&](double t) {
          const double e = std::exp(-s * t);
          return std::abs(z) * e * std::abs(p.f(t)) + e * std::abs(fprime(t));
        },
        r.M, N);
    const Complex truncated = integrate_complex(
        [&](double t) { return std::exp(-z * t) * p.f(t); }, 0.0, r.M);
    r.discretization_error =
        std::max(r.discretization_error, std::abs(r.riemann(j) - truncated));
    if (p.exact) {
      trunc_max = std::max(trunc_max, std::abs(p.exact(z) - truncated));
    }
  }
  if (p.exact) r.truncation_error = trunc_max;

  QltProblem q;
  q.x = -p.contour;
  q.y.resize(N);
  for (Eigen::Index i = 0; i < N; ++i) q.y(i) = static_cast<double>(i) * r.dt;
  q.eps = p.eps;
  q.kind = p.kind;
  r.plan = plan_series(q, p.K_override);
  const BlockEncoding be = build_qlt(q, r.plan);
  r.resources = resource_report(be, r.plan);

  const VectorXc fhat = fv / fv.norm();
  const VectorXc out = projected_output(be, fhat);
  r.success_probability = out.squaredNorm();
  r.prepared_state = out / out.norm();

  const double riemann_norm = r.riemann.norm();
  const VectorXc rhat = r.riemann / riemann_norm;
  r.state_error_riemann = (r.prepared_state - rhat).norm();
  const double qlt_f_norm = riemann_norm / (r.M * fv.norm());
  r.qlt_state_budget = 2.0 * p.eps / qlt_f_norm;

  // ||R - L|| <= D + T, and for unit-normalizing, ||u^ - v^|| <= 2 ||u - v||
  // / (||u|| + ||v||) with ||L|| >= ||R|| - D - T.
  double D = 0.0;
  for (double d : r.panel_discretization_bounds) D += d * d;
  D = std::sqrt(D);
  const double T = std::sqrt(static_cast<double>(N)) * r.truncation_bound;
  const double denom = 2.0 * riemann_norm - D - T;
  r.combined_budget = r.qlt_state_budget +
                      (denom > 0.0 ? 2.0 * (D + T) / denom
                                   : std::numeric_limits<double>::infinity());

  if (p.exact) {
    VectorXc L(N);
    for (Eigen::Index j = 0; j < N; ++j) L(j) = p.exact(p.contour(j));
    r.state_error_exact = (r.prepared_state - L / L.norm()).norm();
  }
  return r;
}

double success_probability_limit(const std::function<double(double)>& f,
                                 const std::function<double(double)>& g,
                                 const std::function<double(double)>& h) {
  const double fs = sup_on_grid(f, 0.0, 1.0);
  const double gs = sup_on_grid(g, 0.0, 1.0);
  const double num = integrate(
      [&](double x) {
        const double inner =
            integrate([&](double y) { return std::exp(f(x) * g(y)) * h(y); },
                      0.0, 1.0, 8);
        return inner * inner;
      },
      0.0, 1.0, 8);
  const double den = integrate([&](double y) { return h(y) * h(y); }, 0.0, 1.0, 8);
  if (!(den > 0.0)) throw std::invalid_argument("h must not vanish");
  return std::exp(-2.0 * fs * gs) * num / den;
}

double success_probability_at(const std::function<double(double)>& f,
                              const std::function<double(double)>& g,
                              const std::function<double(double)>& h, int n,
                              double eps) {
  const Eigen::Index N = Eigen::Index{1} << n;
  QltProblem q;
  q.x.resize(N);
  q.y.resize(N);
  VectorXc psi(N);
  for (Eigen::Index i = 0; i < N; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(N);
    q.x(i) = f(s);
    q.y(i) = g(s);
    psi(i) = h(s);
  }
  q.eps = eps;
  q.kind = SeriesKind::Taylor;
  psi /= psi.norm();
  return success_probability(build_qlt(q), psi);
}

}  // namespace qlt

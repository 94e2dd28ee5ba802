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

#include <cstdio>
#include <numbers>

#include "cli.hpp"

namespace qlt::cli {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

using Table = std::vector<std::vector<std::string>>;

struct Demo {
  Json report;
  Table table;
  bool pass = true;

  void check(const std::string& name, double value, double bound) {
    const bool ok = value <= bound;
    pass = pass && ok;
    report["checks"].push_back({{"name", name}, {"value", value}, {"bound", bound}, {"pass", ok}});
  }
};

// Dense verification of a Z-transform job on the given points and signal.
Json ztransform_case(const VectorXc& z, const VectorXc& s, double eps, Demo& demo,
                     const std::string& label) {
  const QltProblem p = ztransform_problem(z, eps);
  const SeriesPlan plan = plan_series(p);
  const BlockEncoding be = build_qlt(p, plan);
  const Verification v = verify_qlt(p, be);
  const double N = static_cast<double>(z.size());
  const VectorXc direct = ztransform_direct(s, z);
  const VectorXc encoded = N * be.alpha * (be.block() * s);
  demo.check(label + ": block error", v.measured_error, eps);
  demo.check(label + ": transform error", (encoded - direct).cwiseAbs().maxCoeff(),
             N * eps * s.norm());
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    demo.table.push_back({label, std::to_string(j), num(z(j).real()), num(z(j).imag()),
                          num(direct(j).real()), num(direct(j).imag()),
                          num(encoded(j).real()), num(encoded(j).imag())});
  }
  return {{"z", vector_json(z)},
          {"signal", vector_json(s)},
          {"eps", eps},
          {"K", plan.K},
          {"alpha", be.alpha},
          {"measured_error", v.measured_error},
          {"direct", vector_json(direct)},
          {"encoded", vector_json(encoded)},
          {"resources", resources_json(resource_report(be, plan))}};
}

Demo ztransform_demo() {
  Demo d;
  d.report["demo"] = "ztransform";
  d.table.push_back({"case", "j", "z_re", "z_im", "direct_re", "direct_im", "encoded_re",
                     "encoded_im"});

  // On the unit circle the QLT rows are the DFT (times 1/N).
  const int N = 16;
  VectorXc z(N), s(N);
  for (int j = 0; j < N; ++j) {
    z(j) = std::polar(1.0, 2.0 * std::numbers::pi * j / N);
    s(j) = Complex(std::cos(0.3 * j), std::sin(1.1 * j * j));
  }
  const QltProblem p = ztransform_problem(z);
  const VectorXc via_matrix = dlt_matrix(p.x, p.y) * s * static_cast<double>(N);
  double dft_err = 0.0;
  for (int j = 0; j < N; ++j) {
    Complex dft(0.0);
    for (int i = 0; i < N; ++i) dft += s(i) * std::polar(1.0, -2.0 * std::numbers::pi * i * j / N);
    dft_err = std::max(dft_err, std::abs(via_matrix(j) - dft));
  }
  d.check("unit circle N=16: DLT rows against DFT", dft_err, 1e-9);
  d.report["dft"] = {{"N", N}, {"max_abs_error", dft_err}};

  const VectorXc z_real = (VectorXc(4) << 1.5, 2.0, 2.5, 3.0).finished();
  const VectorXc s_real = (VectorXc(4) << 1.0, -0.5, 0.25, 0.75).finished();
  d.report["real_points"] = ztransform_case(z_real, s_real, 1e-2, d, "real z, n=2");

  const VectorXc z_unit = (VectorXc(2) << 1.0, -1.0).finished();
  const VectorXc s_unit = (VectorXc(2) << 0.6, 0.8).finished();
  d.report["unit_circle"] = ztransform_case(z_unit, s_unit, 1e-2, d, "unit circle, n=1");
  return d;
}

Demo continuous_laplace_demo() {
  Demo d;
  d.report["demo"] = "continuous-laplace";
  ContinuousProblem p;
  p.f = [](double t) { return std::exp(-t); };
  p.f_prime = [](double t) { return -std::exp(-t); };
  p.k = 1.0;
  p.a = -1.0;
  p.eps = 1e-2;
  p.exact = [](Complex z) { return 1.0 / (1.0 + z); };
  p.contour.resize(8);
  for (int j = 0; j < 8; ++j) p.contour(j) = 1.0 + j / 7.0;
  const LaplaceReport r = prepare_laplace_state(p);

  double disc_bound = r.discretization_bounds.front();
  for (double b : r.discretization_bounds) disc_bound = std::min(disc_bound, b);
  // e^{-t} meets |f| <= k e^{at} with equality, so the bound is attained.
  d.check("(a) truncation error", r.truncation_error, r.truncation_bound * (1.0 + 1e-12));
  d.check("(b) Riemann error", r.discretization_error, disc_bound);
  d.check("(c) state error against 1/(1+sigma)", r.state_error_exact, r.combined_budget);
  const bool p_ok = r.success_probability > 0.0 && r.success_probability <= 1.0;
  d.pass = d.pass && p_ok;
  d.report["checks"].push_back({{"name", "(d) success probability in (0, 1]"},
                                {"value", r.success_probability},
                                {"bound", 1.0},
                                {"pass", p_ok}});

  VectorXc L(8);
  for (int j = 0; j < 8; ++j) L(j) = p.exact(p.contour(j));
  const VectorXc Lhat = L / L.norm();
  d.report["f"] = "exp(-t)";
  d.report["n"] = r.n;
  d.report["M"] = r.M;
  d.report["dt"] = r.dt;
  d.report["eps"] = p.eps;
  d.report["K"] = r.plan.K;
  d.report["required_N"] = r.required_N;
  d.report["meets_required_N"] = r.meets_required_N;
  d.report["L_exponent"] = r.L_exponent;
  d.report["success_probability"] = r.success_probability;
  d.report["state_error_riemann"] = r.state_error_riemann;
  d.report["qlt_state_budget"] = r.qlt_state_budget;
  d.report["combined_budget"] = r.combined_budget;
  d.report["resources"] = resources_json(r.resources);

  d.table.push_back({"j", "sigma", "exact", "riemann", "exact_normalized", "prepared_re",
                     "prepared_im", "discretization_bound", "panel_bound"});
  for (int j = 0; j < 8; ++j) {
    d.table.push_back({std::to_string(j), num(p.contour(j).real()), num(L(j).real()),
                       num(r.riemann(j).real()), num(Lhat(j).real()),
                       num(r.prepared_state(j).real()), num(r.prepared_state(j).imag()),
                       num(r.discretization_bounds[j]),
                       num(r.panel_discretization_bounds[j])});
  }
  return d;
}

Demo fourier_diagonal_demo() {
  Demo d;
  d.report["demo"] = "fourier-diagonal";
  const int n = 3;
  const double target = 1e-6;
  DiagonalSpec s;
  s.method = DiagonalMethod::FourierLCU;
  s.g = [](double x) { return Complex(std::exp(std::cos(2.0 * std::numbers::pi * x) - 1.0)); };
  // g is entire with |g(x)| <= e^{cosh(2 pi Im x) - 1}. Cauchy estimates on the
  // strip |Im x| <= R give ||g^(M)|| <= C M! / R^M with C = e^{cosh(2 pi R) - 1};
  // R must exceed 1, and C grows doubly exponentially in R, so R = 1.01.
  s.R = 1.01;
  s.C = std::exp(std::cosh(2.0 * std::numbers::pi * s.R) - 1.0);
  s.M = choose_fourier_order(s.C, s.R, target);
  s.target_eps = target;
  FourierDiagonalInfo info;
  const BlockEncoding be = fourier_diagonal_be(s, n, &info);

  const int N = 1 << n;
  VectorXc g(N);
  for (int j = 0; j < N; ++j) g(j) = s.g(static_cast<double>(j) / N);
  const MatrixXc encoded = be.alpha * be.block();
  const double err = spectral_norm(MatrixXc(g.asDiagonal()) - encoded);
  d.check("spectral error against target", err, target);
  d.check("spectral error against 2 eps_M", err, 2.0 * info.truncation_bound);

  d.report["g"] = "exp(cos(2 pi x)) / e";
  d.report["n"] = n;
  d.report["C"] = s.C;
  d.report["R"] = s.R;
  d.report["M"] = s.M;
  d.report["eps_M"] = info.truncation_bound;
  d.report["measured_error"] = err;
  d.report["alpha"] = be.alpha;
  d.report["selector_qubits"] = info.selector_qubits;
  Json coeffs = Json::array();
  for (const Complex& a : info.coefficients) coeffs.push_back(complex_json(a));
  d.report["coefficients"] = coeffs;
  const Metrics m = metrics(be.circuit);
  d.report["resources"] = {{"size", m.size},
                           {"depth", m.depth},
                           {"total_qubits", be.circuit.num_qubits()},
                           {"ancillas", be.a}};

  d.table.push_back({"j", "x", "g", "encoded_re", "encoded_im", "abs_error"});
  for (int j = 0; j < N; ++j) {
    const Complex e = encoded(j, j);
    d.table.push_back({std::to_string(j), num(static_cast<double>(j) / N), num(g(j).real()),
                       num(e.real()), num(e.imag()), num(std::abs(e - g(j)))});
  }
  return d;
}

}  // namespace

int cmd_demo(const std::string& name, const Options& options, std::ostream& log) {
  Demo d;
  if (name == "ztransform") {
    d = ztransform_demo();
  } else if (name == "continuous-laplace") {
    d = continuous_laplace_demo();
  } else if (name == "fourier-diagonal") {
    d = fourier_diagonal_demo();
  } else {
    throw SchemaError("demo: unknown name '" + name +
                      "', expected ztransform, continuous-laplace or fourier-diagonal");
  }
  d.report["pass"] = d.pass;
  write_text(options.out / (name + ".json"), d.report.dump(2) + "\n");
  write_text(options.out / (name + ".csv"), csv(d.table));
  for (const auto& c : d.report["checks"]) {
    log << (c["pass"].get<bool>() ? "  ok   " : "  FAIL ") << c["name"].get<std::string>()
        << ": " << c["value"].get<double>() << " <= " << c["bound"].get<double>() << "\n";
  }
  log << "demo " << name << (d.pass ? ": pass\n" : ": FAIL\n");
  return d.pass ? kExitOk : kExitVerifyFail;
}

}  // namespace qlt::cli

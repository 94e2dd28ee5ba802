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
#include <fstream>

#include "cli.hpp"

namespace qlt::cli {

namespace {

std::string number_text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return number_text(v.get<double>());
  return v.dump();
}

// Flattened key/value rows of a report, for --format csv.
std::string report_csv(const Json& report) {
  std::vector<std::vector<std::string>> rows{{"field", "value"}};
  const Json flat = report.flatten();
  for (const auto& item : flat.items()) {
    rows.push_back({item.key(), cell(item.value())});
  }
  return csv(rows);
}

void write_report(const Json& report, const Options& options, std::ostream& log) {
  std::filesystem::path path;
  if (options.format.value_or(Format::Json) == Format::Csv) {
    path = options.out / "report.csv";
    write_text(path, report_csv(report));
  } else {
    path = options.out / "report.json";
    write_text(path, report.dump(2) + "\n");
  }
  log << "wrote " << path.string() << "\n";
}

std::string kind_name(ProblemKind k) {
  switch (k) {
    case ProblemKind::Dlt:
      return "dlt";
    case ProblemKind::ZTransform:
      return "ztransform";
    case ProblemKind::ContinuousLaplace:
      return "continuous_laplace";
  }
  return "";
}

Json plan_json(const SeriesPlan& plan) {
  Json j;
  j["series"] = std::string(to_string(plan.kind));
  j["K"] = plan.K;
  j["terms"] = plan.terms.size();
  j["product"] = plan.product;
  j["tail_bound"] = plan.tail_bound;
  j["lambda_sum"] = plan.lambda_sum;
  j["normalization_slack"] = plan.alpha - plan.lambda_sum;
  j["per_factor_eps"] = plan.per_factor_eps;
  j["clamp_excess"] = plan.clamp_excess;
  j["degenerate"] = plan.degenerate;
  return j;
}

// The DLT problem a job compiles, whatever its kind.
QltProblem job_problem(const JobConfig& job) {
  return job.kind == ProblemKind::ContinuousLaplace ? continuous_qlt(job.continuous)
                                                    : job.problem;
}

struct Built {
  QltProblem problem;
  SeriesPlan plan;
  BlockEncoding be;
  ResourceReport resources;
};

Built build(const JobConfig& job) {
  Built b;
  b.problem = job_problem(job);
  try {
    b.plan = plan_series(b.problem, job.K);
  } catch (const std::domain_error& e) {
    throw SchemaError(std::string("K: ") + e.what());
  }
  b.be = build_qlt(b.problem, b.plan, job.copies);
  b.resources = resource_report(b.be, b.plan);
  return b;
}

Json header(const std::string& command, const JobConfig& job, const Built& b) {
  Json r;
  r["command"] = command;
  r["problem"] = {{"kind", kind_name(job.kind)},
                  {"n", b.problem.n()},
                  {"x_max", b.problem.x_max()},
                  {"y_max", b.problem.y_max()},
                  {"seed", job.seed}};
  r["alpha"] = b.be.alpha;
  r["eps"] = b.be.eps;
  r["K"] = b.plan.K;
  r["plan"] = plan_json(b.plan);
  r["resources"] = resources_json(b.resources);
  return r;
}

void require_simulable(const QltProblem& p, const BlockEncoding& be) {
  if (p.n() > kMaxVerifyQubits || be.circuit.num_qubits() > kMaxSimulationQubits) {
    throw ResourceError("verify: n = " + std::to_string(p.n()) + " system qubits, " +
                        std::to_string(be.circuit.num_qubits()) +
                        " qubits in total; dense verification is limited to " +
                        std::to_string(kMaxVerifyQubits) + " system qubits and " +
                        std::to_string(kMaxSimulationQubits) + " qubits in total");
  }
}

VectorXc uniform_state(Eigen::Index N) {
  return VectorXc::Constant(N, 1.0 / std::sqrt(static_cast<double>(N)));
}

int verify_continuous(const JobConfig& job, const Options& options, std::ostream& log) {
  const Built b = build(job);
  require_simulable(b.problem, b.be);
  const LaplaceReport lr = prepare_laplace_state(job.continuous);
  Json r = header("verify", job, b);
  r["M"] = lr.M;
  r["dt"] = lr.dt;
  r["required_N"] = lr.required_N;
  r["meets_required_N"] = lr.meets_required_N;
  r["L_exponent"] = lr.L_exponent;
  if (lr.empty_input) {
    r["empty_input"] = true;
    r["measured_error"] = 0.0;
    r["pass"] = true;
    r["success_probability"] = nullptr;
    write_report(r, options, log);
    log << "verify: f vanishes on the grid, nothing to prepare\n";
    return kExitOk;
  }
  r["empty_input"] = false;
  r["measured_error"] = lr.state_error_riemann;
  r["error_budget"] = lr.qlt_state_budget;
  r["pass"] = lr.state_error_riemann <= lr.qlt_state_budget;
  r["success_probability"] = lr.success_probability;
  r["truncation_bound"] = lr.truncation_bound;
  r["discretization_error"] = lr.discretization_error;
  r["discretization_bounds"] = lr.discretization_bounds;
  r["combined_budget"] = lr.combined_budget;
  r["riemann"] = vector_json(lr.riemann);
  r["prepared_state"] = vector_json(lr.prepared_state);
  write_report(r, options, log);
  const bool pass = r["pass"].get<bool>();
  log << "verify: state error " << lr.state_error_riemann << " against budget "
      << lr.qlt_state_budget << (pass ? ", pass\n" : ", FAIL\n");
  return pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

std::string csv(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      const std::string& c = row[i];
      if (c.find_first_of(",\"\n") == std::string::npos) {
        out += c;
      } else {
        out += '"';
        for (char ch : c) {
          if (ch == '"') out += '"';
          out += ch;
        }
        out += '"';
      }
    }
    out += '\n';
  }
  return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

Json complex_json(Complex z) {
  if (z.imag() == 0.0) return z.real();
  return Json::array({z.real(), z.imag()});
}

Json vector_json(const VectorXc& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(complex_json(v(i)));
  return a;
}

Json resources_json(const ResourceReport& r) {
  Json regs = Json::array();
  for (const Register& g : r.registers) {
    regs.push_back({{"name", g.name}, {"offset", g.offset}, {"size", g.size}});
  }
  Json j;
  j["size"] = r.size;
  j["depth"] = r.depth;
  j["oracle_size"] = r.oracle_size;
  j["oracle_depth"] = r.oracle_depth;
  j["additional_size"] = r.additional_size;
  j["additional_depth"] = r.additional_depth;
  j["total_qubits"] = r.total_qubits;
  j["system_qubits"] = r.system_qubits;
  j["ancillas"] = r.ancillas;
  j["nominal_ancillas"] = r.nominal_ancillas;
  j["registers"] = regs;
  j["controlled_diagonal_calls"] = r.controlled_diagonal_calls;
  return j;
}

QltProblem continuous_qlt(const ContinuousProblem& c) {
  const Eigen::Index N = c.contour.size();
  QltProblem q;
  q.x = -c.contour;
  q.y.resize(N);
  for (Eigen::Index i = 0; i < N; ++i) {
    q.y(i) = static_cast<double>(i) * c.M / static_cast<double>(N);
  }
  q.eps = c.eps;
  q.kind = c.kind;
  return q;
}

int cmd_synthesize(const Json& config, const Options& options, std::ostream& log) {
  const JobConfig job = parse_job(config, options);
  const Built b = build(job);
  const auto qasm = options.out / "circuit.qasm";
  write_text(qasm, to_qasm(b.be.circuit));
  log << "wrote " << qasm.string() << "\n";
  Json r = header("synthesize", job, b);
  if (job.kind == ProblemKind::ContinuousLaplace) r["M"] = job.continuous.M;
  write_report(r, options, log);
  log << "synthesize: K = " << b.plan.K << ", " << b.resources.size << " gates, depth "
      << b.resources.depth << ", " << b.resources.total_qubits << " qubits\n";
  return kExitOk;
}

int cmd_verify(const Json& config, const Options& options, std::ostream& log) {
  const JobConfig job = parse_job(config, options);
  if (job.kind == ProblemKind::ContinuousLaplace) return verify_continuous(job, options, log);

  const Built b = build(job);
  Json r = header("verify", job, b);
  const double third = b.problem.eps / 3.0;
  const bool certified = b.plan.tail_bound <= third && b.plan.alpha - b.plan.lambda_sum <= third;
  r["certified"] = certified;
  if (!job.simulate) {
    r["simulated"] = false;
    r["measured_error"] = nullptr;
    r["pass"] = certified;
    r["success_probability"] = nullptr;
    write_report(r, options, log);
    log << "verify: certificate only, " << (certified ? "pass\n" : "FAIL\n");
    return certified ? kExitOk : kExitVerifyFail;
  }
  require_simulable(b.problem, b.be);
  const Verification v = verify_qlt(b.problem, b.be);
  const Eigen::Index N = b.problem.x.size();
  VectorXc psi = uniform_state(N);
  if (job.input) {
    psi = *job.input;
  } else if (job.signal.size() && job.signal.norm() > 0.0) {
    psi = job.signal / job.signal.norm();
  }
  r["simulated"] = true;
  r["measured_error"] = v.measured_error;
  r["pass"] = v.pass;
  r["success_probability"] = success_probability(b.be, psi);
  r["input_state"] = vector_json(psi);
  if (job.kind == ProblemKind::ZTransform && job.signal.size()) {
    // The block times N alpha approximates sum_i s_i z_j^{-i}.
    const VectorXc z = (-b.problem.x).array().exp();
    const VectorXc direct = ztransform_direct(job.signal, z);
    const VectorXc encoded =
        static_cast<double>(N) * b.be.alpha * (b.be.block() * job.signal);
    r["transform"] = {{"direct", vector_json(direct)},
                      {"encoded", vector_json(encoded)},
                      {"max_abs_error", (encoded - direct).cwiseAbs().maxCoeff()},
                      {"bound", static_cast<double>(N) * b.problem.eps * job.signal.norm()}};
  }
  write_report(r, options, log);
  log << "verify: measured error " << v.measured_error << " against eps " << b.problem.eps
      << (v.pass ? ", pass\n" : ", FAIL\n");
  return v.pass ? kExitOk : kExitVerifyFail;
}

std::vector<std::vector<std::string>> scaling_table(const ScalingConfig& config) {
  std::vector<std::vector<std::string>> rows{
      {"n", "eps", "K", "terms", "size", "depth", "qubits", "oracle_size", "oracle_depth",
       "additional_size", "additional_depth", "controlled_diagonal_calls", "size_ratio",
       "depth_ratio"}};
  for (double eps : config.eps) {
    for (int n : config.n) {
      const QltProblem p = scaling_instance(n, eps, config.kind, config.seed);
      const SeriesPlan plan = plan_series(p);
      const ResourceReport r = resource_report(build_qlt(p, plan), plan);
      const int log_n = std::max(1, static_cast<int>(std::ceil(std::log2(n))));
      std::string size_ratio, depth_ratio;
      if (plan.K > 0) {
        size_ratio = number_text(static_cast<double>(r.additional_size) / (plan.K * n));
        depth_ratio =
            number_text(static_cast<double>(r.additional_depth) / (plan.K * log_n));
      }
      rows.push_back({std::to_string(n), number_text(eps), std::to_string(plan.K),
                      std::to_string(r.terms), std::to_string(r.size),
                      std::to_string(r.depth), std::to_string(r.total_qubits),
                      std::to_string(r.oracle_size), std::to_string(r.oracle_depth),
                      std::to_string(r.additional_size), std::to_string(r.additional_depth),
                      std::to_string(r.controlled_diagonal_calls), size_ratio, depth_ratio});
    }
  }
  return rows;
}

int cmd_scaling(const Json& config, const Options& options, std::ostream& log) {
  const ScalingConfig s = parse_scaling(config, options);
  const auto rows = scaling_table(s);
  std::filesystem::path path;
  if (options.format.value_or(Format::Csv) == Format::Csv) {
    path = options.out / "table.csv";
    write_text(path, csv(rows));
  } else {
    Json table = Json::array();
    for (std::size_t i = 1; i < rows.size(); ++i) {
      Json row;
      for (std::size_t c = 0; c < rows[0].size(); ++c) {
        const std::string& v = rows[i][c];
        if (v.empty()) {
          row[rows[0][c]] = nullptr;
        } else {
          row[rows[0][c]] = Json::parse(v);
        }
      }
      table.push_back(row);
    }
    path = options.out / "table.json";
    write_text(path, table.dump(2) + "\n");
  }
  log << "wrote " << path.string() << " (" << rows.size() - 1 << " rows)\n";
  return kExitOk;
}

}  // namespace qlt::cli

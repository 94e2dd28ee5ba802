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

#include <algorithm>
#include <fstream>
#include <random>
#include <set>

#include "cli.hpp"

namespace qlt::cli {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw SchemaError(path + ": " + what);
}

void check_keys(const Json& obj, const std::string& path,
                const std::set<std::string>& allowed) {
  if (!obj.is_object()) fail(path.empty() ? "config" : path, "expected an object");
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      fail(path.empty() ? item.key() : path + "." + item.key(), "unknown field");
    }
  }
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

double number(const Json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "must be finite");
  return v;
}

int integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

// A number, [re, im] or {"re": .., "im": ..}.
Complex complex_value(const Json& j, const std::string& path) {
  if (j.is_number()) return number(j, path);
  if (j.is_array()) {
    if (j.size() != 2) fail(path, "complex values are [re, im]");
    return {number(j[0], path + "[0]"), number(j[1], path + "[1]")};
  }
  if (j.is_object()) {
    check_keys(j, path, {"re", "im"});
    return {j.contains("re") ? number(j["re"], path + ".re") : 0.0,
            j.contains("im") ? number(j["im"], path + ".im") : 0.0};
  }
  fail(path, "expected a number or [re, im]");
}

VectorXc complex_vector(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  VectorXc v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = complex_value(j[i], path + "[" + std::to_string(i) + "]");
  }
  return v;
}

std::vector<double> real_vector(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<double> v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    v.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return v;
}

bool power_of_two(std::size_t v) { return v >= 2 && (v & (v - 1)) == 0; }

SeriesKind series(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  try {
    return series_kind_from_string(j.get<std::string>());
  } catch (const std::invalid_argument&) {
    fail(path, "expected taylor, chebyshev or double_chebyshev");
  }
}

double eps_value(const Json& j, const std::string& path) {
  const double e = number(j, path);
  if (!(e > 0.0 && e < 1.0)) fail(path, "must lie in (0, 1)");
  return e;
}

// Linear interpolation of samples, held constant past the ends.
std::function<double(double)> interpolant(std::vector<double> t, std::vector<double> f) {
  return [t = std::move(t), f = std::move(f)](double s) {
    if (s <= t.front()) return f.front();
    if (s >= t.back()) return f.back();
    const auto it = std::upper_bound(t.begin(), t.end(), s);
    const std::size_t i = static_cast<std::size_t>(it - t.begin());
    const double w = (s - t[i - 1]) / (t[i] - t[i - 1]);
    return (1.0 - w) * f[i - 1] + w * f[i];
  };
}

void generate(const Json& g, const std::string& path, std::uint64_t seed, QltProblem& p) {
  check_keys(g, path, {"type", "n", "radius", "normalize"});
  if (!g.contains("type")) fail(join(path, "type"), "missing");
  if (!g.contains("n")) fail(join(path, "n"), "missing");
  const std::string type = g["type"].is_string() ? g["type"].get<std::string>() : "";
  const int n = integer(g["n"], join(path, "n"));
  if (n < 1 || n > 20) fail(join(path, "n"), "must lie in [1, 20]");
  const double radius = g.contains("radius") ? number(g["radius"], join(path, "radius")) : 1.0;
  if (!(radius >= 0.0)) fail(join(path, "radius"), "must be >= 0");
  const Eigen::Index N = Eigen::Index{1} << n;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0), unit(0.0, 1.0);
  p.x.resize(N);
  p.y.resize(N);
  if (type == "zero") {
    p.x.setZero();
    p.y.setZero();
  } else if (type == "uniform_real") {
    for (Eigen::Index i = 0; i < N; ++i) p.x(i) = radius * u(rng);
    for (Eigen::Index i = 0; i < N; ++i) p.y(i) = radius * u(rng);
  } else if (type == "uniform_complex") {
    auto draw = [&] {
      return std::polar(radius * std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
    };
    for (Eigen::Index i = 0; i < N; ++i) p.x(i) = draw();
    for (Eigen::Index i = 0; i < N; ++i) p.y(i) = draw();
  } else {
    fail(join(path, "type"), "expected zero, uniform_real or uniform_complex");
  }
  if (g.contains("normalize")) {
    if (!g["normalize"].is_boolean()) fail(join(path, "normalize"), "expected a boolean");
    if (g["normalize"].get<bool>() && type != "zero") {
      p.x /= p.x.cwiseAbs().maxCoeff() / std::max(radius, 1e-300);
      p.y /= p.y.cwiseAbs().maxCoeff() / std::max(radius, 1e-300);
    }
  }
}

}  // namespace

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("--config: cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError("--config: invalid JSON (" + std::string(e.what()) + ")");
  }
}

JobConfig parse_job(const Json& config, const Options& options) {
  check_keys(config, "", {"problem", "eps", "series", "K", "copies", "input", "simulate", "seed"});
  JobConfig job;
  job.seed = options.seed.value_or(
      config.contains("seed") ? static_cast<std::uint64_t>(integer(config["seed"], "seed")) : 0);
  const double eps = config.contains("eps") ? eps_value(config["eps"], "eps") : 1e-2;
  const SeriesKind kind =
      config.contains("series") ? series(config["series"], "series") : SeriesKind::Taylor;
  if (config.contains("K")) {
    const int K = integer(config["K"], "K");
    if (K < 0 || K > 200) fail("K", "must lie in [0, 200]");
    job.K = K;
  }
  if (config.contains("copies")) {
    job.copies = integer(config["copies"], "copies");
    if (job.copies < 0) fail("copies", "must be >= 0");
  }
  if (config.contains("simulate")) {
    if (!config["simulate"].is_boolean()) fail("simulate", "expected a boolean");
    job.simulate = config["simulate"].get<bool>();
  }
  if (!config.contains("problem")) fail("problem", "missing");
  const Json& p = config["problem"];
  if (!p.is_object()) fail("problem", "expected an object");
  const std::string kind_name =
      p.contains("kind") && p["kind"].is_string() ? p["kind"].get<std::string>() : "dlt";

  if (kind_name == "dlt") {
    check_keys(p, "problem", {"kind", "x", "y", "generator"});
    if (p.contains("generator")) {
      if (p.contains("x") || p.contains("y")) {
        fail("problem.generator", "cannot be combined with explicit x, y");
      }
      generate(p["generator"], "problem.generator", job.seed, job.problem);
    } else {
      if (!p.contains("x")) fail("problem.x", "missing");
      if (!p.contains("y")) fail("problem.y", "missing");
      job.problem.x = complex_vector(p["x"], "problem.x");
      job.problem.y = complex_vector(p["y"], "problem.y");
      if (!power_of_two(job.problem.x.size())) {
        fail("problem.x", "length must be a power of two >= 2");
      }
      if (job.problem.y.size() != job.problem.x.size()) {
        fail("problem.y", "length must match problem.x");
      }
    }
    job.problem.eps = eps;
    job.problem.kind = kind;
  } else if (kind_name == "ztransform") {
    check_keys(p, "problem", {"kind", "z", "signal"});
    if (!p.contains("z")) fail("problem.z", "missing");
    const VectorXc z = complex_vector(p["z"], "problem.z");
    if (!power_of_two(z.size())) fail("problem.z", "length must be a power of two >= 2");
    for (Eigen::Index j = 0; j < z.size(); ++j) {
      if (z(j) == 0.0) fail("problem.z[" + std::to_string(j) + "]", "must be nonzero");
    }
    job.kind = ProblemKind::ZTransform;
    job.problem = ztransform_problem(z, eps, kind);
    if (p.contains("signal")) {
      job.signal = complex_vector(p["signal"], "problem.signal");
      if (job.signal.size() != z.size()) fail("problem.signal", "length must match problem.z");
    }
  } else if (kind_name == "continuous_laplace") {
    check_keys(p, "problem", {"kind", "t_grid", "f_values", "contour", "k", "a", "t0", "M"});
    for (const char* key : {"t_grid", "f_values", "contour"}) {
      if (!p.contains(key)) fail(join("problem", key), "missing");
    }
    auto t = real_vector(p["t_grid"], "problem.t_grid");
    auto f = real_vector(p["f_values"], "problem.f_values");
    if (t.size() < 2) fail("problem.t_grid", "needs at least two points");
    if (f.size() != t.size()) fail("problem.f_values", "length must match problem.t_grid");
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (!(t[i] > t[i - 1])) fail("problem.t_grid", "must be strictly increasing");
    }
    if (t.front() > 0.0) fail("problem.t_grid", "must start at or before t = 0");
    ContinuousProblem& c = job.continuous;
    c.contour = complex_vector(p["contour"], "problem.contour");
    if (!power_of_two(c.contour.size())) {
      fail("problem.contour", "length must be a power of two >= 2");
    }
    c.k = p.contains("k") ? number(p["k"], "problem.k") : 1.0;
    c.a = p.contains("a") ? number(p["a"], "problem.a") : 0.0;
    c.t0 = p.contains("t0") ? number(p["t0"], "problem.t0") : 0.0;
    if (!(c.k > 0.0)) fail("problem.k", "must be positive");
    if (c.t0 < 0.0) fail("problem.t0", "must be >= 0");
    if (!(c.contour.real().minCoeff() > c.a)) {
      fail("problem.contour", "min Re z must exceed problem.a");
    }
    c.eps = eps;
    c.kind = kind;
    c.M = p.contains("M") ? number(p["M"], "problem.M")
                          : truncation_M(c.k, c.a, c.t0, c.contour.real().minCoeff(), eps);
    if (!(c.M > 0.0)) fail("problem.M", "must be positive");
    if (t.back() < c.M * (1.0 - 1.0 / static_cast<double>(c.contour.size()))) {
      fail("problem.t_grid", "must cover [0, M] with M = " + std::to_string(c.M));
    }
    c.f = interpolant(std::move(t), std::move(f));
    c.K_override = job.K;
    job.kind = ProblemKind::ContinuousLaplace;
  } else {
    fail("problem.kind", "expected dlt, ztransform or continuous_laplace");
  }

  if (config.contains("input")) {
    if (job.kind == ProblemKind::ContinuousLaplace) {
      fail("input", "not used by continuous_laplace, give f_values instead");
    }
    VectorXc in = complex_vector(config["input"], "input");
    if (in.size() != job.problem.x.size()) fail("input", "length must be 2^n");
    if (in.norm() == 0.0) fail("input", "must not be the zero vector");
    job.input = in / in.norm();
  }
  if (job.kind != ProblemKind::ContinuousLaplace) {
    try {
      job.problem.validate();
    } catch (const std::invalid_argument& e) {
      throw SchemaError(std::string("problem.") + e.what());
    }
  }
  return job;
}

ScalingConfig parse_scaling(const Json& config, const Options& options) {
  check_keys(config, "", {"n", "eps", "series", "seed"});
  ScalingConfig s;
  s.seed = options.seed.value_or(
      config.contains("seed") ? static_cast<std::uint64_t>(integer(config["seed"], "seed")) : 0);
  if (config.contains("series")) s.kind = series(config["series"], "series");
  if (!config.contains("n")) fail("n", "missing");
  const Json& n = config["n"];
  if (n.is_array()) {
    for (std::size_t i = 0; i < n.size(); ++i) {
      s.n.push_back(integer(n[i], "n[" + std::to_string(i) + "]"));
    }
  } else if (n.is_object()) {
    check_keys(n, "n", {"min", "max"});
    if (!n.contains("min")) fail("n.min", "missing");
    if (!n.contains("max")) fail("n.max", "missing");
    const int lo = integer(n["min"], "n.min"), hi = integer(n["max"], "n.max");
    for (int v = lo; v <= hi; ++v) s.n.push_back(v);
  } else {
    fail("n", "expected a list or {min, max}");
  }
  for (std::size_t i = 0; i < s.n.size(); ++i) {
    if (s.n[i] < 1) fail("n[" + std::to_string(i) + "]", "must be >= 1");
    if (s.n[i] > kMaxScalingQubits) {
      throw ResourceError("n = " + std::to_string(s.n[i]) +
                          " exceeds the construction limit of " +
                          std::to_string(kMaxScalingQubits) + " system qubits");
    }
  }
  if (!config.contains("eps")) fail("eps", "missing");
  const Json& e = config["eps"];
  if (e.is_array()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      s.eps.push_back(eps_value(e[i], "eps[" + std::to_string(i) + "]"));
    }
  } else {
    s.eps.push_back(eps_value(e, "eps"));
  }
  return s;
}

QltProblem scaling_instance(int n, double eps, SeriesKind kind, std::uint64_t seed) {
  QltProblem p;
  Json g{{"type", kind == SeriesKind::DoubleChebyshev ? "uniform_complex" : "uniform_real"},
         {"n", n},
         {"normalize", true}};
  generate(g, "generator", seed + static_cast<std::uint64_t>(n), p);
  p.eps = eps;
  p.kind = kind;
  return p;
}

}  // namespace qlt::cli

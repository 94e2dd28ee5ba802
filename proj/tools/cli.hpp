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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qlt/qlt.hpp"

namespace qlt::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFail = 1,
  kExitUsage = 2,
  kExitResource = 3,
};

/// A config problem; the message starts with the dotted field path.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A job that would exceed the simulation or construction limits.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv };

struct Options {
  std::filesystem::path out = ".";
  std::optional<std::uint64_t> seed;
  // Unset means the command's own default: CSV for scaling, JSON otherwise.
  std::optional<Format> format;
};

inline constexpr int kMaxScalingQubits = 14;

enum class ProblemKind { Dlt, ZTransform, ContinuousLaplace };

struct JobConfig {
  ProblemKind kind = ProblemKind::Dlt;
  QltProblem problem;            // Dlt and ZTransform
  ContinuousProblem continuous;  // ContinuousLaplace
  VectorXc signal;               // ZTransform input sequence, may be empty
  std::optional<VectorXc> input;  // state for the success probability
  std::optional<int> K;
  int copies = kDefaultCopies;
  bool simulate = true;
  std::uint64_t seed = 0;
};

Json load_json(const std::filesystem::path& path);
JobConfig parse_job(const Json& config, const Options& options);

struct ScalingConfig {
  std::vector<int> n;
  std::vector<double> eps;
  SeriesKind kind = SeriesKind::Taylor;
  std::uint64_t seed = 0;
};

ScalingConfig parse_scaling(const Json& config, const Options& options);

/// x, y uniform in [-1, 1]^N, rescaled so that x_max = y_max = 1.
QltProblem scaling_instance(int n, double eps, SeriesKind kind, std::uint64_t seed);

/// The DLT behind a continuous job: x_j = -z_j, y_i = i M / N.
QltProblem continuous_qlt(const ContinuousProblem& c);

Json complex_json(Complex z);
Json vector_json(const VectorXc& v);
Json resources_json(const ResourceReport& r);

int cmd_synthesize(const Json& config, const Options& options, std::ostream& log);
int cmd_verify(const Json& config, const Options& options, std::ostream& log);
int cmd_scaling(const Json& config, const Options& options, std::ostream& log);
int cmd_demo(const std::string& name, const Options& options, std::ostream& log);

/// Rows of the scaling table, header first.
std::vector<std::vector<std::string>> scaling_table(const ScalingConfig& config);

void write_text(const std::filesystem::path& path, const std::string& text);
std::string csv(const std::vector<std::vector<std::string>>& rows);

/// Full command line entry point; never throws.
int run(int argc, const char* const* argv, std::ostream& log);

}  // namespace qlt::cli

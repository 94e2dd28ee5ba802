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

#include "CLI11.hpp"
#include "cli.hpp"

namespace qlt::cli {

int run(int argc, const char* const* argv, std::ostream& log) {
  CLI::App app{"Compiles Laplace transforms into block-encoding circuits.", "qlt"};
  app.require_subcommand(1);

  std::string config_path, format_name, demo_name;
  Options options;
  std::uint64_t seed = 0;

  auto common = [&](CLI::App* sub, bool needs_config) {
    auto* c = sub->add_option("--config", config_path, "JSON job config");
    if (needs_config) c->required()->check(CLI::ExistingFile);
    sub->add_option("--out", options.out, "output directory")->capture_default_str();
    sub->add_option("--seed", seed, "seed for generated instances, overrides the config");
    sub->add_option("--format", format_name, "report format")
        ->check(CLI::IsMember({"json", "csv"}));
  };
  auto* synth = app.add_subcommand("synthesize", "write circuit.qasm and a resource report");
  auto* verify = app.add_subcommand("verify", "simulate and check the encoded block");
  auto* scaling = app.add_subcommand("scaling", "construction-only resource table");
  auto* demo = app.add_subcommand("demo", "run a packaged example");
  common(synth, true);
  common(verify, true);
  common(scaling, true);
  common(demo, false);
  demo->add_option("name", demo_name, "ztransform, continuous-laplace or fourier-diagonal")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    log << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    log << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    log << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  for (auto* sub : {synth, verify, scaling, demo}) {
    if (sub->parsed() && sub->count("--seed")) options.seed = seed;
  }
  if (!format_name.empty()) options.format = format_name == "csv" ? Format::Csv : Format::Json;

  try {
    if (demo->parsed()) return cmd_demo(demo_name, options, log);
    const Json config = load_json(config_path);
    if (synth->parsed()) return cmd_synthesize(config, options, log);
    if (verify->parsed()) return cmd_verify(config, options, log);
    return cmd_scaling(config, options, log);
  } catch (const SchemaError& e) {
    log << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    log << "refused: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::length_error& e) {
    log << "refused: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    log << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace qlt::cli

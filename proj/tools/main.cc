// Copyright 2026 The icpriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "experiment.h"

namespace {

using icpriv::tools::ExperimentConfig;

struct Flags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::size_t> trials;
  std::optional<std::string> q;
  std::optional<unsigned> threads;
};

ExperimentConfig Resolve(const std::string& command, const Flags& f) {
  ExperimentConfig c = f.config.empty() ? ExperimentConfig{}
                                        : icpriv::tools::LoadConfig(f.config);
  if (f.seed) c.seed = *f.seed;
  if (f.out) c.out = *f.out;
  if (f.trials) c.trials = *f.trials;
  if (f.threads) c.threads = *f.threads;
  if (f.q) {
    const auto values = icpriv::tools::ParseQList(*f.q);
    if (command == "sweep") {
      c.q_grid = values;
    } else {
      if (values.size() != 1) {
        throw icpriv::tools::ConfigError("--q takes a single value here");
      }
      c.q = values.front();
    }
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Giant-component privacy laboratory for Independent Cascades"};
  app.set_version_flag("--version", icpriv::tools::kToolVersion);
  app.require_subcommand(1);

  Flags flags;
  const std::pair<const char*, const char*> commands[] = {
      {"components", "Mean |C1| and |C2| of the triggering set at fixed q"},
      {"sweep", "Component fractions over a grid of q values"},
      {"membership", "Nodes whose giant-component frequency clears thresholds"},
      {"audit", "Wasserstein mechanism scale and a comparison hypothesis test"},
      {"attack", "Inference attack accuracy under a release mechanism"},
      {"gen", "Generate or load a graph and write its canonical dump"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", flags.config, "JSON experiment config")
        ->check(CLI::ExistingFile);
    sub->add_option("--seed", flags.seed, "Master RNG seed");
    sub->add_option("--out", flags.out, "Output directory");
    sub->add_option("--trials", flags.trials, "Trials per estimate");
    sub->add_option("--q", flags.q,
                    "Transmission rate, list a,b,c or grid start:stop:count");
    sub->add_option("--threads", flags.threads, "Worker threads (0 = all)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : icpriv::tools::kExitConfigError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const ExperimentConfig config = Resolve(command, flags);
    icpriv::tools::RunCommand(command, config, std::cerr);
  } catch (const icpriv::DegenerateConditioningError& e) {
    std::cerr << "error: degenerate conditioning (" << e.branch()
              << "): " << e.what() << '\n';
    return icpriv::tools::kExitDegenerate;
  } catch (const icpriv::ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return icpriv::tools::kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return icpriv::tools::kExitFailure;
  }
  return icpriv::tools::kExitOk;
}

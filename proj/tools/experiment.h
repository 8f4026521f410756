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

#ifndef ICPRIV_TOOLS_EXPERIMENT_H_
#define ICPRIV_TOOLS_EXPERIMENT_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "icpriv/icpriv.h"
#include "json.hpp"

namespace icpriv::tools {

inline constexpr const char* kToolVersion = "0.1.0";

// Exit codes of the icpriv binary.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitDegenerate = 3;

class ConfigError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

struct GraphSource {
  enum class Model { kErdosRenyi, kChungLu, kEdgeList };
  Model model = Model::kErdosRenyi;
  NodeId n = 2500;
  double np = 5;   // ER mean degree; p = np / (n - 1)
  double d = 5;    // Chung-Lu minimum expected degree
  double b = 1.1;  // Chung-Lu scale
  std::filesystem::path path;
  std::optional<std::uint64_t> seed;  // defaults to a child of the master seed

  double p() const { return n > 1 ? np / (n - 1.0) : 0.0; }
};

// Laplace scale given either as a number or as "sqrt_n".
struct MechanismConfig {
  MechanismKind kind = MechanismKind::kLaplace;
  double scale = 0;
  bool scale_is_sqrt_n = true;
  double w = 0;  // Wasserstein W; scale = w / epsilon
  double epsilon = 1;
  double flip_prob = 0.5;
  bool clamp = false;
  bool round = false;

  MechanismSpec Build(std::size_t n) const;
};

struct ExperimentConfig {
  GraphSource graph;
  double q = 0.3;
  std::vector<double> q_grid;  // sweep grid; default 20 points over [0.05, 0.9]
  NodeId s = 1;
  std::optional<std::size_t> trials;  // default depends on the subcommand
  std::size_t calibration_trials = 1000;
  std::uint64_t seed = 1;
  MechanismConfig mechanism;
  double epsilon = 1;                  // Wasserstein mechanism budget (audit)
  std::vector<double> thresholds{0.99, 0.95, 0.90, 0.75, 0.50};
  std::vector<NodeId> protected_nodes;  // audit; default: highest-degree node
  SeedPolicy seed_policy = SeedPolicy::kUniform;
  double resolution = 1.0;  // push-through grid
  std::filesystem::path out = ".";
  unsigned threads = 1;

  // Throws ConfigError on violated invariants.
  void Validate() const;
  std::size_t TrialsOr(std::size_t fallback) const {
    return trials.value_or(fallback);
  }
};

// Default sweep grid: 20 evenly spaced values from 0.05 to 0.9.
std::vector<double> DefaultQGrid();

// Parses a probability written as a decimal string.
double ParseProbability(const std::string& text);
// "0.3", "0.1,0.2,0.5" or "start:stop:count".
std::vector<double> ParseQList(const std::string& text);

ExperimentConfig ConfigFromJson(const nlohmann::json& j);
ExperimentConfig LoadConfig(const std::filesystem::path& path);

// Effective configuration as canonical JSON text (sorted keys, no
// whitespace). Output directory and thread count are left out since they do
// not affect results.
std::string CanonicalConfigText(const ExperimentConfig& config);
std::uint64_t Fnv1a64(std::string_view text);
std::uint64_t ConfigHash(const ExperimentConfig& config);

struct LoadedGraph {
  Graph graph;
  std::string name;
  std::optional<NodeWeights> weights;  // Chung-Lu only
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;
};

LoadedGraph BuildGraph(const ExperimentConfig& config);

// A CSV table preceded by a comment line with tool version and config hash.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string FormatNumber(double value);
void WriteCsv(const CsvTable& table, const ExperimentConfig& config,
              std::ostream& out);
void WriteCsvFile(const CsvTable& table, const ExperimentConfig& config,
                  const std::string& filename);

// --- subcommands -----------------------------------------------------------

struct ComponentStats {
  std::string network;
  std::size_t n = 0;
  std::size_t edges = 0;
  double q = 0;
  std::size_t trials = 0;
  double mean_largest = 0;
  double mean_second = 0;
  double sd_largest = 0;
  double sd_second = 0;
  std::size_t ties = 0;
};
ComponentStats RunComponents(const LoadedGraph& g, const ExperimentConfig& config);
CsvTable ToCsv(const ComponentStats& stats);

struct SweepPoint {
  double q = 0;
  std::size_t trials = 0;
  double mean_largest_fraction = 0;
  double mean_second_fraction = 0;
  double se_largest_fraction = 0;
  double se_second_fraction = 0;
};
std::vector<SweepPoint> RunSweep(const LoadedGraph& g, const ExperimentConfig& config);
CsvTable ToCsv(const std::vector<SweepPoint>& sweep);

struct ThresholdCount {
  double threshold = 0;
  std::size_t count = 0;
  double percent = 0;
};
struct MembershipTable {
  std::string network;
  std::size_t n = 0;
  std::size_t trials = 0;
  double q = 0;
  std::vector<ThresholdCount> rows;
  MembershipEstimate estimate;
};
MembershipTable RunMembership(const LoadedGraph& g, const ExperimentConfig& config);
CsvTable ToCsv(const MembershipTable& table);

struct AuditReport {
  std::size_t n = 0;
  std::size_t trials = 0;
  WassersteinScale scale;
  double epsilon = 1;
  double implied_mean_noise = 0;  // W / epsilon, the mean |Lap(W / epsilon)|
  GiantConditionedCounts giant;
  MechanismSpec comparison;
  HypothesisTestReport test;
};
AuditReport RunAudit(const LoadedGraph& g, const ExperimentConfig& config);
CsvTable ToCsv(const AuditReport& report);
CsvTable NodeCsv(const AuditReport& report);

AttackReport RunAttack(const LoadedGraph& g, const ExperimentConfig& config);
CsvTable ToCsv(const AttackReport& report);
CsvTable SummaryCsv(const AttackReport& report);

// Runs a subcommand end to end and writes its outputs under config.out.
// Returns the list of files written.
std::vector<std::filesystem::path> RunCommand(const std::string& command,
                                              const ExperimentConfig& config,
                                              std::ostream& log);

}  // namespace icpriv::tools

#endif  // ICPRIV_TOOLS_EXPERIMENT_H_

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

#include "experiment.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <fmt/format.h>

namespace icpriv::tools {
namespace {

using nlohmann::json;

// Graph seeds are derived from the master seed on their own stream so that
// changing the trial count never changes the graph.
constexpr std::uint64_t kGraphStream = 0x6772617068ULL;  // "graph"

double NumberOrString(const json& j, const std::string& key) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return ParseProbability(j.get<std::string>());
  throw ConfigError("'" + key + "' must be a number or decimal string");
}

template <typename T>
T Get(const json& j, const std::string& key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("'" + key + "' has the wrong type");
  }
}

std::string ModelName(GraphSource::Model m) {
  switch (m) {
    case GraphSource::Model::kErdosRenyi:
      return "er";
    case GraphSource::Model::kChungLu:
      return "chung_lu";
    case GraphSource::Model::kEdgeList:
      return "edge_list";
  }
  return "?";
}

std::string PolicyName(SeedPolicy p) {
  return p == SeedPolicy::kUniform ? "uniform" : "degree";
}

double Mean(std::span<const std::size_t> xs) {
  double m = 0;
  for (std::size_t x : xs) m += static_cast<double>(x);
  return xs.empty() ? 0.0 : m / static_cast<double>(xs.size());
}

double StdDev(std::span<const std::size_t> xs, double mean) {
  if (xs.size() < 2) return 0.0;
  double ss = 0;
  for (std::size_t x : xs) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

std::string QuoteCsv(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (char ch : cell) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

CascadeTrials TrialsFor(const ExperimentConfig& config, std::size_t trials) {
  CascadeTrials t;
  t.q = config.q;
  t.seeds = config.s;
  t.trials = trials;
  t.rng_seed = config.seed;
  t.threads = config.threads;
  t.policy = config.seed_policy;
  return t;
}

}  // namespace

MechanismSpec MechanismConfig::Build(std::size_t n) const {
  MechanismSpec spec;
  switch (kind) {
    case MechanismKind::kLaplace:
      spec = MechanismSpec::Laplace(
          scale_is_sqrt_n ? std::sqrt(static_cast<double>(n)) : scale, clamp);
      break;
    case MechanismKind::kWasserstein:
      spec = MechanismSpec::Wasserstein(w, epsilon, clamp);
      break;
    case MechanismKind::kRandomizedResponse:
      spec = MechanismSpec::RandomizedResponse(flip_prob);
      spec.clamp = clamp;
      break;
  }
  spec.round = round;
  return spec;
}

void ExperimentConfig::Validate() const {
  if (!(q > 0 && q <= 1)) throw ConfigError("q must lie in (0, 1]");
  for (double g : q_grid) {
    if (!(g > 0 && g <= 1)) throw ConfigError("q grid values must lie in (0, 1]");
  }
  if (s < 1) throw ConfigError("s must be at least 1");
  if (trials && *trials < 1) throw ConfigError("trials must be at least 1");
  if (calibration_trials < 1) {
    throw ConfigError("calibration_trials must be at least 1");
  }
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (!(thresholds[i] >= 0 && thresholds[i] <= 1)) {
      throw ConfigError("thresholds must lie in [0, 1]");
    }
    if (i > 0 && thresholds[i] > thresholds[i - 1]) {
      throw ConfigError("thresholds must be sorted in descending order");
    }
  }
  if (!(epsilon > 0)) throw ConfigError("epsilon must be positive");
  if (!(resolution > 0)) throw ConfigError("resolution must be positive");
  if (graph.model == GraphSource::Model::kEdgeList && graph.path.empty()) {
    throw ConfigError("edge_list graph needs a path");
  }
  if (graph.model != GraphSource::Model::kEdgeList && graph.n < 1) {
    throw ConfigError("graph n must be at least 1");
  }
}

std::vector<double> DefaultQGrid() {
  std::vector<double> grid(20);
  for (int i = 0; i < 20; ++i) grid[i] = 0.05 + (0.9 - 0.05) * i / 19.0;
  return grid;
}

double ParseProbability(const std::string& text) {
  double value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("not a decimal number: '" + text + "'");
  }
  return value;
}

std::vector<double> ParseQList(const std::string& text) {
  std::vector<double> out;
  if (std::count(text.begin(), text.end(), ':') == 2) {
    const auto a = text.find(':');
    const auto b = text.find(':', a + 1);
    const double start = ParseProbability(text.substr(0, a));
    const double stop = ParseProbability(text.substr(a + 1, b - a - 1));
    const double count = ParseProbability(text.substr(b + 1));
    if (count < 1 || count != std::floor(count)) {
      throw ConfigError("grid count must be a positive integer");
    }
    const auto k = static_cast<int>(count);
    for (int i = 0; i < k; ++i) {
      out.push_back(k == 1 ? start : start + (stop - start) * i / (k - 1.0));
    }
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(ParseProbability(item));
  if (out.empty()) throw ConfigError("empty q list");
  return out;
}

ExperimentConfig ConfigFromJson(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  ExperimentConfig c;
  if (j.contains("graph")) {
    const json& g = j.at("graph");
    const std::string model = Get<std::string>(g, "model", "er");
    if (model == "er") {
      c.graph.model = GraphSource::Model::kErdosRenyi;
    } else if (model == "chung_lu") {
      c.graph.model = GraphSource::Model::kChungLu;
    } else if (model == "edge_list") {
      c.graph.model = GraphSource::Model::kEdgeList;
    } else {
      throw ConfigError("unknown graph model '" + model + "'");
    }
    c.graph.n = Get<NodeId>(g, "n", c.graph.n);
    if (g.contains("np")) c.graph.np = NumberOrString(g.at("np"), "np");
    if (g.contains("p")) {
      c.graph.np = NumberOrString(g.at("p"), "p") * (c.graph.n - 1.0);
    }
    if (g.contains("d")) c.graph.d = NumberOrString(g.at("d"), "d");
    if (g.contains("b")) c.graph.b = NumberOrString(g.at("b"), "b");
    c.graph.path = Get<std::string>(g, "path", "");
    if (g.contains("seed")) c.graph.seed = Get<std::uint64_t>(g, "seed", 0);
  }
  if (j.contains("q")) c.q = NumberOrString(j.at("q"), "q");
  if (j.contains("q_grid")) {
    const json& grid = j.at("q_grid");
    if (grid.is_string()) {
      c.q_grid = ParseQList(grid.get<std::string>());
    } else if (grid.is_array()) {
      for (const json& v : grid) c.q_grid.push_back(NumberOrString(v, "q_grid"));
    } else {
      throw ConfigError("'q_grid' must be an array or a string");
    }
  }
  c.s = Get<NodeId>(j, "s", c.s);
  if (j.contains("trials") && !j.at("trials").is_null()) {
    c.trials = Get<std::size_t>(j, "trials", 1);
  }
  c.calibration_trials =
      Get<std::size_t>(j, "calibration_trials", c.calibration_trials);
  c.seed = Get<std::uint64_t>(j, "seed", c.seed);
  if (j.contains("epsilon")) c.epsilon = NumberOrString(j.at("epsilon"), "epsilon");
  if (j.contains("thresholds")) {
    c.thresholds.clear();
    for (const json& v : j.at("thresholds")) {
      c.thresholds.push_back(NumberOrString(v, "thresholds"));
    }
  }
  c.protected_nodes = Get<std::vector<NodeId>>(j, "protected", {});
  const std::string policy = Get<std::string>(j, "seed_policy", "uniform");
  if (policy == "uniform") {
    c.seed_policy = SeedPolicy::kUniform;
  } else if (policy == "degree") {
    c.seed_policy = SeedPolicy::kDegreeProportional;
  } else {
    throw ConfigError("unknown seed_policy '" + policy + "'");
  }
  if (j.contains("resolution")) {
    c.resolution = NumberOrString(j.at("resolution"), "resolution");
  }
  if (j.contains("mechanism")) {
    const json& m = j.at("mechanism");
    try {
      c.mechanism.kind = ParseMechanismKind(Get<std::string>(m, "kind", "laplace"));
    } catch (const ParameterError& e) {
      throw ConfigError(e.what());
    }
    if (m.contains("scale")) {
      const json& scale = m.at("scale");
      if (scale.is_string() && scale.get<std::string>() == "sqrt_n") {
        c.mechanism.scale_is_sqrt_n = true;
      } else {
        c.mechanism.scale = NumberOrString(scale, "scale");
        c.mechanism.scale_is_sqrt_n = false;
      }
    }
    if (m.contains("w")) c.mechanism.w = NumberOrString(m.at("w"), "w");
    if (m.contains("epsilon")) {
      c.mechanism.epsilon = NumberOrString(m.at("epsilon"), "epsilon");
    }
    if (m.contains("flip_prob")) {
      c.mechanism.flip_prob = NumberOrString(m.at("flip_prob"), "flip_prob");
    }
    c.mechanism.clamp = Get<bool>(m, "clamp", false);
    c.mechanism.round = Get<bool>(m, "round", false);
  }
  c.out = Get<std::string>(j, "out", ".");
  c.threads = Get<unsigned>(j, "threads", 1);
  return c;
}

ExperimentConfig LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return ConfigFromJson(j);
}

std::string CanonicalConfigText(const ExperimentConfig& c) {
  json j;
  json g;
  g["model"] = ModelName(c.graph.model);
  switch (c.graph.model) {
    case GraphSource::Model::kErdosRenyi:
      g["n"] = c.graph.n;
      g["np"] = c.graph.np;
      break;
    case GraphSource::Model::kChungLu:
      g["n"] = c.graph.n;
      g["d"] = c.graph.d;
      g["b"] = c.graph.b;
      break;
    case GraphSource::Model::kEdgeList:
      g["path"] = c.graph.path.string();
      break;
  }
  if (c.graph.seed) g["seed"] = *c.graph.seed;
  j["graph"] = g;
  j["q"] = c.q;
  j["q_grid"] = c.q_grid;
  j["s"] = c.s;
  j["trials"] = c.trials ? json(*c.trials) : json(nullptr);
  j["calibration_trials"] = c.calibration_trials;
  j["seed"] = c.seed;
  j["epsilon"] = c.epsilon;
  j["thresholds"] = c.thresholds;
  j["protected"] = c.protected_nodes;
  j["seed_policy"] = PolicyName(c.seed_policy);
  j["resolution"] = c.resolution;
  json m;
  m["kind"] = ToString(c.mechanism.kind);
  m["scale"] = c.mechanism.scale_is_sqrt_n ? json("sqrt_n") : json(c.mechanism.scale);
  m["w"] = c.mechanism.w;
  m["epsilon"] = c.mechanism.epsilon;
  m["flip_prob"] = c.mechanism.flip_prob;
  m["clamp"] = c.mechanism.clamp;
  m["round"] = c.mechanism.round;
  j["mechanism"] = m;
  return j.dump();
}

std::uint64_t Fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t ConfigHash(const ExperimentConfig& config) {
  return Fnv1a64(CanonicalConfigText(config));
}

LoadedGraph BuildGraph(const ExperimentConfig& config) {
  const GraphSource& src = config.graph;
  const std::uint64_t seed =
      src.seed.value_or(ChildSeed(config.seed, kGraphStream));
  LoadedGraph out;
  switch (src.model) {
    case GraphSource::Model::kErdosRenyi:
      out.graph = GenerateErdosRenyi(src.n, src.p(), seed);
      out.name = fmt::format("ER({},{})", src.n, FormatNumber(src.np));
      break;
    case GraphSource::Model::kChungLu:
      out.weights = ChungLuWeights(src.n, src.d, src.b);
      out.graph = GenerateChungLu(*out.weights, seed);
      out.name = fmt::format("CL({},{},{})", src.n, FormatNumber(src.d),
                             FormatNumber(src.b));
      break;
    case GraphSource::Model::kEdgeList: {
      EdgeListLoad load = LoadEdgeList(src.path);
      out.graph = std::move(load.graph);
      out.duplicate_edges = load.duplicate_edges;
      out.self_loops = load.self_loops;
      out.name = src.path.stem().string();
      break;
    }
  }
  return out;
}

std::string FormatNumber(double value) {
  if (std::isnan(value)) return "nan";
  return fmt::format("{:.10g}", value);
}

void WriteCsv(const CsvTable& table, const ExperimentConfig& config,
              std::ostream& out) {
  out << "# icpriv " << kToolVersion << " config_hash="
      << fmt::format("{:016x}", ConfigHash(config)) << '\n';
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << QuoteCsv(cells[i]);
    }
    out << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

void WriteCsvFile(const CsvTable& table, const ExperimentConfig& config,
                  const std::string& filename) {
  std::filesystem::create_directories(config.out);
  const auto path = config.out / filename;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  WriteCsv(table, config, out);
}

ComponentStats RunComponents(const LoadedGraph& g,
                             const ExperimentConfig& config) {
  const std::size_t trials = config.TrialsOr(1000);
  const MembershipEstimate est = EstimateGiantMembership(
      g.graph, config.q, trials, config.seed, config.threads);
  ComponentStats s;
  s.network = g.name;
  s.n = g.graph.node_count();
  s.edges = g.graph.edge_count();
  s.q = config.q;
  s.trials = trials;
  s.mean_largest = Mean(est.largest_sizes);
  s.mean_second = Mean(est.second_sizes);
  s.sd_largest = StdDev(est.largest_sizes, s.mean_largest);
  s.sd_second = StdDev(est.second_sizes, s.mean_second);
  s.ties = est.ties_broken;
  return s;
}

CsvTable ToCsv(const ComponentStats& s) {
  CsvTable t;
  t.header = {"network", "n",       "edges",   "q",  "trials",
              "mean_c1", "mean_c2", "sd_c1",   "sd_c2", "ties"};
  t.rows.push_back({s.network, std::to_string(s.n), std::to_string(s.edges),
                    FormatNumber(s.q), std::to_string(s.trials),
                    FormatNumber(s.mean_largest), FormatNumber(s.mean_second),
                    FormatNumber(s.sd_largest), FormatNumber(s.sd_second),
                    std::to_string(s.ties)});
  return t;
}

std::vector<SweepPoint> RunSweep(const LoadedGraph& g,
                                 const ExperimentConfig& config) {
  const std::vector<double> grid =
      config.q_grid.empty() ? DefaultQGrid() : config.q_grid;
  const std::size_t trials = config.TrialsOr(50);
  const double n = std::max<double>(1.0, g.graph.node_count());
  std::vector<SweepPoint> out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    // Each grid point gets its own stream so that adding points to the grid
    // never changes the others.
    const MembershipEstimate est = EstimateGiantMembership(
        g.graph, grid[i], trials, ChildSeed(config.seed, i), config.threads);
    SweepPoint p;
    p.q = grid[i];
    p.trials = trials;
    const double m1 = Mean(est.largest_sizes);
    const double m2 = Mean(est.second_sizes);
    p.mean_largest_fraction = m1 / n;
    p.mean_second_fraction = m2 / n;
    const double root_t = std::sqrt(static_cast<double>(trials));
    p.se_largest_fraction = StdDev(est.largest_sizes, m1) / root_t / n;
    p.se_second_fraction = StdDev(est.second_sizes, m2) / root_t / n;
    out.push_back(p);
  }
  return out;
}

CsvTable ToCsv(const std::vector<SweepPoint>& sweep) {
  CsvTable t;
  t.header = {"q",         "trials",    "mean_c1_frac",
              "mean_c2_frac", "se_c1_frac", "se_c2_frac"};
  for (const SweepPoint& p : sweep) {
    t.rows.push_back({FormatNumber(p.q), std::to_string(p.trials),
                      FormatNumber(p.mean_largest_fraction),
                      FormatNumber(p.mean_second_fraction),
                      FormatNumber(p.se_largest_fraction),
                      FormatNumber(p.se_second_fraction)});
  }
  return t;
}

MembershipTable RunMembership(const LoadedGraph& g,
                              const ExperimentConfig& config) {
  MembershipTable t;
  t.network = g.name;
  t.n = g.graph.node_count();
  t.trials = config.TrialsOr(1000);
  t.q = config.q;
  t.estimate = EstimateGiantMembership(g.graph, config.q, t.trials, config.seed,
                                       config.threads);
  for (double threshold : config.thresholds) {
    ThresholdCount row;
    row.threshold = threshold;
    for (NodeId v = 0; v < g.graph.node_count(); ++v) {
      row.count += t.estimate.frequency(v) >= threshold;
    }
    row.percent = t.n == 0 ? 0.0 : 100.0 * row.count / t.n;
    t.rows.push_back(row);
  }
  return t;
}

CsvTable ToCsv(const MembershipTable& m) {
  CsvTable t;
  t.header = {"network", "n", "q", "trials", "threshold", "count", "percent"};
  for (const ThresholdCount& r : m.rows) {
    t.rows.push_back({m.network, std::to_string(m.n), FormatNumber(m.q),
                      std::to_string(m.trials), FormatNumber(r.threshold),
                      std::to_string(r.count), FormatNumber(r.percent)});
  }
  return t;
}

AuditReport RunAudit(const LoadedGraph& g, const ExperimentConfig& config) {
  AuditReport r;
  r.n = g.graph.node_count();
  r.trials = config.TrialsOr(2000);
  r.epsilon = config.epsilon;
  std::vector<NodeId> nodes = config.protected_nodes;
  if (nodes.empty()) {
    NodeId best = 0;
    for (NodeId v = 1; v < g.graph.node_count(); ++v) {
      if (g.graph.degree(v) > g.graph.degree(best)) best = v;
    }
    nodes.push_back(best);
  }
  for (NodeId v : nodes) {
    if (v >= g.graph.node_count()) {
      throw ConfigError("protected node " + std::to_string(v) +
                        " is not in the graph");
    }
  }
  const CascadeTrials trials = TrialsFor(config, r.trials);
  r.scale = WassersteinMechanismScale(g.graph, nodes, trials);
  r.implied_mean_noise = r.scale.w / r.epsilon;

  r.giant = ConditionalGiantDistributions(g.graph, trials);
  r.comparison = config.mechanism.Build(r.n);
  const EmpiricalDistribution z0 =
      PushThroughMechanism(r.giant.x0, r.comparison, r.n, config.resolution);
  const EmpiricalDistribution z1 =
      PushThroughMechanism(r.giant.x1, r.comparison, r.n, config.resolution);
  r.test = HypothesisTestError(z0, z1, r.giant.theta_mid);
  return r;
}

CsvTable ToCsv(const AuditReport& r) {
  CsvTable t;
  t.header = {"metric", "value"};
  auto add = [&t](const std::string& k, const std::string& v) {
    t.rows.push_back({k, v});
  };
  add("n", std::to_string(r.n));
  add("trials", std::to_string(r.trials));
  add("protected_nodes", std::to_string(r.scale.per_node.size() +
                                        r.scale.degenerate.size()));
  add("degenerate_nodes", std::to_string(r.scale.degenerate.size()));
  add("W", FormatNumber(r.scale.w));
  add("epsilon", FormatNumber(r.epsilon));
  add("wasserstein_laplace_scale", FormatNumber(r.implied_mean_noise));
  add("wasserstein_mean_abs_noise", FormatNumber(r.implied_mean_noise));
  add("W_over_n", FormatNumber(r.n ? r.scale.w / r.n : 0.0));
  add("theta0", FormatNumber(r.giant.theta0));
  add("theta1", FormatNumber(r.giant.theta1));
  add("theta_mid", FormatNumber(r.giant.theta_mid));
  add("theta_gap", FormatNumber(r.giant.theta1 - r.giant.theta0));
  add("giant_inactive_samples", std::to_string(r.giant.inactive_samples));
  add("giant_active_samples", std::to_string(r.giant.active_samples));
  add("comparison_kind", ToString(r.comparison.kind));
  add("comparison_scale", FormatNumber(r.comparison.scale));
  add("comparison_tvd", FormatNumber(r.test.tvd));
  add("comparison_test_error", FormatNumber(r.test.test_error));
  add("comparison_threshold_test_error",
      FormatNumber(r.test.threshold_test_error));
  return t;
}

CsvTable NodeCsv(const AuditReport& r) {
  CsvTable t;
  t.header = {"node", "w_inf", "inactive_samples", "active_samples",
              "degenerate"};
  for (const NodeConditionedCounts& c : r.scale.conditioned) {
    const auto it = r.scale.per_node.find(c.node);
    const bool degenerate = it == r.scale.per_node.end();
    t.rows.push_back({std::to_string(c.node),
                      degenerate ? "nan" : FormatNumber(it->second),
                      std::to_string(c.inactive_samples),
                      std::to_string(c.active_samples),
                      degenerate ? "1" : "0"});
  }
  return t;
}

AttackReport RunAttack(const LoadedGraph& g, const ExperimentConfig& config) {
  AttackEvaluationConfig a;
  a.q = config.q;
  a.seeds = config.s;
  a.mechanism = config.mechanism.Build(g.graph.node_count());
  a.floors = config.thresholds;
  a.trials = config.TrialsOr(1000);
  a.calibration_trials = config.calibration_trials;
  a.rng_seed = config.seed;
  a.threads = config.threads;
  a.policy = config.seed_policy;
  return EvaluateAttack(g.graph, a);
}

CsvTable ToCsv(const AttackReport& r) {
  CsvTable t;
  t.header = {"floor",   "targeted_nodes", "coverage",
              "predictions", "correct",     "precision"};
  for (const FloorAccuracy& f : r.floors) {
    t.rows.push_back({FormatNumber(f.floor), std::to_string(f.targeted_nodes),
                      FormatNumber(f.coverage), std::to_string(f.predictions),
                      std::to_string(f.correct), FormatNumber(f.precision)});
  }
  return t;
}

CsvTable SummaryCsv(const AttackReport& r) {
  CsvTable t;
  t.header = {"metric", "value"};
  t.rows.push_back({"trials", std::to_string(r.trials)});
  t.rows.push_back({"theta_mid", FormatNumber(r.theta_mid)});
  t.rows.push_back({"theta_from_midpoint", r.theta_from_midpoint ? "1" : "0"});
  t.rows.push_back({"e_M", FormatNumber(r.max_error)});
  t.rows.push_back({"giant_accuracy", FormatNumber(r.giant_accuracy)});
  t.rows.push_back({"giant_active_rate", FormatNumber(r.giant_active_rate)});
  t.rows.push_back({"prior_baseline", FormatNumber(r.prior_baseline)});
  return t;
}

std::vector<std::filesystem::path> RunCommand(const std::string& command,
                                              const ExperimentConfig& config,
                                              std::ostream& log) {
  config.Validate();
  const LoadedGraph g = BuildGraph(config);
  if (g.duplicate_edges || g.self_loops) {
    log << "warning: dropped " << g.duplicate_edges << " duplicate edge(s) and "
        << g.self_loops << " self-loop(s)\n";
  }
  log << "graph " << g.name << ": n=" << g.graph.node_count()
      << " edges=" << g.graph.edge_count() << '\n';

  std::vector<std::filesystem::path> written;
  auto emit = [&](const CsvTable& table, const std::string& name) {
    WriteCsvFile(table, config, name);
    written.push_back(config.out / name);
  };

  if (command == "components") {
    emit(ToCsv(RunComponents(g, config)), "components.csv");
  } else if (command == "sweep") {
    emit(ToCsv(RunSweep(g, config)), "sweep.csv");
  } else if (command == "membership") {
    emit(ToCsv(RunMembership(g, config)), "membership.csv");
  } else if (command == "audit") {
    const AuditReport r = RunAudit(g, config);
    if (!r.scale.degenerate.empty()) {
      log << "warning: " << r.scale.degenerate.size()
          << " protected node(s) had an unobserved secret and were skipped\n";
    }
    emit(ToCsv(r), "audit.csv");
    emit(NodeCsv(r), "audit_nodes.csv");
  } else if (command == "attack") {
    const AttackReport r = RunAttack(g, config);
    emit(ToCsv(r), "attack.csv");
    emit(SummaryCsv(r), "attack_summary.csv");
  } else if (command == "gen") {
    std::filesystem::create_directories(config.out);
    const auto path = config.out / "graph.txt";
    SaveCanonical(g.graph, path);
    written.push_back(path);
  } else {
    throw ConfigError("unknown subcommand '" + command + "'");
  }
  for (const auto& p : written) log << "wrote " << p.string() << '\n';
  return written;
}

}  // namespace icpriv::tools

// Copyright 2026 The pitnav Authors
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

// Command-line driver: train, sweep, replay, dump-tables.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pitnav/config.hpp"
#include "pitnav/export.hpp"
#include "pitnav/gridworld.hpp"
#include "pitnav/monte_carlo.hpp"
#include "pitnav/simulation.hpp"

namespace fs = std::filesystem;
using namespace pitnav;

namespace {

enum ExitCode { kOk = 0, kOtherError = 1, kConfigError = 2, kMapError = 3, kIoError = 4 };

struct CommonOptions {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string variant;
  bool no_motivation = false;
  std::string out = "out";
  std::optional<int> runs;
  std::optional<int> episodes;
  std::string format = "csv";
  std::vector<std::string> overrides;
};

void AddCommon(CLI::App* app, CommonOptions& o) {
  app->add_option("--config", o.config, "Configuration file (key = value lines)");
  app->add_option("--seed", o.seed, "Base random seed");
  app->add_option("--variant", o.variant,
                  "instrumental_mf | pit_mf | instrumental_mf_mb | pit_mf_mb");
  app->add_flag("--no-motivation", o.no_motivation, "Force M = 0");
  app->add_option("--out", o.out, "Output directory");
  app->add_option("--episodes", o.episodes, "Episodes per run");
  app->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--set", o.overrides, "Override a config key, e.g. --set learn.gamma=0.95");
}

ExperimentConfig BuildConfig(const CommonOptions& o) {
  ExperimentConfig cfg = o.config.empty() ? DefaultConfig() : LoadConfigFile(o.config);
  for (const std::string& kv : o.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + kv + "'");
    ApplyConfigOverride(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (o.seed) cfg.seed = *o.seed;
  if (!o.variant.empty()) cfg.variant = ParseVariant(o.variant);
  if (o.no_motivation) cfg.motivation_enabled = false;
  if (o.episodes) ApplyConfigOverride(cfg, "sim.n_episodes", std::to_string(*o.episodes));
  if (o.runs) ApplyConfigOverride(cfg, "sim.n_monte_carlo", std::to_string(*o.runs));
  cfg.Validate();
  return cfg;
}

std::shared_ptr<const GridMap> LoadMap(const ExperimentConfig& cfg) {
  return std::make_shared<const GridMap>(LoadMapFile(cfg.map_path, cfg.cell_size));
}

void EnsureDir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ExportError("cannot create " + dir.string() + ": " + ec.message());
}

void WriteArbitration(const fs::path& path, const std::vector<AgentLearner>& learners) {
  std::ostringstream out;
  out << "agent,p_mb\n";
  for (std::size_t i = 0; i < learners.size(); ++i) {
    out << i + 1 << ',' << FormatDouble(learners[i].reliability.p_mb) << '\n';
  }
  WriteTextFile(path, out.str());
}

void ReadArbitration(const fs::path& path, std::vector<AgentLearner>& learners) {
  if (!fs::exists(path)) return;
  std::istringstream in(ReadTextFile(path));
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    const int agent = std::stoi(line.substr(0, comma));
    if (comma == std::string::npos || agent < 1 || agent > static_cast<int>(learners.size())) {
      throw ExportError("malformed row in " + path.string());
    }
    learners[agent - 1].reliability.p_mb = std::stod(line.substr(comma + 1));
  }
}

void WriteHeatmaps(const fs::path& dir, const GridMap& map,
                   const std::vector<AgentLearner>& learners) {
  for (std::size_t i = 0; i < learners.size(); ++i) {
    std::ostringstream out;
    out << "x,y,v,max_q_mf,max_q_mb,greedy_mf\n";
    for (int s = 0; s < map.num_cells(); ++s) {
      const Cell c = map.CellAt(s);
      if (map.IsWall(c)) continue;
      const AgentLearner& l = learners[i];
      out << c.x << ',' << c.y << ',' << FormatDouble(l.v.at(s)) << ','
          << FormatDouble(l.q_mf.MaxValue(s)) << ',' << FormatDouble(l.q_mb.MaxValue(s)) << ','
          << ActionName(GreedyAction(l.q_mf.RowCopy(s))) << '\n';
    }
    WriteTextFile(dir / ("heatmap_agent" + std::to_string(i + 1) + ".csv"), out.str());
  }
}

void PrintSummary(const std::vector<EpisodeRecord>& eps) {
  const std::size_t window = std::min<std::size_t>(50, eps.size());
  double steps = 0.0;
  double succ = 0.0;
  for (std::size_t k = eps.size() - window; k < eps.size(); ++k) {
    steps += eps[k].steps;
    succ += eps[k].success ? 1.0 : 0.0;
  }
  std::cout << "episodes " << eps.size() << ", last " << window << ": mean steps "
            << steps / window << ", success rate " << succ / window << "\n";
}

int Train(const CommonOptions& o) {
  ExperimentConfig cfg = BuildConfig(o);
  auto map = LoadMap(cfg);
  const fs::path dir(o.out);
  EnsureDir(dir);
  Simulation sim(cfg, map);
  RunResult run{0, cfg.seed, sim.RunTraining()};
  ExportRuns({run}, UsesModelBased(cfg.variant), ParseExportFormat(o.format), dir, false);
  std::ostringstream tables;
  WriteTablesCsv(tables, *map, sim.learners());
  WriteTextFile(dir / "tables.csv", tables.str());
  WriteArbitration(dir / "arbitration.csv", sim.learners());
  WriteTextFile(dir / "config.cfg", DumpConfig(cfg));
  PrintSummary(run.episodes);
  return kOk;
}

int Sweep(const CommonOptions& o) {
  ExperimentConfig cfg = BuildConfig(o);
  auto map = LoadMap(cfg);
  const fs::path dir(o.out);
  EnsureDir(dir);
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<RunResult> runs = RunMonteCarlo(cfg, map);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ExportRuns(runs, UsesModelBased(cfg.variant), ParseExportFormat(o.format), dir, true);
  WriteTextFile(dir / "config.cfg", DumpConfig(cfg));
  const auto agg = Aggregate(runs);
  if (!agg.empty()) {
    const auto& last = agg.back();
    std::cout << runs.size() << " runs of " << VariantName(cfg.variant) << " in " << secs
              << " s; final episode median steps " << last.steps.median << ", success rate "
              << last.success_rate << "\n";
  }
  return kOk;
}

// Greedy rollout from the tables of a finished `train`.
int Replay(const CommonOptions& o, const std::string& in_dir) {
  const fs::path in(in_dir);
  CommonOptions opts = o;
  if (opts.config.empty()) opts.config = (in / "config.cfg").string();
  ExperimentConfig cfg = BuildConfig(opts);
  auto map = LoadMap(cfg);
  Simulation sim(cfg, map);
  {
    std::istringstream tables(ReadTextFile(in / "tables.csv"));
    ReadTablesCsv(tables, *map, sim.mutable_learners());
  }
  ReadArbitration(in / "arbitration.csv", sim.mutable_learners());
  const RolloutResult roll = sim.GreedyRollout(cfg.seed);

  RunResult run;
  EpisodeRecord rec;
  rec.episode = 0;
  rec.steps = roll.steps;
  rec.success = roll.success;
  rec.final_peb = roll.final_peb;
  rec.trajectories = roll.trajectories;
  run.episodes.push_back(rec);
  const fs::path dir(o.out);
  EnsureDir(dir);
  std::ostringstream traj;
  WriteTrajectoryCsv(traj, {run});
  WriteTextFile(dir / "traj.csv", traj.str());
  std::cout << "greedy rollout: " << roll.steps << " steps, "
            << (roll.success ? "success" : "no success") << ", final PEB "
            << FormatDouble(roll.final_peb) << "\n";
  return kOk;
}

int DumpTables(const CommonOptions& o, const std::string& in_dir) {
  const fs::path dir(o.out);
  EnsureDir(dir);
  if (!in_dir.empty()) {
    const fs::path in(in_dir);
    CommonOptions opts = o;
    if (opts.config.empty()) opts.config = (in / "config.cfg").string();
    ExperimentConfig cfg = BuildConfig(opts);
    auto map = LoadMap(cfg);
    Simulation sim(cfg, map);
    std::istringstream tables(ReadTextFile(in / "tables.csv"));
    ReadTablesCsv(tables, *map, sim.mutable_learners());
    WriteHeatmaps(dir, *map, sim.learners());
    return kOk;
  }
  ExperimentConfig cfg = BuildConfig(o);
  auto map = LoadMap(cfg);
  Simulation sim(cfg, map);
  sim.RunTraining();
  std::ostringstream tables;
  WriteTablesCsv(tables, *map, sim.learners());
  WriteTextFile(dir / "tables.csv", tables.str());
  WriteHeatmaps(dir, *map, sim.learners());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-agent Pavlovian-instrumental navigation for target localization"};
  app.require_subcommand(1);

  CommonOptions train_opts, sweep_opts, replay_opts, dump_opts;
  std::string replay_in, dump_in;

  CLI::App* train = app.add_subcommand("train", "Train one run and write its CSVs and tables");
  AddCommon(train, train_opts);

  CLI::App* sweep = app.add_subcommand("sweep", "Monte Carlo runs with aggregated statistics");
  AddCommon(sweep, sweep_opts);
  sweep->add_option("--runs", sweep_opts.runs, "Number of Monte Carlo runs");

  CLI::App* replay = app.add_subcommand("replay", "Greedy trajectory from a saved train output");
  AddCommon(replay, replay_opts);
  replay->add_option("--in", replay_in, "Directory written by train")->required();

  CLI::App* dump = app.add_subcommand("dump-tables", "Q/V tables and per-agent heatmap CSVs");
  AddCommon(dump, dump_opts);
  dump->add_option("--in", dump_in, "Directory written by train (skip training)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*train) return Train(train_opts);
    if (*sweep) return Sweep(sweep_opts);
    if (*replay) return Replay(replay_opts, replay_in);
    if (*dump) return DumpTables(dump_opts, dump_in);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const MapError& e) {
    std::cerr << "map error: " << e.what() << "\n";
    return kMapError;
  } catch (const ExportError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOtherError;
  }
  return kOtherError;
}

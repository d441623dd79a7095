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

#ifndef PITNAV_EXPORT_HPP_
#define PITNAV_EXPORT_HPP_

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "pitnav/monte_carlo.hpp"
#include "pitnav/simulation.hpp"

namespace pitnav {

class ExportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ExportFormat { kCsv, kJson };

ExportFormat ParseExportFormat(const std::string& name);

// CSV headers, fixed.
inline constexpr const char* kEpisodesHeader =
    "run,episode,steps,success,final_peb,collisions,gps_denied_steps";
inline constexpr const char* kPmbHeader = "run,episode,agent,mean_pmb";
inline constexpr const char* kTrajHeader = "run,episode,agent,step,x,y";
inline constexpr const char* kTablesHeader = "agent,x,y,action,q_mf,q_mb,v";
inline constexpr const char* kAggregateHeader =
    "episode,steps_mean,steps_median,steps_min,steps_max,pmb_mean,pmb_median,pmb_min,pmb_max,"
    "success_rate";
inline constexpr const char* kScheduleHeader = "episode,alpha,kappa0";

void WriteEpisodesCsv(std::ostream& out, const std::vector<RunResult>& runs);
// Rows only for model-based variants; otherwise header-only.
void WritePmbCsv(std::ostream& out, const std::vector<RunResult>& runs, bool model_based);
void WriteTrajectoryCsv(std::ostream& out, const std::vector<RunResult>& runs);
void WriteTablesCsv(std::ostream& out, const GridMap& map,
                    const std::vector<AgentLearner>& learners);
void WriteAggregateCsv(std::ostream& out, const std::vector<EpisodeAggregate>& agg);
void WriteScheduleCsv(std::ostream& out, const std::vector<RunResult>& runs);

struct EpisodeRow {
  int run = 0;
  int episode = 0;
  int steps = 0;
  bool success = false;
  double final_peb = 0.0;
  int collisions = 0;
  int gps_denied_steps = 0;
  friend bool operator==(const EpisodeRow&, const EpisodeRow&) = default;
};

std::vector<EpisodeRow> ReadEpisodesCsv(std::istream& in);

// Loads q_mf, q_mb and v from a tables CSV into existing learners.
void ReadTablesCsv(std::istream& in, const GridMap& map, std::vector<AgentLearner>& learners);

struct TrajectoryPoint {
  int run = 0;
  int episode = 0;
  int agent = 0;
  int step = 0;
  Cell cell;
};
std::vector<TrajectoryPoint> ReadTrajectoryCsv(std::istream& in);

// JSON document with one object per run and per episode, trajectories included.
std::string RunsToJson(const std::vector<RunResult>& runs);
std::vector<RunResult> RunsFromJson(const std::string& text);

// Writes episodes, pmb, traj and schedule files (or episodes.json) into `dir`.
// `aggregate` adds aggregate.csv.
void ExportRuns(const std::vector<RunResult>& runs, bool model_based, ExportFormat format,
                const std::filesystem::path& dir, bool aggregate);

void WriteTextFile(const std::filesystem::path& path, const std::string& text);
std::string ReadTextFile(const std::filesystem::path& path);

}  // namespace pitnav

#endif  // PITNAV_EXPORT_HPP_

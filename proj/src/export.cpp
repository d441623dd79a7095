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

#include "pitnav/export.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace pitnav {

namespace {

using json = nlohmann::json;

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

template <typename T>
T Parse(const std::string& s) {
  T v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ExportError("malformed CSV field '" + s + "'");
  }
  return v;
}

// Reads rows after checking the header; calls `row` with each split line.
template <typename Fn>
void ForEachRow(std::istream& in, const char* header, std::size_t width, Fn row) {
  std::string line;
  if (!std::getline(in, line)) throw ExportError("missing CSV header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) throw ExportError("unexpected CSV header '" + line + "'");
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto fields = SplitCsv(line);
    if (fields.size() != width) throw ExportError("wrong field count in row '" + line + "'");
    row(fields);
  }
}

double MeanAcrossAgents(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return v.empty() ? 0.0 : s / v.size();
}

json DoubleOrNull(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double DoubleFromJson(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

}  // namespace

ExportFormat ParseExportFormat(const std::string& name) {
  if (name == "csv") return ExportFormat::kCsv;
  if (name == "json") return ExportFormat::kJson;
  throw ExportError("unknown export format '" + name + "' (expected csv or json)");
}

void WriteEpisodesCsv(std::ostream& out, const std::vector<RunResult>& runs) {
  out << kEpisodesHeader << '\n';
  for (const auto& r : runs) {
    for (const auto& e : r.episodes) {
      out << r.run << ',' << e.episode << ',' << e.steps << ',' << (e.success ? 1 : 0) << ','
          << FormatDouble(e.final_peb) << ',' << e.collisions << ',' << e.gps_denied_steps
          << '\n';
    }
  }
}

void WritePmbCsv(std::ostream& out, const std::vector<RunResult>& runs, bool model_based) {
  out << kPmbHeader << '\n';
  if (!model_based) return;
  for (const auto& r : runs) {
    for (const auto& e : r.episodes) {
      for (std::size_t i = 0; i < e.mean_pmb.size(); ++i) {
        out << r.run << ',' << e.episode << ',' << i + 1 << ',' << FormatDouble(e.mean_pmb[i])
            << '\n';
      }
    }
  }
}

void WriteTrajectoryCsv(std::ostream& out, const std::vector<RunResult>& runs) {
  out << kTrajHeader << '\n';
  for (const auto& r : runs) {
    for (const auto& e : r.episodes) {
      for (std::size_t i = 0; i < e.trajectories.size(); ++i) {
        const auto& path = e.trajectories[i];
        for (std::size_t t = 0; t < path.size(); ++t) {
          out << r.run << ',' << e.episode << ',' << i + 1 << ',' << t << ',' << path[t].x << ','
              << path[t].y << '\n';
        }
      }
    }
  }
}

void WriteTablesCsv(std::ostream& out, const GridMap& map,
                    const std::vector<AgentLearner>& learners) {
  out << kTablesHeader << '\n';
  for (std::size_t i = 0; i < learners.size(); ++i) {
    const AgentLearner& l = learners[i];
    for (int s = 0; s < map.num_cells(); ++s) {
      const Cell c = map.CellAt(s);
      if (map.IsWall(c)) continue;
      for (Action a : kAllActions) {
        out << i + 1 << ',' << c.x << ',' << c.y << ',' << ActionName(a) << ','
            << FormatDouble(l.q_mf.at(s, a)) << ',' << FormatDouble(l.q_mb.at(s, a)) << ','
            << FormatDouble(l.v.at(s)) << '\n';
      }
    }
  }
}

void WriteAggregateCsv(std::ostream& out, const std::vector<EpisodeAggregate>& agg) {
  out << kAggregateHeader << '\n';
  for (const auto& a : agg) {
    out << a.episode << ',' << FormatDouble(a.steps.mean) << ',' << FormatDouble(a.steps.median)
        << ',' << FormatDouble(a.steps.min) << ',' << FormatDouble(a.steps.max) << ','
        << FormatDouble(a.pmb.mean) << ',' << FormatDouble(a.pmb.median) << ','
        << FormatDouble(a.pmb.min) << ',' << FormatDouble(a.pmb.max) << ','
        << FormatDouble(a.success_rate) << '\n';
  }
}

void WriteScheduleCsv(std::ostream& out, const std::vector<RunResult>& runs) {
  out << kScheduleHeader << '\n';
  if (runs.empty()) return;
  for (const auto& e : runs.front().episodes) {
    out << e.episode << ',' << FormatDouble(e.alpha) << ',' << FormatDouble(e.kappa0) << '\n';
  }
}

std::vector<EpisodeRow> ReadEpisodesCsv(std::istream& in) {
  std::vector<EpisodeRow> rows;
  ForEachRow(in, kEpisodesHeader, 7, [&](const std::vector<std::string>& f) {
    EpisodeRow r;
    r.run = Parse<int>(f[0]);
    r.episode = Parse<int>(f[1]);
    r.steps = Parse<int>(f[2]);
    r.success = Parse<int>(f[3]) != 0;
    r.final_peb = Parse<double>(f[4]);
    r.collisions = Parse<int>(f[5]);
    r.gps_denied_steps = Parse<int>(f[6]);
    rows.push_back(r);
  });
  return rows;
}

void ReadTablesCsv(std::istream& in, const GridMap& map, std::vector<AgentLearner>& learners) {
  ForEachRow(in, kTablesHeader, 7, [&](const std::vector<std::string>& f) {
    const int agent = Parse<int>(f[0]);
    const Cell c{Parse<int>(f[1]), Parse<int>(f[2])};
    if (agent < 1 || agent > static_cast<int>(learners.size()) || !map.InBounds(c)) {
      throw ExportError("tables row out of range");
    }
    Action action = Action::kHover;
    bool found = false;
    for (Action a : kAllActions) {
      if (ActionName(a) == f[3]) {
        action = a;
        found = true;
      }
    }
    if (!found) throw ExportError("unknown action '" + f[3] + "'");
    AgentLearner& l = learners[agent - 1];
    const int s = map.Index(c);
    l.q_mf.at(s, action) = Parse<double>(f[4]);
    l.q_mb.at(s, action) = Parse<double>(f[5]);
    l.v.at(s) = Parse<double>(f[6]);
  });
}

std::vector<TrajectoryPoint> ReadTrajectoryCsv(std::istream& in) {
  std::vector<TrajectoryPoint> pts;
  ForEachRow(in, kTrajHeader, 6, [&](const std::vector<std::string>& f) {
    pts.push_back({Parse<int>(f[0]), Parse<int>(f[1]), Parse<int>(f[2]), Parse<int>(f[3]),
                   Cell{Parse<int>(f[4]), Parse<int>(f[5])}});
  });
  return pts;
}

std::string RunsToJson(const std::vector<RunResult>& runs) {
  json doc = json::array();
  for (const auto& r : runs) {
    json jr;
    jr["run"] = r.run;
    jr["seed"] = r.seed;
    json eps = json::array();
    for (const auto& e : r.episodes) {
      json je;
      je["episode"] = e.episode;
      je["steps"] = e.steps;
      je["success"] = e.success;
      je["final_peb"] = DoubleOrNull(e.final_peb);
      je["collisions"] = e.collisions;
      je["gps_denied_steps"] = e.gps_denied_steps;
      je["gate_rewards"] = e.gate_rewards;
      je["alpha"] = e.alpha;
      je["kappa0"] = e.kappa0;
      je["mean_pmb"] = e.mean_pmb;
      je["pmb_agent_mean"] = MeanAcrossAgents(e.mean_pmb);
      json traj = json::array();
      for (const auto& path : e.trajectories) {
        json p = json::array();
        for (const Cell c : path) p.push_back({c.x, c.y});
        traj.push_back(std::move(p));
      }
      je["trajectories"] = std::move(traj);
      eps.push_back(std::move(je));
    }
    jr["episodes"] = std::move(eps);
    doc.push_back(std::move(jr));
  }
  return doc.dump(1) + "\n";
}

std::vector<RunResult> RunsFromJson(const std::string& text) {
  std::vector<RunResult> runs;
  try {
    const json doc = json::parse(text);
    for (const auto& jr : doc) {
      RunResult r;
      r.run = jr.at("run").get<int>();
      r.seed = jr.at("seed").get<std::uint64_t>();
      for (const auto& je : jr.at("episodes")) {
        EpisodeRecord e;
        e.episode = je.at("episode").get<int>();
        e.steps = je.at("steps").get<int>();
        e.success = je.at("success").get<bool>();
        e.final_peb = DoubleFromJson(je.at("final_peb"));
        e.collisions = je.at("collisions").get<int>();
        e.gps_denied_steps = je.at("gps_denied_steps").get<int>();
        e.gate_rewards = je.at("gate_rewards").get<int>();
        e.alpha = je.at("alpha").get<double>();
        e.kappa0 = je.at("kappa0").get<double>();
        e.mean_pmb = je.at("mean_pmb").get<std::vector<double>>();
        for (const auto& p : je.at("trajectories")) {
          std::vector<Cell> path;
          for (const auto& c : p) path.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
          e.trajectories.push_back(std::move(path));
        }
        r.episodes.push_back(std::move(e));
      }
      runs.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw ExportError(std::string("malformed run JSON: ") + e.what());
  }
  return runs;
}

void WriteTextFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ExportError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw ExportError("write failed for " + path.string());
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ExportError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void ExportRuns(const std::vector<RunResult>& runs, bool model_based, ExportFormat format,
                const std::filesystem::path& dir, bool aggregate) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ExportError("cannot create " + dir.string() + ": " + ec.message());

  auto emit = [&](const char* name, auto writer) {
    std::ostringstream out;
    writer(out);
    WriteTextFile(dir / name, out.str());
  };

  if (format == ExportFormat::kJson) {
    WriteTextFile(dir / "episodes.json", RunsToJson(runs));
  } else {
    emit("episodes.csv", [&](std::ostream& o) { WriteEpisodesCsv(o, runs); });
    emit("pmb.csv", [&](std::ostream& o) { WritePmbCsv(o, runs, model_based); });
    emit("traj.csv", [&](std::ostream& o) { WriteTrajectoryCsv(o, runs); });
    emit("schedule.csv", [&](std::ostream& o) { WriteScheduleCsv(o, runs); });
  }
  if (aggregate) {
    emit("aggregate.csv", [&](std::ostream& o) { WriteAggregateCsv(o, Aggregate(runs)); });
  }
}

}  // namespace pitnav

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

#include "pitnav/gridworld.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

namespace pitnav {

std::string_view ActionName(Action a) {
  switch (a) {
    case Action::kUp: return "up";
    case Action::kDown: return "down";
    case Action::kLeft: return "left";
    case Action::kRight: return "right";
    case Action::kHover: return "hover";
  }
  return "?";
}

GridMap::GridMap(int width, int height, double cell_size,
                 std::vector<CellClass> cells, Cell target,
                 std::vector<Cell> agent_starts)
    : width_(width),
      height_(height),
      cell_size_(cell_size),
      cells_(std::move(cells)),
      los_(cells_.size(), 0),
      target_(target),
      agent_starts_(std::move(agent_starts)) {
  if (width_ <= 0 || height_ <= 0) throw MapError("map must be non-empty");
  if (cell_size_ <= 0.0) throw MapError("cell size must be positive");
  if (static_cast<int>(cells_.size()) != width_ * height_) {
    throw MapError("cell count does not match map dimensions");
  }
  if (!InBounds(target_)) throw MapError("target outside map");
  if (ClassOf(target_) != CellClass::kFree) throw MapError("target must be on a free cell");
  for (std::size_t i = 0; i < agent_starts_.size(); ++i) {
    const Cell s = agent_starts_[i];
    if (!InBounds(s)) throw MapError("agent start outside map");
    if (ClassOf(s) != CellClass::kFree) {
      throw MapError("agent start " + std::to_string(i + 1) + " is not a free cell");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (agent_starts_[j] == s) throw MapError("agent starts must be distinct");
    }
  }
  ComputeLosRegion();
}

// The line-of-sight region is the room holding the target: everything
// reachable from the target without crossing a wall or a gate, plus the
// gates bordering it. Gates are not expanded, so the region stays inside
// the room.
void GridMap::ComputeLosRegion() {
  std::vector<int> frontier{Index(target_)};
  los_[Index(target_)] = 1;
  while (!frontier.empty()) {
    const Cell c = CellAt(frontier.back());
    frontier.pop_back();
    for (Action a : {Action::kUp, Action::kDown, Action::kLeft, Action::kRight}) {
      const Cell d = Displacement(a);
      const Cell n{c.x + d.x, c.y + d.y};
      if (!InBounds(n)) continue;
      const CellClass k = ClassOf(n);
      if (k == CellClass::kWall || los_[Index(n)]) continue;
      los_[Index(n)] = 1;
      if (k != CellClass::kGate) frontier.push_back(Index(n));
    }
  }
}

int GridMap::NumLosCells() const {
  return static_cast<int>(std::count(los_.begin(), los_.end(), 1));
}

double GridMap::Distance(Cell a, Cell b) const {
  const double dx = (a.x - b.x) * cell_size_;
  const double dy = (a.y - b.y) * cell_size_;
  return std::hypot(dx, dy);
}

GridMap LoadMap(std::string_view text, double cell_size) {
  std::vector<std::string> rows;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(line);
  }
  if (rows.empty()) throw MapError("map is empty");
  const int width = static_cast<int>(rows.front().size());
  const int height = static_cast<int>(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != width) {
      throw MapError("map is not rectangular: row " + std::to_string(r) + " has " +
                     std::to_string(rows[r].size()) + " columns, expected " +
                     std::to_string(width));
    }
  }

  std::vector<CellClass> cells(static_cast<std::size_t>(width) * height);
  std::optional<Cell> target;
  std::array<std::optional<Cell>, 9> starts;
  for (int r = 0; r < height; ++r) {
    const int y = height - 1 - r;
    for (int x = 0; x < width; ++x) {
      const char g = rows[r][x];
      CellClass k = CellClass::kFree;
      switch (g) {
        case '#': k = CellClass::kWall; break;
        case '.': break;
        case 'G': k = CellClass::kGate; break;
        case 'D': k = CellClass::kGpsDenied; break;
        case 'T':
          if (target) throw MapError("map has more than one target");
          target = Cell{x, y};
          break;
        default:
          if (g >= '1' && g <= '9') {
            auto& slot = starts[g - '1'];
            if (slot) throw MapError(std::string("duplicate agent start '") + g + "'");
            slot = Cell{x, y};
          } else {
            throw MapError(std::string("unknown glyph '") + g + "' at row " +
                           std::to_string(r) + ", column " + std::to_string(x));
          }
      }
      cells[y * width + x] = k;
    }
  }
  if (!target) throw MapError("map has no target");

  std::vector<Cell> agent_starts;
  bool gap = false;
  for (const auto& s : starts) {
    if (!s) {
      gap = true;
      continue;
    }
    if (gap) throw MapError("agent start labels must be consecutive from '1'");
    agent_starts.push_back(*s);
  }
  return GridMap(width, height, cell_size, std::move(cells), *target,
                 std::move(agent_starts));
}

GridMap LoadMapFile(const std::filesystem::path& path, double cell_size) {
  std::ifstream in(path);
  if (!in) throw MapError("cannot open map file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return LoadMap(buf.str(), cell_size);
  } catch (const MapError& e) {
    throw MapError(path.string() + ": " + e.what());
  }
}

Cell PredictedNext(const GridMap& map, Cell pos, Action a) {
  const Cell d = Displacement(a);
  return {std::clamp(pos.x + d.x, 0, map.width() - 1),
          std::clamp(pos.y + d.y, 0, map.height() - 1)};
}

TransitionOutcome StepAgent(const GridMap& map, const Occupancy& occupied,
                            const AgentState& s, Action a, double d_safe) {
  if (a == Action::kHover) return {s.pos, false, CollisionKind::kNone};

  const Cell d = Displacement(a);
  const Cell want{s.pos.x + d.x, s.pos.y + d.y};
  auto blocked = [&](CollisionKind k) { return TransitionOutcome{s.pos, true, k}; };

  if (!map.InBounds(want)) return blocked(CollisionKind::kBoundary);
  if (map.IsWall(want)) return blocked(CollisionKind::kWall);
  if (occupied.Contains(want)) return blocked(CollisionKind::kAgent);
  if (map.Distance(want, map.target()) <= d_safe) {
    return blocked(CollisionKind::kTargetProximity);
  }
  return {want, false, CollisionKind::kNone};
}

int Manhattan(Cell a, Cell b) { return std::abs(a.x - b.x) + std::abs(a.y - b.y); }

CellFlags Classify(const GridMap& map, Cell pos) {
  return {map.IsGate(pos), map.IsGpsDenied(pos), map.IsLos(pos)};
}

}  // namespace pitnav

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

#ifndef PITNAV_GRIDWORLD_HPP_
#define PITNAV_GRIDWORLD_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pitnav {

// Grid coordinates: x grows to the right, y grows upward. (0,0) is the
// bottom-left cell.
struct Cell {
  int x = 0;
  int y = 0;

  friend constexpr bool operator==(Cell, Cell) = default;
};

enum class CellClass : std::uint8_t { kFree, kWall, kGate, kGpsDenied };

enum class Action : std::uint8_t { kUp = 0, kDown, kLeft, kRight, kHover };

inline constexpr int kNumActions = 5;
inline constexpr std::array<Action, kNumActions> kAllActions = {
    Action::kUp, Action::kDown, Action::kLeft, Action::kRight, Action::kHover};

constexpr int ActionIndex(Action a) { return static_cast<int>(a); }

// Unit displacement in cells; multiply by the cell size for meters.
constexpr Cell Displacement(Action a) {
  switch (a) {
    case Action::kUp: return {0, 1};
    case Action::kDown: return {0, -1};
    case Action::kLeft: return {-1, 0};
    case Action::kRight: return {1, 0};
    case Action::kHover: return {0, 0};
  }
  return {0, 0};
}

std::string_view ActionName(Action a);

class MapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Static environment. Immutable once loaded, so one instance can be shared by
// every concurrent run.
class GridMap {
 public:
  GridMap(int width, int height, double cell_size, std::vector<CellClass> cells,
          Cell target, std::vector<Cell> agent_starts);

  int width() const { return width_; }
  int height() const { return height_; }
  int num_cells() const { return width_ * height_; }
  double cell_size() const { return cell_size_; }
  Cell target() const { return target_; }
  const std::vector<Cell>& agent_starts() const { return agent_starts_; }

  bool InBounds(Cell c) const {
    return c.x >= 0 && c.y >= 0 && c.x < width_ && c.y < height_;
  }
  int Index(Cell c) const { return c.y * width_ + c.x; }
  Cell CellAt(int index) const { return {index % width_, index / width_}; }

  CellClass ClassOf(Cell c) const { return cells_[Index(c)]; }
  bool IsWall(Cell c) const { return ClassOf(c) == CellClass::kWall; }
  bool IsGate(Cell c) const { return ClassOf(c) == CellClass::kGate; }
  bool IsGpsDenied(Cell c) const { return ClassOf(c) == CellClass::kGpsDenied; }
  bool IsLos(Cell c) const { return los_[Index(c)] != 0; }
  int NumLosCells() const;

  // Largest Manhattan distance between any two cells of the grid.
  int MaxManhattan() const { return (width_ - 1) + (height_ - 1); }

  // Cell center in meters.
  std::array<double, 2> Position(Cell c) const {
    return {(c.x + 0.5) * cell_size_, (c.y + 0.5) * cell_size_};
  }
  // Euclidean distance between cell centers in meters.
  double Distance(Cell a, Cell b) const;

 private:
  void ComputeLosRegion();

  int width_;
  int height_;
  double cell_size_;
  std::vector<CellClass> cells_;
  std::vector<std::uint8_t> los_;
  Cell target_;
  std::vector<Cell> agent_starts_;
};

// Parses the text map format: one row per line, row 0 is the top of the map.
// '#' wall, '.' free, 'G' gate, 'D' GPS-denied, 'T' target, '1'..'9' agent
// starts (the cell itself is free).
GridMap LoadMap(std::string_view text, double cell_size = 1.0);
GridMap LoadMapFile(const std::filesystem::path& path, double cell_size = 1.0);

// Geometric successor: displacement clamped to the grid. Ignores walls and
// other agents.
Cell PredictedNext(const GridMap& map, Cell pos, Action a);

enum class CollisionKind : std::uint8_t {
  kNone,
  kWall,
  kAgent,
  kTargetProximity,
  kBoundary
};

struct TransitionOutcome {
  Cell next_pos;
  bool collided = false;
  CollisionKind collision_kind = CollisionKind::kNone;
};

struct AgentState {
  Cell pos;
  double battery = 0.0;
  int elapsed = 0;
};

// Cells currently held by other agents, indexed like the map.
class Occupancy {
 public:
  explicit Occupancy(const GridMap& map) : taken_(map.num_cells(), 0), map_(&map) {}

  bool Contains(Cell c) const { return map_->InBounds(c) && taken_[map_->Index(c)] != 0; }
  void Add(Cell c) { ++taken_[map_->Index(c)]; }
  void Remove(Cell c) { --taken_[map_->Index(c)]; }

 private:
  std::vector<int> taken_;
  const GridMap* map_;
};

// Applies one action. Blocked moves leave the agent in place and report the
// collision. `occupied` must not contain the agent's own cell.
TransitionOutcome StepAgent(const GridMap& map, const Occupancy& occupied,
                            const AgentState& s, Action a, double d_safe);

int Manhattan(Cell a, Cell b);

struct CellFlags {
  bool is_gate = false;
  bool is_gps_denied = false;
  bool is_los = false;
};

CellFlags Classify(const GridMap& map, Cell pos);

}  // namespace pitnav

#endif  // PITNAV_GRIDWORLD_HPP_

#pragma once

#include "smtl/rational.hpp"

#include <compare>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace smtl::grid {

enum class Policy : std::uint8_t { MTL, SMTL };

std::string_view to_string(Policy p);
/// Accepts "MTL"/"SMTL" in any case. Throws std::invalid_argument.
Policy parse_policy(std::string_view text);

struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline int manhattan(Cell a, Cell b) { return std::abs(a.row - b.row) + std::abs(a.col - b.col); }

struct SimConfig {
  int grid_size = 5;
  std::optional<int> agent_count; ///< defaults to grid_size
  double obstacle_density = 0.10;
  std::uint64_t seed = 0;
  std::optional<int> max_steps; ///< defaults to 8 * grid_size^2
  Policy policy = Policy::SMTL;
  int replan_patience = 3;

  int agents() const { return agent_count.value_or(grid_size); }
  int step_limit() const { return max_steps.value_or(8 * grid_size * grid_size); }
  /// Throws std::invalid_argument.
  void validate() const;
};

class Grid {
public:
  explicit Grid(int size = 0) : size_(size), blocked_(static_cast<std::size_t>(size * size), 0) {}

  int size() const noexcept { return size_; }
  bool inside(Cell c) const noexcept {
    return c.row >= 0 && c.col >= 0 && c.row < size_ && c.col < size_;
  }
  std::size_t index(Cell c) const noexcept {
    return static_cast<std::size_t>(c.row) * static_cast<std::size_t>(size_) +
           static_cast<std::size_t>(c.col);
  }
  bool blocked(Cell c) const { return blocked_[index(c)] != 0; }
  void set_blocked(Cell c, bool b) { blocked_[index(c)] = b ? 1 : 0; }
  bool passable(Cell c) const { return inside(c) && !blocked(c); }
  std::size_t free_cells() const;

private:
  int size_;
  std::vector<std::uint8_t> blocked_;
};

/// Shortest 4-connected path from `from` to `to`, excluding `from` itself.
/// Cells with a non-zero entry in extra_blocked are treated as obstacles.
/// Neighbours are expanded up, down, left, right.
std::optional<std::vector<Cell>> shortest_path(const Grid& grid, Cell from, Cell to,
                                               const std::vector<std::uint8_t>* extra_blocked = nullptr);

struct AgentState {
  int id = 0;
  Cell position;
  Cell goal;
  std::deque<Cell> path; ///< remaining cells, next move first; filled on the first decision
  int steps_taken = 0;
  int waits = 0;
  bool reached = false;

  int shortest = 0;          ///< BFS distance start to goal on the obstacle grid
  int consecutive_waits = 0; ///< SMTL replanning counter
  bool planned = false;      ///< initial BFS plan made (inside the timed decision)
};

struct World {
  SimConfig config;
  Grid grid;
  std::vector<AgentState> agents;
  int t = 0;

  long long collisions = 0;
  int collisions_this_step = 0;
  std::vector<int> waits_this_step;

  double compute_ns = 0.0; ///< wall-clock inside policy decisions
  long long decisions = 0;

  bool finished() const;
  std::vector<Cell> positions() const;
};

/// Deterministic in cfg.seed. Throws WorldGenerationFailed when no field
/// with reachable, distinct starts and goals turns up within the retry budget.
World generate_world(const SimConfig& cfg);

/// Goal-directed moves along shortest paths planned on each agent's first
/// decision, ignoring other agents. Counts every pair of agents sharing a
/// cell after the move.
void step_mtl(World& world);

/// Priority-ordered moves (ascending id) into cells that are free at the
/// moment the agent acts; blocked agents wait and, after replan_patience
/// consecutive waits, replan around occupied cells. Throws
/// InvariantViolation if two agents ever share a cell.
void step_smtl(World& world);

void step(World& world);

struct RunMetrics {
  Rational collision_rate;  ///< vertex collisions / agent count
  Rational avg_path_length; ///< timesteps, waits included, over reached agents
  Rational path_efficiency; ///< mean shortest / actual over reached agents
  Rational avg_waits;       ///< over all agents
  double mean_compute_ms = 0.0; ///< per agent decision
  int unfinished = 0;
  long long collisions = 0;
  int steps = 0;

  /// Everything but the timing.
  bool same_outcome(const RunMetrics& o) const;
};

struct StepRecord {
  int t = 0;
  std::vector<Cell> positions;
  int collisions = 0;
  std::vector<int> waits;
  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

struct RunResult {
  RunMetrics metrics;
  std::vector<StepRecord> log; ///< t = 0 (initial placement) to the final step
  std::vector<Cell> goals;
};

RunMetrics compute_metrics(const World& world);

/// Steps until every agent reaches its goal or max_steps elapse.
RunResult run(const SimConfig& cfg, bool keep_log = true);

} // namespace smtl::grid

#include "smtl/gridworld.hpp"

#include "smtl/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <chrono>
#include <map>
#include <random>
#include <stdexcept>

namespace smtl::grid {

std::string_view to_string(Policy p) { return p == Policy::MTL ? "MTL" : "SMTL"; }

Policy parse_policy(std::string_view text) {
  std::string upper;
  for (char c : text) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "MTL") return Policy::MTL;
  if (upper == "SMTL") return Policy::SMTL;
  throw std::invalid_argument("unknown policy '" + std::string(text) + "'");
}

void SimConfig::validate() const {
  if (grid_size < 1) throw std::invalid_argument("grid_size must be positive");
  if (agents() < 1) throw std::invalid_argument("agent_count must be positive");
  if (!(obstacle_density >= 0.0 && obstacle_density < 1.0))
    throw std::invalid_argument("obstacle_density must lie in [0, 1)");
  if (step_limit() < 1) throw std::invalid_argument("max_steps must be positive");
  if (replan_patience < 0) throw std::invalid_argument("replan_patience must be non-negative");
}

std::size_t Grid::free_cells() const {
  return static_cast<std::size_t>(std::count(blocked_.begin(), blocked_.end(), 0));
}

namespace {

constexpr std::array<Cell, 4> kMoves{{{-1, 0}, {1, 0}, {0, -1}, {0, 1}}};
constexpr int kPairRetries = 50;
constexpr int kFieldRetries = 50;

Cell offset(Cell c, Cell d) { return {c.row + d.row, c.col + d.col}; }

} // namespace

std::optional<std::vector<Cell>> shortest_path(const Grid& grid, Cell from, Cell to,
                                               const std::vector<std::uint8_t>* extra_blocked) {
  if (!grid.passable(from) || !grid.passable(to)) return std::nullopt;
  if (extra_blocked && (*extra_blocked)[grid.index(to)]) return std::nullopt;
  if (from == to) return std::vector<Cell>{};

  const std::size_t cells = static_cast<std::size_t>(grid.size() * grid.size());
  std::vector<int> parent(cells, -1);
  std::vector<Cell> queue;
  queue.reserve(cells);
  queue.push_back(from);
  parent[grid.index(from)] = static_cast<int>(grid.index(from));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Cell c = queue[head];
    for (Cell d : kMoves) {
      Cell n = offset(c, d);
      if (!grid.passable(n)) continue;
      std::size_t ni = grid.index(n);
      if (parent[ni] != -1 || (extra_blocked && (*extra_blocked)[ni])) continue;
      parent[ni] = static_cast<int>(grid.index(c));
      if (n == to) {
        std::vector<Cell> path;
        for (std::size_t at = ni; at != grid.index(from); at = static_cast<std::size_t>(parent[at]))
          path.push_back({static_cast<int>(at) / grid.size(), static_cast<int>(at) % grid.size()});
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(n);
    }
  }
  return std::nullopt;
}

bool World::finished() const {
  return std::all_of(agents.begin(), agents.end(), [](const AgentState& a) { return a.reached; });
}

std::vector<Cell> World::positions() const {
  std::vector<Cell> out;
  out.reserve(agents.size());
  for (const auto& a : agents) out.push_back(a.position);
  return out;
}

World generate_world(const SimConfig& cfg) {
  cfg.validate();
  const int n = cfg.grid_size;
  const int count = cfg.agents();
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (int field = 0; field < kFieldRetries; ++field) {
    Grid grid(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) grid.set_blocked({r, c}, unit(rng) < cfg.obstacle_density);

    std::vector<Cell> free;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (!grid.blocked({r, c})) free.push_back({r, c});
    if (free.size() < static_cast<std::size_t>(count) || free.size() < 2) continue;

    std::vector<std::uint8_t> start_used(free.size(), 0), goal_used(free.size(), 0);
    std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);
    auto draw = [&](const std::vector<std::uint8_t>& used, std::size_t exclude) {
      // Rejection sampling; a free slot exists because count <= free.size().
      for (;;) {
        std::size_t i = pick(rng);
        if (!used[i] && i != exclude) return i;
      }
    };

    World world{cfg, grid, {}, 0, 0, 0, {}, 0.0, 0};
    bool ok = true;
    for (int id = 0; id < count && ok; ++id) {
      ok = false;
      for (int attempt = 0; attempt < kPairRetries; ++attempt) {
        std::size_t s = draw(start_used, free.size());
        std::size_t g = draw(goal_used, s);
        auto path = shortest_path(grid, free[s], free[g]);
        if (!path) continue;
        start_used[s] = goal_used[g] = 1;
        AgentState agent;
        agent.id = id;
        agent.position = free[s];
        agent.goal = free[g];
        agent.shortest = static_cast<int>(path->size());
        world.agents.push_back(std::move(agent));
        ok = true;
        break;
      }
    }
    if (ok) return world;
  }
  throw WorldGenerationFailed("could not place " + std::to_string(count) + " agents with reachable goals on a " +
                              std::to_string(n) + "x" + std::to_string(n) + " grid at density " +
                              std::to_string(cfg.obstacle_density));
}

namespace {

using Clock = std::chrono::steady_clock;

// The initial plan is part of the agent's first decision, under both
// policies, so its cost is timed alongside everything else the policy does.
void ensure_plan(const Grid& grid, AgentState& a) {
  if (a.planned) return;
  auto path = shortest_path(grid, a.position, a.goal);
  if (path) a.path.assign(path->begin(), path->end());
  a.planned = true;
}

void advance(AgentState& a) {
  a.position = a.path.front();
  a.path.pop_front();
  ++a.steps_taken;
  a.consecutive_waits = 0;
  if (a.position == a.goal) a.reached = true;
}

int count_collisions(const World& world) {
  std::map<Cell, int> occupancy;
  for (const auto& a : world.agents) ++occupancy[a.position];
  int pairs = 0;
  for (const auto& [cell, k] : occupancy) pairs += k * (k - 1) / 2;
  return pairs;
}

} // namespace

void step_mtl(World& world) {
  world.waits_this_step.clear();
  for (auto& a : world.agents) {
    if (a.reached) continue;
    auto start = Clock::now();
    ensure_plan(world.grid, a);
    advance(a);
    world.compute_ns += std::chrono::duration<double, std::nano>(Clock::now() - start).count();
    ++world.decisions;
  }
  world.collisions_this_step = count_collisions(world);
  world.collisions += world.collisions_this_step;
  ++world.t;
}

void step_smtl(World& world) {
  world.waits_this_step.clear();
  const Grid& grid = world.grid;
  // Occupancy as the acting agent sees it: agents that already acted at
  // their new cells, the rest at their current cells.
  std::vector<std::uint8_t> occupied(static_cast<std::size_t>(grid.size() * grid.size()), 0);
  for (const auto& a : world.agents) occupied[grid.index(a.position)] = 1;

  for (auto& a : world.agents) {
    if (a.reached) continue;
    auto start = Clock::now();
    ensure_plan(grid, a);
    Cell target = a.path.front();
    if (!occupied[grid.index(target)]) {
      occupied[grid.index(a.position)] = 0;
      occupied[grid.index(target)] = 1;
      advance(a);
    } else {
      ++a.waits;
      ++a.steps_taken;
      ++a.consecutive_waits;
      world.waits_this_step.push_back(a.id);
      if (a.consecutive_waits >= world.config.replan_patience) {
        occupied[grid.index(a.position)] = 0;
        auto detour = shortest_path(grid, a.position, a.goal, &occupied);
        occupied[grid.index(a.position)] = 1;
        if (detour && !detour->empty()) {
          a.path.assign(detour->begin(), detour->end());
          a.consecutive_waits = 0;
        }
      }
    }
    world.compute_ns += std::chrono::duration<double, std::nano>(Clock::now() - start).count();
    ++world.decisions;
  }

  world.collisions_this_step = count_collisions(world);
  if (world.collisions_this_step != 0)
    throw InvariantViolation("SMTL step " + std::to_string(world.t + 1) + " left " +
                             std::to_string(world.collisions_this_step) + " agent pairs sharing a cell");
  ++world.t;
}

void step(World& world) {
  if (world.config.policy == Policy::MTL)
    step_mtl(world);
  else
    step_smtl(world);
}

bool RunMetrics::same_outcome(const RunMetrics& o) const {
  return collision_rate == o.collision_rate && avg_path_length == o.avg_path_length &&
         path_efficiency == o.path_efficiency && avg_waits == o.avg_waits &&
         unfinished == o.unfinished && collisions == o.collisions && steps == o.steps;
}

RunMetrics compute_metrics(const World& world) {
  RunMetrics m;
  const auto count = static_cast<long>(world.agents.size());
  m.collisions = world.collisions;
  m.steps = world.t;
  m.collision_rate = Rational(static_cast<long>(world.collisions), count);
  m.collision_rate.canonicalize();

  long reached = 0, total_steps = 0, total_waits = 0;
  Rational efficiency_sum = 0;
  for (const auto& a : world.agents) {
    total_waits += a.waits;
    if (!a.reached) {
      ++m.unfinished;
      continue;
    }
    ++reached;
    total_steps += a.steps_taken;
    Rational ratio(a.shortest, a.steps_taken);
    ratio.canonicalize();
    efficiency_sum += ratio;
  }
  m.avg_waits = Rational(total_waits, count);
  m.avg_waits.canonicalize();
  if (reached > 0) {
    m.avg_path_length = Rational(total_steps, reached);
    m.avg_path_length.canonicalize();
    m.path_efficiency = efficiency_sum / reached;
  }
  m.mean_compute_ms = world.decisions ? world.compute_ns / static_cast<double>(world.decisions) / 1e6 : 0.0;
  return m;
}

namespace {

StepRecord snapshot(const World& world) {
  return {world.t, world.positions(), world.collisions_this_step, world.waits_this_step};
}

} // namespace

RunResult run(const SimConfig& cfg, bool keep_log) {
  World world = generate_world(cfg);
  RunResult result;
  for (const auto& a : world.agents) result.goals.push_back(a.goal);
  if (keep_log) result.log.push_back(snapshot(world));
  const int limit = cfg.step_limit();
  while (!world.finished() && world.t < limit) {
    step(world);
    if (keep_log) result.log.push_back(snapshot(world));
  }
  result.metrics = compute_metrics(world);
  return result;
}

} // namespace smtl::grid

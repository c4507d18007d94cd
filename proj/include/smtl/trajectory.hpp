#pragma once

#include "smtl/formula.hpp"
#include "smtl/gridworld.hpp"
#include "smtl/trace.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace smtl::grid {

/// One JSON object per line:
///   {"t": 3, "positions": [[r,c], ...], "collisions": 1, "waits_this_step": [2, 4]}
void write_trajectory(std::ostream& out, const std::vector<StepRecord>& log);
/// Throws TraceFormatError.
std::vector<StepRecord> parse_trajectory(std::string_view text);

std::string collide_prop(int i, int j);
std::string at_goal_prop(int i);

/// Single-level trace with timestamps 0, 1, 2, ... carrying collide_i_j for
/// every pair (i < j) sharing a cell and, when goals are given, at_goal_i.
/// With a horizon past the last record, the final configuration is held up to
/// the horizon: a finished run leaves every agent parked at its goal.
StratifiedTrace trajectory_trace(const std::vector<StepRecord>& log,
                                 const std::vector<Cell>* goals = nullptr,
                                 std::optional<int> horizon = std::nullopt);

/// G[0,T] of the conjunction of !collide_i_j over all agent pairs.
Formula pairwise_safety(int agent_count, int horizon);

/// G[0,T](reachGoal_i -> F[0,T] at_goal_i).
Formula goal_reaching(int agent, int horizon);

/// L1 of the goal-reaching and pairwise-safety obligations of every agent.
Formula stratified_coordination(int agent_count, int horizon);

} // namespace smtl::grid

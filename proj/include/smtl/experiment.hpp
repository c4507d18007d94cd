#pragma once

#include "smtl/gridworld.hpp"

#include <optional>
#include <string>
#include <vector>

namespace smtl::grid {

struct ExperimentPlan {
  std::vector<int> sizes;
  int seeds_per_size = 1;
  SimConfig base; ///< base.seed seeds the whole matrix; grid_size and policy are overridden
  std::vector<Policy> policies{Policy::MTL, Policy::SMTL};
  bool agents_match_size = true; ///< agent count = grid size unless base.agent_count is set
  unsigned workers = 0;          ///< 0 = hardware concurrency
  bool keep_logs = false;
};

/// Per-run seed; the same for both policies so they see identical worlds.
std::uint64_t run_seed(std::uint64_t base_seed, int size, int index);

struct RunRecord {
  int size = 0;
  Policy policy = Policy::MTL;
  std::uint64_t seed = 0;
  SimConfig config;
  std::optional<RunResult> result;
  std::optional<std::string> error;
};

struct Summary {
  double mean = 0.0;
  double stddev = 0.0; ///< sample standard deviation, 0 for fewer than two runs
};

struct AggregateRow {
  int size = 0;
  Policy policy = Policy::MTL;
  int runs = 0;
  int failures = 0;
  Summary collision_rate;
  Summary avg_path_length;
  Summary path_efficiency;
  Summary avg_waits;
  Summary compute_ms;
  Summary unfinished;
};

struct ExperimentResult {
  std::vector<RunRecord> runs;     ///< ordered by size, policy, seed index
  std::vector<AggregateRow> table; ///< ordered by size, policy
  bool all_ok() const;
};

/// Runs every (size, policy, seed) cell once. Failed runs are kept as error
/// records; the rest of the matrix still runs. Throws std::invalid_argument
/// for sizes below 2.
ExperimentResult experiment(const ExperimentPlan& plan);

Summary summarize(const std::vector<double>& values);

} // namespace smtl::grid

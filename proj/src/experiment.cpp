#include "smtl/experiment.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

namespace smtl::grid {

std::uint64_t run_seed(std::uint64_t base_seed, int size, int index) {
  // splitmix64 finaliser over a packed (base, size, index) word
  std::uint64_t z = base_seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(size) << 20 |
                                                         (static_cast<std::uint64_t>(index) + 1));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

bool ExperimentResult::all_ok() const {
  for (const auto& r : runs)
    if (r.error) return false;
  return true;
}

Summary summarize(const std::vector<double>& values) {
  Summary s;
  if (values.empty()) return s;
  for (double v : values) s.mean += v;
  s.mean /= static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(sq / static_cast<double>(values.size() - 1));
  }
  return s;
}

ExperimentResult experiment(const ExperimentPlan& plan) {
  for (int size : plan.sizes)
    if (size < 2) throw std::invalid_argument("grid sizes must be at least 2");
  if (plan.seeds_per_size < 1) throw std::invalid_argument("seeds_per_size must be positive");

  ExperimentResult out;
  for (int size : plan.sizes)
    for (Policy policy : plan.policies)
      for (int s = 0; s < plan.seeds_per_size; ++s) {
        RunRecord r;
        r.size = size;
        r.policy = policy;
        r.seed = run_seed(plan.base.seed, size, s);
        r.config = plan.base;
        r.config.grid_size = size;
        r.config.policy = policy;
        r.config.seed = r.seed;
        if (plan.agents_match_size && !plan.base.agent_count) r.config.agent_count = size;
        out.runs.push_back(std::move(r));
      }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < out.runs.size(); i = next++) {
      auto& r = out.runs[i];
      try {
        r.result = run(r.config, plan.keep_logs);
      } catch (const std::exception& e) {
        r.error = e.what();
      }
    }
  };
  unsigned workers = plan.workers ? plan.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(out.runs.size()));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  for (int size : plan.sizes)
    for (Policy policy : plan.policies) {
      AggregateRow row;
      row.size = size;
      row.policy = policy;
      std::vector<double> cr, pl, pe, aw, ms, un;
      for (const auto& r : out.runs) {
        if (r.size != size || r.policy != policy) continue;
        if (!r.result) {
          ++row.failures;
          continue;
        }
        const auto& m = r.result->metrics;
        ++row.runs;
        cr.push_back(to_double(m.collision_rate));
        pl.push_back(to_double(m.avg_path_length));
        pe.push_back(to_double(m.path_efficiency));
        aw.push_back(to_double(m.avg_waits));
        ms.push_back(m.mean_compute_ms);
        un.push_back(m.unfinished);
      }
      row.collision_rate = summarize(cr);
      row.avg_path_length = summarize(pl);
      row.path_efficiency = summarize(pe);
      row.avg_waits = summarize(aw);
      row.compute_ms = summarize(ms);
      row.unfinished = summarize(un);
      out.table.push_back(row);
    }
  return out;
}

} // namespace smtl::grid

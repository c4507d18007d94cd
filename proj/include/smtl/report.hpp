#pragma once

#include "smtl/experiment.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace smtl::report {

inline constexpr const char* kMetricsHeader =
    "size,policy,seed,collision_rate,avg_path_length,path_efficiency,avg_waits,mean_compute_ms,unfinished";

/// One row per successful run, in plan order.
void write_metrics_csv(std::ostream& out, const grid::ExperimentResult& result);

/// Mean and sample standard deviation per (size, policy).
void write_summary_csv(std::ostream& out, const grid::ExperimentResult& result);

struct Series {
  std::string name;
  std::string color;
  std::vector<std::pair<double, double>> points;
};

/// Self-contained SVG line chart with axes, ticks, markers and a legend.
std::string line_chart(const std::string& title, const std::string& x_label,
                       const std::string& y_label, const std::vector<Series>& series);

struct Chart {
  std::string file_name;
  std::string svg;
};

/// Collision rate, path length, efficiency, waits and compute time against
/// grid size, one series per policy.
std::vector<Chart> experiment_charts(const grid::ExperimentResult& result);

} // namespace smtl::report

#pragma once

#include "smtl/evaluator.hpp"
#include "smtl/experiment.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace smtl::cli {

/// Process exit codes; stable across releases.
enum ExitStatus : int {
  kSuccess = 0,
  kPropertyFalse = 1,
  kUnknown = 2,
  kUsageError = 3,
  kRuntimeError = 4,
};

int exit_code(Verdict v);

struct CheckOptions {
  std::string formula_file;
  std::vector<std::string> resolutions; ///< "level=value" entries
  int base_level = 1;
};

struct EvalOptions {
  std::string formula_file;
  std::string trace_file;
  int level = 1;
  std::size_t position = 0;
  SemanticsMode mode = SemanticsMode::Strict;
};

struct DemoOptions {
  std::string radius = "0.3";
  std::string step = "0.1";
};

struct SimOptions {
  std::string config_file;
  std::string out_dir;
  bool trajectories = false;
  std::optional<unsigned> workers;
};

struct VerifyOptions {
  std::string log_dir;
  std::optional<int> horizon;
  std::string policy = "smtl"; ///< smtl, mtl or all
};

/// metrics.csv, summary.csv, the charts and, optionally, trajectories/ with
/// one JSONL log per successful run plus manifest.json (goals, step limit).
void write_sim_outputs(const grid::ExperimentResult& result, const std::string& out_dir, bool trajectories);

int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err);
int cmd_eval(const EvalOptions& opts, std::ostream& out, std::ostream& err);
int cmd_translate(const std::string& formula_file, std::ostream& out, std::ostream& err);
int cmd_demo_separating(const DemoOptions& opts, std::ostream& out, std::ostream& err);
int cmd_sim(const SimOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify_trajectories(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

} // namespace smtl::cli

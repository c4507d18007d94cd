#include "smtl/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace smtl::cli;

  CLI::App app{"Stratified metric temporal logic toolkit"};
  app.require_subcommand(1);

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Parse a formula, check well-formedness and lint resolutions");
  check_cmd->add_option("formula", check.formula_file, "Formula file")->required();
  check_cmd->add_option("--resolution,-r", check.resolutions, "Temporal resolution as level=value");
  check_cmd->add_option("--base-level", check.base_level, "Level the formula is evaluated at");

  EvalOptions eval;
  std::string mode = "strict";
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a formula on a stratified trace");
  eval_cmd->add_option("formula", eval.formula_file, "Formula file")->required();
  eval_cmd->add_option("trace", eval.trace_file, "Trace JSON file")->required();
  eval_cmd->add_option("--level", eval.level, "Evaluation level");
  eval_cmd->add_option("--position", eval.position, "Trace position");
  eval_cmd->add_option("--mode", mode, "Stratum semantics")->check(CLI::IsMember({"strict", "scoped"}));

  std::string translate_file;
  auto* translate_cmd = app.add_subcommand("translate", "Print the MTL form of a stratum-free formula");
  translate_cmd->add_option("formula", translate_file, "Formula file")->required();

  DemoOptions demo;
  auto* demo_cmd = app.add_subcommand("demo", "Built-in demonstrations");
  demo_cmd->require_subcommand(1);
  auto* separating = demo_cmd->add_subcommand("separating", "Two signals MTL cannot tell apart");
  separating->add_option("--radius", demo.radius, "Smoothing radius");
  separating->add_option("--step", demo.step, "Sampling step");

  SimOptions sim;
  unsigned workers = 0;
  auto* sim_cmd = app.add_subcommand("sim", "Run the gridworld experiment matrix");
  sim_cmd->add_option("config", sim.config_file, "Experiment JSON config")->required();
  sim_cmd->add_option("--out,-o", sim.out_dir, "Output directory")->required();
  sim_cmd->add_flag("--trajectories", sim.trajectories, "Write per-run JSONL trajectory logs");
  auto* workers_opt = sim_cmd->add_option("--workers", workers, "Worker threads");

  VerifyOptions verify;
  int horizon = 0;
  auto* verify_cmd = app.add_subcommand("verify-trajectories", "Check pairwise safety on trajectory logs");
  verify_cmd->add_option("logs", verify.log_dir, "Directory of trajectory logs")->required();
  auto* horizon_opt = verify_cmd->add_option("--horizon", horizon, "Bound of the safety property");
  verify_cmd->add_option("--policy", verify.policy, "smtl, mtl or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*check_cmd) return cmd_check(check, std::cout, std::cerr);
    if (*eval_cmd) {
      eval.mode = mode == "scoped" ? smtl::SemanticsMode::Scoped : smtl::SemanticsMode::Strict;
      return cmd_eval(eval, std::cout, std::cerr);
    }
    if (*translate_cmd) return cmd_translate(translate_file, std::cout, std::cerr);
    if (*separating) return cmd_demo_separating(demo, std::cout, std::cerr);
    if (*sim_cmd) {
      if (*workers_opt) sim.workers = workers;
      return cmd_sim(sim, std::cout, std::cerr);
    }
    if (*verify_cmd) {
      if (*horizon_opt) verify.horizon = horizon;
      return cmd_verify_trajectories(verify, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
  return kUsageError;
}

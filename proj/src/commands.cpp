#include "smtl/commands.hpp"

#include "smtl/demo.hpp"
#include "smtl/experiment.hpp"
#include "smtl/logic.hpp"
#include "smtl/parser.hpp"
#include "smtl/report.hpp"
#include "smtl/trace_json.hpp"
#include "smtl/trajectory.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace smtl::cli {

namespace fs = std::filesystem;
using nlohmann::json;

int exit_code(Verdict v) {
  switch (v) {
  case Verdict::True: return kSuccess;
  case Verdict::False: return kPropertyFalse;
  case Verdict::Unknown: return kUnknown;
  }
  return kRuntimeError;
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void report_parse_error(const std::string& path, const std::string& text, const ParseError& e,
                        std::ostream& err) {
  err << path << ":" << e.what() << "\n";
  const auto& span = e.span();
  std::size_t line_start = span.start_offset - static_cast<std::size_t>(span.column - 1);
  std::size_t line_end = text.find('\n', line_start);
  if (line_end == std::string::npos) line_end = text.size();
  err << "  " << text.substr(line_start, line_end - line_start) << "\n  "
      << std::string(static_cast<std::size_t>(span.column - 1), ' ')
      << std::string(std::max<std::size_t>(1, span.end_offset - span.start_offset), '^') << "\n";
}

/// Parses the formula file, reporting failures; nullopt means exit 3.
std::optional<Formula> load_formula(const std::string& path, std::ostream& err) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return std::nullopt;
  }
  try {
    return parse(text);
  } catch (const ParseError& e) {
    report_parse_error(path, text, e, err);
    return std::nullopt;
  }
}

ResolutionMap parse_resolutions(const std::vector<std::string>& entries) {
  ResolutionMap out;
  for (const auto& entry : entries) {
    auto eq = entry.find('=');
    if (eq == std::string::npos) throw UsageError("resolution '" + entry + "' is not level=value");
    try {
      int level = std::stoi(entry.substr(0, eq));
      out[level] = parse_rational(entry.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("resolution '" + entry + "' is not level=value");
    }
  }
  return out;
}

std::string path_text(const NodePath& path) {
  std::string s = "/";
  for (std::size_t i = 0; i < path.size(); ++i) s += (i ? "/" : "") + std::to_string(path[i]);
  return s;
}

} // namespace

int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err) {
  auto f = load_formula(opts.formula_file, err);
  if (!f) return kUsageError;

  out << "formula: " << pretty_print(*f) << "\n";
  out << "max level: " << max_level(*f) << "\n";
  const bool well_formed = is_well_formed(*f);
  out << "well-formed: " << (well_formed ? "yes" : "no") << "\n";

  if (!opts.resolutions.empty()) {
    try {
      auto report = resolution_lint(*f, parse_resolutions(opts.resolutions), opts.base_level);
      out << "resolution lint: " << report.warnings.size() << " warning(s)\n";
      for (const auto& w : report.warnings)
        out << "  warning at " << path_text(w.path) << " (level " << w.level << "): " << w.message << "\n";
    } catch (const MissingResolution& e) {
      err << "error: " << e.what() << "\n";
      return kUsageError;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kUsageError;
    }
  }
  return well_formed ? kSuccess : kPropertyFalse;
}

int cmd_eval(const EvalOptions& opts, std::ostream& out, std::ostream& err) {
  auto f = load_formula(opts.formula_file, err);
  if (!f) return kUsageError;

  TraceDocument doc;
  try {
    doc = load_trace_file(opts.trace_file);
  } catch (const TraceFormatError& e) {
    err << opts.trace_file << ": " << e.what() << "\n";
    return kUsageError;
  }
  if (auto violations = validate(doc.trace); !violations.empty()) {
    for (const auto& v : violations)
      err << opts.trace_file << ": " << kind_name(v.kind) << ": " << v.message << "\n";
    return kRuntimeError;
  }
  if (!is_well_formed(*f)) err << "warning: formula is not well-formed\n";

  try {
    Verdict v = evaluate(*f, doc.trace, opts.position, opts.level, opts.mode);
    out << to_string(v) << "\n";
    return exit_code(v);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
}

int cmd_translate(const std::string& formula_file, std::ostream& out, std::ostream& err) {
  auto f = load_formula(formula_file, err);
  if (!f) return kUsageError;
  try {
    out << pretty_print(translate_mtl(*f)) << "\n";
    return kSuccess;
  } catch (const NotMTL& e) {
    err << "NotMTL: " << e.what() << "\n";
    return kPropertyFalse;
  }
}

int cmd_demo_separating(const DemoOptions& opts, std::ostream& out, std::ostream& err) {
  Rational radius, step;
  try {
    radius = parse_rational(opts.radius);
    step = parse_rational(opts.step);
    if (sgn(radius) <= 0 || sgn(step) <= 0) throw std::invalid_argument("must be positive");
  } catch (const std::invalid_argument& e) {
    err << "error: radius and step must be positive rationals (" << e.what() << ")\n";
    return kUsageError;
  }

  std::optional<demo::Separation> built;
  try {
    built = demo::separating_example(radius, step);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
  const demo::Separation& s = *built;

  auto signal_line = [](const TimedTrace& t) {
    std::string line;
    for (const auto& state : t.states) line += state.contains("p") ? '1' : '0';
    return line;
  };

  out << "formula: " << pretty_print(s.formula) << "\n";
  out << "samples: every " << format_rational(step) << " on [0,2]; smoothing radius "
      << format_rational(radius) << "\n";
  out << "level 1 carries the raw signal, level 2 its isolated-point smoothing\n";
  out << "  sigma1 level 1: " << signal_line(s.first_stratified.level_trace(1)) << "\n";
  out << "  sigma1 level 2: " << signal_line(s.first_stratified.level_trace(2)) << "\n";
  out << "  sigma2 level 1: " << signal_line(s.second_stratified.level_trace(1)) << "\n";
  out << "  sigma2 level 2: " << signal_line(s.second_stratified.level_trace(2)) << "\n";
  out << "signals differ only at t = 1/2: " << (s.difference_sampled ? "yes" : "no (t = 1/2 is not a sample)")
      << "\n";
  if (s.smoothing_inert)
    err << "warning: radius " << format_rational(radius) << " is below the sample step "
        << format_rational(step) << "; smoothing only sees the centre sample and is inert\n";
  out << "with the smoothed signal at level 1 instead: sigma1 " << to_string(s.first_verdict_smoothed_fine)
      << ", sigma2 " << to_string(s.second_verdict_smoothed_fine) << "\n";
  out << "σ₁: " << to_string(s.first_verdict) << ", σ₂: " << to_string(s.second_verdict) << "\n";
  return kSuccess;
}

namespace {

grid::ExperimentPlan load_plan(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw UsageError(path + ": invalid JSON: " + e.what());
  }
  try {
    grid::ExperimentPlan plan;
    plan.sizes = j.at("sizes").get<std::vector<int>>();
    plan.seeds_per_size = j.value("seeds_per_size", 1);
    plan.base.seed = j.value<std::uint64_t>("seed", 0);
    plan.base.obstacle_density = j.value("obstacle_density", 0.10);
    plan.base.replan_patience = j.value("replan_patience", 3);
    if (j.contains("agent_count") && !j["agent_count"].is_null())
      plan.base.agent_count = j["agent_count"].get<int>();
    if (j.contains("max_steps") && !j["max_steps"].is_null())
      plan.base.max_steps = j["max_steps"].get<int>();
    if (j.contains("policies")) {
      plan.policies.clear();
      for (const auto& p : j["policies"]) plan.policies.push_back(grid::parse_policy(p.get<std::string>()));
    }
    plan.workers = j.value("workers", 0u);
    if (plan.sizes.empty()) throw UsageError(path + ": 'sizes' is empty");
    for (int n : plan.sizes)
      if (n < 2) throw UsageError(path + ": grid sizes must be at least 2");
    grid::SimConfig probe = plan.base;
    probe.grid_size = plan.sizes.front();
    probe.validate();
    return plan;
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string log_name(const grid::RunRecord& r) {
  return "traj_" + std::string(grid::to_string(r.policy)) + "_n" + std::to_string(r.size) + "_" +
         std::to_string(r.seed) + ".jsonl";
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
}

} // namespace

void write_sim_outputs(const grid::ExperimentResult& result, const std::string& out_dir, bool trajectories) {
  fs::path dir(out_dir);
  fs::create_directories(dir);
  {
    std::ostringstream csv;
    report::write_metrics_csv(csv, result);
    write_text(dir / "metrics.csv", csv.str());
  }
  {
    std::ostringstream csv;
    report::write_summary_csv(csv, result);
    write_text(dir / "summary.csv", csv.str());
  }
  for (const auto& chart : report::experiment_charts(result)) write_text(dir / chart.file_name, chart.svg);

  if (trajectories) {
    fs::path logs = dir / "trajectories";
    fs::create_directories(logs);
    // Logs from an earlier run would otherwise be verified alongside this one.
    for (const auto& entry : fs::directory_iterator(logs)) {
      const std::string name = entry.path().filename().string();
      if (entry.is_regular_file() && name.starts_with("traj_") && name.ends_with(".jsonl")) fs::remove(entry.path());
    }
    json manifest = json::array();
    for (const auto& r : result.runs) {
      if (!r.result) continue;
      std::ostringstream lines;
      grid::write_trajectory(lines, r.result->log);
      write_text(logs / log_name(r), lines.str());
      json goals = json::array();
      for (const auto& g : r.result->goals) goals.push_back({g.row, g.col});
      manifest.push_back({{"file", log_name(r)},
                          {"size", r.size},
                          {"policy", grid::to_string(r.policy)},
                          {"seed", r.seed},
                          {"max_steps", r.config.step_limit()},
                          {"goals", goals}});
    }
    write_text(logs / "manifest.json", manifest.dump(1) + "\n");
  }
}

int cmd_sim(const SimOptions& opts, std::ostream& out, std::ostream& err) {
  grid::ExperimentPlan plan;
  try {
    plan = load_plan(opts.config_file);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  if (opts.workers) plan.workers = *opts.workers;
  plan.keep_logs = opts.trajectories;

  auto result = grid::experiment(plan);

  try {
    write_sim_outputs(result, opts.out_dir, opts.trajectories);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntimeError;
  }

  for (const auto& row : result.table)
    out << "N=" << row.size << " " << grid::to_string(row.policy) << ": runs " << row.runs
        << ", collision rate " << row.collision_rate.mean << ", path length " << row.avg_path_length.mean
        << ", efficiency " << row.path_efficiency.mean << ", waits " << row.avg_waits.mean
        << ", compute " << row.compute_ms.mean << " ms\n";

  if (!result.all_ok()) {
    for (const auto& r : result.runs)
      if (r.error)
        err << "run N=" << r.size << " " << grid::to_string(r.policy) << " seed " << r.seed
            << " failed: " << *r.error << "\n";
    return kRuntimeError;
  }
  return kSuccess;
}

namespace {

struct LogEntry {
  fs::path file;
  std::optional<grid::Policy> policy;
  std::optional<int> max_steps;
  std::optional<std::vector<grid::Cell>> goals;
};

std::optional<grid::Policy> policy_from_name(const std::string& name) {
  if (name.rfind("traj_SMTL_", 0) == 0) return grid::Policy::SMTL;
  if (name.rfind("traj_MTL_", 0) == 0) return grid::Policy::MTL;
  return std::nullopt;
}

} // namespace

int cmd_verify_trajectories(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  const fs::path dir(opts.log_dir);
  if (opts.policy != "smtl" && opts.policy != "mtl" && opts.policy != "all") {
    err << "error: --policy must be smtl, mtl or all\n";
    return kUsageError;
  }
  if (!fs::is_directory(dir)) {
    err << "error: '" << opts.log_dir << "' is not a directory\n";
    return kUsageError;
  }

  std::map<std::string, LogEntry> entries;
  for (const auto& item : fs::directory_iterator(dir)) {
    if (item.path().extension() != ".jsonl") continue;
    auto name = item.path().filename().string();
    entries[name] = {item.path(), policy_from_name(name), std::nullopt, std::nullopt};
  }
  if (fs::exists(dir / "manifest.json")) {
    try {
      for (const auto& m : json::parse(read_file((dir / "manifest.json").string()))) {
        auto it = entries.find(m.at("file").get<std::string>());
        if (it == entries.end()) continue;
        it->second.policy = grid::parse_policy(m.at("policy").get<std::string>());
        it->second.max_steps = m.at("max_steps").get<int>();
        std::vector<grid::Cell> goals;
        for (const auto& g : m.at("goals")) goals.push_back({g.at(0).get<int>(), g.at(1).get<int>()});
        it->second.goals = std::move(goals);
      }
    } catch (const std::exception& e) {
      err << "error: manifest.json: " << e.what() << "\n";
      return kUsageError;
    }
  }

  std::erase_if(entries, [&](const auto& kv) {
    const auto& p = kv.second.policy;
    if (opts.policy == "all") return false;
    return !p || (*p == grid::Policy::SMTL) != (opts.policy == "smtl");
  });
  if (entries.empty()) {
    err << "error: no " << (opts.policy == "all" ? "" : opts.policy + " ") << "trajectory logs in '"
        << opts.log_dir << "'\n";
    return kUsageError;
  }

  int failures = 0;
  for (const auto& [name, entry] : entries) {
    std::vector<grid::StepRecord> log;
    try {
      log = grid::parse_trajectory(read_file(entry.file.string()));
      if (log.empty()) throw TraceFormatError("empty trajectory");
    } catch (const std::exception& e) {
      err << name << ": " << e.what() << "\n";
      ++failures;
      continue;
    }
    const int horizon = opts.horizon.value_or(entry.max_steps.value_or(log.back().t));
    const int agents = static_cast<int>(log.front().positions.size());
    const auto* goals = entry.goals ? &*entry.goals : nullptr;
    StratifiedTrace trace = grid::trajectory_trace(log, goals, horizon);
    Formula safety = grid::pairwise_safety(agents, horizon);
    Verdict v = evaluate(safety, trace);
    out << name << ": " << to_string(v);
    if (v != Verdict::True) {
      ++failures;
      const auto& states = trace.levels.at(1);
      for (std::size_t t = 0; t < states.size(); ++t) {
        auto hit = std::find_if(states[t].begin(), states[t].end(),
                                [](const std::string& p) { return p.rfind("collide_", 0) == 0; });
        if (hit != states[t].end()) {
          out << " (first violation at step " << t << ": " << *hit << ")";
          break;
        }
      }
    }
    out << "\n";
  }
  out << entries.size() - static_cast<std::size_t>(failures) << "/" << entries.size()
      << " trajectories satisfy pairwise safety\n";
  return failures == 0 ? kSuccess : kPropertyFalse;
}

} // namespace smtl::cli

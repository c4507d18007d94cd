// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Thresholds and sample counts are pinned below.

#include "generators.hpp"

#include "smtl/commands.hpp"
#include "smtl/evaluator.hpp"
#include "smtl/experiment.hpp"
#include "smtl/logic.hpp"
#include "smtl/parser.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace smtl;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

constexpr int kOracleInstances = 2000;
constexpr double kOracleSecondsLimit = 60.0;
constexpr int kMtlInstances = 2000;
constexpr int kSoundnessInstances = 2000;
constexpr int kExtensionCases = 1000;
constexpr int kRoundTripFormulas = 5000;
const std::vector<int> kGridSizes{5, 10, 20, 30};
constexpr int kSeedsPerSize = 10;
constexpr double kObstacleDensity = 0.10;
constexpr std::uint64_t kBaseSeed = 0; // SimConfig's default seed
constexpr double kSimSecondsLimit = 300.0;
constexpr double kComputeRatioLimit = 5.0;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << name << " - " << o.detail << std::endl;
  if (!o.pass) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(4);
  s << v;
  return s.str();
}

Outcome oracle_equivalence() {
  testgen::Rng rng(0xA11CE);
  auto start = Clock::now();
  int agree = 0, total = 0;
  std::string first_mismatch;
  for (int i = 0; i < kOracleInstances; ++i) {
    int levels = testgen::uniform(rng, 1, 3);
    testgen::FormulaShape shape;
    shape.max_level = levels;
    Formula f = testgen::random_formula(rng, shape);
    StratifiedTrace t = testgen::random_stratified(rng, levels);
    auto pos = static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<int>(t.size()) - 1));
    int level = testgen::uniform(rng, 1, levels);
    for (auto mode : {SemanticsMode::Strict, SemanticsMode::Scoped}) {
      ++total;
      Verdict fast = evaluate(f, t, pos, level, mode);
      Verdict slow = oracle_evaluate(f, t, pos, level, mode);
      if (fast == slow)
        ++agree;
      else if (first_mismatch.empty())
        first_mismatch = "; first mismatch: " + pretty_print(f) + " at " + std::to_string(pos) + "/L" +
                         std::to_string(level) + " " + std::string(to_string(mode));
    }
  }
  double secs = seconds_since(start);
  return {agree == total && secs < kOracleSecondsLimit,
          std::to_string(agree) + "/" + std::to_string(total) + " agree in " + fmt(secs) + " s (limit " +
              fmt(kOracleSecondsLimit) + " s)" + first_mismatch};
}

Outcome mtl_subsumption() {
  testgen::Rng rng(0xB0B);
  int agree = 0;
  for (int i = 0; i < kMtlInstances; ++i) {
    testgen::FormulaShape shape;
    shape.max_level = 0;
    Formula f = testgen::random_formula(rng, shape);
    TimedTrace t = testgen::random_timed_trace(rng);
    auto pos = static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<int>(t.size()) - 1));
    if (evaluate_mtl(f, t, pos) == evaluate(translate_mtl(f), lift(t), pos, 1)) ++agree;
  }
  return {agree == kMtlInstances, std::to_string(agree) + "/" + std::to_string(kMtlInstances) + " agree"};
}

Outcome stratification_soundness() {
  testgen::Rng rng(0xC0FFEE);
  int violations = 0, antecedent_true = 0;
  for (int n = 0; n < kSoundnessInstances; ++n) {
    int j = testgen::uniform(rng, 1, 3);
    int i = testgen::uniform(rng, 1, 3);
    testgen::FormulaShape shape;
    shape.max_level = j;
    shape.well_formed = true;
    shape.max_depth = 5;
    Formula phi = testgen::random_formula(rng, shape);
    Formula outer = Formula::stratum(j, phi);
    StratifiedTrace t = testgen::random_stratified(rng, 3);
    auto pos = static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<int>(t.size()) - 1));
    if (evaluate(outer, t, pos, i, SemanticsMode::Strict) != Verdict::True) continue;
    ++antecedent_true;
    if (evaluate(phi, t, pos, j, SemanticsMode::Strict) != Verdict::True) ++violations;
  }
  return {violations == 0, std::to_string(violations) + " violations over " + std::to_string(kSoundnessInstances) +
                               " instances (" + std::to_string(antecedent_true) + " with a True antecedent)"};
}

Outcome separating_example() {
  auto run_once = [] {
    std::ostringstream out, err;
    int code = cli::cmd_demo_separating({}, out, err);
    return std::pair{code, out.str()};
  };
  auto [code1, out1] = run_once();
  auto [code2, out2] = run_once();
  const std::string expected = "σ₁: True, σ₂: False";
  bool found = out1.find(expected) != std::string::npos;
  return {code1 == 0 && found && out1 == out2,
          std::string("output ") + (found ? "contains" : "lacks") + " '" + expected + "', runs " +
              (out1 == out2 ? "identical" : "differ")};
}

struct SimMatrix {
  grid::ExperimentResult result;
  double seconds = 0.0;
  std::map<std::pair<int, grid::Policy>, const grid::AggregateRow*> rows;

  const grid::AggregateRow& row(int size, grid::Policy p) const { return *rows.at({size, p}); }
};

SimMatrix run_matrix() {
  grid::ExperimentPlan plan;
  plan.sizes = kGridSizes;
  plan.seeds_per_size = kSeedsPerSize;
  plan.base.seed = kBaseSeed;
  plan.base.obstacle_density = kObstacleDensity;
  plan.keep_logs = true;
  SimMatrix m;
  auto start = Clock::now();
  m.result = grid::experiment(plan);
  m.seconds = seconds_since(start);
  for (const auto& row : m.result.table) m.rows[{row.size, row.policy}] = &row;
  return m;
}

Outcome zero_collisions(const SimMatrix& m) {
  int runs = 0, clean = 0;
  for (const auto& r : m.result.runs) {
    if (r.policy != grid::Policy::SMTL) continue;
    ++runs;
    if (r.result && r.result->metrics.collision_rate == 0) ++clean;
  }
  fs::path dir = fs::temp_directory_path() / ("smtl_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  auto start = Clock::now();
  cli::write_sim_outputs(m.result, dir.string(), true);
  std::ostringstream out, err;
  int code = cli::cmd_verify_trajectories({(dir / "trajectories").string(), std::nullopt, "smtl"}, out, err);
  double secs = m.seconds + seconds_since(start);
  fs::remove_all(dir);
  std::string summary = out.str();
  if (auto nl = summary.rfind('\n', summary.size() - 2); nl != std::string::npos) summary = summary.substr(nl + 1);
  if (!summary.empty() && summary.back() == '\n') summary.pop_back();
  bool pass = runs == static_cast<int>(kGridSizes.size()) * kSeedsPerSize && clean == runs && code == 0 &&
              secs < kSimSecondsLimit;
  return {pass, std::to_string(clean) + "/" + std::to_string(runs) + " SMTL runs collision-free; verifier: " +
                    summary + "; matrix " + fmt(secs) + " s (limit " + fmt(kSimSecondsLimit) + " s)"};
}

std::string series(const SimMatrix& m, grid::Policy p, const std::function<double(const grid::AggregateRow&)>& get) {
  std::string s;
  for (int n : kGridSizes) s += (s.empty() ? "" : ", ") + ("N=" + std::to_string(n) + ": " + fmt(get(m.row(n, p))));
  return s;
}

Outcome mtl_collision_trend(const SimMatrix& m) {
  auto get = [](const grid::AggregateRow& r) { return r.collision_rate.mean; };
  bool pass = true;
  for (std::size_t k = 0; k < kGridSizes.size(); ++k) {
    double v = get(m.row(kGridSizes[k], grid::Policy::MTL));
    if (!(v > 0)) pass = false;
    if (k > 0 && !(v > get(m.row(kGridSizes[k - 1], grid::Policy::MTL)))) pass = false;
  }
  return {pass, "mean collision rate " + series(m, grid::Policy::MTL, get)};
}

Outcome smtl_wait_trend(const SimMatrix& m) {
  auto get = [](const grid::AggregateRow& r) { return r.avg_waits.mean; };
  bool pass = true;
  for (std::size_t k = 0; k < kGridSizes.size(); ++k) {
    double v = get(m.row(kGridSizes[k], grid::Policy::SMTL));
    if (kGridSizes[k] >= 10 && !(v > 0)) pass = false;
    if (k > 0 && v < get(m.row(kGridSizes[k - 1], grid::Policy::SMTL))) pass = false;
  }
  return {pass, "mean waits " + series(m, grid::Policy::SMTL, get)};
}

Outcome efficiency_ordering(const SimMatrix& m) {
  bool pass = true;
  std::string detail;
  for (int n : {5, 10}) {
    double smtl = m.row(n, grid::Policy::SMTL).path_efficiency.mean;
    double mtl = m.row(n, grid::Policy::MTL).path_efficiency.mean;
    if (!(smtl >= mtl)) pass = false;
    detail += (detail.empty() ? "" : ", ") + ("N=" + std::to_string(n) + ": SMTL " + fmt(smtl) + " vs MTL " + fmt(mtl));
  }
  return {pass, detail};
}

Outcome compute_overhead(const SimMatrix& m) {
  bool pass = true;
  std::string detail;
  for (int n : kGridSizes) {
    double ratio = m.row(n, grid::Policy::SMTL).compute_ms.mean / m.row(n, grid::Policy::MTL).compute_ms.mean;
    if (!(ratio <= kComputeRatioLimit)) pass = false;
    detail += (detail.empty() ? "" : ", ") + ("N=" + std::to_string(n) + ": " + fmt(ratio) + "x");
  }
  return {pass, "SMTL/MTL per-decision time " + detail + " (limit " + fmt(kComputeRatioLimit) + "x)"};
}

Outcome horizon_monotonicity() {
  testgen::Rng rng(0xD1CE);
  int flips = 0, decided = 0, resolved = 0;
  for (int n = 0; n < kExtensionCases; ++n) {
    int levels = testgen::uniform(rng, 1, 3);
    testgen::FormulaShape shape;
    shape.max_level = levels;
    Formula f = testgen::random_formula(rng, shape);
    StratifiedTrace prefix = testgen::random_stratified(rng, levels, 20);
    StratifiedTrace longer = testgen::extend(rng, prefix, static_cast<std::size_t>(testgen::uniform(rng, 1, 12)));
    auto pos = static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<int>(prefix.size()) - 1));
    int level = testgen::uniform(rng, 1, levels);
    auto mode = testgen::chance(rng, 0.5) ? SemanticsMode::Strict : SemanticsMode::Scoped;
    Verdict before = evaluate(f, prefix, pos, level, mode);
    Verdict after = evaluate(f, longer, pos, level, mode);
    if (before == Verdict::Unknown) {
      if (after != Verdict::Unknown) ++resolved;
      continue;
    }
    ++decided;
    if (after != before) ++flips;
  }
  return {flips == 0, std::to_string(flips) + " flips; " + std::to_string(decided) + " decided prefixes kept their verdict, " +
                          std::to_string(resolved) + " Unknowns resolved"};
}

Outcome parser_round_trip() {
  testgen::Rng rng(0xE66);
  int ok = 0;
  for (int n = 0; n < kRoundTripFormulas; ++n) {
    testgen::FormulaShape shape;
    shape.max_depth = testgen::uniform(rng, 1, 8);
    Formula f = testgen::random_formula(rng, shape);
    try {
      if (parse(pretty_print(f)) == f) ++ok;
    } catch (const ParseError&) {
    }
  }
  int fixtures_ok = 0;
  const std::vector<std::string> fixtures{"nav.smtl", "deps.smtl", "psi.smtl"};
  for (const auto& name : fixtures) {
    std::ifstream in(fs::path(SMTL_FIXTURE_DIR) / name);
    std::stringstream text;
    text << in.rdbuf();
    try {
      Formula f = parse(text.str());
      if (parse(pretty_print(f)) == f) ++fixtures_ok;
    } catch (const ParseError&) {
    }
  }
  return {ok == kRoundTripFormulas && fixtures_ok == static_cast<int>(fixtures.size()),
          std::to_string(ok) + "/" + std::to_string(kRoundTripFormulas) + " random formulas, " +
              std::to_string(fixtures_ok) + "/" + std::to_string(fixtures.size()) + " fixtures"};
}

} // namespace

int main() {
  report(1, "oracle equivalence", oracle_equivalence());
  report(2, "MTL subsumption", mtl_subsumption());
  report(3, "stratification soundness", stratification_soundness());
  report(4, "separating example", separating_example());
  SimMatrix matrix = run_matrix();
  if (!matrix.result.all_ok()) {
    for (const auto& r : matrix.result.runs)
      if (r.error) std::cout << "  run N=" << r.size << " seed " << r.seed << " failed: " << *r.error << "\n";
  }
  report(5, "zero collisions under SMTL", zero_collisions(matrix));
  report(6, "MTL collision trend", mtl_collision_trend(matrix));
  report(7, "SMTL wait trend", smtl_wait_trend(matrix));
  report(8, "path efficiency ordering", efficiency_ordering(matrix));
  report(9, "compute overhead", compute_overhead(matrix));
  report(10, "horizon monotonicity", horizon_monotonicity());
  report(11, "parser round trip", parser_round_trip());
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}

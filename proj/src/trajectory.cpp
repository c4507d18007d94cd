#include "smtl/trajectory.hpp"

#include "smtl/errors.hpp"

#include <json.hpp>

#include <ostream>
#include <sstream>

namespace smtl::grid {

using nlohmann::json;

void write_trajectory(std::ostream& out, const std::vector<StepRecord>& log) {
  for (const auto& rec : log) {
    nlohmann::ordered_json positions = nlohmann::ordered_json::array();
    for (const auto& c : rec.positions) positions.push_back({c.row, c.col});
    nlohmann::ordered_json line = {{"t", rec.t},
                 {"positions", std::move(positions)},
                 {"collisions", rec.collisions},
                 {"waits_this_step", rec.waits}};
    out << line.dump() << '\n';
  }
}

std::vector<StepRecord> parse_trajectory(std::string_view text) {
  std::vector<StepRecord> log;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      json j = json::parse(line);
      StepRecord rec;
      rec.t = j.at("t").get<int>();
      for (const auto& p : j.at("positions")) rec.positions.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
      rec.collisions = j.at("collisions").get<int>();
      rec.waits = j.at("waits_this_step").get<std::vector<int>>();
      log.push_back(std::move(rec));
    } catch (const json::exception& e) {
      throw TraceFormatError("trajectory line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  for (std::size_t i = 0; i < log.size(); ++i)
    if (log[i].t != static_cast<int>(i))
      throw TraceFormatError("trajectory records must be consecutive steps from t = 0");
  return log;
}

std::string collide_prop(int i, int j) {
  return "collide_" + std::to_string(i) + "_" + std::to_string(j);
}

std::string at_goal_prop(int i) { return "at_goal_" + std::to_string(i); }

StratifiedTrace trajectory_trace(const std::vector<StepRecord>& log, const std::vector<Cell>* goals,
                                 std::optional<int> horizon) {
  if (log.empty()) throw TraceFormatError("empty trajectory");
  const int last = log.back().t;
  const int end = std::max(last, horizon.value_or(last));

  StratifiedTrace out;
  out.resolutions.emplace(1, 1);
  auto& states = out.levels[1];
  for (int t = 0; t <= end; ++t) {
    const auto& positions = log[static_cast<std::size_t>(std::min(t, last))].positions;
    State s;
    for (std::size_t i = 0; i < positions.size(); ++i) {
      for (std::size_t j = i + 1; j < positions.size(); ++j)
        if (positions[i] == positions[j]) s.insert(collide_prop(static_cast<int>(i), static_cast<int>(j)));
      if (goals && i < goals->size() && positions[i] == (*goals)[i]) s.insert(at_goal_prop(static_cast<int>(i)));
    }
    out.timestamps.emplace_back(t);
    states.push_back(std::move(s));
  }
  return out;
}

Formula pairwise_safety(int agent_count, int horizon) {
  std::optional<Formula> body;
  for (int i = 0; i < agent_count; ++i)
    for (int j = i + 1; j < agent_count; ++j) {
      Formula apart = Formula::negation(Formula::atom(collide_prop(i, j)));
      body = body ? Formula::conjunction(*body, apart) : apart;
    }
  return Formula::always(Interval::closed(0, horizon), body.value_or(Formula::truth()));
}

Formula goal_reaching(int agent, int horizon) {
  const Interval window = Interval::closed(0, horizon);
  return Formula::always(window, Formula::implies(Formula::atom("reachGoal_" + std::to_string(agent)),
                                                  Formula::eventually(window, Formula::atom(at_goal_prop(agent)))));
}

Formula stratified_coordination(int agent_count, int horizon) {
  std::optional<Formula> goals;
  for (int i = 0; i < agent_count; ++i) {
    Formula g = goal_reaching(i, horizon);
    goals = goals ? Formula::conjunction(*goals, g) : g;
  }
  Formula safety = pairwise_safety(agent_count, horizon);
  return Formula::stratum(1, goals ? Formula::conjunction(*goals, safety) : safety);
}

} // namespace smtl::grid

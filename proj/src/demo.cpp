#include "smtl/demo.hpp"

#include "smtl/parser.hpp"

#include <stdexcept>

namespace smtl::demo {

TimedTrace sampled_signal(const Rational& step, bool drop_midpoint) {
  const Rational end = 2;
  const Rational midpoint(1, 2);
  TimedTrace t;
  for (Rational at = 0; at <= end; at += step) {
    t.timestamps.push_back(at);
    State s;
    if (at <= 1 && !(drop_midpoint && at == midpoint)) s.insert("p");
    t.states.push_back(std::move(s));
  }
  return t;
}

namespace {

StratifiedTrace swap_levels(const StratifiedTrace& t) {
  StratifiedTrace out = t;
  out.levels[1] = t.levels.at(2);
  out.levels[2] = t.levels.at(1);
  return out;
}

} // namespace

Separation separating_example(const Rational& radius, const Rational& step) {
  if (sgn(radius) <= 0 || sgn(step) <= 0)
    throw std::invalid_argument("radius and step must be positive");

  Hierarchy h;
  h.ops.push_back(abstraction::SmoothIsolated{radius});
  // Any two state changes on a sampled grid are at least one step apart.
  h.resolutions[1] = step / 2;
  h.resolutions[2] = step;

  Separation s{radius,
               step,
               parse("L1 G[0,1] p & L2 F[0,2] !p"),
               sampled_signal(step, false),
               sampled_signal(step, true),
               {},
               {},
               Verdict::Unknown,
               Verdict::Unknown,
               Verdict::Unknown,
               Verdict::Unknown,
               radius < step,
               false};
  s.difference_sampled = s.first.states != s.second.states;
  s.first_stratified = build_stratified(s.first, h);
  s.second_stratified = build_stratified(s.second, h);
  s.first_verdict = evaluate(s.formula, s.first_stratified);
  s.second_verdict = evaluate(s.formula, s.second_stratified);
  s.first_verdict_smoothed_fine = evaluate(s.formula, swap_levels(s.first_stratified));
  s.second_verdict_smoothed_fine = evaluate(s.formula, swap_levels(s.second_stratified));
  return s;
}

} // namespace smtl::demo

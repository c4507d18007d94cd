#pragma once

#include "smtl/evaluator.hpp"
#include "smtl/formula.hpp"
#include "smtl/trace.hpp"

namespace smtl::demo {

/// Two sampled boolean signals over [0, 2] that agree except at t = 0.5:
/// p holds on [0, 1] in the first, and on [0, 1] minus {0.5} in the second.
/// Each is stratified with the raw signal at level 1 and its isolated-point
/// smoothing at level 2, and the formula
///   L1 G[0,1] p & L2 F[0,2] !p
/// is evaluated on both at position 0.
struct Separation {
  Rational radius;
  Rational step;
  Formula formula;
  TimedTrace first;
  TimedTrace second;
  StratifiedTrace first_stratified;
  StratifiedTrace second_stratified;
  Verdict first_verdict;
  Verdict second_verdict;
  /// Same formula with the smoothed signal at level 1 and the raw one at level 2.
  Verdict first_verdict_smoothed_fine;
  Verdict second_verdict_smoothed_fine;
  /// Radius below the sample step: the window holds only the centre sample.
  bool smoothing_inert;
  /// t = 0.5 is a sample point, so the two signals actually differ.
  bool difference_sampled;
};

/// Throws std::invalid_argument for non-positive radius or step.
Separation separating_example(const Rational& radius, const Rational& step);

TimedTrace sampled_signal(const Rational& step, bool drop_midpoint);

} // namespace smtl::demo

#pragma once

#include "smtl/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace smtl {

/// Set of propositions that hold in a state.
using State = std::set<std::string>;
using StateSequence = std::vector<State>;

/// Finite timed state sequence: timestamps start at 0 and strictly increase.
struct TimedTrace {
  std::vector<Rational> timestamps;
  StateSequence states;

  std::size_t size() const noexcept { return timestamps.size(); }
  friend bool operator==(const TimedTrace&, const TimedTrace&) = default;
};

/// One timestamp sequence shared by per-level state sequences.
struct StratifiedTrace {
  std::vector<Rational> timestamps;
  std::map<int, StateSequence> levels;
  std::map<int, Rational> resolutions;

  std::size_t size() const noexcept { return timestamps.size(); }
  bool has_level(int k) const { return levels.contains(k); }
  /// Level k as a standalone timed trace. Throws UnknownLevel.
  TimedTrace level_trace(int k) const;

  friend bool operator==(const StratifiedTrace&, const StratifiedTrace&) = default;
};

/// Single-level stratified trace with level 1 = t.
StratifiedTrace lift(const TimedTrace& t, Rational resolution = 1);

namespace abstraction {

struct Identity {
  friend bool operator==(const Identity&, const Identity&) = default;
};

/// Keeps only the named propositions.
struct Project {
  std::set<std::string> keep;
  friend bool operator==(const Project&, const Project&) = default;
};

/// p survives at position n only if p holds at every sample within the
/// closed window [t_n - radius, t_n + radius] and the window lies inside the
/// observed time span. Isolated drop-outs widen into gaps of width 2*radius.
struct SmoothIsolated {
  Rational radius;
  friend bool operator==(const SmoothIsolated&, const SmoothIsolated&) = default;
};

/// Piecewise-constant resampling on a grid of the given period. Every
/// position in [b*period, (b+1)*period) gets the bucket's sampled state:
/// with hold, the state in force at time b*period; without, the state at
/// the first position inside the bucket.
struct Downsample {
  Rational period;
  bool hold = true;
  friend bool operator==(const Downsample&, const Downsample&) = default;
};

} // namespace abstraction

using AbstractionOp = std::variant<abstraction::Identity, abstraction::Project,
                                   abstraction::SmoothIsolated, abstraction::Downsample>;

/// Throws std::invalid_argument on an empty keep set or non-positive parameter.
void check_op(const AbstractionOp& op);
std::string describe(const AbstractionOp& op);

/// ops[i] maps level i+1 to level i+2.
struct Hierarchy {
  std::vector<AbstractionOp> ops;
  std::map<int, Rational> resolutions;

  int levels() const noexcept { return static_cast<int>(ops.size()) + 1; }
};

TimedTrace apply_abstraction(const AbstractionOp& op, const TimedTrace& trace);

/// Level 1 is base; level k+1 is ops[k-1] applied to level k.
/// Throws ResolutionViolation if the result breaks a trace invariant.
StratifiedTrace build_stratified(const TimedTrace& base, const Hierarchy& h);

/// Throws LevelMismatch if t does not have exactly h.levels() levels 1..K.
bool check_consistency(const StratifiedTrace& t, const Hierarchy& h);

enum class ViolationKind {
  Empty,
  NonZeroStart,
  NonMonotoneTimestamps,
  LengthMismatch,
  MissingResolution,
  NonIncreasingResolutions,
  MultiRate,
  BadLevel,
};

struct Violation {
  ViolationKind kind;
  std::optional<int> level;
  std::optional<std::size_t> position;
  std::string message;
};

std::string_view kind_name(ViolationKind k);

/// Every broken invariant, in a stable order. Successive state changes at
/// level k must be at least the level's resolution apart, so only runs
/// delimited by two changes are constrained.
std::vector<Violation> validate(const StratifiedTrace& t);
std::vector<Violation> validate(const TimedTrace& t);

} // namespace smtl

#include "smtl/trace.hpp"

#include "smtl/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace smtl {

TimedTrace StratifiedTrace::level_trace(int k) const {
  auto it = levels.find(k);
  if (it == levels.end()) throw UnknownLevel(k);
  return {timestamps, it->second};
}

StratifiedTrace lift(const TimedTrace& t, Rational resolution) {
  StratifiedTrace out;
  out.timestamps = t.timestamps;
  out.levels.emplace(1, t.states);
  out.resolutions.emplace(1, std::move(resolution));
  return out;
}

void check_op(const AbstractionOp& op) {
  std::visit(
      [](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, abstraction::Project>) {
          if (o.keep.empty()) throw std::invalid_argument("project: keep set is empty");
        } else if constexpr (std::is_same_v<T, abstraction::SmoothIsolated>) {
          if (sgn(o.radius) <= 0) throw std::invalid_argument("smooth_isolated: radius <= 0");
        } else if constexpr (std::is_same_v<T, abstraction::Downsample>) {
          if (sgn(o.period) <= 0) throw std::invalid_argument("downsample: period <= 0");
        }
      },
      op);
}

std::string describe(const AbstractionOp& op) {
  return std::visit(
      [](const auto& o) -> std::string {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, abstraction::Identity>) {
          return "identity";
        } else if constexpr (std::is_same_v<T, abstraction::Project>) {
          std::string s = "project{";
          for (const auto& p : o.keep) s += (s.back() == '{' ? "" : ",") + p;
          return s + "}";
        } else if constexpr (std::is_same_v<T, abstraction::SmoothIsolated>) {
          return "smooth_isolated(" + format_rational(o.radius) + ")";
        } else {
          return "downsample(" + format_rational(o.period) + (o.hold ? ",hold)" : ",sample)");
        }
      },
      op);
}

namespace {

StateSequence smooth(const TimedTrace& in, const Rational& radius) {
  const auto& ts = in.timestamps;
  const std::size_t n = ts.size();
  StateSequence out(n);
  if (n == 0) return out;
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational from = ts[i] - radius;
    const Rational to = ts[i] + radius;
    if (sgn(from) < 0 || to > ts.back()) continue;
    while (ts[lo] < from) ++lo;
    if (hi < i) hi = i;
    while (hi + 1 < n && ts[hi + 1] <= to) ++hi;
    for (const auto& p : in.states[i]) {
      bool everywhere = true;
      for (std::size_t m = lo; m <= hi && everywhere; ++m)
        everywhere = in.states[m].contains(p);
      if (everywhere) out[i].insert(p);
    }
  }
  return out;
}

StateSequence downsample(const TimedTrace& in, const abstraction::Downsample& op) {
  const auto& ts = in.timestamps;
  StateSequence out(ts.size());
  std::size_t i = 0;
  while (i < ts.size()) {
    mpz_class bucket = mpz_class(ts[i] / op.period); // floor for non-negative values
    const Rational start = Rational(bucket) * op.period;
    const Rational end = start + op.period;
    std::size_t j = i;
    while (j < ts.size() && ts[j] < end) ++j;
    // With hold, the sample at the grid point is the last state at or before it.
    std::size_t source = i;
    if (op.hold && i > 0 && ts[i] != start) source = i - 1;
    for (std::size_t k = i; k < j; ++k) out[k] = in.states[source];
    i = j;
  }
  return out;
}

} // namespace

TimedTrace apply_abstraction(const AbstractionOp& op, const TimedTrace& trace) {
  check_op(op);
  TimedTrace out{trace.timestamps, {}};
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, abstraction::Identity>) {
          out.states = trace.states;
        } else if constexpr (std::is_same_v<T, abstraction::Project>) {
          out.states.reserve(trace.states.size());
          for (const auto& s : trace.states) {
            State kept;
            std::set_intersection(s.begin(), s.end(), o.keep.begin(), o.keep.end(),
                                  std::inserter(kept, kept.end()));
            out.states.push_back(std::move(kept));
          }
        } else if constexpr (std::is_same_v<T, abstraction::SmoothIsolated>) {
          out.states = smooth(trace, o.radius);
        } else {
          out.states = downsample(trace, o);
        }
      },
      op);
  return out;
}

StratifiedTrace build_stratified(const TimedTrace& base, const Hierarchy& h) {
  StratifiedTrace out;
  out.timestamps = base.timestamps;
  out.resolutions = h.resolutions;
  TimedTrace level = base;
  out.levels.emplace(1, level.states);
  for (std::size_t k = 0; k < h.ops.size(); ++k) {
    level = apply_abstraction(h.ops[k], level);
    out.levels.emplace(static_cast<int>(k) + 2, level.states);
  }
  if (auto violations = validate(out); !violations.empty())
    throw ResolutionViolation(violations.front().message);
  return out;
}

bool check_consistency(const StratifiedTrace& t, const Hierarchy& h) {
  const int k_max = h.levels();
  if (static_cast<int>(t.levels.size()) != k_max || t.levels.begin()->first != 1 ||
      t.levels.rbegin()->first != k_max)
    throw LevelMismatch("trace has " + std::to_string(t.levels.size()) +
                        " levels but the hierarchy implies " + std::to_string(k_max));
  for (int k = 1; k < k_max; ++k) {
    TimedTrace below{t.timestamps, t.levels.at(k)};
    if (apply_abstraction(h.ops[static_cast<std::size_t>(k - 1)], below).states !=
        t.levels.at(k + 1))
      return false;
  }
  return true;
}

std::string_view kind_name(ViolationKind k) {
  switch (k) {
  case ViolationKind::Empty: return "empty";
  case ViolationKind::NonZeroStart: return "non-zero-start";
  case ViolationKind::NonMonotoneTimestamps: return "non-monotone-timestamps";
  case ViolationKind::LengthMismatch: return "length-mismatch";
  case ViolationKind::MissingResolution: return "missing-resolution";
  case ViolationKind::NonIncreasingResolutions: return "non-increasing-resolutions";
  case ViolationKind::MultiRate: return "multi-rate";
  case ViolationKind::BadLevel: return "bad-level";
  }
  return "?";
}

namespace {

void check_timestamps(const std::vector<Rational>& ts, std::vector<Violation>& out) {
  if (ts.empty()) {
    out.push_back({ViolationKind::Empty, std::nullopt, std::nullopt, "trace has no positions"});
    return;
  }
  if (sgn(ts.front()) != 0)
    out.push_back({ViolationKind::NonZeroStart, std::nullopt, 0,
                   "first timestamp is " + format_rational(ts.front()) + ", expected 0"});
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (!(ts[i - 1] < ts[i]))
      out.push_back({ViolationKind::NonMonotoneTimestamps, std::nullopt, i,
                     "timestamp " + format_rational(ts[i]) + " at position " +
                         std::to_string(i) + " does not exceed " + format_rational(ts[i - 1])});
}

} // namespace

std::vector<Violation> validate(const TimedTrace& t) {
  std::vector<Violation> out;
  check_timestamps(t.timestamps, out);
  if (t.states.size() != t.timestamps.size())
    out.push_back({ViolationKind::LengthMismatch, std::nullopt, std::nullopt,
                   std::to_string(t.states.size()) + " states for " +
                       std::to_string(t.timestamps.size()) + " timestamps"});
  return out;
}

std::vector<Violation> validate(const StratifiedTrace& t) {
  std::vector<Violation> out;
  check_timestamps(t.timestamps, out);
  if (t.levels.empty())
    out.push_back({ViolationKind::Empty, std::nullopt, std::nullopt, "trace has no levels"});

  for (const auto& [k, seq] : t.levels) {
    if (k < 1)
      out.push_back({ViolationKind::BadLevel, k, std::nullopt,
                     "level " + std::to_string(k) + " is below 1"});
    if (seq.size() != t.timestamps.size())
      out.push_back({ViolationKind::LengthMismatch, k, std::nullopt,
                     "level " + std::to_string(k) + " has " + std::to_string(seq.size()) +
                         " states for " + std::to_string(t.timestamps.size()) + " timestamps"});
    if (!t.resolutions.contains(k))
      out.push_back({ViolationKind::MissingResolution, k, std::nullopt,
                     "level " + std::to_string(k) + " has no resolution"});
  }

  const std::pair<const int, Rational>* prev = nullptr;
  for (const auto& entry : t.resolutions) {
    if (sgn(entry.second) <= 0)
      out.push_back({ViolationKind::NonIncreasingResolutions, entry.first, std::nullopt,
                     "resolution of level " + std::to_string(entry.first) + " is not positive"});
    if (prev && !(prev->second < entry.second))
      out.push_back({ViolationKind::NonIncreasingResolutions, entry.first, std::nullopt,
                     "resolution of level " + std::to_string(entry.first) + " (" +
                         format_rational(entry.second) + ") does not exceed level " +
                         std::to_string(prev->first) + " (" + format_rational(prev->second) +
                         ")"});
    prev = &entry;
  }

  for (const auto& [k, seq] : t.levels) {
    auto rho = t.resolutions.find(k);
    if (rho == t.resolutions.end() || seq.size() != t.timestamps.size()) continue;
    std::optional<std::size_t> last_change;
    for (std::size_t n = 1; n < seq.size(); ++n) {
      if (seq[n] == seq[n - 1]) continue;
      if (last_change) {
        Rational gap = t.timestamps[n] - t.timestamps[*last_change];
        if (gap < rho->second)
          out.push_back({ViolationKind::MultiRate, k, n,
                         "level " + std::to_string(k) + " changes at positions " +
                             std::to_string(*last_change) + " and " + std::to_string(n) +
                             " only " + format_rational(gap) + " apart (resolution " +
                             format_rational(rho->second) + ")"});
      }
      last_change = n;
    }
  }
  return out;
}

} // namespace smtl

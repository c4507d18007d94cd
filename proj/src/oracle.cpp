#include "smtl/errors.hpp"
#include "smtl/evaluator.hpp"

namespace smtl {

namespace {

// Every clause recomputes its operands from scratch; nothing is cached or
// short-circuited so that this stays a literal reading of the definitions.
struct Oracle {
  const StratifiedTrace& t;
  SemanticsMode mode;

  bool future_in_window(const Interval& window, std::size_t i) const {
    return window.reaches_beyond(t.timestamps.back() - t.timestamps[i]);
  }

  Verdict eval(const Formula& f, std::size_t i, int m) const {
    const std::size_t n = t.size();
    switch (f.op()) {
    case Op::True: return Verdict::True;
    case Op::False: return Verdict::False;
    case Op::Atom:
      return t.levels.at(m)[i].contains(f.name()) ? Verdict::True : Verdict::False;
    case Op::Not: return !eval(f.lhs(), i, m);
    case Op::And: return eval(f.lhs(), i, m) && eval(f.rhs(), i, m);
    case Op::Or: return eval(f.lhs(), i, m) || eval(f.rhs(), i, m);
    case Op::Implies: return !eval(f.lhs(), i, m) || eval(f.rhs(), i, m);

    case Op::Until: {
      Verdict result = Verdict::False;
      for (std::size_t j = i; j < n; ++j) {
        if (!f.interval().contains(t.timestamps[j] - t.timestamps[i])) continue;
        Verdict witness = eval(f.rhs(), j, m);
        for (std::size_t k = i; k < j; ++k) witness = witness && eval(f.lhs(), k, m);
        result = result || witness;
      }
      if (future_in_window(f.interval(), i)) {
        Verdict pending = Verdict::Unknown;
        for (std::size_t k = i; k < n; ++k) pending = pending && eval(f.lhs(), k, m);
        result = result || pending;
      }
      return result;
    }

    case Op::Release: {
      Verdict result = Verdict::True;
      for (std::size_t j = i; j < n; ++j) {
        if (!f.interval().contains(t.timestamps[j] - t.timestamps[i])) continue;
        Verdict kept = eval(f.rhs(), j, m);
        for (std::size_t k = i; k < j; ++k) kept = kept || eval(f.lhs(), k, m);
        result = result && kept;
      }
      if (future_in_window(f.interval(), i)) {
        Verdict pending = Verdict::Unknown;
        for (std::size_t k = i; k < n; ++k) pending = pending || eval(f.lhs(), k, m);
        result = result && pending;
      }
      return result;
    }

    case Op::Eventually: {
      Verdict result = Verdict::False;
      for (std::size_t j = i; j < n; ++j)
        if (f.interval().contains(t.timestamps[j] - t.timestamps[i]))
          result = result || eval(f.lhs(), j, m);
      if (future_in_window(f.interval(), i)) result = result || Verdict::Unknown;
      return result;
    }

    case Op::Always: {
      Verdict result = Verdict::True;
      for (std::size_t j = i; j < n; ++j)
        if (f.interval().contains(t.timestamps[j] - t.timestamps[i]))
          result = result && eval(f.lhs(), j, m);
      if (future_in_window(f.interval(), i)) result = result && Verdict::Unknown;
      return result;
    }

    case Op::Stratum: {
      Verdict inner = eval(f.lhs(), i, f.level());
      if (mode == SemanticsMode::Strict && f.level() < m) return Verdict::False;
      return inner;
    }
    }
    return Verdict::Unknown;
  }
};

void require_levels(const Formula& f, const StratifiedTrace& t) {
  if (f.op() == Op::Stratum && !t.has_level(f.level())) throw UnknownLevel(f.level());
  for (int i = 0; i < f.arity(); ++i) require_levels(f.child(i), t);
}

} // namespace

Verdict oracle_evaluate(const Formula& f, const StratifiedTrace& t, std::size_t position,
                        int level, SemanticsMode mode) {
  if (t.size() > kOracleMaxPositions)
    throw InstanceTooLarge("oracle accepts at most " + std::to_string(kOracleMaxPositions) +
                           " positions, trace has " + std::to_string(t.size()));
  if (f.depth() > kOracleMaxDepth)
    throw InstanceTooLarge("oracle accepts formula depth at most " +
                           std::to_string(kOracleMaxDepth) + ", formula has " +
                           std::to_string(f.depth()));
  if (!t.has_level(level)) throw UnknownLevel(level);
  require_levels(f, t);
  if (position >= t.size())
    throw PositionOutOfRange("position " + std::to_string(position) + " outside the trace");
  return Oracle{t, mode}.eval(f, position, level);
}

} // namespace smtl

#include "smtl/errors.hpp"
#include "smtl/evaluator.hpp"

#include <optional>
#include <unordered_map>

namespace smtl {

namespace {

/// Top-down MTL evaluation over one timed trace. Each (node, position) is
/// computed at most once; temporal operators scan forward from the
/// position and stop as soon as the verdict can no longer change.
class MtlEvaluator {
public:
  explicit MtlEvaluator(const TimedTrace& t) : t_(t) {}

  Verdict at(const Formula& f, std::size_t i) {
    auto& slots = memo_[f.identity()];
    if (slots.empty()) slots.resize(t_.size());
    if (!slots[i]) slots[i] = compute(f, i);
    return *slots[i];
  }

private:
  Verdict compute(const Formula& f, std::size_t i) {
    switch (f.op()) {
    case Op::True: return Verdict::True;
    case Op::False: return Verdict::False;
    case Op::Atom: return t_.states[i].contains(f.name()) ? Verdict::True : Verdict::False;
    case Op::Not: return !at(f.lhs(), i);
    case Op::And: return at(f.lhs(), i) && at(f.rhs(), i);
    case Op::Or: return at(f.lhs(), i) || at(f.rhs(), i);
    case Op::Implies: return !at(f.lhs(), i) || at(f.rhs(), i);
    case Op::Until: return until(&f.lhs(), f.interval(), f.rhs(), i);
    case Op::Eventually: return until(nullptr, f.interval(), f.lhs(), i);
    case Op::Release: return release(&f.lhs(), f.interval(), f.rhs(), i);
    case Op::Always: return release(nullptr, f.interval(), f.lhs(), i);
    case Op::Stratum: throw NotMTL();
    }
    return Verdict::Unknown;
  }

  // hold == nullptr stands for the constant true left operand.
  Verdict until(const Formula* hold, const Interval& window, const Formula& goal, std::size_t i) {
    Verdict best = Verdict::False;
    Verdict held = Verdict::True; // conjunction of hold over [i, j)
    for (std::size_t j = i; j < t_.size(); ++j) {
      Rational d = t_.timestamps[j] - t_.timestamps[i];
      if (window.below(d)) return best;
      if (window.contains(d)) best = best || (held && at(goal, j));
      if (best == Verdict::True) return best;
      if (hold) held = held && at(*hold, j);
      if (held == Verdict::False) return best;
    }
    if (window.reaches_beyond(t_.timestamps.back() - t_.timestamps[i]))
      best = best || (held && Verdict::Unknown);
    return best;
  }

  // a R b = !(!a U !b): b must hold through the window until released by a.
  Verdict release(const Formula* trigger, const Interval& window, const Formula& body,
                  std::size_t i) {
    Verdict worst = Verdict::True;
    Verdict released = Verdict::False; // disjunction of trigger over [i, j)
    for (std::size_t j = i; j < t_.size(); ++j) {
      Rational d = t_.timestamps[j] - t_.timestamps[i];
      if (window.below(d)) return worst;
      if (window.contains(d)) worst = worst && (released || at(body, j));
      if (worst == Verdict::False) return worst;
      if (trigger) released = released || at(*trigger, j);
      if (released == Verdict::True) return worst;
    }
    if (window.reaches_beyond(t_.timestamps.back() - t_.timestamps[i]))
      worst = worst && (released || Verdict::Unknown);
    return worst;
  }

  const TimedTrace& t_;
  std::unordered_map<const void*, std::vector<std::optional<Verdict>>> memo_;
};

} // namespace

Verdict evaluate_mtl(const Formula& f, const TimedTrace& t, std::size_t position) {
  if (position >= t.size())
    throw PositionOutOfRange("position " + std::to_string(position) + " outside a trace of " +
                             std::to_string(t.size()) + " positions");
  translate_mtl(f);
  MtlEvaluator evaluator(t);
  return evaluator.at(f, position);
}

} // namespace smtl

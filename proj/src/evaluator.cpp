#include "smtl/evaluator.hpp"

#include "smtl/errors.hpp"
#include "smtl/logic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace smtl {

std::string_view to_string(Verdict v) {
  switch (v) {
  case Verdict::True: return "True";
  case Verdict::False: return "False";
  case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view to_string(SemanticsMode m) {
  return m == SemanticsMode::Strict ? "strict" : "scoped";
}

namespace {

using Table = std::vector<Verdict>;

/// Bottom-up evaluation of a core formula: one verdict table per
/// (subformula, level), computed once per call.
class TableEvaluator {
public:
  TableEvaluator(const StratifiedTrace& t, SemanticsMode mode) : trace_(t), mode_(mode) {}

  const Table& table(const Formula& f, int level) {
    auto key = std::make_pair(f.identity(), level);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Table result = compute(f, level);
    return memo_.emplace(key, std::move(result)).first->second;
  }

private:
  std::size_t size() const { return trace_.size(); }

  Table compute(const Formula& f, int level) {
    const std::size_t n = size();
    switch (f.op()) {
    case Op::True:
      return Table(n, Verdict::True);
    case Op::Atom: {
      const auto& states = trace_.levels.at(level);
      Table out(n);
      for (std::size_t i = 0; i < n; ++i)
        out[i] = states[i].contains(f.name()) ? Verdict::True : Verdict::False;
      return out;
    }
    case Op::Not: {
      Table out = table(f.lhs(), level);
      for (auto& v : out) v = !v;
      return out;
    }
    case Op::And: {
      Table out = table(f.lhs(), level);
      const Table& rhs = table(f.rhs(), level);
      for (std::size_t i = 0; i < n; ++i) out[i] = out[i] && rhs[i];
      return out;
    }
    case Op::Until:
      return until(table(f.lhs(), level), f.interval(), table(f.rhs(), level));
    case Op::Stratum:
      if (mode_ == SemanticsMode::Strict && f.level() < level) return Table(n, Verdict::False);
      return table(f.lhs(), f.level());
    default:
      throw std::logic_error("table evaluator expects a desugared formula");
    }
  }

  // Value(i) = max over witnesses j in the window of min(B[j], min A[i..j)),
  // joined with Unknown when a later, unobserved position could still fall
  // inside the window. The inner minimum only takes three shapes, so the
  // window splits at the first non-True and first False entry of A.
  Table until(const Table& a, const Interval& interval, const Table& b) {
    const std::size_t n = size();
    const auto& ts = trace_.timestamps;

    std::vector<std::size_t> first_not_true(n + 1, n), first_false(n + 1, n);
    for (std::size_t i = n; i-- > 0;) {
      first_not_true[i] = a[i] == Verdict::True ? first_not_true[i + 1] : i;
      first_false[i] = a[i] == Verdict::False ? i : first_false[i + 1];
    }
    std::vector<std::size_t> true_count(n + 1, 0), open_count(n + 1, 0);
    for (std::size_t j = 0; j < n; ++j) {
      true_count[j + 1] = true_count[j] + (b[j] == Verdict::True);
      open_count[j + 1] = open_count[j] + (b[j] != Verdict::False);
    }
    auto best_of_b = [&](std::size_t from, std::size_t to) { // inclusive range
      if (from > to) return Verdict::False;
      if (true_count[to + 1] > true_count[from]) return Verdict::True;
      if (open_count[to + 1] > open_count[from]) return Verdict::Unknown;
      return Verdict::False;
    };

    Table out(n, Verdict::False);
    for (std::size_t i = 0; i < n; ++i) {
      const Rational low = ts[i] + interval.lower();
      auto lo_it = interval.lower_closed() ? std::lower_bound(ts.begin() + i, ts.end(), low)
                                           : std::upper_bound(ts.begin() + i, ts.end(), low);
      std::size_t lo = static_cast<std::size_t>(lo_it - ts.begin());
      std::size_t hi_end = n; // one past the last index inside the window
      if (interval.bounded()) {
        const Rational high = ts[i] + *interval.upper();
        auto hi_it = interval.upper_closed() ? std::upper_bound(ts.begin() + i, ts.end(), high)
                                             : std::lower_bound(ts.begin() + i, ts.end(), high);
        hi_end = static_cast<std::size_t>(hi_it - ts.begin());
      }

      Verdict v = Verdict::False;
      if (lo < hi_end) {
        const std::size_t hi = hi_end - 1;
        v = best_of_b(lo, std::min(hi, first_not_true[i]));
        if (v != Verdict::True && first_not_true[i] < n) {
          std::size_t from = std::max(lo, first_not_true[i] + 1);
          std::size_t to = std::min(hi, first_false[i]);
          if (best_of_b(from, to) != Verdict::False) v = v || Verdict::Unknown;
        }
      }
      if (v != Verdict::True && first_false[i] == n &&
          interval.reaches_beyond(ts.back() - ts[i]))
        v = v || Verdict::Unknown;
      out[i] = v;
    }
    return out;
  }

  const StratifiedTrace& trace_;
  SemanticsMode mode_;
  std::map<std::pair<const void*, int>, Table> memo_;
};

void check_levels(const Formula& f, const StratifiedTrace& t, int level) {
  if (!t.has_level(level)) throw UnknownLevel(level);
  for (int k : stratum_levels(f))
    if (!t.has_level(k)) throw UnknownLevel(k);
}

} // namespace

std::vector<Verdict> evaluate_all(const Formula& f, const StratifiedTrace& t, int level,
                                  SemanticsMode mode) {
  check_levels(f, t, level);
  for (const auto& [k, seq] : t.levels)
    if (seq.size() != t.size())
      throw std::invalid_argument("level " + std::to_string(k) + " is not aligned with the timestamps");
  const Formula core = desugar(f);
  TableEvaluator evaluator(t, mode);
  return evaluator.table(core, level);
}

Verdict evaluate(const Formula& f, const StratifiedTrace& t, std::size_t position, int level,
                 SemanticsMode mode) {
  if (position >= t.size())
    throw PositionOutOfRange("position " + std::to_string(position) + " outside a trace of " +
                             std::to_string(t.size()) + " positions");
  return evaluate_all(f, t, level, mode)[position];
}

Formula translate_mtl(const Formula& f) {
  if (max_level(f) > 0) throw NotMTL();
  return f;
}

} // namespace smtl

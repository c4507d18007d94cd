#pragma once

#include "smtl/interval.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace smtl {

enum class Op : std::uint8_t {
  True,
  False,
  Atom,
  Not,
  And,
  Or,
  Implies,
  Until,
  Release,
  Eventually,
  Always,
  Stratum,
};

std::string_view op_name(Op op);

/// Immutable SMTL formula. Copies share structure; equality is structural.
///
/// Core nodes are Atom, True, Not, And, Until and Stratum. False, Or,
/// Implies, Release, Eventually and Always are derived and expand through
/// desugar().
class Formula {
public:
  static Formula truth();
  static Formula falsity();
  /// Throws std::invalid_argument if name is not an identifier or is reserved.
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula until(Formula lhs, Interval interval, Formula rhs);
  static Formula release(Formula lhs, Interval interval, Formula rhs);
  static Formula eventually(Interval interval, Formula f);
  static Formula always(Interval interval, Formula f);
  /// Throws std::invalid_argument if level < 1.
  static Formula stratum(int level, Formula f);

  Op op() const noexcept;
  /// Number of children: 0, 1 or 2.
  int arity() const noexcept;
  const Formula& child(int i) const;
  const Formula& lhs() const { return child(0); }
  const Formula& rhs() const { return child(1); }
  const std::string& name() const;
  const Interval& interval() const;
  int level() const;

  bool is_temporal() const noexcept;

  /// Stable identity of the shared node, used for per-evaluation memo tables.
  const void* identity() const noexcept { return node_.get(); }

  std::size_t size() const;
  std::size_t depth() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Op op, std::string name, int level, std::optional<Interval> interval,
                      std::optional<Formula> a, std::optional<Formula> b);

  std::shared_ptr<const Node> node_;
};

bool is_identifier(std::string_view text);
/// Words the parser claims for itself: true false F G U R L inf, and L<digits>.
bool is_reserved_word(std::string_view text);

} // namespace smtl

#include "smtl/formula.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace smtl {

struct Formula::Node {
  Op op;
  std::string name;
  int level = 0;
  std::optional<Interval> interval;
  std::array<std::optional<Formula>, 2> children;
};

std::string_view op_name(Op op) {
  switch (op) {
  case Op::True: return "true";
  case Op::False: return "false";
  case Op::Atom: return "atom";
  case Op::Not: return "not";
  case Op::And: return "and";
  case Op::Or: return "or";
  case Op::Implies: return "implies";
  case Op::Until: return "until";
  case Op::Release: return "release";
  case Op::Eventually: return "eventually";
  case Op::Always: return "always";
  case Op::Stratum: return "stratum";
  }
  return "?";
}

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  auto head = static_cast<unsigned char>(text.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(text.begin() + 1, text.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

bool is_reserved_word(std::string_view text) {
  static constexpr std::array<std::string_view, 8> words{"true", "false", "F", "G",
                                                         "U",    "R",     "L", "inf"};
  if (std::find(words.begin(), words.end(), text) != words.end()) return true;
  return text.size() > 1 && text.front() == 'L' &&
         std::all_of(text.begin() + 1, text.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Formula Formula::make(Op op, std::string name, int level, std::optional<Interval> interval,
                      std::optional<Formula> a, std::optional<Formula> b) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->name = std::move(name);
  node->level = level;
  node->interval = std::move(interval);
  node->children = {std::move(a), std::move(b)};
  return Formula(std::move(node));
}

Formula Formula::truth() {
  static const Formula t = make(Op::True, {}, 0, std::nullopt, std::nullopt, std::nullopt);
  return t;
}

Formula Formula::falsity() {
  static const Formula f = make(Op::False, {}, 0, std::nullopt, std::nullopt, std::nullopt);
  return f;
}

Formula Formula::atom(std::string name) {
  if (!is_identifier(name) || is_reserved_word(name))
    throw std::invalid_argument("invalid proposition name '" + name + "'");
  return make(Op::Atom, std::move(name), 0, std::nullopt, std::nullopt, std::nullopt);
}

Formula Formula::negation(Formula f) {
  return make(Op::Not, {}, 0, std::nullopt, std::move(f), std::nullopt);
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return make(Op::And, {}, 0, std::nullopt, std::move(lhs), std::move(rhs));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return make(Op::Or, {}, 0, std::nullopt, std::move(lhs), std::move(rhs));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  return make(Op::Implies, {}, 0, std::nullopt, std::move(lhs), std::move(rhs));
}

Formula Formula::until(Formula lhs, Interval interval, Formula rhs) {
  return make(Op::Until, {}, 0, std::move(interval), std::move(lhs), std::move(rhs));
}

Formula Formula::release(Formula lhs, Interval interval, Formula rhs) {
  return make(Op::Release, {}, 0, std::move(interval), std::move(lhs), std::move(rhs));
}

Formula Formula::eventually(Interval interval, Formula f) {
  return make(Op::Eventually, {}, 0, std::move(interval), std::move(f), std::nullopt);
}

Formula Formula::always(Interval interval, Formula f) {
  return make(Op::Always, {}, 0, std::move(interval), std::move(f), std::nullopt);
}

Formula Formula::stratum(int level, Formula f) {
  if (level < 1) throw std::invalid_argument("stratum level must be >= 1");
  return make(Op::Stratum, {}, level, std::nullopt, std::move(f), std::nullopt);
}

Op Formula::op() const noexcept { return node_->op; }

int Formula::arity() const noexcept {
  return node_->children[1] ? 2 : node_->children[0] ? 1 : 0;
}

const Formula& Formula::child(int i) const {
  if (i < 0 || i >= arity()) throw std::out_of_range("formula child index");
  return *node_->children[static_cast<std::size_t>(i)];
}

const std::string& Formula::name() const {
  if (node_->op != Op::Atom) throw std::logic_error("name() on a non-atom");
  return node_->name;
}

const Interval& Formula::interval() const {
  if (!node_->interval) throw std::logic_error("interval() on a non-temporal node");
  return *node_->interval;
}

int Formula::level() const {
  if (node_->op != Op::Stratum) throw std::logic_error("level() on a non-stratum");
  return node_->level;
}

bool Formula::is_temporal() const noexcept { return node_->interval.has_value(); }

std::size_t Formula::size() const {
  std::size_t n = 1;
  for (int i = 0; i < arity(); ++i) n += child(i).size();
  return n;
}

std::size_t Formula::depth() const {
  std::size_t d = 0;
  for (int i = 0; i < arity(); ++i) d = std::max(d, child(i).depth());
  return d + 1;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.op != y.op || x.name != y.name || x.level != y.level || x.interval != y.interval)
    return false;
  for (std::size_t i = 0; i < 2; ++i) {
    if (x.children[i].has_value() != y.children[i].has_value()) return false;
    if (x.children[i] && !(*x.children[i] == *y.children[i])) return false;
  }
  return true;
}

} // namespace smtl

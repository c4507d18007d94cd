#include "smtl/logic.hpp"

#include "smtl/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace smtl {

const Formula& node_at(const Formula& root, const NodePath& path) {
  const Formula* cur = &root;
  for (int i : path) cur = &cur->child(i);
  return *cur;
}

namespace {

bool well_formed_under(const Formula& f, int enclosing) {
  int bound = enclosing;
  if (f.op() == Op::Stratum) {
    if (enclosing > 0 && f.level() > enclosing) return false;
    bound = f.level();
  }
  for (int i = 0; i < f.arity(); ++i)
    if (!well_formed_under(f.child(i), bound)) return false;
  return true;
}

} // namespace

// Checking each stratum against its nearest enclosing one suffices: the
// relation is transitive along the nesting chain.
bool is_well_formed(const Formula& f) { return well_formed_under(f, 0); }

Formula desugar(const Formula& f) {
  using F = Formula;
  switch (f.op()) {
  case Op::True:
  case Op::Atom:
    return f;
  case Op::False:
    return F::negation(F::truth());
  case Op::Not:
    return F::negation(desugar(f.lhs()));
  case Op::And:
    return F::conjunction(desugar(f.lhs()), desugar(f.rhs()));
  case Op::Or:
    return F::negation(
        F::conjunction(F::negation(desugar(f.lhs())), F::negation(desugar(f.rhs()))));
  case Op::Implies:
    return F::negation(F::conjunction(desugar(f.lhs()), F::negation(desugar(f.rhs()))));
  case Op::Until:
    return F::until(desugar(f.lhs()), f.interval(), desugar(f.rhs()));
  case Op::Release:
    return F::negation(F::until(F::negation(desugar(f.lhs())), f.interval(),
                                F::negation(desugar(f.rhs()))));
  case Op::Eventually:
    return F::until(F::truth(), f.interval(), desugar(f.lhs()));
  case Op::Always:
    return F::negation(F::until(F::truth(), f.interval(), F::negation(desugar(f.lhs()))));
  case Op::Stratum:
    return F::stratum(f.level(), desugar(f.lhs()));
  }
  throw std::logic_error("unhandled operator");
}

bool is_core(const Formula& f) {
  switch (f.op()) {
  case Op::True:
  case Op::Atom:
  case Op::Not:
  case Op::And:
  case Op::Until:
  case Op::Stratum:
    break;
  default:
    return false;
  }
  for (int i = 0; i < f.arity(); ++i)
    if (!is_core(f.child(i))) return false;
  return true;
}

namespace {

template <class Visit> void walk(const Formula& f, Visit&& visit) {
  visit(f);
  for (int i = 0; i < f.arity(); ++i) walk(f.child(i), visit);
}

} // namespace

int max_level(const Formula& f) {
  int best = 0;
  walk(f, [&](const Formula& g) {
    if (g.op() == Op::Stratum) best = std::max(best, g.level());
  });
  return best;
}

std::set<int> stratum_levels(const Formula& f) {
  std::set<int> out;
  walk(f, [&](const Formula& g) {
    if (g.op() == Op::Stratum) out.insert(g.level());
  });
  return out;
}

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  walk(f, [&](const Formula& g) {
    if (g.op() == Op::Atom) out.insert(g.name());
  });
  return out;
}

namespace {

void lint_node(const Formula& f, int level, const ResolutionMap& resolutions, NodePath& path,
               LintReport& report) {
  if (f.op() == Op::Stratum) level = f.level();
  auto rho = resolutions.find(level);
  if (rho == resolutions.end()) throw MissingResolution(level);

  if (f.is_temporal() && f.interval().bounded() && *f.interval().upper() < rho->second) {
    report.warnings.push_back(
        {path, level, f.interval(),
         std::string(op_name(f.op())) + " window " + f.interval().to_string() +
             " is shorter than the level " + std::to_string(level) + " resolution " +
             format_rational(rho->second)});
  }
  for (int i = 0; i < f.arity(); ++i) {
    path.push_back(i);
    lint_node(f.child(i), level, resolutions, path, report);
    path.pop_back();
  }
}

} // namespace

LintReport resolution_lint(const Formula& f, const ResolutionMap& resolutions, int base_level) {
  const Rational* prev = nullptr;
  for (const auto& [level, rho] : resolutions) {
    if (sgn(rho) <= 0) throw std::invalid_argument("resolutions must be positive");
    if (prev && !(*prev < rho))
      throw std::invalid_argument("resolutions must strictly increase with level");
    prev = &rho;
  }
  if (!resolutions.contains(base_level)) throw MissingResolution(base_level);
  LintReport report;
  NodePath path;
  lint_node(f, base_level, resolutions, path, report);
  return report;
}

} // namespace smtl

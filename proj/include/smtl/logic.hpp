#pragma once

#include "smtl/formula.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace smtl {

/// Address of a node: child indices taken from the root.
using NodePath = std::vector<int>;

/// Follows path from root. Throws std::out_of_range on an invalid path.
const Formula& node_at(const Formula& root, const NodePath& path);

/// Inside every L_j, each nested L_i has i <= j.
bool is_well_formed(const Formula& f);

/// Rewrites derived operators into Atom/True/Not/And/Until/Stratum:
///   false      = !true
///   a | b      = !(!a & !b)
///   a -> b     = !(a & !b)
///   F_I a      = true U_I a
///   G_I a      = !(true U_I !a)
///   a R_I b    = !(!a U_I !b)
Formula desugar(const Formula& f);

bool is_core(const Formula& f);

/// Largest stratum level in f, 0 when f has no strata.
int max_level(const Formula& f);

std::set<int> stratum_levels(const Formula& f);
std::set<std::string> atoms(const Formula& f);

using ResolutionMap = std::map<int, Rational>;

struct LintWarning {
  NodePath path;
  int level;
  Interval interval;
  std::string message;
};

struct LintReport {
  std::vector<LintWarning> warnings;
  bool empty() const noexcept { return warnings.empty(); }
};

/// Flags bounded temporal operators whose finite upper bound is shorter than
/// the resolution of the level they are evaluated at; such a window can never
/// be observed at that granularity.
///
/// Throws MissingResolution when base_level or a stratum level is absent from
/// resolutions, and std::invalid_argument if resolutions do not strictly
/// increase with level.
LintReport resolution_lint(const Formula& f, const ResolutionMap& resolutions, int base_level = 1);

} // namespace smtl

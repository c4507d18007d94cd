#pragma once

#include "smtl/formula.hpp"
#include "smtl/trace.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace smtl {

/// Kleene truth value; the numeric order False < Unknown < True makes
/// conjunction min and disjunction max.
enum class Verdict : std::uint8_t { False = 0, Unknown = 1, True = 2 };

constexpr Verdict operator!(Verdict v) noexcept {
  return static_cast<Verdict>(2 - static_cast<int>(v));
}
constexpr Verdict operator&&(Verdict a, Verdict b) noexcept { return a < b ? a : b; }
constexpr Verdict operator||(Verdict a, Verdict b) noexcept { return a < b ? b : a; }

std::string_view to_string(Verdict v);

/// Strict gates L_k at level m on k >= m; Scoped switches level unconditionally.
enum class SemanticsMode : std::uint8_t { Strict, Scoped };

std::string_view to_string(SemanticsMode m);

/// Satisfaction of f at (position, level) over the finite prefix t.
///
/// True and False are verdicts that no extension of t can change; Unknown
/// means the prefix is too short to decide. Derived operators are expanded
/// with desugar() first.
///
/// Throws UnknownLevel if level or a stratum of f is absent from t, and
/// PositionOutOfRange.
Verdict evaluate(const Formula& f, const StratifiedTrace& t, std::size_t position = 0,
                 int level = 1, SemanticsMode mode = SemanticsMode::Strict);

/// Verdict at every position of t.
std::vector<Verdict> evaluate_all(const Formula& f, const StratifiedTrace& t, int level = 1,
                                  SemanticsMode mode = SemanticsMode::Strict);

/// Embeds an MTL formula into SMTL, which is the identity on the syntax.
/// Throws NotMTL if f contains a stratum.
Formula translate_mtl(const Formula& f);

/// MTL satisfaction over a single timed trace, by an independent
/// position-by-position evaluator. Throws NotMTL and PositionOutOfRange.
Verdict evaluate_mtl(const Formula& f, const TimedTrace& t, std::size_t position = 0);

inline constexpr std::size_t kOracleMaxPositions = 32;
inline constexpr std::size_t kOracleMaxDepth = 6;

/// Reference semantics by naive recursive expansion of the definitions,
/// without memoisation or pruning. Throws InstanceTooLarge beyond
/// kOracleMaxPositions positions or kOracleMaxDepth formula depth.
Verdict oracle_evaluate(const Formula& f, const StratifiedTrace& t, std::size_t position = 0,
                        int level = 1, SemanticsMode mode = SemanticsMode::Strict);

} // namespace smtl

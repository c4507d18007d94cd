#include "generators.hpp"

#include "smtl/demo.hpp"
#include "smtl/errors.hpp"
#include "smtl/evaluator.hpp"
#include "smtl/logic.hpp"
#include "smtl/parser.hpp"

#include <doctest.h>

using namespace smtl;

namespace {

TimedTrace unit_steps(std::vector<State> states) {
  TimedTrace t;
  for (std::size_t i = 0; i < states.size(); ++i) t.timestamps.emplace_back(static_cast<long>(i));
  t.states = std::move(states);
  return t;
}

Verdict eval(const char* f, const TimedTrace& t, std::size_t pos = 0) { return evaluate(parse(f), lift(t), pos); }

} // namespace

TEST_CASE("Kleene connectives") {
  using enum Verdict;
  CHECK((True && Unknown) == Unknown);
  CHECK((False && Unknown) == False);
  CHECK((True || Unknown) == True);
  CHECK((False || Unknown) == Unknown);
  CHECK(!Unknown == Unknown);
  CHECK(!True == False);
  CHECK(to_string(Unknown) == "Unknown");
}

TEST_CASE("bounded operators on short traces") {
  auto all_p = unit_steps({{"p"}, {"p"}, {"p"}, {"p"}, {"p"}, {"p"}});
  CHECK(eval("G[0,5] p", all_p) == Verdict::True);
  CHECK(eval("G[0,6] p", all_p) == Verdict::Unknown);
  CHECK(eval("G[0,inf) p", all_p) == Verdict::Unknown);
  CHECK(eval("F[0,inf) p", all_p) == Verdict::True);

  // p everywhere, q nowhere, bound past the horizon.
  CHECK(eval("p U[0,10] q", unit_steps({{"p"}, {"p"}, {"p"}})) == Verdict::Unknown);
  // p fails before any witness: refuted regardless of the future.
  CHECK(eval("p U[0,10] q", unit_steps({{"p"}, {}, {"p"}})) == Verdict::False);
  // Window closed on the prefix without a witness.
  CHECK(eval("p U[0,1] q", unit_steps({{"p"}, {"p"}, {"p"}})) == Verdict::False);
  CHECK(eval("p U[1,2] q", unit_steps({{"p"}, {"p", "q"}, {}})) == Verdict::True);
  // Witness before the window opens does not count.
  CHECK(eval("p U[1,2] q", unit_steps({{"q"}, {}, {}})) == Verdict::False);

  auto q_at_1 = unit_steps({{}, {"q"}, {}, {}, {}});
  CHECK(eval("F[2,3] q", q_at_1) == Verdict::False);
  CHECK(eval("F[1,1] q", q_at_1) == Verdict::True);
  CHECK(eval("F(1,2] q", q_at_1) == Verdict::False);
  CHECK(eval("q", q_at_1, 1) == Verdict::True);
  CHECK(eval("true", q_at_1, 4) == Verdict::True);
  CHECK(eval("false", q_at_1, 4) == Verdict::False);
}

TEST_CASE("goal-reaching obligation") {
  // reachGoal at step 0, atGoal at step 3, T = 5, six positions.
  auto t = unit_steps({{"reachGoal"}, {}, {}, {"atGoal"}, {}, {}});
  Formula phi = parse("G[0,5] (reachGoal -> F[0,5] atGoal)");
  CHECK(evaluate_mtl(phi, t, 0) == Verdict::True);
  CHECK(evaluate(phi, lift(t)) == Verdict::True);
  CHECK(oracle_evaluate(phi, lift(t)) == Verdict::True);
}

TEST_CASE("separating formula on the demo traces") {
  auto s = demo::separating_example(parse_rational("0.3"), parse_rational("0.1"));
  Formula psi = parse("L1 G[0,1] p & L2 F[0,2] !p");
  CHECK(evaluate(psi, s.first_stratified) == Verdict::True);
  CHECK(evaluate(psi, s.second_stratified) == Verdict::False);
  CHECK(oracle_evaluate(psi, s.first_stratified) == Verdict::True);
  CHECK(oracle_evaluate(psi, s.second_stratified) == Verdict::False);
  CHECK(s.first_verdict == Verdict::True);
  CHECK(s.second_verdict == Verdict::False);
  CHECK_FALSE(s.smoothing_inert);
  CHECK(s.difference_sampled);
  // Same result from the stand-alone MTL side: level 1 alone tells them apart
  // only through the dropped sample.
  CHECK(evaluate_mtl(parse("G[0,1] p"), s.first) == Verdict::True);
  CHECK(evaluate_mtl(parse("G[0,1] p"), s.second) == Verdict::False);

  auto fine = demo::separating_example(parse_rational("0.05"), parse_rational("0.1"));
  CHECK(fine.smoothing_inert);
  CHECK(fine.first_verdict == Verdict::True);
  CHECK(fine.second_verdict == Verdict::False);
  auto coarse_step = demo::separating_example(parse_rational("0.3"), parse_rational("0.3"));
  CHECK_FALSE(coarse_step.difference_sampled);
}

TEST_CASE("stratum gating in both modes") {
  StratifiedTrace t;
  t.timestamps = {0, 1};
  t.levels[1] = {{"p"}, {"p"}};
  t.levels[2] = {{}, {"p"}};
  t.resolutions = {{1, 1}, {2, 2}};
  CHECK(evaluate(parse("L2 p"), t, 0, 1) == Verdict::False);
  CHECK(evaluate(parse("L2 p"), t, 1, 1) == Verdict::True);
  CHECK(evaluate(parse("L1 p"), t, 0, 2, SemanticsMode::Strict) == Verdict::False);
  CHECK(evaluate(parse("L1 p"), t, 0, 2, SemanticsMode::Scoped) == Verdict::True);
  // A well-formed nested inner stratum is vacuous in Strict mode.
  CHECK(evaluate(parse("L2 (L1 p)"), t, 0, 1, SemanticsMode::Strict) == Verdict::False);
  CHECK(evaluate(parse("L2 (L1 p)"), t, 0, 1, SemanticsMode::Scoped) == Verdict::True);
}

TEST_CASE("strict gate is False below the evaluation level") {
  testgen::Rng rng(41);
  for (int n = 0; n < 500; ++n) {
    auto t = testgen::random_stratified(rng, 3);
    Formula f = testgen::random_formula(rng);
    int m = testgen::uniform(rng, 2, 3);
    int k = testgen::uniform(rng, 1, m - 1);
    auto pos = static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<int>(t.size()) - 1));
    REQUIRE(evaluate(Formula::stratum(k, f), t, pos, m, SemanticsMode::Strict) == Verdict::False);
  }
}

TEST_CASE("errors") {
  auto t = lift(unit_steps({{"p"}}));
  CHECK_THROWS_AS(evaluate(parse("L2 p"), t), UnknownLevel);
  CHECK_THROWS_AS(evaluate(parse("p"), t, 0, 2), UnknownLevel);
  CHECK_THROWS_AS(evaluate(parse("p"), t, 1), PositionOutOfRange);
  CHECK_THROWS_AS(evaluate_mtl(parse("p"), unit_steps({{}}), 3), PositionOutOfRange);
  CHECK_THROWS_AS(evaluate_mtl(parse("L1 p"), unit_steps({{}})), NotMTL);
  CHECK_THROWS_AS(translate_mtl(parse("p & L1 q")), NotMTL);
  CHECK(translate_mtl(parse("p U[0,1] q")) == parse("p U[0,1] q"));
  CHECK(translate_mtl(parse("!p")) == parse("!p"));

  StratifiedTrace long_trace = lift(unit_steps(std::vector<State>(kOracleMaxPositions + 1)));
  CHECK_THROWS_AS(oracle_evaluate(parse("p"), long_trace), InstanceTooLarge);
  CHECK_THROWS_AS(oracle_evaluate(parse("!!!!!!p"), t), InstanceTooLarge);
  CHECK_NOTHROW(oracle_evaluate(parse("!!!!!p"), t));
}

TEST_CASE("evaluate_all agrees with pointwise evaluation") {
  testgen::Rng rng(42);
  for (int n = 0; n < 200; ++n) {
    int levels = testgen::uniform(rng, 1, 3);
    testgen::FormulaShape shape;
    shape.max_level = levels;
    Formula f = testgen::random_formula(rng, shape);
    auto t = testgen::random_stratified(rng, levels);
    auto all = evaluate_all(f, t);
    REQUIRE(all.size() == t.size());
    for (std::size_t i = 0; i < t.size(); ++i) REQUIRE(all[i] == evaluate(f, t, i));
  }
}

TEST_CASE("oracle agreement on random instances") {
  testgen::Rng rng(43);
  for (int n = 0; n < 2000; ++n) {
    int levels = testgen::uniform(rng, 1, 3);
    testgen::FormulaShape shape;
    shape.max_level = levels;
    Formula f = testgen::random_formula(rng, shape);
    auto t = testgen::random_stratified(rng, levels);
    auto pos = static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<int>(t.size()) - 1));
    int level = testgen::uniform(rng, 1, levels);
    auto mode = testgen::chance(rng, 0.5) ? SemanticsMode::Strict : SemanticsMode::Scoped;
    INFO(pretty_print(f));
    REQUIRE(evaluate(f, t, pos, level, mode) == oracle_evaluate(f, t, pos, level, mode));
  }
}

TEST_CASE("MTL conformance on single-level traces") {
  testgen::Rng rng(44);
  for (int n = 0; n < 2000; ++n) {
    testgen::FormulaShape shape;
    shape.max_level = 0;
    Formula f = testgen::random_formula(rng, shape);
    TimedTrace t = testgen::random_timed_trace(rng);
    auto pos = static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<int>(t.size()) - 1));
    auto mode = testgen::chance(rng, 0.5) ? SemanticsMode::Strict : SemanticsMode::Scoped;
    INFO(pretty_print(f));
    REQUIRE(evaluate(translate_mtl(f), lift(t), pos, 1, mode) == evaluate_mtl(f, t, pos));
  }
}

TEST_CASE("stratification soundness") {
  testgen::Rng rng(45);
  for (int n = 0; n < 2000; ++n) {
    int j = testgen::uniform(rng, 2, 3);
    int i = testgen::uniform(rng, 1, j - 1);
    testgen::FormulaShape shape;
    shape.max_level = j;
    shape.well_formed = true;
    Formula f = testgen::random_formula(rng, shape);
    auto t = testgen::random_stratified(rng, 3);
    auto pos = static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<int>(t.size()) - 1));
    if (evaluate(Formula::stratum(j, f), t, pos, i) == Verdict::True) REQUIRE(evaluate(f, t, pos, j) == Verdict::True);
  }
}

TEST_CASE("duality between always and eventually") {
  testgen::Rng rng(46);
  for (int n = 0; n < 1000; ++n) {
    int levels = testgen::uniform(rng, 1, 3);
    testgen::FormulaShape shape;
    shape.max_level = levels;
    shape.max_depth = 4;
    Formula f = testgen::random_formula(rng, shape);
    Interval i = testgen::random_interval(rng);
    auto t = testgen::random_stratified(rng, levels);
    auto pos = static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<int>(t.size()) - 1));
    Formula always = Formula::always(i, f);
    Formula dual = Formula::negation(Formula::eventually(i, Formula::negation(f)));
    REQUIRE(evaluate(always, t, pos) == evaluate(dual, t, pos));
    Formula release = Formula::release(f, i, Formula::atom("p"));
    Formula release_dual =
        Formula::negation(Formula::until(Formula::negation(f), i, Formula::negation(Formula::atom("p"))));
    REQUIRE(evaluate(release, t, pos) == evaluate(release_dual, t, pos));
  }
}

TEST_CASE("extending a trace only resolves Unknown") {
  testgen::Rng rng(47);
  for (int n = 0; n < 1000; ++n) {
    int levels = testgen::uniform(rng, 1, 3);
    testgen::FormulaShape shape;
    shape.max_level = levels;
    Formula f = testgen::random_formula(rng, shape);
    auto prefix = testgen::random_stratified(rng, levels, 20);
    auto longer = testgen::extend(rng, prefix, static_cast<std::size_t>(testgen::uniform(rng, 1, 12)));
    auto pos = static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<int>(prefix.size()) - 1));
    Verdict before = evaluate(f, prefix, pos);
    if (before != Verdict::Unknown) REQUIRE(evaluate(f, longer, pos) == before);
  }
}

TEST_CASE("atoms and bounded formulas over a complete window are never Unknown") {
  testgen::Rng rng(48);
  for (int n = 0; n < 500; ++n) {
    auto t = testgen::random_stratified(rng, 1);
    auto pos = static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<int>(t.size()) - 1));
    REQUIRE(evaluate(Formula::atom("p"), t, pos) != Verdict::Unknown);
    // F[0,0] looks at the current position only.
    REQUIRE(evaluate(parse("F[0,0] q"), t, pos) != Verdict::Unknown);
  }
}

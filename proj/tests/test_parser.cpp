#include "generators.hpp"

#include "smtl/parser.hpp"
#include "smtl/trajectory.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace smtl;

namespace {

Formula p() { return Formula::atom("p"); }
Formula q() { return Formula::atom("q"); }

std::string fixture(const std::string& name) {
  std::ifstream in(std::filesystem::path(SMTL_FIXTURE_DIR) / name);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

ParseError parse_error(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for: " << text);
  throw std::logic_error("unreachable");
}

} // namespace

TEST_CASE("parse builds the expected trees") {
  CHECK(parse("L1 (G[0,1] p & F[0,2] !p)") ==
        Formula::stratum(1, Formula::conjunction(Formula::always(Interval::closed(0, 1), p()),
                                                 Formula::eventually(Interval::closed(0, 2), Formula::negation(p())))));
  CHECK(parse("p U[0,inf) q") == Formula::until(p(), Interval::unbounded(), q()));
  CHECK(parse("L1 G[0,1] p & L2 F[0,2] !p") ==
        Formula::conjunction(Formula::stratum(1, Formula::always(Interval::closed(0, 1), p())),
                             Formula::stratum(2, Formula::eventually(Interval::closed(0, 2), Formula::negation(p())))));
}

TEST_CASE("precedence and associativity") {
  auto i = Interval::closed(0, 1);
  Formula r = Formula::atom("r");
  // unary binds tighter than U, U tighter than &, & tighter than |, | tighter than ->
  CHECK(parse("!p U[0,1] q") == Formula::until(Formula::negation(p()), i, q()));
  CHECK(parse("p U[0,1] q & r") == Formula::conjunction(Formula::until(p(), i, q()), r));
  CHECK(parse("p & q | r") == Formula::disjunction(Formula::conjunction(p(), q()), r));
  CHECK(parse("p | q -> r") == Formula::implies(Formula::disjunction(p(), q()), r));
  CHECK(parse("p -> q -> r") == Formula::implies(p(), Formula::implies(q(), r)));
  CHECK(parse("p U[0,1] q U[0,1] r") == Formula::until(Formula::until(p(), i, q()), i, r));
  CHECK(parse("p R[0,1] q U[0,1] r") == Formula::until(Formula::release(p(), i, q()), i, r));
  CHECK(parse("p & q & r") == Formula::conjunction(Formula::conjunction(p(), q()), r));
  CHECK(parse("L2 p & q") == Formula::conjunction(Formula::stratum(2, p()), q()));
  CHECK(parse("L 2 p") == Formula::stratum(2, p()));
  CHECK(parse("G[0,1] F[0,1] p") == Formula::always(i, Formula::eventually(i, p())));
  CHECK(parse("(p)") == p());
  CHECK(parse("true & false") == Formula::conjunction(Formula::truth(), Formula::falsity()));
}

TEST_CASE("interval syntax") {
  CHECK(parse("F(1/3,2] p").interval() == Interval(Rational(1, 3), Rational(2), false, true));
  CHECK(parse("F[0.25,0.5) p").interval() == Interval(Rational(1, 4), Rational(1, 2), true, false));
  CHECK(parse("F[1,1] p").interval() == Interval::closed(1, 1));
  CHECK(parse("F(2,inf) p").interval() == Interval::unbounded(2, false));
}

TEST_CASE("comments and whitespace") {
  CHECK(parse("# leading comment\n  p\t&\n q # trailing") == Formula::conjunction(p(), q()));
}

TEST_CASE("pretty printing is canonical") {
  CHECK(pretty_print(Formula::stratum(1, p())) == "L1 p");
  CHECK(pretty_print(Formula::until(p(), Interval::closed(Rational(1, 3), 2), q())) == "p U[1/3,2] q");
  CHECK(pretty_print(Formula::negation(Formula::conjunction(p(), q()))) == "!(p & q)");
  CHECK(pretty_print(parse("((p & q) & r)")) == "p & q & r");
  CHECK(pretty_print(parse("p & (q & r)")) == "p & (q & r)");
  CHECK(pretty_print(parse("(p -> q) -> r")) == "(p -> q) -> r");
  CHECK(pretty_print(parse("p -> (q -> r)")) == "p -> q -> r");
  CHECK(pretty_print(parse("p U[0,1] (q U[0,1] r)")) == "p U[0,1] (q U[0,1] r)");
  CHECK(pretty_print(parse("F[0,0.5] !(p)")) == "F[0,0.5] !p");
  CHECK(pretty_print(parse("F[0,inf) p")) == "F[0,inf) p");
}

TEST_CASE("errors point at the earliest failing token") {
  auto e = parse_error("p U[2,1] q");
  CHECK(e.span().start_offset == 3);
  CHECK(e.span().end_offset == 8);
  CHECK(e.expected() == std::vector<std::string>{"non-empty interval"});

  e = parse_error("p & $");
  CHECK(e.span().start_offset == 4);
  CHECK(e.span().end_offset == 5);
  CHECK(e.span().column == 5);
  CHECK(e.found() == "$");

  e = parse_error("p &\n  & q");
  CHECK(e.span().line == 2);
  CHECK(e.span().column == 3);
  CHECK_FALSE(e.expected().empty());

  e = parse_error("p & é");
  CHECK(e.span().end_offset - e.span().start_offset == 2); // one UTF-8 code point

  e = parse_error("F[inf,2] p");
  CHECK(e.found() == "inf");
  e = parse_error("F[0,inf] p");
  CHECK(e.span().start_offset == 7);
  e = parse_error("F[0,1.] p");
  CHECK(e.span().start_offset == 4);
  CHECK(e.span().end_offset == 7);
  e = parse_error("L0 p");
  CHECK(e.expected() == std::vector<std::string>{"stratum level >= 1"});
  e = parse_error("(p & q");
  CHECK(e.found().empty());
  CHECK(std::string(e.what()).find("end of input") != std::string::npos);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("p q"), ParseError);
  CHECK_THROWS_AS(parse("p - q"), ParseError);
  CHECK_THROWS_AS(parse("U"), ParseError);
}

TEST_CASE("round trip over random formulas") {
  testgen::Rng rng(21);
  for (int n = 0; n < 5000; ++n) {
    testgen::FormulaShape shape;
    shape.max_depth = 8;
    Formula f = testgen::random_formula(rng, shape);
    std::string text = pretty_print(f);
    INFO(text);
    REQUIRE(parse(text) == f);
    REQUIRE(pretty_print(parse(text)) == text);
  }
}

TEST_CASE("a single injected lexical corruption is covered by the error span") {
  testgen::Rng rng(22);
  const std::string junk = "$@~%^?;'`\\";
  for (int n = 0; n < 1000; ++n) {
    std::string text = pretty_print(testgen::random_formula(rng));
    auto at = static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<int>(text.size())));
    text.insert(at, 1, junk[static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<int>(junk.size()) - 1))]);
    INFO(text << " corrupted at " << at);
    auto e = parse_error(text);
    REQUIRE(e.span().start_offset <= at);
    REQUIRE(at < e.span().end_offset);
  }
}

TEST_CASE("fixture formulas parse and round trip") {
  for (const char* name : {"nav.smtl", "deps.smtl", "psi.smtl"}) {
    INFO(name);
    Formula f = parse(fixture(name));
    CHECK(parse(pretty_print(f)) == f);
  }
  Formula nav = parse(fixture("nav.smtl"));
  CHECK(nav.op() == Op::And);
  Formula deps = parse(fixture("deps.smtl"));
  CHECK(deps.op() == Op::Stratum);
  CHECK(deps.child(0).interval() == Interval::unbounded());

  // Two-agent coordination property, both built and written out by hand.
  Formula built = grid::stratified_coordination(2, 5);
  CHECK(parse(pretty_print(built)) == built);
  Formula hand = parse("L1 (G[0,5] (reachGoal_0 -> F[0,5] at_goal_0) & G[0,5] (reachGoal_1 -> F[0,5] at_goal_1)"
                       " & G[0,5] !collide_0_1)");
  CHECK(parse(pretty_print(hand)) == hand);
}

#include "doctest.h"

#include "goedel/error.hpp"
#include "goedel/generators.hpp"
#include "goedel/propdecide.hpp"

using namespace goedel;

namespace {

Formula f(std::string_view text) { return parse(text).formula; }
GroundAtom atom(std::string name, std::vector<std::string> args = {}) {
  return {std::move(name), std::move(args)};
}
TruthValue half() { return TruthValue(1, 2); }

}  // namespace

TEST_CASE("eval_qf") {
  CHECK(eval_qf(f("A -> B"), {{atom("A"), half()}, {atom("B"), half()}}).is_one());
  CHECK(eval_qf(f("A | (A -> bot)"), {{atom("A"), half()}}) == half());
  CHECK(eval_qf(f("bot"), {}).is_zero());
  CHECK_THROWS_AS(eval_qf(f("A & B"), {{atom("A"), half()}}), Error);
}

TEST_CASE("infinite-valued validity") {
  CHECK(goedel_valid_infinite(f("A -> A")).outcome == PropVerdict::Outcome::Valid);

  const PropVerdict lem = goedel_valid_infinite(f("A | ~A"));
  CHECK(lem.outcome == PropVerdict::Outcome::CounterAssignment);
  CHECK(lem.grid_size == 3);
  CHECK(lem.witness == Assignment{{atom("A"), half()}});

  const PropVerdict lin = goedel_valid_infinite(f("(A -> B) | (B -> A)"));
  CHECK(lin.outcome == PropVerdict::Outcome::Valid);
  CHECK(lin.explored == 16);
}

TEST_CASE("finite-valued validity") {
  const Formula fin2 = f("(top -> A1) | (A1 -> bot)");
  CHECK(goedel_valid_finite(fin2, 2).positive());
  const PropVerdict v3 = goedel_valid_finite(fin2, 3);
  CHECK(v3.outcome == PropVerdict::Outcome::CounterAssignment);
  CHECK(v3.witness == Assignment{{atom("A1"), half()}});
  CHECK(goedel_valid_finite(f("A | ~A"), 2).positive());
  CHECK_THROWS_AS(goedel_valid_finite(fin2, 1), Error);
}

TEST_CASE("fin axioms separate neighbouring logics") {
  for (int m = 2; m <= 6; ++m) {
    CHECK(goedel_valid_finite(fin_axiom(m), m).positive());
    CHECK_FALSE(goedel_valid_finite(fin_axiom(m), m + 1).positive());
  }
}

TEST_CASE("counter-assignment is the least one") {
  const PropVerdict v = goedel_valid_finite(f("(A -> B) | C"), 3);
  REQUIRE(v.outcome == PropVerdict::Outcome::CounterAssignment);
  CHECK(v.witness == Assignment{{atom("A"), half()},
                                {atom("B"), TruthValue::zero()},
                                {atom("C"), TruthValue::zero()}});
}

TEST_CASE("classical_sat") {
  CHECK(classical_sat(f("P(c) & ~P(c)")).outcome == PropVerdict::Outcome::Unsatisfiable);
  const PropVerdict s = classical_sat(f("P(c) | Q(c)"));
  CHECK(s.outcome == PropVerdict::Outcome::Satisfiable);
  CHECK(s.witness ==
        Assignment{{atom("P", {"c"}), TruthValue::one()}, {atom("Q", {"c"}), TruthValue::zero()}});
  CHECK(classical_sat(f("~(A | ~A)")).outcome == PropVerdict::Outcome::Unsatisfiable);
  CHECK(classical_sat(f("top")).outcome == PropVerdict::Outcome::Satisfiable);
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(goedel_valid_infinite(fin_axiom(6), PropLimits{4, 10'000'000, 1 << 20}), CapExceeded);
  CHECK_THROWS_AS(goedel_valid_finite(fin_axiom(6), 3, PropLimits{12, 100, 1 << 20}), CapExceeded);
  CHECK_THROWS_AS(classical_sat(f("(A1 -> A2) & (A2 -> A3) & (A3 -> bot) & A1"), PropLimits{12, 100, 3}),
                  CapExceeded);
}

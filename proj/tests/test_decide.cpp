#include "doctest.h"

#include "goedel/decide.hpp"
#include "goedel/error.hpp"
#include "goedel/generators.hpp"

using namespace goedel;

namespace {

Formula f(std::string_view text) { return parse(text).formula; }

Stage decide_stage(std::string_view text, Mode mode) {
  try {
    decide({f(text), mode, LogicId::infinite()});
  } catch (const Error& e) {
    return e.stage();
  }
  FAIL("expected an error for " << text);
  return Stage::Usage;
}

}  // namespace

TEST_CASE("validity verdicts") {
  CHECK(decide_validity(f("forall x. exists y. P(x) -> P(y)"), LogicId::infinite()).kind ==
        Verdict::Kind::Valid);
  CHECK(decide_validity(f("forall x. P(x) | ~P(x)"), LogicId::finite(2)).kind == Verdict::Kind::Valid);
  CHECK(decide_validity(fin_axiom(2), LogicId::finite(2)).kind == Verdict::Kind::Valid);
  CHECK(decide_validity(fin_axiom(2), LogicId::finite(3)).kind == Verdict::Kind::NotValid);
}

TEST_CASE("excluded middle countermodel over the Herbrand universe") {
  const Formula lem = f("forall x. P(x) | ~P(x)");
  const Verdict v = decide_validity(lem, LogicId::infinite());
  REQUIRE(v.kind == Verdict::Kind::NotValid);
  REQUIRE(v.certificate);
  const Interpretation& i = *v.certificate;
  REQUIRE(i.domain().size() == 1);
  CHECK(i.value("P", std::vector<Element>{0}) == TruthValue(1, 2));
  CHECK(check_certificate(i, lem, Mode::Validity));
  REQUIRE(v.provenance);
  CHECK(v.provenance->shape == BSShape::Both);
  CHECK(v.provenance->prop.grid_size == 3);
}

TEST_CASE("countermodel domain is bounded by the Herbrand constants") {
  const Formula g = f("forall x. forall y. exists z. R(x, z) -> R(z, y)");
  const Verdict v = decide_validity(g, LogicId::finite(3));
  if (v.certificate) {
    CHECK(v.certificate->domain_size() <= herbrand_constant_count(g, Mode::Validity));
    CHECK(check_certificate(*v.certificate, g, Mode::Validity));
  }
}

TEST_CASE("1-satisfiability verdicts") {
  CHECK(decide_1sat(f("exists x. forall y. P(x) & ~P(y)"), LogicId::infinite()).kind ==
        Verdict::Kind::Unsat);
  const Formula ex = f("exists x. P(x)");
  const Verdict s = decide_1sat(ex, LogicId::finite(4));
  REQUIRE(s.kind == Verdict::Kind::Sat);
  REQUIRE(s.certificate);
  CHECK(s.certificate->value("P", std::vector<Element>{0}).is_one());
  CHECK(check_certificate(*s.certificate, ex, Mode::Sat1));
  for (const LogicId logic : {LogicId::finite(2), LogicId::finite(7), LogicId::infinite()})
    CHECK(decide_1sat(f("exists x. forall y. P(x) -> P(y)"), logic).kind == Verdict::Kind::Sat);
  CHECK(decide_1sat(f("~(A | ~A)"), LogicId::finite(3)).kind == Verdict::Kind::Unsat);
}

TEST_CASE("shape errors") {
  CHECK(decide_stage("exists x. forall y. P(x) -> P(y)", Mode::Validity) == Stage::Shape);
  CHECK(decide_stage("forall x. exists y. P(x) & ~P(y)", Mode::Sat1) == Stage::Shape);
  CHECK(decide_stage("(forall x. P(x)) -> Q", Mode::Validity) == Stage::Shape);
  CHECK(decide_stage("forall x. exists y. forall z. R(x, y) | P(z)", Mode::Validity) == Stage::Shape);
}

TEST_CASE("grid override") {
  DecideOptions opts;
  opts.grid_size = 7;
  const Verdict v = decide_validity(f("A | ~A"), LogicId::infinite(), opts);
  REQUIRE(v.provenance);
  CHECK(v.provenance->prop.grid_size == 7);
  CHECK(v.kind == Verdict::Kind::NotValid);
}

TEST_CASE("brute-force oracles") {
  const Verdict lem = oracle_validity(f("forall x. P(x) | ~P(x)"), 3, 2);
  REQUIRE(lem.kind == Verdict::Kind::NotValid);
  REQUIRE(lem.certificate);
  CHECK(lem.certificate->value("P", std::vector<Element>{0}) == TruthValue(1, 2));
  CHECK(oracle_validity(f("forall x. exists y. P(x) -> P(y)"), 3, 2).kind == Verdict::Kind::Valid);
  CHECK(oracle_1sat(f("exists x. P(x)"), 3, 1).kind == Verdict::Kind::Sat);
  CHECK(oracle_1sat(f("~(A | ~A)"), 5, 1).kind == Verdict::Kind::Unsat);
  CHECK_THROWS_AS(oracle_validity(f("forall x. forall y. R(x, y) -> R(x, y)"), 5, 4, 1000), CapExceeded);
}

TEST_CASE("herbrand constant count") {
  CHECK(herbrand_constant_count(f("forall x. forall y. exists z. R(x, z) | R(y, c)"), Mode::Validity) == 3);
  CHECK(herbrand_constant_count(f("A | ~A"), Mode::Validity) == 1);
}

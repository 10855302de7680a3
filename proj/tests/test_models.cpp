#include "doctest.h"

#include "goedel/error.hpp"
#include "goedel/models.hpp"

using namespace goedel;

namespace {

Formula f(std::string_view text) { return parse(text).formula; }
TruthValue tv(std::int64_t p, std::int64_t q) { return TruthValue(p, q); }

Interpretation propositional(std::map<std::string, TruthValue> values) {
  std::map<std::string, int> preds;
  for (const auto& [name, v] : values) preds[name] = 0;
  Interpretation i({"d0"}, preds);
  for (const auto& [name, v] : values) i.set_value(name, {}, v);
  return i;
}

}  // namespace

TEST_CASE("truth values are exact and reduced") {
  CHECK(tv(2, 4) == tv(1, 2));
  CHECK(tv(2, 4).str() == "1/2");
  CHECK(TruthValue::parse("3/9") == tv(1, 3));
  CHECK(TruthValue::parse("1").is_one());
  CHECK(tv(1, 3) < tv(1, 2));
  CHECK_THROWS_AS(tv(3, 2), Error);
  CHECK_THROWS_AS(TruthValue::parse("-1/2"), Error);
  CHECK_THROWS_AS(TruthValue::parse("x"), Error);
}

TEST_CASE("grids and logic ids") {
  const Grid g = Grid::equally_spaced(3);
  REQUIRE(g.size() == 3);
  CHECK(g[1] == tv(1, 2));
  CHECK(Grid::equally_spaced(2).subset_of(g));
  CHECK_FALSE(Grid::equally_spaced(4).subset_of(g));
  CHECK_THROWS_AS(Grid({tv(1, 2), TruthValue::one()}), Error);
  CHECK_THROWS_AS(Grid({TruthValue::zero(), tv(1, 2)}), Error);
  CHECK(LogicId::parse("gm:4") == LogicId::finite(4));
  CHECK(LogicId::parse("g01") == LogicId::infinite());
  CHECK(LogicId::parse("gup").str() == "ginf");
  CHECK_THROWS_AS(LogicId::parse("gm:1"), Error);
  CHECK_THROWS_AS(LogicId::parse("g3"), Error);
}

TEST_CASE("evaluate implication") {
  const Interpretation i = propositional({{"A", tv(3, 10)}, {"B", tv(7, 10)}});
  CHECK(evaluate(i, f("A -> B")) == TruthValue::one());
  CHECK(evaluate(i, f("B -> A")) == tv(3, 10));
  CHECK(evaluate(i, f("A & B")) == tv(3, 10));
  CHECK(evaluate(i, f("A | B")) == tv(7, 10));
}

TEST_CASE("evaluate quantifiers as min and max") {
  Interpretation i({"d1", "d2"}, {{"P", 1}});
  const Element d1 = i.element("d1"), d2 = i.element("d2");
  i.set_value("P", std::vector<Element>{d1}, tv(1, 2));
  i.set_value("P", std::vector<Element>{d2}, TruthValue::one());
  CHECK(evaluate(i, f("forall x. P(x)")) == tv(1, 2));
  CHECK(evaluate(i, f("exists x. P(x)")) == TruthValue::one());
}

TEST_CASE("excluded middle takes the middle value") {
  CHECK(evaluate(propositional({{"A", tv(1, 2)}}), f("A | ~A")) == tv(1, 2));
}

TEST_CASE("evaluate errors") {
  Interpretation i({"d0"}, {{"P", 1}});
  CHECK_THROWS_AS(evaluate(i, f("P(c)")), Error);
  CHECK_THROWS_AS(evaluate(i, f("Q")), Error);
}

TEST_CASE("glue") {
  const Interpretation i = propositional({{"P", tv(3, 10)}, {"Q", tv(4, 5)}});
  const Interpretation g = glue(i, tv(1, 2));
  CHECK(g.value("P", {}) == tv(3, 10));
  CHECK(g.value("Q", {}) == TruthValue::one());
  CHECK(glue(propositional({{"P", tv(3, 10)}}), tv(1, 2)) == propositional({{"P", tv(3, 10)}}));
  CHECK_THROWS_AS(glue(i, TruthValue::one()), Error);
}

TEST_CASE("enumeration counts") {
  Signature pc;
  pc.predicates = {{"P", 1}};
  pc.constants = {"c"};
  CHECK(enumerate_interpretations(pc, 1, Grid::equally_spaced(2)).size() == 2);

  Signature p;
  p.predicates = {{"P", 1}};
  CHECK(enumerate_interpretations(p, 2, Grid::equally_spaced(3)).size() == 9);

  Signature a;
  a.predicates = {{"A", 0}};
  const auto all = enumerate_interpretations(a, 1, Grid::equally_spaced(3));
  REQUIRE(all.size() == 3);
  CHECK(all[0].value("A", {}) == TruthValue::zero());
  CHECK(all[1].value("A", {}) == tv(1, 2));
  CHECK(all[2].value("A", {}) == TruthValue::one());

  CHECK(count_interpretations(pc, 2, 3) == 2 * 9);
}

TEST_CASE("enumeration cap") {
  Signature s;
  s.predicates = {{"R", 2}};
  CHECK_THROWS_AS(count_interpretations(s, 4, 3, 1000), CapExceeded);
  CHECK_THROWS_AS(InterpretationEnumerator(s, 4, Grid::equally_spaced(3), 1000), CapExceeded);
}

TEST_CASE("check_certificate") {
  CHECK(check_certificate(propositional({{"A", tv(1, 2)}}), f("A | ~A"), Mode::Validity));
  CHECK(check_certificate(propositional({{"A", TruthValue::one()}}), f("A | ~A"), Mode::Sat1));
  const Grid grid = Grid::equally_spaced(5);
  for (const auto& v : grid.points())
    CHECK_FALSE(check_certificate(propositional({{"A", v}}), f("~(A | ~A)"), Mode::Sat1));
  CHECK_THROWS_AS(check_certificate(propositional({{"A", tv(1, 2)}}), f("A | B"), Mode::Validity),
                  Error);
}

#include "doctest.h"

#include "goedel/decide.hpp"
#include "goedel/error.hpp"
#include "goedel/json_io.hpp"

using namespace goedel;

TEST_CASE("certificate round-trip") {
  const Formula lem = parse("forall x. R(x, c) | ~R(c, x)").formula;
  const Verdict v = decide_validity(lem, LogicId::finite(4));
  REQUIRE(v.certificate);
  const nlohmann::json j = to_json(*v.certificate);
  const Interpretation back = interpretation_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back == *v.certificate);
  CHECK(check_certificate(back, lem, Mode::Validity));
}

TEST_CASE("certificate layout") {
  Interpretation i({"d0"}, {{"P", 1}});
  i.set_constant("c", 0);
  i.set_value("P", std::vector<Element>{0}, TruthValue(4, 5));
  const nlohmann::json j = to_json(i);
  CHECK(j["domain"] == nlohmann::json::array({"d0"}));
  CHECK(j["constants"]["c"] == "d0");
  CHECK(j["atoms"][0]["pred"] == "P");
  CHECK(j["atoms"][0]["args"] == nlohmann::json::array({"d0"}));
  CHECK(j["atoms"][0]["value"] == "4/5");
}

TEST_CASE("malformed certificates") {
  auto reject = [](const char* text) {
    CHECK_THROWS_AS(interpretation_from_json(nlohmann::json::parse(text)), Error);
  };
  reject(R"({"domain": [], "constants": {}, "atoms": []})");
  reject(R"({"domain": ["d0", "d1"], "constants": {}, "atoms": [{"pred": "P", "args": ["d0"], "value": "1"}]})");
  reject(R"({"domain": ["d0"], "constants": {"c": "d9"}, "atoms": []})");
  reject(R"({"domain": ["d0"], "constants": {}, "atoms": [{"pred": "P", "args": ["d0"], "value": "3/2"}]})");
  reject(R"({"domain": ["d0"], "constants": {}, "atoms": [{"pred": "P", "args": ["d0"], "value": "1"}, {"pred": "P", "args": ["d0"], "value": "0"}]})");
}

TEST_CASE("verdict json") {
  const Query q{parse("forall x. P(x) | ~P(x)").formula, Mode::Validity, LogicId::infinite()};
  const nlohmann::json j = to_json(q, decide(q), {true, true});
  CHECK(j["verdict"] == "not_valid");
  CHECK(j["mode"] == "validity");
  CHECK(j["logic"] == "ginf");
  CHECK(j["shape"] == "both");
  CHECK(j["ground"]["grid_size"] == 3);
  CHECK(j.contains("skolem"));
  CHECK(j["ground"].contains("instances"));
  CHECK(interpretation_from_json(j["certificate"]).domain_size() == 1);
}

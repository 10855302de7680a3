#include "doctest.h"

#include <sstream>

#include "goedel/corpus.hpp"
#include "goedel/error.hpp"

using namespace goedel;

namespace {

std::vector<CorpusEntry> read(const std::string& text) {
  std::istringstream in(text);
  return parse_corpus(in);
}

}  // namespace

TEST_CASE("parse corpus lines") {
  const auto entries = read(
      "# comment\n"
      "\n"
      "lem\tvalidity\tginf\tnot_valid\tA | ~A\n"
      "ex\tsat1\tgm:3\t-\texists x. P(x)\n");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].name == "lem");
  CHECK(entries[0].expected == std::optional<std::string>("not_valid"));
  CHECK(entries[0].line == 3);
  CHECK(entries[1].mode == Mode::Sat1);
  CHECK_FALSE(entries[1].expected);
}

TEST_CASE("corpus syntax errors") {
  CHECK_THROWS_AS(read("a\tvalidity\tginf\tvalid\n"), Error);
  CHECK_THROWS_AS(read("a\tproof\tginf\tvalid\tA\n"), Error);
  CHECK_THROWS_AS(read("a\tvalidity\tginf\tvalid\tA\na\tvalidity\tginf\tvalid\tA\n"), Error);
}

TEST_CASE("empty corpus") {
  const auto results = run_corpus(read(""));
  CHECK(results.empty());
  CHECK(corpus_exit_code(results) == 0);
}

TEST_CASE("expectations") {
  const auto results = run_corpus(read(
      "ok\tvalidity\tgm:2\tvalid\tA | ~A\n"
      "wrong\tvalidity\tginf\tvalid\tA | ~A\n"
      "shape\tvalidity\tginf\terror:shape\texists x. forall y. P(x) -> P(y)\n"));
  REQUIRE(results.size() == 3);
  CHECK(results[0].matches());
  CHECK_FALSE(results[1].matches());
  CHECK(results[1].actual == "not_valid");
  CHECK(results[2].errored());
  CHECK(results[2].matches());
  CHECK(corpus_exit_code(results) == 1);
}

TEST_CASE("unexpected errors") {
  const auto results = run_corpus(read("bad\tsat1\tginf\t-\tforall x. exists y. P(x) & ~P(y)\n"));
  CHECK(results[0].actual == "error:shape");
  CHECK(corpus_exit_code(results) == 2);
}

TEST_CASE("results keep input order") {
  std::string text;
  for (int k = 0; k < 40; ++k)
    text += "e" + std::to_string(k) + "\tvalidity\tgm:" + std::to_string(2 + k % 4) + "\t-\tA | ~A\n";
  const auto results = run_corpus(read(text));
  REQUIRE(results.size() == 40);
  for (int k = 0; k < 40; ++k) {
    CHECK(results[static_cast<std::size_t>(k)].name == "e" + std::to_string(k));
    CHECK(results[static_cast<std::size_t>(k)].actual == (k % 4 == 0 ? "valid" : "not_valid"));
  }
}

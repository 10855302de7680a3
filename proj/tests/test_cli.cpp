#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& input = "") {
  std::string cmd = std::string("'") + GOEDEL_BS_EXE + "' " + args + " 2>&1";
  if (!input.empty()) cmd = "printf '%s\\n' '" + input + "' | " + cmd;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("prove exit codes") {
  CHECK(run("prove --logic ginf", "forall x. P(x) | ~P(x)").code == 1);
  CHECK(run("prove --logic gm:2", "forall x. P(x) | ~P(x)").code == 0);
  CHECK(run("prove --logic gm:3", "(top -> A1) | (A1 -> bot)").code == 1);
  const Run bad = run("prove", "exists x. forall y. P(x) -> P(y)");
  CHECK(bad.code == 2);
  CHECK(bad.out.find("[shape]") != std::string::npos);
  CHECK(run("prove", "forall x. P(x").code == 2);
}

TEST_CASE("prove json countermodel") {
  const Run r = run("prove --logic ginf --format json", "forall x. P(x) | ~P(x)");
  REQUIRE(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "not_valid");
  CHECK(j["certificate"]["atoms"][0]["value"] == "1/2");
  CHECK(j["meta"].contains("cap"));
}

TEST_CASE("exit codes do not depend on the format") {
  for (const char* input : {"A | ~A", "A -> A", "exists x. forall y. P(x) -> P(y)"})
    CHECK(run("prove --format json", input).code == run("prove --format text", input).code);
}

TEST_CASE("sat exit codes") {
  CHECK(run("sat", "exists x. forall y. P(x) & ~P(y)").code == 1);
  CHECK(run("sat", "exists x. P(x)").code == 0);
  CHECK(run("sat", "~(A | ~A)").code == 1);
}

TEST_CASE("certificates feed glue") {
  const Run cert = run("prove --logic gm:5 --format json", "forall x. P(x) | ~P(x)");
  REQUIRE(cert.code == 1);
  const std::string path = "cli_test_certificate.json";
  std::ofstream(path) << cert.out;
  const Run glued = run("glue " + path + " --omega 1/2 --formula 'forall x. P(x) | ~P(x)' --formula 'forall x. P(x)'");
  CHECK(glued.code == 0);
  CHECK(glued.out.find("VIOLATED") == std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("glue examples") {
  const std::string cert =
      R"({"domain":["d0"],"constants":{"c":"d0"},"atoms":[{"pred":"P","args":["d0"],"value":"4/5"}]})";
  const Run up = run("glue --omega 1/2 --formula 'P(c)' --format json", cert);
  REQUIRE(up.code == 0);
  const auto j = nlohmann::json::parse(up.out);
  CHECK(j["rows"][0]["after"] == "1");
  CHECK(j["rows"][0]["contract"] == true);

  const std::string low =
      R"({"domain":["d0"],"constants":{},"atoms":[{"pred":"P","args":[],"value":"3/10"}]})";
  const auto k = nlohmann::json::parse(run("glue --omega 1/2 --format json", low).out);
  CHECK(k["glued"]["atoms"][0]["value"] == "3/10");

  CHECK(run("glue --omega 1", low).code == 2);
  CHECK(run("glue --omega 1/2", "{").code == 2);
}

TEST_CASE("corpus subcommand") {
  CHECK(run("corpus bs_basics").code == 0);
  CHECK(run("corpus does_not_exist").code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("").code != 0);
  CHECK(run("prove --logic gm:1", "A").code == 2);
  CHECK(run("laws --count 0").code == 2);
}

// goedel-bs: decide Bernays-Schoenfinkel sentences in Goedel logics.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "goedel/corpus.hpp"
#include "goedel/decide.hpp"
#include "goedel/error.hpp"
#include "goedel/json_io.hpp"
#include "goedel/laws.hpp"

#ifndef GOEDEL_BS_CORPUS_DIR
#define GOEDEL_BS_CORPUS_DIR "corpora"
#endif

namespace {

using goedel::Error;
using goedel::Stage;
using nlohmann::json;

constexpr int kExitError = 2;
constexpr int kExitLawViolation = 3;

struct CliConfig {
  std::string input;
  std::string logic = "ginf";
  std::string format = "text";
  bool dump_skolem = false;
  bool dump_ground = false;
  std::size_t grid_size = 0;
  std::size_t max_domain = 0;
  std::uint64_t cap = goedel::kDefaultEnumerationCap;
  std::uint64_t seed = goedel::kDefaultLawSeed;
  int count = 200;
  std::string omega;
  std::vector<std::string> formulas;
  std::string formulas_file;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(Stage::Usage, "cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

goedel::DecideOptions decide_options(const CliConfig& cfg) {
  goedel::DecideOptions opts;
  opts.prop.max_assignments = cfg.cap;
  if (cfg.grid_size != 0) opts.grid_size = cfg.grid_size;
  return opts;
}

json meta(const CliConfig& cfg, const goedel::DecideOptions& opts) {
  return {{"cap", cfg.cap},
          {"max_atoms", opts.prop.max_atoms},
          {"max_classical_nodes", opts.prop.max_classical_nodes},
          {"max_instances", opts.max_instances},
          {"grid_size", cfg.grid_size == 0 ? json("n+2") : json(cfg.grid_size)},
          {"max_domain", cfg.max_domain},
          {"seed", cfg.seed}};
}

void print_interpretation(std::ostream& out, const goedel::Interpretation& i) {
  out << "  domain:";
  for (const auto& d : i.domain()) out << ' ' << d;
  out << '\n';
  for (const auto& [c, e] : i.constants()) out << "  " << c << " -> " << i.domain()[e] << '\n';
  i.for_each_atom([&](const std::string& pred, std::span<const goedel::Element> args,
                      const goedel::TruthValue& v) {
    out << "  " << pred;
    if (!args.empty()) {
      out << '(';
      for (std::size_t k = 0; k < args.size(); ++k) out << (k ? ", " : "") << i.domain()[args[k]];
      out << ')';
    }
    out << " = " << v.str() << '\n';
  });
}

int run_query(const CliConfig& cfg, goedel::Mode mode) {
  const auto parsed = goedel::parse(read_input(cfg.input));
  const goedel::Query q{parsed.formula, mode, goedel::LogicId::parse(cfg.logic)};
  const auto opts = decide_options(cfg);
  const goedel::Verdict v = goedel::decide(q, opts);

  std::optional<goedel::Verdict> oracle;
  if (cfg.max_domain != 0) {
    if (!q.logic.is_finite())
      throw Error(Stage::Usage, "--max-domain runs the brute-force oracle and needs a gm:<m> logic");
    oracle = mode == goedel::Mode::Validity
                 ? goedel::oracle_validity(q.sentence, q.logic.m(), cfg.max_domain, cfg.cap)
                 : goedel::oracle_1sat(q.sentence, q.logic.m(), cfg.max_domain, cfg.cap);
  }

  if (cfg.format == "json") {
    json out = goedel::to_json(q, v, {cfg.dump_skolem, cfg.dump_ground});
    if (cfg.logic == "g01" || cfg.logic == "gup" || cfg.logic == "gdown")
      out["logic_alias"] = cfg.logic;
    if (oracle)
      out["oracle"] = {{"verdict", std::string(goedel::verdict_name(oracle->kind))},
                       {"max_domain", cfg.max_domain},
                       {"agrees", oracle->kind == v.kind}};
    out["meta"] = meta(cfg, opts);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "verdict: " << goedel::verdict_name(v.kind) << '\n';
    std::cout << "logic: " << q.logic.str();
    if (cfg.logic != q.logic.str()) std::cout << " (requested " << cfg.logic << ")";
    std::cout << '\n';
    const auto& p = *v.provenance;
    for (const auto& note : p.notes) std::cout << "note: " << note << '\n';
    if (cfg.dump_skolem) std::cout << goedel::describe(p.skolem);
    if (cfg.dump_ground) std::cout << goedel::describe(p.ground);
    if (v.certificate) {
      std::cout << (mode == goedel::Mode::Validity ? "countermodel:\n" : "model:\n");
      print_interpretation(std::cout, *v.certificate);
    }
    if (oracle)
      std::cout << "oracle (domains 1.." << cfg.max_domain
                << "): " << goedel::verdict_name(oracle->kind)
                << (oracle->kind == v.kind ? " (agrees)" : " (DISAGREES)") << '\n';
  }
  return v.positive() ? 0 : 1;
}

int run_glue(const CliConfig& cfg) {
  const json doc = json::parse(read_input(cfg.input), nullptr, false);
  if (doc.is_discarded()) throw Error(Stage::Certificate, "certificate is not valid JSON");
  // Accept either a bare certificate or a full verdict document.
  const json& cert = doc.contains("certificate") ? doc.at("certificate") : doc;
  if (cert.is_null()) throw Error(Stage::Certificate, "verdict document carries no certificate");
  const goedel::Interpretation before = goedel::interpretation_from_json(cert);
  const goedel::TruthValue omega = goedel::TruthValue::parse(cfg.omega);
  if (omega.is_one()) throw Error(Stage::Usage, "omega must be below 1");
  const goedel::Interpretation after = goedel::glue(before, omega);

  std::vector<std::string> texts = cfg.formulas;
  if (!cfg.formulas_file.empty()) {
    std::istringstream lines(read_input(cfg.formulas_file));
    for (std::string line; std::getline(lines, line);)
      if (line.find_first_not_of(" \t\r") != std::string::npos) texts.push_back(line);
  }

  bool all_ok = true;
  json rows = json::array();
  for (const auto& text : texts) {
    const goedel::Formula f = goedel::parse(text).formula;
    const auto v0 = goedel::evaluate(before, f);
    const auto v1 = goedel::evaluate(after, f);
    const bool ok = v1 == (v0 <= omega ? v0 : goedel::TruthValue::one());
    all_ok = all_ok && ok;
    rows.push_back({{"formula", text}, {"before", v0.str()}, {"after", v1.str()}, {"contract", ok}});
  }

  if (cfg.format == "json") {
    std::cout << json{{"omega", omega.str()}, {"glued", goedel::to_json(after)}, {"rows", rows}}.dump(2)
              << '\n';
  } else {
    std::cout << "omega: " << omega.str() << "\nglued interpretation:\n";
    print_interpretation(std::cout, after);
    for (const auto& row : rows)
      std::cout << std::left << std::setw(40) << row["formula"].get<std::string>() << " before "
                << std::setw(6) << row["before"].get<std::string>() << " after " << std::setw(6)
                << row["after"].get<std::string>() << (row["contract"].get<bool>() ? " OK" : " VIOLATED")
                << '\n';
  }
  return all_ok ? 0 : 1;
}

int run_laws(const CliConfig& cfg) {
  goedel::LawConfig lc;
  lc.seed = cfg.seed;
  lc.sentences = cfg.count;
  const bool text = cfg.format != "json";
  const auto reports = goedel::run_all_laws(lc, [&](const goedel::LawReport& r) {
    if (!text) return;
    std::cout << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(22) << r.name
              << " cases=" << r.cases << " skipped=" << r.skipped << " violations=" << r.violations
              << " time=" << std::fixed << std::setprecision(2) << r.seconds << "s\n";
    if (!r.detail.empty()) std::cout << "  " << r.detail << '\n';
    if (r.skipped != 0) std::cout << "  warning: " << r.skipped << " instance(s) skipped at caps\n";
    if (!r.passed()) {
      if (r.cases < r.min_cases)
        std::cout << "  too few cases: " << r.cases << " < " << r.min_cases << '\n';
      if (!r.counterexample.empty()) std::cout << "  counterexample: " << r.counterexample << '\n';
    }
    std::cout.flush();
  });
  bool ok = true;
  json out = json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    out.push_back({{"law", r.name},
                   {"statement", r.statement},
                   {"passed", r.passed()},
                   {"cases", r.cases},
                   {"min_cases", r.min_cases},
                   {"skipped", r.skipped},
                   {"violations", r.violations},
                   {"counterexample", r.counterexample},
                   {"detail", r.detail},
                   {"seconds", r.seconds}});
  }
  if (!text)
    std::cout << json{{"laws", out}, {"meta", {{"seed", lc.seed}, {"sentences", lc.sentences},
                                               {"oracle_cap", lc.oracle_cap}}}}
                     .dump(2)
              << '\n';
  else
    std::cout << (ok ? "all laws hold" : "law violations found") << " (seed " << lc.seed << ")\n";
  return ok ? 0 : kExitLawViolation;
}

std::string resolve_corpus(const std::string& arg) {
  namespace fs = std::filesystem;
  if (fs::is_regular_file(arg)) return arg;
  const char* env = std::getenv("GOEDEL_BS_CORPUS_DIR");
  const fs::path dir = env ? env : GOEDEL_BS_CORPUS_DIR;
  const fs::path candidate = dir / (arg + ".tsv");
  if (fs::is_regular_file(candidate)) return candidate.string();
  throw Error(Stage::Usage, "no corpus file or shipped corpus named '" + arg + "'");
}

int run_corpus(const CliConfig& cfg) {
  std::ifstream in(resolve_corpus(cfg.input));
  const auto entries = goedel::parse_corpus(in);
  const auto results = goedel::run_corpus(entries, decide_options(cfg));
  const int code = goedel::corpus_exit_code(results);
  std::size_t matched = 0;
  for (const auto& r : results) matched += r.matches() ? 1 : 0;

  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto& r : results)
      rows.push_back({{"name", r.name},
                      {"expected", r.expected ? json(*r.expected) : json(nullptr)},
                      {"actual", r.actual},
                      {"ok", r.matches()},
                      {"message", r.message}});
    std::cout << json{{"entries", rows}, {"matched", matched}, {"total", results.size()},
                      {"exit", code}}
                     .dump(2)
              << '\n';
  } else {
    for (const auto& r : results) {
      std::cout << std::left << std::setw(28) << r.name << std::setw(16)
                << r.expected.value_or("-") << std::setw(16) << r.actual
                << (r.matches() ? "ok" : "MISMATCH") << '\n';
      if (!r.matches())
        std::cout << "- " << r.name << ": expected " << *r.expected << ", got " << r.actual
                  << (r.message.empty() ? "" : " (" + r.message + ")") << '\n';
    }
    std::cout << matched << "/" << results.size() << " entries as expected\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide Bernays-Schoenfinkel sentences in Goedel logics"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--cap", cfg.cap, "Enumeration cap")->envname("GOEDEL_BS_CAP");
  };
  auto query = [&](CLI::App* sub) {
    common(sub);
    sub->add_option("file", cfg.input, "Formula file (stdin when omitted)");
    sub->add_option("--logic", cfg.logic, "gm:<m>, ginf, g01, gup or gdown");
    sub->add_flag("--dump-skolem", cfg.dump_skolem, "Print the Skolemization");
    sub->add_flag("--dump-ground", cfg.dump_ground, "Print the ground expansion");
    sub->add_option("--grid-size", cfg.grid_size, "Grid size for infinite-valued validity")
        ->check(CLI::Range(2, 1000));
    sub->add_option("--max-domain", cfg.max_domain, "Cross-check with the brute-force oracle");
  };

  auto* prove = app.add_subcommand("prove", "Decide validity of a forall*exists* sentence");
  query(prove);
  auto* sat = app.add_subcommand("sat", "Decide 1-satisfiability of an exists*forall* sentence");
  query(sat);

  auto* glue = app.add_subcommand("glue", "Glue a certificate at omega and check formulas");
  common(glue);
  glue->add_option("certificate", cfg.input, "Certificate or verdict JSON (stdin when omitted)");
  glue->add_option("--omega", cfg.omega, "Gluing point, a rational below 1")->required();
  glue->add_option("--formula", cfg.formulas, "Formula to evaluate before and after gluing");
  glue->add_option("--formulas", cfg.formulas_file, "File with one formula per line");

  auto* laws = app.add_subcommand("laws", "Run the property suites");
  common(laws);
  laws->add_option("--seed", cfg.seed, "Generator seed");
  laws->add_option("--count", cfg.count, "Generated sentences per law")->check(CLI::PositiveNumber);

  auto* corpus = app.add_subcommand("corpus", "Run a corpus file or shipped corpus");
  common(corpus);
  corpus->add_option("corpus", cfg.input, "Corpus file path or shipped corpus name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitError;
  }

  try {
    if (prove->parsed()) return run_query(cfg, goedel::Mode::Validity);
    if (sat->parsed()) return run_query(cfg, goedel::Mode::Sat1);
    if (glue->parsed()) return run_glue(cfg);
    if (laws->parsed()) return run_laws(cfg);
    if (corpus->parsed()) return run_corpus(cfg);
  } catch (const Error& e) {
    std::cerr << "error [" << goedel::stage_name(e.stage()) << "]: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

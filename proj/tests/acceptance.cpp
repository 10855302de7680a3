// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.
#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "goedel/decide.hpp"
#include "goedel/error.hpp"
#include "goedel/generators.hpp"
#include "goedel/laws.hpp"

using namespace goedel;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " [" << o.detail
       << "; " << secs << "s]";
  std::cout << line.str() << std::endl;
}

// Certificates from criteria 1 and 2, re-checked for criterion 7.
std::uint64_t direct_certificates = 0;
std::uint64_t direct_certificate_failures = 0;

bool certified(const Verdict& v, const Formula& f) {
  if (!v.certificate) return v.positive() || v.kind == Verdict::Kind::Unsat;
  ++direct_certificates;
  const bool ok = check_certificate(*v.certificate, f, v.kind == Verdict::Kind::NotValid ? Mode::Validity : Mode::Sat1);
  if (!ok) ++direct_certificate_failures;
  return ok;
}

Outcome from_report(const LawReport& r, std::uint64_t min_cases) {
  Outcome o{r.violations == 0 && r.cases >= min_cases, ""};
  o.detail = "cases=" + std::to_string(r.cases) + " (min " + std::to_string(min_cases) +
             ") violations=" + std::to_string(r.violations) + " skipped=" + std::to_string(r.skipped);
  if (!r.counterexample.empty()) o.detail += " first: " + r.counterexample;
  return o;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string("'") + GOEDEL_BS_EXE + "' " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const LawReport* find(const std::vector<LawReport>& reports, const std::string& name) {
  for (const auto& r : reports)
    if (r.name == name) return &r;
  return nullptr;
}

}  // namespace

int main() {
  criterion(1, "Fin_m valid in G_m, not valid in G_{m+1}, m = 2..5", [] {
    Outcome o;
    for (int m = 2; m <= 5; ++m) {
      const Formula fin = fin_axiom(m);
      const Verdict in = decide_validity(fin, LogicId::finite(m));
      const Verdict out = decide_validity(fin, LogicId::finite(m + 1));
      const bool ok = in.kind == Verdict::Kind::Valid && out.kind == Verdict::Kind::NotValid &&
                      out.certificate && certified(out, fin);
      if (!ok) {
        o.pass = false;
        o.detail += "m=" + std::to_string(m) + " ";
      }
    }
    if (o.pass) o.detail = "4/4 exact";
    return o;
  });

  criterion(2, "excluded middle not valid beyond G_2, its negation unsatisfiable", [] {
    Outcome o{true, ""};
    const Formula lem = parse("forall x. P(x) | ~P(x)").formula;
    const Formula neg = parse("~(A | ~A)").formula;
    int checks = 0;
    auto expect = [&](bool ok, const std::string& what) {
      ++checks;
      if (!ok) {
        o.pass = false;
        o.detail += what + " ";
      }
    };
    expect(decide_validity(lem, LogicId::finite(2)).kind == Verdict::Kind::Valid, "G_2");
    std::vector<LogicId> logics{LogicId::infinite()};
    for (int m = 3; m <= 12; ++m) logics.push_back(LogicId::finite(m));
    for (const LogicId logic : logics) {
      const Verdict v = decide_validity(lem, logic);
      expect(v.kind == Verdict::Kind::NotValid && certified(v, lem), "lem@" + logic.str());
    }
    logics.push_back(LogicId::finite(2));
    for (const LogicId logic : logics)
      expect(decide_1sat(neg, logic).kind == Verdict::Kind::Unsat, "neg@" + logic.str());
    if (o.pass) o.detail = std::to_string(checks) + " verdicts exact (G_3..G_12 and ginf)";
    return o;
  });

  const LawConfig cfg;
  CertificateAudit audit;
  LawReport containment;
  LawReport gluing, skolem, sat, infinite;
  double gluing_seconds = 0;
  {
    const auto start = std::chrono::steady_clock::now();
    gluing = law_gluing(cfg);
    gluing_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  criterion(3, "gluing law, exhaustive at small scale", [&] {
    Outcome o = from_report(gluing, 10'000);
    o.pass = o.pass && gluing_seconds <= 60.0;
    o.detail += " runtime=" + std::to_string(gluing_seconds) + "s (max 60s)";
    return o;
  });
  criterion(4, "Skolemization equivalence against the brute-force oracle in G_3 and G_4", [&] {
    skolem = law_skolem_equivalence(cfg, audit);
    Outcome o = from_report(skolem, 200);
    o.detail += " " + skolem.detail;
    return o;
  });
  criterion(5, "1-satisfiability coincides for gm:2, gm:5, ginf and classical grounding", [&] {
    sat = law_sat_coincidence(cfg, audit);
    Outcome o = from_report(sat, 200);
    o.detail += " " + sat.detail;
    return o;
  });
  criterion(6, "infinite-valued verdict stable under grid size and equal to all finite G_m", [&] {
    infinite = law_infinite_coincidence(cfg, audit, containment);
    Outcome o = from_report(infinite, 200);
    o.detail += " " + infinite.detail;
    return o;
  });
  criterion(7, "every certificate passes check_certificate", [&] {
    const std::uint64_t checked = audit.checked + direct_certificates;
    const std::uint64_t failed = audit.failures + direct_certificate_failures;
    Outcome o{failed == 0 && checked > 0, ""};
    o.detail = "checked=" + std::to_string(checked) + " failures=" + std::to_string(failed);
    if (!audit.first_failure.empty()) o.detail += " first: " + audit.first_failure;
    return o;
  });
  criterion(8, "G_{m+1}-valid implies G_m-valid over the criterion 6 sentences, m = 2..4", [&] {
    return from_report(containment, 200);
  });
  criterion(9, "`laws` and `corpus bs_basics` exit 0", [] {
    const int laws = run_cli("laws");
    const int corpus = run_cli("corpus bs_basics");
    return Outcome{laws == 0 && corpus == 0,
                   "laws exit=" + std::to_string(laws) + " corpus exit=" + std::to_string(corpus)};
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail")
            << std::endl;
  return failures == 0 ? 0 : 1;
}

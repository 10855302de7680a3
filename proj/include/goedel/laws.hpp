#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace goedel {

inline constexpr std::uint64_t kDefaultLawSeed = 20240611;

struct LawConfig {
  std::uint64_t seed = kDefaultLawSeed;
  /// Generated sentences per first-order law.
  int sentences = 200;
  /// Formulas fed to the exhaustive gluing check.
  int gluing_formulas = 300;
  int gluing_depth = 4;
  /// Random propositional formulas per propositional law.
  int propositional = 300;
  /// Per-query interpretation cap for the brute-force oracles.
  std::uint64_t oracle_cap = 2'000'000;
};

struct LawReport {
  std::string name;
  /// What the law states, one line.
  std::string statement;
  std::uint64_t cases = 0;
  std::uint64_t min_cases = 0;
  std::uint64_t skipped = 0;
  std::uint64_t violations = 0;
  std::string counterexample;
  /// Outcome distribution or other context, e.g. "valid=12 not_valid=188".
  std::string detail;
  double seconds = 0;

  bool passed() const noexcept { return violations == 0 && cases >= min_cases; }
};

/// Certificates (countermodels and models) collected while other laws run;
/// each one is re-checked against the original sentence.
struct CertificateAudit {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
};

LawReport law_syntax_roundtrip(const LawConfig& cfg);
LawReport law_polarity_flip(const LawConfig& cfg);
LawReport law_gluing(const LawConfig& cfg);
LawReport law_order_invariance(const LawConfig& cfg);
LawReport law_grid_containment(const LawConfig& cfg);
LawReport law_propositional(const LawConfig& cfg);
LawReport law_skolem_structure(const LawConfig& cfg);
LawReport law_skolem_equivalence(const LawConfig& cfg, CertificateAudit& audit);
LawReport law_sat_coincidence(const LawConfig& cfg, CertificateAudit& audit);
/// Infinite-valued coincidence and grid stability; also fills the containment report.
LawReport law_infinite_coincidence(const LawConfig& cfg, CertificateAudit& audit,
                                   LawReport& containment);
LawReport law_fin_hierarchy(CertificateAudit& audit);
LawReport law_excluded_middle(CertificateAudit& audit);
LawReport certificate_report(const CertificateAudit& audit);

/// Runs every law, calling `on_report` as each finishes.
std::vector<LawReport> run_all_laws(const LawConfig& cfg,
                                    const std::function<void(const LawReport&)>& on_report = {});

}  // namespace goedel

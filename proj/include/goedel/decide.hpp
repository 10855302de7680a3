#pragma once

#include <optional>
#include <string>
#include <vector>

#include "goedel/herbrand.hpp"
#include "goedel/models.hpp"
#include "goedel/propdecide.hpp"
#include "goedel/skolem.hpp"
#include "goedel/syntax.hpp"
#include "goedel/truth_value.hpp"

namespace goedel {

struct Query {
  Formula sentence;
  Mode mode;
  LogicId logic;
};

struct DecideOptions {
  PropLimits prop;
  std::uint64_t max_instances = kDefaultInstanceCap;
  /// Overrides the (n+2)-point grid for infinite-valued validity.
  std::optional<std::size_t> grid_size;
};

/// Pipeline intermediate results kept for inspection and certificate audit.
struct Provenance {
  BSShape shape = BSShape::Neither;
  SkolemResult skolem;
  GroundExpansion ground;
  PropVerdict prop;
  std::vector<std::string> notes;
};

struct Verdict {
  enum class Kind { Valid, NotValid, Sat, Unsat };

  Kind kind;
  /// Countermodel (NotValid) or model (Sat).
  std::optional<Interpretation> certificate;
  std::optional<Provenance> provenance;

  bool positive() const noexcept { return kind == Kind::Valid || kind == Kind::Sat; }
};

std::string_view verdict_name(Verdict::Kind k) noexcept;

/// Validity of a forall*exists* (or single-kind) prenex sentence: Skolemize,
/// ground into the Herbrand disjunction, decide propositionally, lift any
/// counter-assignment to a countermodel over the Herbrand universe.
Verdict decide_validity(const Formula& sentence, LogicId logic, const DecideOptions& opts = {});

/// 1-satisfiability of an exists*forall* (or single-kind) prenex sentence via
/// classical satisfiability of its ground conjunction; the logic does not
/// change the verdict.
Verdict decide_1sat(const Formula& sentence, LogicId logic, const DecideOptions& opts = {});

Verdict decide(const Query& q, const DecideOptions& opts = {});

/// Number of constants in the Herbrand universe of the mode's Skolemization.
std::size_t herbrand_constant_count(const Formula& sentence, Mode mode);

/// Brute-force validity in G_m over every interpretation with domain sizes
/// 1..max_domain. Valid means valid up to that bound.
Verdict oracle_validity(const Formula& sentence, int m, std::size_t max_domain,
                        std::uint64_t cap = kDefaultEnumerationCap);

/// Brute-force 1-satisfiability in G_m over domain sizes 1..max_domain.
Verdict oracle_1sat(const Formula& sentence, int m, std::size_t max_domain,
                    std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace goedel

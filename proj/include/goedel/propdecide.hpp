#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "goedel/syntax.hpp"
#include "goedel/truth_value.hpp"

namespace goedel {

/// A ground atom treated as an opaque propositional variable.
struct GroundAtom {
  std::string predicate;
  std::vector<std::string> args;

  friend bool operator==(const GroundAtom&, const GroundAtom&) = default;
  friend auto operator<=>(const GroundAtom&, const GroundAtom&) = default;
};

GroundAtom ground_atom(const Formula& atom);
std::string print(const GroundAtom& a);

using Assignment = std::map<GroundAtom, TruthValue>;

/// Distinct ground atoms of a quantifier-free ground formula, first appearance first.
std::vector<GroundAtom> ground_atoms(const Formula& f);

struct PropLimits {
  std::size_t max_atoms = 12;
  std::uint64_t max_assignments = 10'000'000;
  std::uint64_t max_classical_nodes = std::uint64_t{1} << 20;
};

struct PropVerdict {
  enum class Outcome { Valid, CounterAssignment, Satisfiable, Unsatisfiable };

  Outcome outcome;
  /// Counter-assignment (value < 1) or model (value 1); empty otherwise.
  Assignment witness;
  /// Grid the verdict was computed on (2 for classical satisfiability).
  std::size_t grid_size = 0;
  std::uint64_t explored = 0;

  bool positive() const noexcept {
    return outcome == Outcome::Valid || outcome == Outcome::Satisfiable;
  }
};

std::string_view outcome_name(PropVerdict::Outcome o) noexcept;

/// Propositional Gödel value. Throws Error(Stage::Decide) if an atom is unassigned.
TruthValue eval_qf(const Formula& f, const Assignment& a);

/// Valid iff the value is 1 under every assignment into `grid`; otherwise the
/// lexicographically least counter-assignment (atoms in first-appearance
/// order, grid ascending).
PropVerdict goedel_valid_on_grid(const Formula& f, const Grid& grid, const PropLimits& limits = {});

/// Infinite-valued validity, decided on the (n+2)-point grid for n atoms
/// unless `grid_size` overrides it.
PropVerdict goedel_valid_infinite(const Formula& f, const PropLimits& limits = {},
                                  std::optional<std::size_t> grid_size = std::nullopt);

/// Validity in G_m on the m-point grid.
PropVerdict goedel_valid_finite(const Formula& f, int m, const PropLimits& limits = {});

/// Two-valued satisfiability by depth-first search with three-valued pruning.
/// Decisions try 1 before 0; atoms still undecided once the formula is true
/// are set to 0.
PropVerdict classical_sat(const Formula& f, const PropLimits& limits = {});

}  // namespace goedel

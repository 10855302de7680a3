#pragma once

#include <string>
#include <vector>

#include "goedel/syntax.hpp"

namespace goedel {

struct SkolemSymbol {
  std::string name;
  /// 0 for a Skolem constant.
  int arity = 0;
  friend bool operator==(const SkolemSymbol&, const SkolemSymbol&) = default;
};

struct SkolemResult {
  /// Remaining prefix and matrix with the eliminated variables replaced.
  PrenexFormula prenex;
  std::vector<SkolemSymbol> introduced;
  /// Prefix index of each eliminated quantifier -> introduced symbol name.
  std::vector<std::pair<std::size_t, std::string>> mapping;

  Formula formula() const { return prenex.to_formula(); }
  bool constants_only() const;
};

/// Eliminates the strong (universal) quantifiers of a prenex sentence. A
/// universal with no existential before it becomes a fresh constant `_skV<k>`;
/// otherwise a fresh function of the preceding existential variables.
SkolemResult skolemize_validity(const PrenexFormula& p);

/// Dual: eliminates existentials with fresh `_skS<k>` symbols over the
/// preceding universal variables.
SkolemResult skolemize_sat(const PrenexFormula& p);

std::string describe(const SkolemResult& r);

}  // namespace goedel

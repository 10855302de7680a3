#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "goedel/syntax.hpp"

namespace goedel {

struct GroundInstance {
  std::map<std::string, std::string> substitution;
  Formula instance;
};

struct GroundExpansion {
  std::vector<std::string> universe;
  /// One entry per substitution tuple, lexicographic over the prefix order.
  std::vector<GroundInstance> instances;
  /// Disjunction or conjunction of the distinct instances, in first-seen order.
  Formula combined;
};

/// Constants of `sig` in first-appearance order, or a single fresh `_h0`
/// when there are none.
std::vector<std::string> herbrand_universe(const Signature& sig);

inline constexpr std::uint64_t kDefaultInstanceCap = 1'000'000;

/// Herbrand disjunction of an existential-only prenex sentence.
GroundExpansion expand_disjunction(const PrenexFormula& f, const std::vector<std::string>& universe,
                                   std::uint64_t cap = kDefaultInstanceCap);

/// Ground conjunction of a universal-only prenex sentence.
GroundExpansion expand_conjunction(const PrenexFormula& f, const std::vector<std::string>& universe,
                                   std::uint64_t cap = kDefaultInstanceCap);

std::string describe(const GroundExpansion& g);

}  // namespace goedel

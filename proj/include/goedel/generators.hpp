#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "goedel/syntax.hpp"

namespace goedel {

struct BSParams {
  int min_universals = 0;
  int max_universals = 2;
  int min_existentials = 0;
  int max_existentials = 2;
  int max_predicates = 2;
  int max_arity = 2;
  int matrix_depth = 3;
  /// Chance that a user constant appears in the matrix's atom pool.
  double constant_probability = 0.0;
  /// Chance that the matrix is a chain (top -> a1) | (a1 -> a2) | ... | (ak -> bot)
  /// over pool atoms.
  double chain_probability = 0.0;
};

/// Seeded random formula source. The same seed always yields the same stream.
class FormulaGenerator {
public:
  explicit FormulaGenerator(std::uint64_t seed) : rng_(seed) {}

  /// Quantifier-free formula over `atoms` with at most `max_depth` levels.
  Formula quantifier_free(const std::vector<Formula>& atoms, int max_depth);

  /// Sentence over one unary predicate P and one constant c, quantifiers anywhere.
  Formula monadic_sentence(int max_depth);

  /// forall* exists* prenex sentence.
  Formula validity_shape(const BSParams& params);
  /// exists* forall* prenex sentence.
  Formula sat_shape(const BSParams& params);

  std::mt19937_64& rng() noexcept { return rng_; }
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

private:
  Formula monadic(int depth, std::vector<std::string>& bound);
  Formula prenex(Quantifier outer, const BSParams& params);

  std::mt19937_64 rng_;
};

/// (top -> A1) | (A1 -> A2) | ... | (A{m-1} -> bot): valid in G_m, not in G_{m+1}.
Formula fin_axiom(int m);

/// Propositional atoms A0..A{n-1}.
std::vector<Formula> propositional_atoms(int n);

}  // namespace goedel

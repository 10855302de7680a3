#include "goedel/generators.hpp"

namespace goedel {

std::vector<Formula> propositional_atoms(int n) {
  std::vector<Formula> atoms;
  for (int k = 0; k < n; ++k) atoms.push_back(Formula::atom("A" + std::to_string(k)));
  return atoms;
}

Formula fin_axiom(int m) {
  std::vector<Formula> chain{Formula::top()};
  for (int k = 1; k < m; ++k) chain.push_back(Formula::atom("A" + std::to_string(k)));
  chain.push_back(Formula::bottom());
  Formula f = Formula::implies(chain[0], chain[1]);
  for (std::size_t k = 1; k + 1 < chain.size(); ++k)
    f = Formula::disj(f, Formula::implies(chain[k], chain[k + 1]));
  return f;
}

Formula FormulaGenerator::quantifier_free(const std::vector<Formula>& atoms, int max_depth) {
  if (max_depth <= 1 || uniform(0, 5) == 0) {
    if (uniform(0, 9) == 0) return Formula::bottom();
    return atoms[static_cast<std::size_t>(uniform(0, static_cast<int>(atoms.size()) - 1))];
  }
  Formula lhs = quantifier_free(atoms, max_depth - 1);
  switch (uniform(0, 3)) {
    case 0: return Formula::conj(lhs, quantifier_free(atoms, max_depth - 1));
    case 1: return Formula::disj(lhs, quantifier_free(atoms, max_depth - 1));
    case 2: return Formula::implies(lhs, quantifier_free(atoms, max_depth - 1));
    default: return Formula::negation(lhs);
  }
}

Formula FormulaGenerator::monadic_sentence(int max_depth) {
  std::vector<std::string> bound;
  return monadic(max_depth, bound);
}

Formula FormulaGenerator::monadic(int depth, std::vector<std::string>& bound) {
  auto leaf = [&] {
    if (uniform(0, 7) == 0) return Formula::bottom();
    const int pick = uniform(0, static_cast<int>(bound.size()));
    const Term t = pick == static_cast<int>(bound.size())
                       ? Term::constant("c")
                       : Term::variable(bound[static_cast<std::size_t>(pick)]);
    return Formula::atom("P", {t});
  };
  if (depth <= 1 || uniform(0, 4) == 0) return leaf();
  switch (uniform(0, 4)) {
    case 0: {
      Formula lhs = monadic(depth - 1, bound);
      return Formula::conj(lhs, monadic(depth - 1, bound));
    }
    case 1: {
      Formula lhs = monadic(depth - 1, bound);
      return Formula::disj(lhs, monadic(depth - 1, bound));
    }
    case 2: {
      Formula lhs = monadic(depth - 1, bound);
      return Formula::implies(lhs, monadic(depth - 1, bound));
    }
    default: {
      const std::string var = "x" + std::to_string(bound.size());
      bound.push_back(var);
      Formula body = monadic(depth - 1, bound);
      bound.pop_back();
      return uniform(0, 1) == 0 ? Formula::forall(var, body) : Formula::exists(var, body);
    }
  }
}

Formula FormulaGenerator::prenex(Quantifier outer, const BSParams& params) {
  const int universals = uniform(params.min_universals, params.max_universals);
  const int existentials = uniform(params.min_existentials, params.max_existentials);
  std::vector<QuantifierBinding> prefix;
  std::vector<Term> terms;
  auto bind = [&](Quantifier q, int count, const char* stem) {
    for (int k = 0; k < count; ++k) {
      const std::string var = stem + std::to_string(k);
      prefix.push_back({q, var});
      terms.push_back(Term::variable(var));
    }
  };
  const Quantifier inner = outer == Quantifier::Forall ? Quantifier::Exists : Quantifier::Forall;
  const int outer_count = outer == Quantifier::Forall ? universals : existentials;
  const int inner_count = outer == Quantifier::Forall ? existentials : universals;
  bind(outer, outer_count, outer == Quantifier::Forall ? "x" : "y");
  bind(inner, inner_count, inner == Quantifier::Forall ? "x" : "y");
  if (terms.empty() || std::bernoulli_distribution(params.constant_probability)(rng_))
    terms.push_back(Term::constant("c"));

  // Atom pool: every predicate applied to a few random argument tuples.
  std::vector<Formula> pool;
  const int predicates = uniform(1, params.max_predicates);
  for (int p = 0; p < predicates; ++p) {
    const std::string name = std::string(1, static_cast<char>('P' + p));
    const int arity = uniform(0, params.max_arity);
    const int variants = arity == 0 ? 1 : uniform(1, 3);
    for (int v = 0; v < variants; ++v) {
      std::vector<Term> args;
      for (int a = 0; a < arity; ++a)
        args.push_back(terms[static_cast<std::size_t>(uniform(0, static_cast<int>(terms.size()) - 1))]);
      pool.push_back(Formula::atom(name, std::move(args)));
    }
  }
  if (std::bernoulli_distribution(params.chain_probability)(rng_)) {
    const int links = uniform(1, 3);
    Formula prev = Formula::top(), matrix;
    for (int k = 0; k < links; ++k) {
      const Formula next = pool[static_cast<std::size_t>(uniform(0, static_cast<int>(pool.size()) - 1))];
      const Formula link = Formula::implies(prev, next);
      matrix = k == 0 ? link : Formula::disj(matrix, link);
      prev = next;
    }
    matrix = Formula::disj(matrix, Formula::implies(prev, Formula::bottom()));
    return PrenexFormula{prefix, matrix}.to_formula();
  }
  return PrenexFormula{prefix, quantifier_free(pool, params.matrix_depth)}.to_formula();
}

Formula FormulaGenerator::validity_shape(const BSParams& params) {
  return prenex(Quantifier::Forall, params);
}

Formula FormulaGenerator::sat_shape(const BSParams& params) {
  return prenex(Quantifier::Exists, params);
}

}  // namespace goedel

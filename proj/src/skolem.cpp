#include "goedel/skolem.hpp"

#include <set>

namespace goedel {

namespace {

SkolemResult skolemize(const PrenexFormula& p, Quantifier eliminated, const std::string& stem) {
  const Signature sig = signature_of(p.to_formula());
  std::set<std::string> taken;
  for (const auto& [name, arity] : sig.predicates) taken.insert(name);
  for (const auto& [name, arity] : sig.functions) taken.insert(name);
  for (const auto& c : sig.constants) taken.insert(c);
  for (const auto& b : p.prefix) taken.insert(b.variable);

  SkolemResult result{PrenexFormula{{}, p.matrix}, {}, {}};
  std::map<std::string, Term> subst;
  std::vector<Term> kept_vars;
  int counter = 0;
  for (std::size_t idx = 0; idx < p.prefix.size(); ++idx) {
    const auto& binding = p.prefix[idx];
    if (binding.quantifier != eliminated) {
      result.prenex.prefix.push_back(binding);
      kept_vars.push_back(Term::variable(binding.variable));
      continue;
    }
    std::string name;
    do {
      name = stem + std::to_string(counter++);
    } while (taken.contains(name));
    taken.insert(name);
    subst.emplace(binding.variable,
                  kept_vars.empty() ? Term::constant(name) : Term::apply(name, kept_vars));
    result.introduced.push_back({name, static_cast<int>(kept_vars.size())});
    result.mapping.emplace_back(idx, name);
  }
  result.prenex.matrix = substitute(p.matrix, subst);
  return result;
}

}  // namespace

bool SkolemResult::constants_only() const {
  for (const auto& s : introduced)
    if (s.arity != 0) return false;
  return true;
}

SkolemResult skolemize_validity(const PrenexFormula& p) {
  return skolemize(p, Quantifier::Forall, "_skV");
}

SkolemResult skolemize_sat(const PrenexFormula& p) {
  return skolemize(p, Quantifier::Exists, "_skS");
}

std::string describe(const SkolemResult& r) {
  std::string out = "skolemized: " + print(r.formula()) + "\n";
  for (std::size_t k = 0; k < r.introduced.size(); ++k) {
    const auto& s = r.introduced[k];
    out += "  prefix[" + std::to_string(r.mapping[k].first) + "] -> " + s.name;
    out += s.arity == 0 ? " (constant)\n" : " (function/" + std::to_string(s.arity) + ")\n";
  }
  return out;
}

}  // namespace goedel

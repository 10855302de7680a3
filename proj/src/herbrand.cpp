#include "goedel/herbrand.hpp"

#include <algorithm>

#include "goedel/error.hpp"

namespace goedel {

std::vector<std::string> herbrand_universe(const Signature& sig) {
  if (!sig.constants.empty()) return sig.constants;
  std::string fresh = "_h0";
  for (int k = 1; sig.has_symbol(fresh); ++k) fresh = "_h" + std::to_string(k);
  return {fresh};
}

namespace {

GroundExpansion expand(const PrenexFormula& f, const std::vector<std::string>& universe,
                       Quantifier expected, std::uint64_t cap) {
  if (universe.empty()) throw Error(Stage::Ground, "Herbrand universe is empty");
  for (const auto& b : f.prefix)
    if (b.quantifier != expected)
      throw Error(Stage::Ground, std::string("grounding expects a purely ") +
                                     (expected == Quantifier::Exists ? "existential" : "universal") +
                                     " prefix");
  if (has_function_symbols(f.matrix))
    throw Error(Stage::Ground, "function symbol present; only constant universes are supported");
  {
    auto free = free_variables(f.matrix);
    for (const auto& b : f.prefix) free.erase(b.variable);
    if (!free.empty()) throw Error(Stage::Ground, "matrix has free variable '" + *free.begin() + "'");
  }

  std::uint64_t total = 1;
  for (std::size_t k = 0; k < f.prefix.size(); ++k) {
    if (total > cap / universe.size())
      throw CapExceeded("ground instance count exceeds cap " + std::to_string(cap));
    total *= universe.size();
  }

  GroundExpansion g{universe, {}, f.matrix};
  g.instances.reserve(total);
  std::vector<std::size_t> digits(f.prefix.size(), 0);
  std::vector<Formula> distinct;
  for (std::uint64_t n = 0; n < total; ++n) {
    std::map<std::string, Term> subst;
    std::map<std::string, std::string> table;
    for (std::size_t k = 0; k < digits.size(); ++k) {
      subst.emplace(f.prefix[k].variable, Term::constant(universe[digits[k]]));
      table.emplace(f.prefix[k].variable, universe[digits[k]]);
    }
    Formula inst = substitute(f.matrix, subst);
    if (std::find(distinct.begin(), distinct.end(), inst) == distinct.end()) distinct.push_back(inst);
    g.instances.push_back({std::move(table), std::move(inst)});
    for (std::size_t k = digits.size(); k-- > 0;) {
      if (++digits[k] < universe.size()) break;
      digits[k] = 0;
    }
  }
  g.combined = distinct.front();
  for (std::size_t k = 1; k < distinct.size(); ++k)
    g.combined = expected == Quantifier::Exists ? Formula::disj(g.combined, distinct[k])
                                                : Formula::conj(g.combined, distinct[k]);
  return g;
}

}  // namespace

GroundExpansion expand_disjunction(const PrenexFormula& f, const std::vector<std::string>& universe,
                                   std::uint64_t cap) {
  return expand(f, universe, Quantifier::Exists, cap);
}

GroundExpansion expand_conjunction(const PrenexFormula& f, const std::vector<std::string>& universe,
                                   std::uint64_t cap) {
  return expand(f, universe, Quantifier::Forall, cap);
}

std::string describe(const GroundExpansion& g) {
  std::string out = "universe:";
  for (const auto& c : g.universe) out += " " + c;
  out += "\ninstances:\n";
  for (const auto& inst : g.instances) {
    out += "  {";
    bool first = true;
    for (const auto& [var, c] : inst.substitution) {
      out += (first ? "" : ", ") + var + ":=" + c;
      first = false;
    }
    out += "}  " + print(inst.instance) + "\n";
  }
  out += "combined: " + print(g.combined) + "\n";
  return out;
}

}  // namespace goedel

#include "goedel/propdecide.hpp"

#include <algorithm>

#include "goedel/error.hpp"

namespace goedel {

GroundAtom ground_atom(const Formula& atom) {
  if (atom.kind() != Connective::Atom) throw Error(Stage::Decide, "not an atom: " + print(atom));
  GroundAtom out{atom.name(), {}};
  for (const auto& t : atom.args()) {
    if (!t.is_constant()) throw Error(Stage::Decide, "atom is not ground: " + print(atom));
    out.args.push_back(t.name);
  }
  return out;
}

std::string print(const GroundAtom& a) {
  if (a.args.empty()) return a.predicate;
  std::string s = a.predicate + "(";
  for (std::size_t k = 0; k < a.args.size(); ++k) s += (k ? ", " : "") + a.args[k];
  return s + ")";
}

std::vector<GroundAtom> ground_atoms(const Formula& f) {
  std::vector<GroundAtom> out;
  for (const auto& atom : atoms_of(f)) {
    GroundAtom g = ground_atom(atom);
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
  }
  return out;
}

std::string_view outcome_name(PropVerdict::Outcome o) noexcept {
  switch (o) {
    case PropVerdict::Outcome::Valid: return "valid";
    case PropVerdict::Outcome::CounterAssignment: return "counter_assignment";
    case PropVerdict::Outcome::Satisfiable: return "satisfiable";
    case PropVerdict::Outcome::Unsatisfiable: return "unsatisfiable";
  }
  return "unknown";
}

TruthValue eval_qf(const Formula& f, const Assignment& a) {
  switch (f.kind()) {
    case Connective::Atom: {
      auto it = a.find(ground_atom(f));
      if (it == a.end()) throw Error(Stage::Decide, "atom " + print(f) + " is unassigned");
      return it->second;
    }
    case Connective::Bottom: return TruthValue::zero();
    case Connective::And: return goedel_and(eval_qf(f.lhs(), a), eval_qf(f.rhs(), a));
    case Connective::Or: return goedel_or(eval_qf(f.lhs(), a), eval_qf(f.rhs(), a));
    case Connective::Implies: return goedel_implies(eval_qf(f.lhs(), a), eval_qf(f.rhs(), a));
    case Connective::Forall:
    case Connective::Exists: break;
  }
  throw Error(Stage::Decide, "quantifier in propositional formula");
}

namespace {

// Flattened formula DAG in post-order over atom indices. Evaluation works on
// ranks in an ordered value set: every connective is order-determined, so
// values can be compared as grid indices.
class Program {
public:
  enum class Op : std::uint8_t { Atom, Bottom, And, Or, Implies };

  struct Node {
    Op op;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
  };

  Program(const Formula& f, const std::vector<GroundAtom>& atoms) {
    if (!is_quantifier_free(f)) throw Error(Stage::Decide, "propositional input has quantifiers");
    compile(f, atoms);
  }

  /// `top` is the rank of 1 in the value set.
  int eval(const std::vector<int>& values, int top, std::vector<int>& scratch) const {
    scratch.resize(nodes_.size());
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      const Node& n = nodes_[k];
      switch (n.op) {
        case Op::Atom: scratch[k] = values[n.a]; break;
        case Op::Bottom: scratch[k] = 0; break;
        case Op::And: scratch[k] = std::min(scratch[n.a], scratch[n.b]); break;
        case Op::Or: scratch[k] = std::max(scratch[n.a], scratch[n.b]); break;
        case Op::Implies: scratch[k] = scratch[n.a] <= scratch[n.b] ? top : scratch[n.b]; break;
      }
    }
    return scratch.back();
  }

  // Kleene three-valued evaluation: 0 false, 1 true, 2 unknown.
  int eval3(const std::vector<int>& values, std::vector<int>& scratch) const {
    constexpr int U = 2;
    scratch.resize(nodes_.size());
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      const Node& n = nodes_[k];
      switch (n.op) {
        case Op::Atom: scratch[k] = values[n.a]; break;
        case Op::Bottom: scratch[k] = 0; break;
        case Op::And: {
          const int x = scratch[n.a], y = scratch[n.b];
          scratch[k] = (x == 0 || y == 0) ? 0 : (x == 1 && y == 1) ? 1 : U;
          break;
        }
        case Op::Or: {
          const int x = scratch[n.a], y = scratch[n.b];
          scratch[k] = (x == 1 || y == 1) ? 1 : (x == 0 && y == 0) ? 0 : U;
          break;
        }
        case Op::Implies: {
          const int x = scratch[n.a], y = scratch[n.b];
          scratch[k] = (x == 0 || y == 1) ? 1 : (x == 1 && y == 0) ? 0 : U;
          break;
        }
      }
    }
    return scratch.back();
  }

private:
  std::uint32_t compile(const Formula& f, const std::vector<GroundAtom>& atoms) {
    switch (f.kind()) {
      case Connective::Atom: {
        const auto idx = std::find(atoms.begin(), atoms.end(), ground_atom(f)) - atoms.begin();
        nodes_.push_back({Op::Atom, static_cast<std::uint32_t>(idx), 0});
        break;
      }
      case Connective::Bottom: nodes_.push_back({Op::Bottom}); break;
      default: {
        const auto a = compile(f.lhs(), atoms);
        const auto b = compile(f.rhs(), atoms);
        const Op op = f.kind() == Connective::And  ? Op::And
                      : f.kind() == Connective::Or ? Op::Or
                                                   : Op::Implies;
        nodes_.push_back({op, a, b});
      }
    }
    return static_cast<std::uint32_t>(nodes_.size() - 1);
  }

  std::vector<Node> nodes_;
};

Assignment to_assignment(const std::vector<GroundAtom>& atoms, const std::vector<int>& ranks,
                         const Grid& grid) {
  Assignment a;
  for (std::size_t k = 0; k < atoms.size(); ++k) a.emplace(atoms[k], grid[static_cast<std::size_t>(ranks[k])]);
  return a;
}

}  // namespace

PropVerdict goedel_valid_on_grid(const Formula& f, const Grid& grid, const PropLimits& limits) {
  const auto atoms = ground_atoms(f);
  if (atoms.size() > limits.max_atoms)
    throw CapExceeded("formula has " + std::to_string(atoms.size()) + " atoms; exhaustive cap is " +
                      std::to_string(limits.max_atoms));
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    if (total > limits.max_assignments / grid.size())
      throw CapExceeded("assignment count exceeds cap " + std::to_string(limits.max_assignments));
    total *= grid.size();
  }

  const Program program(f, atoms);
  const int top = static_cast<int>(grid.size()) - 1;
  std::vector<int> ranks(atoms.size(), 0);
  std::vector<int> scratch;
  PropVerdict verdict{PropVerdict::Outcome::Valid, {}, grid.size(), 0};
  for (std::uint64_t n = 0; n < total; ++n) {
    ++verdict.explored;
    if (program.eval(ranks, top, scratch) != top) {
      verdict.outcome = PropVerdict::Outcome::CounterAssignment;
      verdict.witness = to_assignment(atoms, ranks, grid);
      return verdict;
    }
    for (std::size_t k = ranks.size(); k-- > 0;) {
      if (++ranks[k] <= top) break;
      ranks[k] = 0;
    }
  }
  return verdict;
}

PropVerdict goedel_valid_infinite(const Formula& f, const PropLimits& limits,
                                  std::optional<std::size_t> grid_size) {
  const std::size_t n = ground_atoms(f).size();
  return goedel_valid_on_grid(f, Grid::equally_spaced(grid_size.value_or(n + 2)), limits);
}

PropVerdict goedel_valid_finite(const Formula& f, int m, const PropLimits& limits) {
  if (m < 2) throw Error(Stage::Usage, "G_m needs m >= 2");
  return goedel_valid_on_grid(f, Grid::equally_spaced(static_cast<std::size_t>(m)), limits);
}

PropVerdict classical_sat(const Formula& f, const PropLimits& limits) {
  const auto atoms = ground_atoms(f);
  const Program program(f, atoms);
  constexpr int U = 2;
  std::vector<int> values(atoms.size(), U);
  std::vector<int> scratch;
  PropVerdict verdict{PropVerdict::Outcome::Unsatisfiable, {}, 2, 0};
  const Grid boolean = Grid::equally_spaced(2);

  // Iterative DFS: depth = number of decided atoms; 1 is tried before 0.
  std::size_t depth = 0;
  bool backtrack = false;
  while (true) {
    if (!backtrack) {
      if (++verdict.explored > limits.max_classical_nodes)
        throw CapExceeded("classical search exceeded " +
                          std::to_string(limits.max_classical_nodes) + " nodes");
      const int r = program.eval3(values, scratch);
      if (r == 1) {
        for (std::size_t k = depth; k < values.size(); ++k) values[k] = 0;
        verdict.outcome = PropVerdict::Outcome::Satisfiable;
        verdict.witness = to_assignment(atoms, values, boolean);
        return verdict;
      }
      if (r == U && depth < values.size()) {
        values[depth++] = 1;
        continue;
      }
      backtrack = true;
    }
    // Flip the deepest 1 to 0, undoing exhausted levels.
    while (depth > 0 && values[depth - 1] == 0) values[--depth] = U;
    if (depth == 0) return verdict;
    values[depth - 1] = 0;
    backtrack = false;
  }
}

}  // namespace goedel

#include "goedel/models.hpp"

#include <algorithm>

#include "goedel/error.hpp"

namespace goedel {

namespace {

std::size_t power(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int k = 0; k < exp; ++k) r *= base;
  return r;
}

}  // namespace

Interpretation::Interpretation(std::vector<std::string> domain,
                               const std::map<std::string, int>& predicates, TruthValue fill)
    : domain_(std::move(domain)), arities_(predicates) {
  if (domain_.empty()) throw Error(Stage::Usage, "interpretation domain must be nonempty");
  for (const auto& [name, arity] : arities_)
    tables_.emplace(name, Table{arity, std::vector<TruthValue>(power(domain_.size(), arity), fill)});
}

Element Interpretation::element(std::string_view name) const {
  auto it = std::find(domain_.begin(), domain_.end(), name);
  if (it == domain_.end())
    throw Error(Stage::Certificate, "unknown domain element '" + std::string(name) + "'");
  return static_cast<Element>(it - domain_.begin());
}

Element Interpretation::constant(const std::string& name) const {
  auto it = constants_.find(name);
  if (it == constants_.end()) throw Error(Stage::Certificate, "uninterpreted constant '" + name + "'");
  return it->second;
}

void Interpretation::set_constant(const std::string& name, Element e) {
  if (e >= domain_.size()) throw Error(Stage::Certificate, "constant '" + name + "' outside domain");
  constants_[name] = e;
}

const Interpretation::Table& Interpretation::table(const std::string& predicate) const {
  auto it = tables_.find(predicate);
  if (it == tables_.end()) throw Error(Stage::Certificate, "unknown predicate '" + predicate + "'");
  return it->second;
}

std::size_t Interpretation::offset(const Table& t, std::span<const Element> args) const {
  if (static_cast<int>(args.size()) != t.arity)
    throw Error(Stage::Certificate, "arity mismatch in atom lookup");
  std::size_t idx = 0;
  for (Element e : args) {
    if (e >= domain_.size()) throw Error(Stage::Certificate, "atom argument outside domain");
    idx = idx * domain_.size() + e;
  }
  return idx;
}

const TruthValue& Interpretation::value(const std::string& predicate,
                                        std::span<const Element> args) const {
  const Table& t = table(predicate);
  return t.values[offset(t, args)];
}

void Interpretation::set_value(const std::string& predicate, std::span<const Element> args,
                               TruthValue v) {
  auto it = tables_.find(predicate);
  if (it == tables_.end()) throw Error(Stage::Certificate, "unknown predicate '" + predicate + "'");
  it->second.values[offset(it->second, args)] = v;
}

void Interpretation::for_each_atom(
    const std::function<void(const std::string&, std::span<const Element>, const TruthValue&)>& fn)
    const {
  for (const auto& [name, t] : tables_) {
    std::vector<Element> tuple(static_cast<std::size_t>(t.arity), 0);
    for (std::size_t idx = 0; idx < t.values.size(); ++idx) {
      std::size_t rest = idx;
      for (int k = t.arity - 1; k >= 0; --k) {
        tuple[static_cast<std::size_t>(k)] = rest % domain_.size();
        rest /= domain_.size();
      }
      fn(name, tuple, t.values[idx]);
    }
  }
}

std::size_t Interpretation::atom_count() const {
  std::size_t n = 0;
  for (const auto& [name, t] : tables_) n += t.values.size();
  return n;
}

// --- Evaluation -------------------------------------------------------------

namespace {

class Evaluator {
public:
  Evaluator(const Interpretation& i, const Environment& env) : i_(i) {
    for (const auto& [var, e] : env) stack_.emplace_back(var, e);
  }

  TruthValue eval(const Formula& f) {
    switch (f.kind()) {
      case Connective::Atom: {
        args_.clear();
        for (const auto& t : f.args()) args_.push_back(term(t));
        return i_.value(f.name(), args_);
      }
      case Connective::Bottom: return TruthValue::zero();
      case Connective::And: {
        const TruthValue a = eval(f.lhs());
        if (a.is_zero()) return a;
        return goedel_and(a, eval(f.rhs()));
      }
      case Connective::Or: {
        const TruthValue a = eval(f.lhs());
        if (a.is_one()) return a;
        return goedel_or(a, eval(f.rhs()));
      }
      case Connective::Implies: {
        const TruthValue a = eval(f.lhs());
        return goedel_implies(a, eval(f.rhs()));
      }
      case Connective::Forall:
      case Connective::Exists: {
        const bool universal = f.kind() == Connective::Forall;
        TruthValue acc = universal ? TruthValue::one() : TruthValue::zero();
        stack_.emplace_back(f.name(), 0);
        for (Element e = 0; e < i_.domain_size(); ++e) {
          stack_.back().second = e;
          const TruthValue v = eval(f.body());
          acc = universal ? goedel_and(acc, v) : goedel_or(acc, v);
          if (universal ? acc.is_zero() : acc.is_one()) break;
        }
        stack_.pop_back();
        return acc;
      }
    }
    return TruthValue::zero();
  }

private:
  Element term(const Term& t) const {
    switch (t.kind) {
      case Term::Kind::Variable:
        for (auto it = stack_.rbegin(); it != stack_.rend(); ++it)
          if (it->first == t.name) return it->second;
        throw Error(Stage::Decide, "unbound variable '" + t.name + "'");
      case Term::Kind::Constant: return i_.constant(t.name);
      case Term::Kind::Function:
        throw Error(Stage::Decide, "function symbol '" + t.name + "' has no finite interpretation");
    }
    return 0;
  }

  const Interpretation& i_;
  std::vector<std::pair<std::string, Element>> stack_;
  std::vector<Element> args_;
};

}  // namespace

TruthValue evaluate(const Interpretation& i, const Formula& f, const Environment& env) {
  return Evaluator(i, env).eval(f);
}

Interpretation glue(const Interpretation& i, const TruthValue& omega) {
  if (omega.is_one()) throw Error(Stage::Usage, "gluing point must be below 1");
  Interpretation out = i;
  for (auto& [name, t] : out.tables_)
    for (auto& v : t.values)
      if (v > omega) v = TruthValue::one();
  return out;
}

// --- Enumeration ------------------------------------------------------------

std::uint64_t count_interpretations(const Signature& sig, std::size_t domain_size,
                                    std::size_t grid_size, std::uint64_t cap) {
  if (domain_size == 0) throw Error(Stage::Usage, "domain size must be positive");
  std::uint64_t total = 1;
  auto mul = [&](std::uint64_t factor) {
    if (factor != 0 && total > cap / factor)
      throw CapExceeded("interpretation count exceeds cap " + std::to_string(cap));
    total *= factor;
  };
  for (std::size_t k = 0; k < sig.constants.size(); ++k) mul(domain_size);
  for (const auto& [name, arity] : sig.predicates) {
    std::uint64_t tuples = 1;
    for (int a = 0; a < arity; ++a) {
      tuples *= domain_size;
      if (tuples > cap) throw CapExceeded("atom count exceeds cap " + std::to_string(cap));
    }
    for (std::uint64_t t = 0; t < tuples; ++t) mul(grid_size);
  }
  return total;
}

InterpretationEnumerator::InterpretationEnumerator(const Signature& sig, std::size_t domain_size,
                                                   Grid grid, std::uint64_t cap)
    : grid_(std::move(grid)),
      constant_names_(sig.constants),
      current_(
          [&] {
            std::vector<std::string> names;
            for (std::size_t k = 0; k < domain_size; ++k) names.push_back("d" + std::to_string(k));
            return names;
          }(),
          sig.predicates, TruthValue::zero()) {
  if (!sig.functions.empty())
    throw Error(Stage::Usage, "cannot enumerate interpretations of function symbols");
  total_ = count_interpretations(sig, domain_size, grid_.size(), cap);
  constant_digits_.assign(constant_names_.size(), 0);
  for (const auto& c : constant_names_) current_.set_constant(c, 0);
  for (auto& [name, t] : current_.tables_)
    for (std::size_t idx = 0; idx < t.values.size(); ++idx) slots_.emplace_back(&t, idx);
  value_digits_.assign(slots_.size(), 0);
}

bool InterpretationEnumerator::next() {
  if (!started_) {
    started_ = true;
    return true;
  }
  // Odometer over (constants..., atom values...), last digit fastest.
  for (std::size_t k = slots_.size(); k-- > 0;) {
    auto& [table, idx] = slots_[k];
    if (++value_digits_[k] < grid_.size()) {
      table->values[idx] = grid_[value_digits_[k]];
      return true;
    }
    value_digits_[k] = 0;
    table->values[idx] = grid_[0];
  }
  for (std::size_t k = constant_names_.size(); k-- > 0;) {
    if (++constant_digits_[k] < current_.domain_size()) {
      current_.set_constant(constant_names_[k], constant_digits_[k]);
      return true;
    }
    constant_digits_[k] = 0;
    current_.set_constant(constant_names_[k], 0);
  }
  return false;
}

std::vector<Interpretation> enumerate_interpretations(const Signature& sig, std::size_t domain_size,
                                                      const Grid& grid, std::uint64_t cap) {
  InterpretationEnumerator it(sig, domain_size, grid, cap);
  std::vector<Interpretation> out;
  out.reserve(it.total());
  while (it.next()) out.push_back(it.current());
  return out;
}

// --- Certificates -----------------------------------------------------------

std::string_view mode_name(Mode mode) noexcept {
  return mode == Mode::Validity ? "validity" : "sat1";
}

bool check_certificate(const Interpretation& i, const Formula& f, Mode mode) {
  if (!is_sentence(f)) throw Error(Stage::Certificate, "certificate check needs a sentence");
  const Signature sig = signature_of(f);
  for (const auto& [name, arity] : sig.predicates) {
    auto it = i.predicates().find(name);
    if (it == i.predicates().end() || it->second != arity)
      throw Error(Stage::Certificate, "signature mismatch: predicate '" + name + "'");
  }
  for (const auto& c : sig.constants)
    if (!i.constants().contains(c))
      throw Error(Stage::Certificate, "signature mismatch: constant '" + c + "'");
  if (!sig.functions.empty())
    throw Error(Stage::Certificate, "signature mismatch: function symbols are not interpretable");
  const TruthValue v = evaluate(i, f);
  return mode == Mode::Validity ? !v.is_one() : v.is_one();
}

}  // namespace goedel

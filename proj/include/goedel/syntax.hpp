#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace goedel {

/// A variable, a constant, or (only in Skolemizer output) a function application.
struct Term {
  enum class Kind { Variable, Constant, Function };

  Kind kind = Kind::Constant;
  std::string name;
  std::vector<Term> args;

  static Term variable(std::string name) { return {Kind::Variable, std::move(name), {}}; }
  static Term constant(std::string name) { return {Kind::Constant, std::move(name), {}}; }
  static Term apply(std::string fn, std::vector<Term> args) {
    return {Kind::Function, std::move(fn), std::move(args)};
  }

  bool is_variable() const noexcept { return kind == Kind::Variable; }
  bool is_constant() const noexcept { return kind == Kind::Constant; }
  bool is_ground() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (auto c = a.name <=> b.name; c != 0) return c;
    return std::lexicographical_compare_three_way(a.args.begin(), a.args.end(), b.args.begin(),
                                                  b.args.end());
  }
};

enum class Connective { Atom, Bottom, And, Or, Implies, Forall, Exists };
enum class Quantifier { Forall, Exists };

struct FormulaNode;

/// Immutable formula tree with shared subterms. Negation and top are sugar:
/// ~A is A -> bot, top is bot -> bot.
class Formula {
public:
  /// The default formula is bot.
  Formula();

  static Formula atom(std::string predicate, std::vector<Term> args = {});
  static Formula bottom();
  static Formula top();
  static Formula negation(Formula f);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);
  static Formula quantified(Quantifier q, std::string var, Formula body);

  Connective kind() const noexcept;
  bool is_quantifier() const noexcept {
    return kind() == Connective::Forall || kind() == Connective::Exists;
  }
  bool is_binary() const noexcept {
    return kind() == Connective::And || kind() == Connective::Or || kind() == Connective::Implies;
  }

  /// Predicate name (Atom) or bound variable (Forall/Exists).
  const std::string& name() const noexcept;
  const std::vector<Term>& args() const noexcept;
  const Formula& lhs() const noexcept;
  const Formula& rhs() const noexcept;
  const Formula& body() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b);

private:
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const FormulaNode> node_;
};

struct FormulaNode {
  Connective kind;
  std::string name;
  std::vector<Term> args;
  std::vector<Formula> children;
};

/// Predicate arities, constants in first-appearance order, and function
/// symbols (the latter only ever produced by Skolemization).
struct Signature {
  std::map<std::string, int> predicates;
  std::vector<std::string> constants;
  std::map<std::string, int> functions;

  bool has_constant(std::string_view c) const;
  bool has_symbol(std::string_view name) const;
  void add_constant(const std::string& c);
  friend bool operator==(const Signature&, const Signature&) = default;
};

struct ParseResult {
  Formula formula;
  Signature signature;
};

/// Parses the ASCII surface syntax. Throws Error(Stage::Parse) on lexical or
/// syntax errors, arity mismatches, namespace clashes and variable shadowing.
ParseResult parse(std::string_view text);

std::string print(const Term& t);
std::string print(const Formula& f);

/// Signature of an arbitrary formula, constants in first-appearance order.
Signature signature_of(const Formula& f);

std::set<std::string> free_variables(const Formula& f);
bool is_sentence(const Formula& f);
bool is_quantifier_free(const Formula& f);
/// Quantifier-free and variable-free.
bool is_ground(const Formula& f);
bool has_function_symbols(const Formula& f);
/// Capture-free because bound names are never reused (shadowing is rejected).
Formula substitute(const Formula& f, const std::map<std::string, Term>& subst);

/// Distinct atoms in first-appearance order.
std::vector<Formula> atoms_of(const Formula& f);
/// Number of AST nodes along the longest root-to-leaf path.
int depth(const Formula& f);

struct QuantifierBinding {
  Quantifier quantifier;
  std::string variable;
  friend bool operator==(const QuantifierBinding&, const QuantifierBinding&) = default;
};

/// A formula split into its outermost quantifier prefix and quantifier-free matrix.
struct PrenexFormula {
  std::vector<QuantifierBinding> prefix;
  Formula matrix;

  Formula to_formula() const;
};

/// Splits an already-prenex formula. Quantifier shifting is never performed;
/// a quantifier under a connective raises Error(Stage::Shape).
PrenexFormula to_prenex_view(const Formula& f);

enum class BSShape { ValidityShape, SatShape, Both, Neither };

std::string_view shape_name(BSShape shape) noexcept;
BSShape classify_bs(const std::vector<QuantifierBinding>& prefix);
inline BSShape classify_bs(const PrenexFormula& p) { return classify_bs(p.prefix); }

enum class Polarity { Positive, Negative };
enum class Strength { Strong, Weak };

struct QuantifierOccurrence {
  Quantifier quantifier;
  std::string variable;
  Polarity position;
  Strength strength;
  /// Weak quantified variables whose scope contains this occurrence, outermost first.
  std::vector<std::string> weak_scope;
};

/// Quantifier occurrences in pre-order.
struct PolarityAnnotation {
  std::vector<QuantifierOccurrence> occurrences;
};

PolarityAnnotation annotate_polarity(const Formula& f);

}  // namespace goedel

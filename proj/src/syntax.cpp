#include "goedel/syntax.hpp"

#include <cctype>
#include <functional>

#include "goedel/error.hpp"

namespace goedel {

// --- Formula construction ---------------------------------------------------

bool Term::is_ground() const {
  if (kind == Kind::Variable) return false;
  return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.is_ground(); });
}

Formula Formula::atom(std::string predicate, std::vector<Term> args) {
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{Connective::Atom, std::move(predicate), std::move(args), {}}));
}

Formula Formula::bottom() {
  static const Formula bot(std::make_shared<const FormulaNode>(FormulaNode{Connective::Bottom, "", {}, {}}));
  return bot;
}

Formula::Formula() : node_(bottom().node_) {}

Formula Formula::top() { return implies(bottom(), bottom()); }

Formula Formula::negation(Formula f) { return implies(std::move(f), bottom()); }

Formula Formula::conj(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{Connective::And, "", {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{Connective::Or, "", {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{Connective::Implies, "", {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::forall(std::string var, Formula body) {
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{Connective::Forall, std::move(var), {}, {std::move(body)}}));
}

Formula Formula::exists(std::string var, Formula body) {
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{Connective::Exists, std::move(var), {}, {std::move(body)}}));
}

Formula Formula::quantified(Quantifier q, std::string var, Formula body) {
  return q == Quantifier::Forall ? forall(std::move(var), std::move(body))
                                 : exists(std::move(var), std::move(body));
}

Connective Formula::kind() const noexcept { return node_->kind; }
const std::string& Formula::name() const noexcept { return node_->name; }
const std::vector<Term>& Formula::args() const noexcept { return node_->args; }
const Formula& Formula::lhs() const noexcept { return node_->children[0]; }
const Formula& Formula::rhs() const noexcept { return node_->children[1]; }
const Formula& Formula::body() const noexcept { return node_->children[0]; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->name == b.node_->name &&
         a.node_->args == b.node_->args && a.node_->children == b.node_->children;
}

// --- Signature --------------------------------------------------------------

bool Signature::has_constant(std::string_view c) const {
  return std::find(constants.begin(), constants.end(), c) != constants.end();
}

bool Signature::has_symbol(std::string_view name) const {
  const std::string key(name);
  return predicates.contains(key) || functions.contains(key) || has_constant(name);
}

void Signature::add_constant(const std::string& c) {
  if (!has_constant(c)) constants.push_back(c);
}

// --- Lexer and parser -------------------------------------------------------

namespace {

enum class Tok { Ident, Forall, Exists, Bot, Top, LParen, RParen, Comma, Dot, Not, And, Or, Arrow, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      std::string word(text.substr(start, i - start));
      Tok kind = Tok::Ident;
      if (word == "forall") kind = Tok::Forall;
      else if (word == "exists") kind = Tok::Exists;
      else if (word == "bot") kind = Tok::Bot;
      else if (word == "top") kind = Tok::Top;
      out.push_back({kind, std::move(word), start});
      continue;
    }
    Tok kind;
    switch (ch) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case '.': kind = Tok::Dot; break;
      case '~': kind = Tok::Not; break;
      case '&': kind = Tok::And; break;
      case '|': kind = Tok::Or; break;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          out.push_back({Tok::Arrow, "->", start});
          i += 2;
          continue;
        }
        [[fallthrough]];
      default:
        throw Error(Stage::Parse, "lexical error at offset " + std::to_string(i) +
                                      ": unexpected character '" + std::string(1, ch) + "'");
    }
    out.push_back({kind, std::string(1, ch), start});
    ++i;
  }
  out.push_back({Tok::End, "<end of input>", text.size()});
  return out;
}

class Parser {
public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  ParseResult run() {
    Formula f = formula();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    for (const auto& c : sig_.constants)
      if (bound_ever_.contains(c))
        throw Error(Stage::Parse, "identifier '" + c + "' used both as constant and bound variable");
    return {std::move(f), std::move(sig_)};
  }

private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Stage::Parse, "syntax error at offset " + std::to_string(peek().pos) + ": " + what);
  }

  void expect(Tok kind, std::string_view what) {
    if (peek().kind != kind) fail("expected " + std::string(what) + ", found '" + peek().text + "'");
    advance();
  }

  Formula formula() {
    if (peek().kind == Tok::Forall || peek().kind == Tok::Exists) {
      const Quantifier q = advance().kind == Tok::Forall ? Quantifier::Forall : Quantifier::Exists;
      if (peek().kind != Tok::Ident) fail("expected variable after quantifier");
      const Token& var = advance();
      if (sig_.predicates.contains(var.text))
        fail("'" + var.text + "' is already a predicate name");
      for (const auto& b : scope_)
        if (b == var.text) fail("variable '" + var.text + "' shadows an enclosing binding");
      expect(Tok::Dot, "'.'");
      scope_.push_back(var.text);
      bound_ever_.insert(var.text);
      Formula body = formula();
      scope_.pop_back();
      return Formula::quantified(q, var.text, std::move(body));
    }
    return impl();
  }

  Formula impl() {
    Formula lhs = disjunction();
    if (peek().kind == Tok::Arrow) {
      advance();
      return Formula::implies(std::move(lhs), impl_or_quantifier());
    }
    return lhs;
  }

  // Right operands may start a quantifier, which then extends as far right as possible.
  Formula impl_or_quantifier() { return is_quantifier_start() ? formula() : impl(); }
  Formula unary_or_quantifier() { return is_quantifier_start() ? formula() : unary(); }

  bool is_quantifier_start() const {
    return peek().kind == Tok::Forall || peek().kind == Tok::Exists;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (peek().kind == Tok::Or) {
      advance();
      f = Formula::disj(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary_or_quantifier();
    while (peek().kind == Tok::And) {
      advance();
      f = Formula::conj(std::move(f), unary_or_quantifier());
    }
    return f;
  }

  Formula unary() {
    if (peek().kind == Tok::Not) {
      advance();
      return Formula::negation(unary_or_quantifier());
    }
    return primary();
  }

  Formula primary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Bot: advance(); return Formula::bottom();
      case Tok::Top: advance(); return Formula::top();
      case Tok::LParen: {
        advance();
        Formula f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Ident: return atom();
      default: fail("expected a formula, found '" + tok.text + "'");
    }
  }

  Formula atom() {
    const std::string pred = advance().text;
    std::vector<Term> args;
    if (peek().kind == Tok::LParen) {
      advance();
      args.push_back(term());
      while (peek().kind == Tok::Comma) {
        advance();
        args.push_back(term());
      }
      expect(Tok::RParen, "')'");
    }
    if (sig_.has_constant(pred) || bound_ever_.contains(pred))
      throw Error(Stage::Parse, "'" + pred + "' used both as predicate and term");
    const int arity = static_cast<int>(args.size());
    auto [it, inserted] = sig_.predicates.emplace(pred, arity);
    if (!inserted && it->second != arity)
      throw Error(Stage::Parse, "arity mismatch: predicate '" + pred + "' used with arities " +
                                    std::to_string(it->second) + " and " + std::to_string(arity));
    return Formula::atom(pred, std::move(args));
  }

  Term term() {
    if (peek().kind != Tok::Ident) fail("expected a term, found '" + peek().text + "'");
    const std::string name = advance().text;
    if (peek().kind == Tok::LParen) fail("function symbols are not allowed in input");
    if (sig_.predicates.contains(name))
      throw Error(Stage::Parse, "'" + name + "' used both as predicate and term");
    if (std::find(scope_.begin(), scope_.end(), name) != scope_.end()) return Term::variable(name);
    sig_.add_constant(name);
    return Term::constant(name);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
  std::set<std::string> bound_ever_;
  Signature sig_;
};

// --- Printer ----------------------------------------------------------------

// Context precedences: 0 top or quantifier body, 1 implication operand,
// 2 disjunction operand, 3 conjunction operand, 4 tightest.
std::string print_rec(const Formula& f, int ctx) {
  auto wrap = [](bool paren, std::string s) { return paren ? "(" + s + ")" : s; };
  switch (f.kind()) {
    case Connective::Atom: {
      std::string s = f.name();
      if (!f.args().empty()) {
        s += '(';
        for (std::size_t i = 0; i < f.args().size(); ++i) {
          if (i) s += ", ";
          s += print(f.args()[i]);
        }
        s += ')';
      }
      return s;
    }
    case Connective::Bottom: return "bot";
    case Connective::Implies:
      if (f.lhs().kind() == Connective::Bottom && f.rhs().kind() == Connective::Bottom) return "top";
      return wrap(ctx > 1, print_rec(f.lhs(), 2) + " -> " + print_rec(f.rhs(), 1));
    case Connective::Or:
      return wrap(ctx > 2, print_rec(f.lhs(), 2) + " | " + print_rec(f.rhs(), 3));
    case Connective::And:
      return wrap(ctx > 3, print_rec(f.lhs(), 3) + " & " + print_rec(f.rhs(), 4));
    case Connective::Forall:
    case Connective::Exists: {
      const std::string body = f.body().is_binary() ? "(" + print_rec(f.body(), 0) + ")"
                                                    : print_rec(f.body(), 0);
      const std::string q = f.kind() == Connective::Forall ? "forall " : "exists ";
      return wrap(ctx > 0, q + f.name() + ". " + body);
    }
  }
  return {};
}

void collect_signature(const Term& t, Signature& sig) {
  if (t.kind == Term::Kind::Constant) sig.add_constant(t.name);
  if (t.kind == Term::Kind::Function) {
    sig.functions.emplace(t.name, static_cast<int>(t.args.size()));
    for (const auto& a : t.args) collect_signature(a, sig);
  }
}

void for_each_term(const Formula& f, const std::function<void(const Term&)>& fn) {
  switch (f.kind()) {
    case Connective::Atom:
      for (const auto& t : f.args()) fn(t);
      return;
    case Connective::Bottom: return;
    case Connective::Forall:
    case Connective::Exists: for_each_term(f.body(), fn); return;
    default:
      for_each_term(f.lhs(), fn);
      for_each_term(f.rhs(), fn);
  }
}

void collect_free(const Term& t, const std::vector<std::string>& bound, std::set<std::string>& out) {
  if (t.is_variable() && std::find(bound.begin(), bound.end(), t.name) == bound.end())
    out.insert(t.name);
  for (const auto& a : t.args) collect_free(a, bound, out);
}

void collect_free(const Formula& f, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind()) {
    case Connective::Atom:
      for (const auto& t : f.args()) collect_free(t, bound, out);
      return;
    case Connective::Bottom: return;
    case Connective::Forall:
    case Connective::Exists:
      bound.push_back(f.name());
      collect_free(f.body(), bound, out);
      bound.pop_back();
      return;
    default:
      collect_free(f.lhs(), bound, out);
      collect_free(f.rhs(), bound, out);
  }
}

Term substitute(const Term& t, const std::map<std::string, Term>& subst) {
  if (t.is_variable()) {
    auto it = subst.find(t.name);
    return it == subst.end() ? t : it->second;
  }
  if (t.args.empty()) return t;
  std::vector<Term> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(substitute(a, subst));
  return Term::apply(t.name, std::move(args));
}

bool term_has_function(const Term& t) { return t.kind == Term::Kind::Function; }

}  // namespace

ParseResult parse(std::string_view text) { return Parser(text).run(); }

std::string print(const Term& t) {
  if (t.kind != Term::Kind::Function) return t.name;
  std::string s = t.name + "(";
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i) s += ", ";
    s += print(t.args[i]);
  }
  return s + ")";
}

std::string print(const Formula& f) { return print_rec(f, 0); }

Signature signature_of(const Formula& f) {
  Signature sig;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    switch (g.kind()) {
      case Connective::Atom:
        sig.predicates.emplace(g.name(), static_cast<int>(g.args().size()));
        for (const auto& t : g.args()) collect_signature(t, sig);
        return;
      case Connective::Bottom: return;
      case Connective::Forall:
      case Connective::Exists: walk(g.body()); return;
      default:
        walk(g.lhs());
        walk(g.rhs());
    }
  };
  walk(f);
  return sig;
}

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free(f, bound, out);
  return out;
}

bool is_sentence(const Formula& f) { return free_variables(f).empty(); }

bool is_quantifier_free(const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom:
    case Connective::Bottom: return true;
    case Connective::Forall:
    case Connective::Exists: return false;
    default: return is_quantifier_free(f.lhs()) && is_quantifier_free(f.rhs());
  }
}

bool is_ground(const Formula& f) {
  if (!is_quantifier_free(f)) return false;
  bool ground = true;
  for_each_term(f, [&](const Term& t) { ground = ground && t.is_ground(); });
  return ground;
}

bool has_function_symbols(const Formula& f) {
  bool found = false;
  for_each_term(f, [&](const Term& t) { found = found || term_has_function(t); });
  return found;
}

Formula substitute(const Formula& f, const std::map<std::string, Term>& subst) {
  switch (f.kind()) {
    case Connective::Atom: {
      std::vector<Term> args;
      args.reserve(f.args().size());
      for (const auto& t : f.args()) args.push_back(substitute(t, subst));
      return Formula::atom(f.name(), std::move(args));
    }
    case Connective::Bottom: return f;
    case Connective::Forall:
    case Connective::Exists: {
      if (subst.contains(f.name())) {
        auto inner = subst;
        inner.erase(f.name());
        return Formula::quantified(
            f.kind() == Connective::Forall ? Quantifier::Forall : Quantifier::Exists, f.name(),
            substitute(f.body(), inner));
      }
      return Formula::quantified(
          f.kind() == Connective::Forall ? Quantifier::Forall : Quantifier::Exists, f.name(),
          substitute(f.body(), subst));
    }
    case Connective::And: return Formula::conj(substitute(f.lhs(), subst), substitute(f.rhs(), subst));
    case Connective::Or: return Formula::disj(substitute(f.lhs(), subst), substitute(f.rhs(), subst));
    case Connective::Implies:
      return Formula::implies(substitute(f.lhs(), subst), substitute(f.rhs(), subst));
  }
  return f;
}

std::vector<Formula> atoms_of(const Formula& f) {
  std::vector<Formula> out;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    switch (g.kind()) {
      case Connective::Atom:
        if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
        return;
      case Connective::Bottom: return;
      case Connective::Forall:
      case Connective::Exists: walk(g.body()); return;
      default:
        walk(g.lhs());
        walk(g.rhs());
    }
  };
  walk(f);
  return out;
}

int depth(const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom:
    case Connective::Bottom: return 1;
    case Connective::Forall:
    case Connective::Exists: return 1 + depth(f.body());
    default: return 1 + std::max(depth(f.lhs()), depth(f.rhs()));
  }
}

// --- Prenex view and BS shapes ---------------------------------------------

Formula PrenexFormula::to_formula() const {
  Formula f = matrix;
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
    f = Formula::quantified(it->quantifier, it->variable, std::move(f));
  return f;
}

PrenexFormula to_prenex_view(const Formula& f) {
  PrenexFormula p{{}, f};
  while (p.matrix.is_quantifier()) {
    p.prefix.push_back({p.matrix.kind() == Connective::Forall ? Quantifier::Forall
                                                              : Quantifier::Exists,
                        p.matrix.name()});
    p.matrix = p.matrix.body();
  }
  if (!is_quantifier_free(p.matrix))
    throw Error(Stage::Shape, "not prenex: quantifier under a connective in '" + print(f) + "'");
  for (std::size_t i = 0; i < p.prefix.size(); ++i)
    for (std::size_t j = i + 1; j < p.prefix.size(); ++j)
      if (p.prefix[i].variable == p.prefix[j].variable)
        throw Error(Stage::Shape, "prefix binds '" + p.prefix[i].variable + "' twice");
  return p;
}

std::string_view shape_name(BSShape shape) noexcept {
  switch (shape) {
    case BSShape::ValidityShape: return "validity_shape";
    case BSShape::SatShape: return "sat_shape";
    case BSShape::Both: return "both";
    case BSShape::Neither: return "neither";
  }
  return "unknown";
}

BSShape classify_bs(const std::vector<QuantifierBinding>& prefix) {
  // Count alternations between maximal blocks.
  std::vector<Quantifier> blocks;
  for (const auto& b : prefix)
    if (blocks.empty() || blocks.back() != b.quantifier) blocks.push_back(b.quantifier);
  if (blocks.size() <= 1) return BSShape::Both;
  if (blocks.size() == 2)
    return blocks.front() == Quantifier::Forall ? BSShape::ValidityShape : BSShape::SatShape;
  return BSShape::Neither;
}

// --- Polarity ---------------------------------------------------------------

namespace {

void annotate(const Formula& f, Polarity pos, std::vector<std::string>& weak,
              PolarityAnnotation& out) {
  switch (f.kind()) {
    case Connective::Atom:
    case Connective::Bottom: return;
    case Connective::Implies:
      annotate(f.lhs(), pos == Polarity::Positive ? Polarity::Negative : Polarity::Positive, weak,
               out);
      annotate(f.rhs(), pos, weak, out);
      return;
    case Connective::And:
    case Connective::Or:
      annotate(f.lhs(), pos, weak, out);
      annotate(f.rhs(), pos, weak, out);
      return;
    case Connective::Forall:
    case Connective::Exists: {
      const bool universal = f.kind() == Connective::Forall;
      const bool positive = pos == Polarity::Positive;
      const Strength strength = universal == positive ? Strength::Strong : Strength::Weak;
      out.occurrences.push_back({universal ? Quantifier::Forall : Quantifier::Exists, f.name(), pos,
                                 strength, weak});
      if (strength == Strength::Weak) weak.push_back(f.name());
      annotate(f.body(), pos, weak, out);
      if (strength == Strength::Weak) weak.pop_back();
      return;
    }
  }
}

}  // namespace

PolarityAnnotation annotate_polarity(const Formula& f) {
  PolarityAnnotation out;
  std::vector<std::string> weak;
  annotate(f, Polarity::Positive, weak, out);
  return out;
}

}  // namespace goedel

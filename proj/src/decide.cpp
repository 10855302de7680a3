#include "goedel/decide.hpp"

#include "goedel/error.hpp"

namespace goedel {

std::string_view verdict_name(Verdict::Kind k) noexcept {
  switch (k) {
    case Verdict::Kind::Valid: return "valid";
    case Verdict::Kind::NotValid: return "not_valid";
    case Verdict::Kind::Sat: return "sat";
    case Verdict::Kind::Unsat: return "unsat";
  }
  return "unknown";
}

namespace {

PrenexFormula checked_prenex(const Formula& sentence, Mode mode, BSShape& shape) {
  if (!is_sentence(sentence)) throw Error(Stage::Shape, "input is not a sentence");
  if (has_function_symbols(sentence))
    throw Error(Stage::Skolem, "function symbols of positive arity are not supported");
  PrenexFormula p = to_prenex_view(sentence);
  shape = classify_bs(p);
  const BSShape wanted = mode == Mode::Validity ? BSShape::ValidityShape : BSShape::SatShape;
  if (shape != wanted && shape != BSShape::Both)
    throw Error(Stage::Shape, std::string(mode_name(mode)) + " mode needs prefix shape " +
                                  std::string(shape_name(wanted)) + ", got " +
                                  std::string(shape_name(shape)));
  return p;
}

SkolemResult checked_skolem(const PrenexFormula& p, Mode mode) {
  SkolemResult sk = mode == Mode::Validity ? skolemize_validity(p) : skolemize_sat(p);
  if (!sk.constants_only())
    throw Error(Stage::Skolem, "Skolemization introduced function symbols; not a BS sentence");
  return sk;
}

Interpretation lift(const Formula& sentence, const GroundExpansion& g, const Assignment& a) {
  auto predicates = signature_of(sentence).predicates;
  for (const auto& [name, arity] : signature_of(g.combined).predicates) predicates.emplace(name, arity);
  Interpretation i(g.universe, predicates);
  for (std::size_t k = 0; k < g.universe.size(); ++k) i.set_constant(g.universe[k], k);
  std::vector<Element> tuple;
  for (const auto& [atom, value] : a) {
    tuple.clear();
    for (const auto& c : atom.args) tuple.push_back(i.element(c));
    i.set_value(atom.predicate, tuple, value);
  }
  return i;
}

}  // namespace

Verdict decide_validity(const Formula& sentence, LogicId logic, const DecideOptions& opts) {
  BSShape shape;
  const PrenexFormula p = checked_prenex(sentence, Mode::Validity, shape);
  SkolemResult sk = checked_skolem(p, Mode::Validity);
  const auto universe = herbrand_universe(signature_of(sk.formula()));
  GroundExpansion g = expand_disjunction(sk.prenex, universe, opts.max_instances);

  std::vector<std::string> notes;
  PropVerdict prop;
  if (logic.is_finite()) {
    prop = goedel_valid_finite(g.combined, logic.m(), opts.prop);
  } else {
    prop = goedel_valid_infinite(g.combined, opts.prop, opts.grid_size);
    notes.push_back("BS validity coincides for all infinite-valued Goedel logics; decided on the " +
                    std::to_string(prop.grid_size) + "-point grid");
  }

  Verdict v{prop.positive() ? Verdict::Kind::Valid : Verdict::Kind::NotValid, std::nullopt,
            std::nullopt};
  if (!prop.positive()) {
    Interpretation model = lift(sentence, g, prop.witness);
    if (!check_certificate(model, sentence, Mode::Validity))
      throw Error(Stage::Decide, "lifted countermodel does not falsify the sentence");
    v.certificate = std::move(model);
  }
  v.provenance = Provenance{shape, std::move(sk), std::move(g), std::move(prop), std::move(notes)};
  return v;
}

Verdict decide_1sat(const Formula& sentence, LogicId logic, const DecideOptions& opts) {
  BSShape shape;
  const PrenexFormula p = checked_prenex(sentence, Mode::Sat1, shape);
  SkolemResult sk = checked_skolem(p, Mode::Sat1);
  const auto universe = herbrand_universe(signature_of(sk.formula()));
  GroundExpansion g = expand_conjunction(sk.prenex, universe, opts.max_instances);
  PropVerdict prop = classical_sat(g.combined, opts.prop);

  std::vector<std::string> notes{"1-satisfiability of prenex sentences coincides for all Goedel "
                                 "logics and with classical satisfiability; logic " +
                                 logic.str() + " does not affect the verdict"};
  Verdict v{prop.positive() ? Verdict::Kind::Sat : Verdict::Kind::Unsat, std::nullopt,
            std::nullopt};
  if (prop.positive()) {
    Interpretation model = lift(sentence, g, prop.witness);
    if (!check_certificate(model, sentence, Mode::Sat1))
      throw Error(Stage::Decide, "lifted model does not give the sentence value 1");
    v.certificate = std::move(model);
  }
  v.provenance = Provenance{shape, std::move(sk), std::move(g), std::move(prop), std::move(notes)};
  return v;
}

Verdict decide(const Query& q, const DecideOptions& opts) {
  return q.mode == Mode::Validity ? decide_validity(q.sentence, q.logic, opts)
                                  : decide_1sat(q.sentence, q.logic, opts);
}

std::size_t herbrand_constant_count(const Formula& sentence, Mode mode) {
  const PrenexFormula p = to_prenex_view(sentence);
  const SkolemResult sk = mode == Mode::Validity ? skolemize_validity(p) : skolemize_sat(p);
  return herbrand_universe(signature_of(sk.formula())).size();
}

namespace {

Verdict oracle(const Formula& sentence, int m, std::size_t max_domain, std::uint64_t cap,
               Mode mode) {
  if (!is_sentence(sentence)) throw Error(Stage::Shape, "oracle input is not a sentence");
  const Signature sig = signature_of(sentence);
  if (!sig.functions.empty()) throw Error(Stage::Skolem, "oracle cannot interpret function symbols");
  const Grid grid = Grid::equally_spaced(static_cast<std::size_t>(m));
  for (std::size_t size = 1; size <= max_domain; ++size) {
    InterpretationEnumerator it(sig, size, grid, cap);
    while (it.next()) {
      const bool one = evaluate(it.current(), sentence).is_one();
      if (mode == Mode::Validity ? !one : one)
        return {mode == Mode::Validity ? Verdict::Kind::NotValid : Verdict::Kind::Sat, it.current(),
                std::nullopt};
    }
  }
  return {mode == Mode::Validity ? Verdict::Kind::Valid : Verdict::Kind::Unsat, std::nullopt,
          std::nullopt};
}

}  // namespace

Verdict oracle_validity(const Formula& sentence, int m, std::size_t max_domain, std::uint64_t cap) {
  return oracle(sentence, m, max_domain, cap, Mode::Validity);
}

Verdict oracle_1sat(const Formula& sentence, int m, std::size_t max_domain, std::uint64_t cap) {
  return oracle(sentence, m, max_domain, cap, Mode::Sat1);
}

}  // namespace goedel

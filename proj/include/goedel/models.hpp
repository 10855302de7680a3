#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "goedel/syntax.hpp"
#include "goedel/truth_value.hpp"

namespace goedel {

using Element = std::size_t;

/// Finite Gödel interpretation: a nonempty domain, a constant map, and a total
/// valuation of every predicate/tuple combination.
class Interpretation {
public:
  /// All atoms start at `fill`.
  Interpretation(std::vector<std::string> domain, const std::map<std::string, int>& predicates,
                 TruthValue fill = TruthValue::zero());

  std::size_t domain_size() const noexcept { return domain_.size(); }
  const std::vector<std::string>& domain() const noexcept { return domain_; }
  Element element(std::string_view name) const;

  const std::map<std::string, Element>& constants() const noexcept { return constants_; }
  Element constant(const std::string& name) const;
  void set_constant(const std::string& name, Element e);

  const std::map<std::string, int>& predicates() const noexcept { return arities_; }
  const TruthValue& value(const std::string& predicate, std::span<const Element> args) const;
  void set_value(const std::string& predicate, std::span<const Element> args, TruthValue v);

  /// Visits every (predicate, tuple, value) in predicate-name then tuple-lexicographic order.
  void for_each_atom(
      const std::function<void(const std::string&, std::span<const Element>, const TruthValue&)>& fn)
      const;
  /// Total number of atom slots.
  std::size_t atom_count() const;

  friend bool operator==(const Interpretation&, const Interpretation&) = default;

private:
  friend class InterpretationEnumerator;
  friend Interpretation glue(const Interpretation& i, const TruthValue& omega);

  struct Table {
    int arity = 0;
    std::vector<TruthValue> values;
    friend bool operator==(const Table&, const Table&) = default;
  };

  std::size_t offset(const Table& t, std::span<const Element> args) const;
  const Table& table(const std::string& predicate) const;

  std::vector<std::string> domain_;
  std::map<std::string, Element> constants_;
  std::map<std::string, int> arities_;
  std::map<std::string, Table> tables_;
};

using Environment = std::map<std::string, Element>;

/// Gödel value of `f`: min/max for conjunction/disjunction, residuated
/// implication, and min/max over the domain for the quantifiers.
TruthValue evaluate(const Interpretation& i, const Formula& f, const Environment& env = {});

/// Sends every atom value above `omega` to 1 and keeps the others. omega must be < 1.
Interpretation glue(const Interpretation& i, const TruthValue& omega);

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Deterministic lexicographic enumeration of all interpretations of `sig`
/// with a fixed domain size and atom values in `grid`. Constants come first in
/// signature order, then atoms by predicate name and tuple; the last position
/// varies fastest.
class InterpretationEnumerator {
public:
  InterpretationEnumerator(const Signature& sig, std::size_t domain_size, Grid grid,
                           std::uint64_t cap = kDefaultEnumerationCap);
  InterpretationEnumerator(const InterpretationEnumerator&) = delete;
  InterpretationEnumerator& operator=(const InterpretationEnumerator&) = delete;

  /// Total number of interpretations that will be produced.
  std::uint64_t total() const noexcept { return total_; }
  /// Advances to the next interpretation; false once exhausted.
  bool next();
  const Interpretation& current() const noexcept { return current_; }

private:
  Grid grid_;
  std::vector<std::string> constant_names_;
  std::vector<Element> constant_digits_;
  std::vector<std::pair<Interpretation::Table*, std::size_t>> slots_;
  std::vector<std::size_t> value_digits_;
  Interpretation current_;
  std::uint64_t total_ = 0;
  bool started_ = false;
};

/// Counts interpretations; throws CapExceeded above `cap`.
std::uint64_t count_interpretations(const Signature& sig, std::size_t domain_size,
                                    std::size_t grid_size, std::uint64_t cap = kDefaultEnumerationCap);

/// Collects every interpretation. Intended for small signatures.
std::vector<Interpretation> enumerate_interpretations(const Signature& sig, std::size_t domain_size,
                                                      const Grid& grid,
                                                      std::uint64_t cap = kDefaultEnumerationCap);

enum class Mode { Validity, Sat1 };

std::string_view mode_name(Mode mode) noexcept;

/// Validity: the interpretation is a countermodel (value < 1).
/// Sat1: the interpretation is a model (value = 1).
bool check_certificate(const Interpretation& i, const Formula& f, Mode mode);

}  // namespace goedel

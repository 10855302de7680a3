#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "goedel/decide.hpp"

namespace goedel {

/// One line of a corpus file:
///   name <TAB> mode <TAB> logic <TAB> expected <TAB> formula
/// mode is `validity` or `sat1`; expected is a verdict name, `error:<stage>`,
/// or `-` for none. Blank lines and lines starting with '#' are ignored.
struct CorpusEntry {
  std::string name;
  Mode mode = Mode::Validity;
  std::string logic;
  std::optional<std::string> expected;
  std::string formula;
  int line = 0;
};

std::vector<CorpusEntry> parse_corpus(std::istream& in);

struct CorpusResult {
  std::string name;
  /// Verdict name, or `error:<stage>`.
  std::string actual;
  std::optional<std::string> expected;
  /// Error message when `actual` is an error.
  std::string message;

  bool errored() const { return actual.starts_with("error:"); }
  bool matches() const { return !expected || *expected == actual; }
};

CorpusResult run_corpus_entry(const CorpusEntry& entry, const DecideOptions& opts = {});

/// Results keep input order.
std::vector<CorpusResult> run_corpus(const std::vector<CorpusEntry>& entries,
                                     const DecideOptions& opts = {});

/// 0 when every expectation holds, 2 when an entry errored without expecting
/// it, 1 otherwise.
int corpus_exit_code(const std::vector<CorpusResult>& results);

}  // namespace goedel

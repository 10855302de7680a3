#include "goedel/corpus.hpp"

#include <algorithm>
#include <future>
#include <thread>
#include <set>
#include <sstream>

#include "goedel/error.hpp"

namespace goedel {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (std::size_t pos; (pos = line.find('\t', start)) != std::string::npos; start = pos + 1)
    fields.push_back(line.substr(start, pos - start));
  fields.push_back(line.substr(start));
  return fields;
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::istream& in) {
  std::vector<CorpusEntry> entries;
  std::set<std::string> names;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#') continue;
    const auto fields = split_tabs(line);
    const std::string where = "corpus line " + std::to_string(number);
    if (fields.size() != 5) throw Error(Stage::Usage, where + ": expected 5 tab-separated fields");
    CorpusEntry e;
    e.name = fields[0];
    e.line = number;
    if (fields[1] == "validity") e.mode = Mode::Validity;
    else if (fields[1] == "sat1") e.mode = Mode::Sat1;
    else throw Error(Stage::Usage, where + ": unknown mode '" + fields[1] + "'");
    e.logic = fields[2];
    LogicId::parse(e.logic);
    if (fields[3] != "-") e.expected = fields[3];
    e.formula = fields[4];
    if (!names.insert(e.name).second)
      throw Error(Stage::Usage, where + ": duplicate entry name '" + e.name + "'");
    entries.push_back(std::move(e));
  }
  return entries;
}

CorpusResult run_corpus_entry(const CorpusEntry& entry, const DecideOptions& opts) {
  CorpusResult r{entry.name, "", entry.expected, ""};
  try {
    const Query q{parse(entry.formula).formula, entry.mode, LogicId::parse(entry.logic)};
    r.actual = std::string(verdict_name(decide(q, opts).kind));
  } catch (const Error& e) {
    r.actual = "error:" + std::string(stage_name(e.stage()));
    r.message = e.what();
  }
  return r;
}

std::vector<CorpusResult> run_corpus(const std::vector<CorpusEntry>& entries,
                                     const DecideOptions& opts) {
  std::vector<CorpusResult> out;
  out.reserve(entries.size());
  const std::size_t batch = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t begin = 0; begin < entries.size(); begin += batch) {
    std::vector<std::future<CorpusResult>> pending;
    for (std::size_t k = begin; k < std::min(entries.size(), begin + batch); ++k)
      pending.push_back(std::async(std::launch::async,
                                   [&e = entries[k], &opts] { return run_corpus_entry(e, opts); }));
    for (auto& p : pending) out.push_back(p.get());
  }
  return out;
}

int corpus_exit_code(const std::vector<CorpusResult>& results) {
  bool mismatch = false;
  for (const auto& r : results) {
    if (r.errored() && !(r.expected && r.matches())) return 2;
    mismatch = mismatch || !r.matches();
  }
  return mismatch ? 1 : 0;
}

}  // namespace goedel

#pragma once

#include "mbt/cases.hpp"
#include "mbt/lexicon.hpp"
#include "oracles.hpp"

namespace fixture {

/// First WSJ sentence with lowercase tags, and a mini-lexicon holding the
/// ambiguous tags printed for it ("old" is jj-np).
struct Pierre {
  mbt::Sentence sentence;
  mbt::SymbolTable symbols;
  mbt::Lexicon lexicon;
  mbt::ExtractionOptions options;
};

inline Pierre pierre(bool numbers_to_unknown = true) {
  Pierre p;
  p.sentence = mbt::parse_corpus(
                   "Pierre/np Vinken/np ,/, 61/cd years/nns old/jj ,/, will/md join/vb the/dt board/nn as/in "
                   "a/dt nonexecutive/jj director/nn nov./np 29/cd ./.")
                   .sentences()
                   .front();
  p.symbols.intern(mbt::kBoundary);
  p.symbols.intern(mbt::kUnknownAmbiguous);
  std::map<std::string, mbt::ClassDistribution> counts;
  for (const auto& t : p.sentence.tokens) counts[t.word].add(p.symbols.intern(t.tag));
  counts["old"].add(p.symbols.intern("jj"));
  counts["old"].add(p.symbols.intern("np"));
  for (const auto& t : p.sentence.tokens) {
    if (p.lexicon.find(t.word)) continue;
    p.lexicon.insert(mbt::make_lexical_entry(t.word, counts[t.word], 0.10, p.symbols));
  }
  std::set<std::string> tagset;
  for (const auto& t : p.sentence.tokens) tagset.insert(t.tag);
  p.options.numbers_to_unknown = numbers_to_unknown;
  p.options.closed_class = mbt::default_closed_class(tagset);
  return p;
}

/// Rows as printed: word, features..., target.
inline const std::vector<oracle::Row>& table1() {
  static const std::vector<oracle::Row> rows = {
      {"Pierre", "=", "=", "np", "np", "np"},   {"Vinken", "=", "np", "np", ",", "np"},
      {",", "np", "np", ",", "cd", ","},        {"61", "np", ",", "cd", "nns", "cd"},
      {"years", ",", "cd", "nns", "jj-np", "nns"}, {"old", "cd", "nns", "jj-np", ",", "jj"},
  };
  return rows;
}

inline const std::vector<oracle::Row>& table2() {
  static const std::vector<oracle::Row> rows = {
      {"Pierre", "P", "=", "np", "r", "r", "e", "np"}, {"Vinken", "V", "np", ",", "k", "e", "n", "np"},
      {"61", "6", ",", "nns", "=", "6", "1", "cd"},    {"years", "y", "cd", "jj-np", "a", "r", "s", "nns"},
      {"old", "o", "nns", ",", "o", "l", "d", "jj"},
  };
  return rows;
}

/// Extracted cases as printed rows without the word column.
inline std::vector<oracle::Row> render(const std::vector<mbt::Case>& cases, const mbt::SymbolTable& symbols) {
  std::vector<oracle::Row> out;
  for (const auto& c : cases) {
    oracle::Row r;
    for (auto f : c.features) r.emplace_back(symbols.text(f));
    r.emplace_back(symbols.text(c.target));
    out.push_back(std::move(r));
  }
  return out;
}

inline oracle::Row without_word(const oracle::Row& printed) { return {printed.begin() + 1, printed.end()}; }

}  // namespace fixture

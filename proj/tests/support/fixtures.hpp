#pragma once

#include "mbt/cases.hpp"
#include "mbt/corpus.hpp"
#include "mbt/lexicon.hpp"
#include "oracles.hpp"

namespace fixture {

/// Lexicon and both case bases of a corpus, extracted as training does.
struct Bases {
  mbt::Corpus corpus;
  mbt::SymbolTable symbols;
  mbt::Lexicon lexicon;
  mbt::ExtractionOptions options;
  mbt::CaseBase known{4};
  mbt::CaseBase unknown{6};
};

inline Bases bases(const mbt::Corpus& corpus, double threshold = 0.10) {
  Bases b;
  b.corpus = corpus;
  b.symbols.intern(mbt::kBoundary);
  b.symbols.intern(mbt::kUnknownAmbiguous);
  b.lexicon = mbt::build_lexicon(corpus, threshold, b.symbols);
  b.options.closed_class = mbt::default_closed_class(corpus.tagset());
  b.known = mbt::extract_known_cases(corpus, b.lexicon, b.symbols, b.options);
  b.unknown = mbt::extract_unknown_cases(corpus, b.lexicon, b.symbols, b.options);
  return b;
}

inline Bases f1() { return bases(mbt::parse_corpus(oracle::kF1)); }

inline std::vector<mbt::Symbol> symbols_of(const mbt::SymbolTable& t, const oracle::Row& row) {
  return oracle::to_query(row, t);
}

}  // namespace fixture

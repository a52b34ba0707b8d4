#pragma once

#include <cstddef>
#include <cstdint>

#include "mbt/corpus.hpp"

namespace mbt::synth {

/// Parameters of an English-like tagged corpus drawn from a second-order
/// tag model over a Penn-style tagset. Open-class words come from
/// Zipf-distributed lemma pools with tag-specific inflection, so the corpus
/// has lexical ambiguity (noun/verb, base/present, past/participle),
/// informative suffixes, and a shrinking unknown-word rate as it grows.
struct ZipfCorpusOptions {
  std::size_t tokens = 100000;
  std::uint64_t seed = 0;
  double zipf_exponent = 1.0;
  std::size_t noun_lemmas = 6000;
  std::size_t verb_lemmas = 2500;
  std::size_t adjective_lemmas = 2500;
  std::size_t names = 4000;
  /// Share of verb lemmas that are also noun lemmas; a third of this share
  /// of adjective lemmas are nouns too.
  double verb_noun_overlap = 0.3;
  /// Chance that an open-class token borrows a lemma from another class.
  double conversion = 0.05;
};

/// Whole sentences are generated until at least `tokens` tokens exist.
Corpus zipf_corpus(const ZipfCorpusOptions& options);

}  // namespace mbt::synth

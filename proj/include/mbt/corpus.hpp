#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mbt {

struct Token {
  std::string word;
  std::string tag;

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::vector<Token> tokens;

  std::size_t size() const noexcept { return tokens.size(); }
  std::vector<std::string> words() const;
  std::vector<std::string> tags() const;

  bool operator==(const Sentence&) const = default;
};

/// An ordered list of tagged sentences. The tag set is derived from the
/// tokens on demand so it can never disagree with them.
class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::vector<Sentence> sentences);

  void add(Sentence sentence);

  const std::vector<Sentence>& sentences() const noexcept { return sentences_; }
  std::size_t size() const noexcept { return sentences_.size(); }
  bool empty() const noexcept { return sentences_.empty(); }
  std::size_t token_count() const noexcept { return token_count_; }
  std::set<std::string> tagset() const;

  /// First sentences of the corpus until at least `tokens` tokens are taken.
  Corpus prefix_by_tokens(std::size_t tokens) const;

  bool operator==(const Corpus& other) const { return sentences_ == other.sentences_; }

 private:
  std::vector<Sentence> sentences_;
  std::size_t token_count_ = 0;
};

enum class CorpusFormat { Slash };

CorpusFormat parse_corpus_format(std::string_view id);

/// Parses one sentence per line; blank lines are skipped. A token is split
/// at its last '/', so "1/2/CD" is the word "1/2" tagged CD.
Corpus parse_corpus(std::istream& in, CorpusFormat format = CorpusFormat::Slash);
Corpus parse_corpus(std::string_view text, CorpusFormat format = CorpusFormat::Slash);
Corpus read_corpus_file(const std::string& path, CorpusFormat format = CorpusFormat::Slash);

void write_corpus(std::ostream& out, const Corpus& corpus);
std::string serialize(const Corpus& corpus);
std::string format_sentence(const Sentence& sentence);

/// Sentence-level train/test split. The test part receives
/// round(test_fraction * size) sentences, clamped to [1, size - 1].
std::pair<Corpus, Corpus> split(const Corpus& corpus, double test_fraction, std::uint64_t seed);

struct Fold {
  Corpus train;
  Corpus test;
};

/// k sentence-level folds over a seeded permutation; fold i tests on the
/// i-th contiguous slice of the permutation.
std::vector<Fold> cv_folds(const Corpus& corpus, std::size_t k, std::uint64_t seed);

/// Raw-text sentences: whitespace separated words, one sentence per line.
std::vector<std::vector<std::string>> read_raw_sentences(std::istream& in);

}  // namespace mbt

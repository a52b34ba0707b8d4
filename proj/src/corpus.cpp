#include "mbt/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "mbt/error.hpp"

namespace mbt {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::size_t> permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

}  // namespace

std::vector<std::string> Sentence::words() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.word);
  return out;
}

std::vector<std::string> Sentence::tags() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.tag);
  return out;
}

Corpus::Corpus(std::vector<Sentence> sentences) {
  sentences_.reserve(sentences.size());
  for (auto& s : sentences) add(std::move(s));
}

void Corpus::add(Sentence sentence) {
  if (sentence.tokens.empty()) throw StructuralError("sentence without tokens");
  for (const auto& t : sentence.tokens) {
    if (t.word.empty() || t.tag.empty()) throw StructuralError("token with empty word or tag");
  }
  token_count_ += sentence.size();
  sentences_.push_back(std::move(sentence));
}

std::set<std::string> Corpus::tagset() const {
  std::set<std::string> tags;
  for (const auto& s : sentences_)
    for (const auto& t : s.tokens) tags.insert(t.tag);
  return tags;
}

Corpus Corpus::prefix_by_tokens(std::size_t tokens) const {
  Corpus out;
  for (const auto& s : sentences_) {
    if (out.token_count() >= tokens) break;
    out.add(s);
  }
  return out;
}

CorpusFormat parse_corpus_format(std::string_view id) {
  if (id == "slash") return CorpusFormat::Slash;
  throw ParameterError("unknown corpus format '" + std::string(id) + "'");
}

Corpus parse_corpus(std::istream& in, CorpusFormat /*format*/) {
  Corpus corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_ws(line);
    if (fields.empty()) continue;
    Sentence sentence;
    sentence.tokens.reserve(fields.size());
    for (auto field : fields) {
      auto slash = field.rfind('/');
      if (slash == std::string_view::npos)
        throw ParseError(line_no, "token '" + std::string(field) + "' has no '/' separator");
      if (slash == 0 || slash + 1 == field.size())
        throw ParseError(line_no, "token '" + std::string(field) + "' has an empty word or tag");
      sentence.tokens.push_back({std::string(field.substr(0, slash)), std::string(field.substr(slash + 1))});
    }
    corpus.add(std::move(sentence));
  }
  if (corpus.empty()) throw EmptyCorpusError();
  return corpus;
}

Corpus parse_corpus(std::string_view text, CorpusFormat format) {
  std::istringstream in{std::string(text)};
  return parse_corpus(in, format);
}

Corpus read_corpus_file(const std::string& path, CorpusFormat format) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus '" + path + "'");
  return parse_corpus(in, format);
}

std::string format_sentence(const Sentence& sentence) {
  std::string out;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (i) out += ' ';
    out += sentence.tokens[i].word;
    out += '/';
    out += sentence.tokens[i].tag;
  }
  return out;
}

void write_corpus(std::ostream& out, const Corpus& corpus) {
  for (const auto& s : corpus.sentences()) out << format_sentence(s) << '\n';
}

std::string serialize(const Corpus& corpus) {
  std::ostringstream out;
  write_corpus(out, corpus);
  return out.str();
}

std::pair<Corpus, Corpus> split(const Corpus& corpus, double test_fraction, std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0))
    throw ParameterError("test fraction must lie strictly between 0 and 1");
  const std::size_t n = corpus.size();
  if (n < 2) throw ParameterError("split needs at least 2 sentences");
  auto test_n = static_cast<std::size_t>(std::llround(test_fraction * static_cast<double>(n)));
  test_n = std::clamp<std::size_t>(test_n, 1, n - 1);

  auto order = permutation(n, seed);
  std::vector<bool> in_test(n, false);
  for (std::size_t i = 0; i < test_n; ++i) in_test[order[i]] = true;

  // Both parts keep the original sentence order.
  Corpus train, test;
  for (std::size_t i = 0; i < n; ++i) (in_test[i] ? test : train).add(corpus.sentences()[i]);
  return {std::move(train), std::move(test)};
}

std::vector<Fold> cv_folds(const Corpus& corpus, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw ParameterError("cross-validation needs k >= 2");
  const std::size_t n = corpus.size();
  if (n < k) throw ParameterError("corpus has fewer sentences than folds");

  auto order = permutation(n, seed);
  std::vector<std::size_t> fold_of(n);
  for (std::size_t pos = 0; pos < n; ++pos) fold_of[order[pos]] = pos * k / n;

  std::vector<Fold> folds(k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t f = 0; f < k; ++f) {
      (fold_of[i] == f ? folds[f].test : folds[f].train).add(corpus.sentences()[i]);
    }
  }
  return folds;
}

std::vector<std::vector<std::string>> read_raw_sentences(std::istream& in) {
  std::vector<std::vector<std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> words;
    for (auto w : split_ws(line)) words.emplace_back(w);
    out.push_back(std::move(words));
  }
  return out;
}

}  // namespace mbt

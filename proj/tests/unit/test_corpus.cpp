#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "mbt/corpus.hpp"
#include "mbt/error.hpp"
#include "oracles.hpp"

using namespace mbt;

namespace {

Corpus numbered(std::size_t n) {
  Corpus c;
  for (std::size_t i = 0; i < n; ++i) c.add(Sentence{{{"w" + std::to_string(i), "T"}, {".", "."}}});
  return c;
}

std::vector<std::string> firsts(const Corpus& c) {
  std::vector<std::string> out;
  for (const auto& s : c.sentences()) out.push_back(s.tokens.front().word);
  return out;
}

// Random well-formed corpus text; words may contain '/'.
std::string random_text(std::mt19937_64& rng) {
  static const char* words[] = {"a", "b/c", "1/2", "x", "é", "--", "'s", "//", "q"};
  static const char* tags[] = {"NN", "DT", ".", "CD", "-LRB-", "PRP$"};
  std::uniform_int_distribution<int> lines(1, 5), len(1, 8), w(0, 8), t(0, 5), blank(0, 3);
  std::string out;
  for (int l = lines(rng); l > 0; --l) {
    if (blank(rng) == 0) out += "\n";
    for (int k = len(rng); k > 0; --k) out += std::string(words[w(rng)]) + "/" + tags[t(rng)] + (k > 1 ? " " : "");
    out += "\n";
  }
  return out;
}

}  // namespace

TEST_CASE("parse a single sentence") {
  const auto c = parse_corpus("the/DT cat/NN ./.");
  CHECK(c.size() == 1);
  CHECK(c.token_count() == 3);
  CHECK(c.tagset() == std::set<std::string>{"DT", "NN", "."});
  CHECK(c.sentences()[0].words() == std::vector<std::string>{"the", "cat", "."});
}

TEST_CASE("empty input is rejected") {
  CHECK_THROWS_AS(parse_corpus(""), EmptyCorpusError);
  CHECK_THROWS_AS(parse_corpus("\n  \n"), EmptyCorpusError);
}

TEST_CASE("F1 fixture") {
  const auto c = read_corpus_file(std::string(MBT_TEST_DATA) + "/f1.txt");
  CHECK(c.size() == 3);
  CHECK(c.token_count() == 18);
  CHECK(c.tagset() == std::set<std::string>{"DT", "NN", "VBD", "VBZ", "."});
  CHECK(c == parse_corpus(oracle::kF1));
}

TEST_CASE("token splits at the last slash") {
  const auto c = parse_corpus("1/2/CD and/CC");
  CHECK(c.sentences()[0].tokens[0] == Token{"1/2", "CD"});
}

TEST_CASE("malformed tokens report their line") {
  try {
    parse_corpus("a/DT\n\nb/NN c\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_corpus("a/"), ParseError);
  CHECK_THROWS_AS(parse_corpus("/NN"), ParseError);
}

TEST_CASE("missing file is an I/O error") {
  CHECK_THROWS_AS(read_corpus_file("/nonexistent/corpus.txt"), IoError);
}

TEST_CASE("serialize round trip (property)") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const auto text = random_text(rng);
    const auto c = parse_corpus(text);
    CHECK(parse_corpus(serialize(c)) == c);
  }
}

TEST_CASE("split") {
  const auto c = numbered(10);
  auto [train, test] = split(c, 0.1, 3);
  CHECK(train.size() == 9);
  CHECK(test.size() == 1);
  auto again = split(c, 0.1, 3);
  CHECK(again.first == train);
  CHECK(again.second == test);
  CHECK_THROWS_AS(split(c, 1.0, 0), ParameterError);
  CHECK_THROWS_AS(split(c, 0.0, 0), ParameterError);
  CHECK_THROWS_AS(split(numbered(1), 0.5, 0), ParameterError);
}

TEST_CASE("split partitions the sentences (property)") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto c = numbered(2 + seed % 17);
    const double frac = 0.05 + 0.9 * static_cast<double>(seed % 10) / 10.0;
    auto [train, test] = split(c, frac, seed);
    CHECK(train.size() + test.size() == c.size());
    CHECK(train.size() >= 1);
    CHECK(test.size() >= 1);
    auto all = firsts(train);
    auto t = firsts(test);
    all.insert(all.end(), t.begin(), t.end());
    std::sort(all.begin(), all.end());
    auto expected = firsts(c);
    std::sort(expected.begin(), expected.end());
    CHECK(all == expected);
  }
}

TEST_CASE("cv_folds") {
  const auto c = numbered(10);
  const auto folds = cv_folds(c, 10, 1);
  REQUIRE(folds.size() == 10);
  for (const auto& f : folds) {
    CHECK(f.test.size() == 1);
    CHECK(f.train.size() == 9);
  }
  CHECK_THROWS_AS(cv_folds(parse_corpus(oracle::kF1), 10, 0), ParameterError);
  CHECK_THROWS_AS(cv_folds(c, 1, 0), ParameterError);
}

TEST_CASE("cv_folds test parts partition the corpus (property)") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 5 + seed * 3;
    const std::size_t k = 2 + seed % 9;
    const auto c = numbered(n);
    const auto folds = cv_folds(c, k, seed);
    REQUIRE(folds.size() == k);
    std::vector<std::string> tested;
    for (const auto& f : folds) {
      CHECK(f.train.size() + f.test.size() == n);
      auto t = firsts(f.test);
      auto tr = firsts(f.train);
      for (const auto& w : t) CHECK(std::find(tr.begin(), tr.end(), w) == tr.end());
      tested.insert(tested.end(), t.begin(), t.end());
    }
    std::sort(tested.begin(), tested.end());
    auto expected = firsts(c);
    std::sort(expected.begin(), expected.end());
    CHECK(tested == expected);
    CHECK(folds.front().test == cv_folds(c, k, seed).front().test);
  }
}

TEST_CASE("prefix by tokens") {
  const auto c = numbered(5);  // 2 tokens per sentence
  CHECK(c.prefix_by_tokens(3).size() == 2);
  CHECK(c.prefix_by_tokens(4).size() == 2);
  CHECK(c.prefix_by_tokens(100).size() == 5);
}

TEST_CASE("raw sentences keep blank lines") {
  std::istringstream in("a b\n\nc\n");
  const auto s = read_raw_sentences(in);
  REQUIRE(s.size() == 3);
  CHECK(s[1].empty());
  CHECK(s[2] == std::vector<std::string>{"c"});
}

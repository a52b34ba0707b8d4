#include "mbt/cases.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace mbt {

namespace {

bool is_continuation(char c) { return (static_cast<unsigned char>(c) & 0xC0) == 0x80; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

struct SentenceSymbols {
  std::vector<Symbol> ambiguous;
  std::vector<Symbol> gold;
  std::vector<std::string> words;
};

SentenceSymbols resolve(const Sentence& sentence, const Lexicon& lexicon, SymbolTable& symbols) {
  SentenceSymbols out;
  const Symbol unknown = symbols.intern(kUnknownAmbiguous);
  for (const auto& t : sentence.tokens) {
    const auto* entry = lexicon.find(t.word);
    out.ambiguous.push_back(entry ? entry->ambiguous_tag : unknown);
    out.gold.push_back(symbols.intern(t.tag));
    out.words.push_back(t.word);
  }
  return out;
}

}  // namespace

const CaseTemplate& known_template() {
  static const CaseTemplate t{{
      {SlotKind::LeftDisambiguated, -2, "d-2"},
      {SlotKind::LeftDisambiguated, -1, "d-1"},
      {SlotKind::FocusAmbiguous, 0, "f"},
      {SlotKind::RightAmbiguous, 1, "a+1"},
  }};
  return t;
}

const CaseTemplate& unknown_template() {
  static const CaseTemplate t{{
      {SlotKind::PrefixLetter, 0, "p"},
      {SlotKind::LeftDisambiguated, -1, "d-1"},
      {SlotKind::RightAmbiguous, 1, "a+1"},
      {SlotKind::SuffixLetter, 3, "s-3"},
      {SlotKind::SuffixLetter, 2, "s-2"},
      {SlotKind::SuffixLetter, 1, "s-1"},
  }};
  return t;
}

bool is_number(std::string_view w) {
  std::size_t i = 0;
  if (i < w.size() && (w[i] == '+' || w[i] == '-')) ++i;
  const std::size_t int_start = i;
  while (i < w.size() && is_digit(w[i])) ++i;
  std::size_t lead = i - int_start;
  if (lead == 0) return false;
  if (i < w.size() && w[i] == ',') {
    if (lead > 3) return false;
    while (i < w.size() && w[i] == ',') {
      ++i;
      std::size_t group = 0;
      while (i < w.size() && is_digit(w[i])) ++i, ++group;
      if (group != 3) return false;
    }
  }
  if (i < w.size() && w[i] == '.') {
    ++i;
    std::size_t frac = 0;
    while (i < w.size() && is_digit(w[i])) ++i, ++frac;
    if (frac == 0) return false;
  }
  return i == w.size();
}

std::string_view first_letter(std::string_view word) {
  if (word.empty()) return {};
  std::size_t end = 1;
  while (end < word.size() && is_continuation(word[end])) ++end;
  return word.substr(0, end);
}

std::string_view letter_from_end(std::string_view word, std::size_t k) {
  std::size_t end = word.size();
  for (std::size_t n = 1; n <= k; ++n) {
    if (end == 0) return {};
    std::size_t start = end - 1;
    while (start > 0 && is_continuation(word[start])) --start;
    if (n == k) return word.substr(start, end - start);
    end = start;
  }
  return {};
}

std::vector<std::string> default_closed_class(const std::set<std::string>& tagset) {
  static const std::array<std::string_view, 18> kFunctionTags = {
      "DT", "PDT", "WDT", "PRP", "PRP$", "WP", "WP$", "WRB", "EX", "IN",
      "CC", "RP", "TO", "MD", "POS", "-LRB-", "-RRB-", "-NONE-"};
  std::vector<std::string> out;
  for (const auto& tag : tagset) {
    const bool punct = std::none_of(tag.begin(), tag.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || static_cast<unsigned char>(c) >= 0x80;
    });
    const auto up = upper(tag);
    const bool function =
        std::find(kFunctionTags.begin(), kFunctionTags.end(), std::string_view(up)) != kFunctionTags.end();
    if (punct || function) out.push_back(tag);
  }
  return out;
}

std::vector<Case> known_cases(const Sentence& sentence, const Lexicon& lexicon, SymbolTable& symbols,
                              const ExtractionOptions& options) {
  const auto s = resolve(sentence, lexicon, symbols);
  const Window w{s.words, s.ambiguous, s.gold, symbols.intern(kBoundary)};
  const auto& tmpl = known_template();
  std::vector<Case> out;
  for (std::size_t i = 0; i < s.words.size(); ++i) {
    if (!lexicon.find(s.words[i])) continue;
    if (options.numbers_to_unknown && is_number(s.words[i])) continue;
    Case c{std::vector<Symbol>(tmpl.arity()), s.gold[i]};
    fill_features(tmpl, w, i, [&](std::string_view l) { return symbols.intern(l); }, c.features.data());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Case> unknown_cases(const Sentence& sentence, const Lexicon& lexicon, SymbolTable& symbols,
                                const ExtractionOptions& options) {
  const auto s = resolve(sentence, lexicon, symbols);
  const Window w{s.words, s.ambiguous, s.gold, symbols.intern(kBoundary)};
  const auto& tmpl = unknown_template();
  std::vector<Case> out;
  for (std::size_t i = 0; i < s.words.size(); ++i) {
    const auto& tag = sentence.tokens[i].tag;
    if (std::find(options.closed_class.begin(), options.closed_class.end(), tag) != options.closed_class.end())
      continue;
    Case c{std::vector<Symbol>(tmpl.arity()), s.gold[i]};
    fill_features(tmpl, w, i, [&](std::string_view l) { return symbols.intern(l); }, c.features.data());
    out.push_back(std::move(c));
  }
  return out;
}

CaseBase extract_known_cases(const Corpus& corpus, const Lexicon& lexicon, SymbolTable& symbols,
                             const ExtractionOptions& options) {
  CaseBase base(known_template().arity());
  for (const auto& s : corpus.sentences())
    for (const auto& c : known_cases(s, lexicon, symbols, options)) base.add(c);
  return base;
}

CaseBase extract_unknown_cases(const Corpus& corpus, const Lexicon& lexicon, SymbolTable& symbols,
                               const ExtractionOptions& options) {
  CaseBase base(unknown_template().arity());
  for (const auto& s : corpus.sentences())
    for (const auto& c : unknown_cases(s, lexicon, symbols, options)) base.add(c);
  return base;
}

}  // namespace mbt

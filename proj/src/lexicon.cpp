#include "mbt/lexicon.hpp"

#include <algorithm>

#include "mbt/error.hpp"

namespace mbt {

LexicalEntry make_lexical_entry(std::string word, const ClassDistribution& counts, double threshold,
                                SymbolTable& symbols) {
  if (counts.empty()) throw StructuralError("lexical entry without tag counts");
  LexicalEntry e;
  e.word = std::move(word);
  e.tag_counts = counts;

  std::vector<ClassDistribution::Entry> ranked = counts.entries();
  std::sort(ranked.begin(), ranked.end(), [&](const auto& a, const auto& b) {
    return tie_rule_before(symbols, a.first, a.second, b.first, b.second);
  });
  const double total = static_cast<double>(counts.total());
  std::string joined;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    if (i > 0 && static_cast<double>(ranked[i].second) / total < threshold) continue;
    e.tags.push_back(ranked[i].first);
    if (!joined.empty()) joined += '-';
    joined += symbols.text(ranked[i].first);
  }
  e.ambiguous_tag = symbols.intern(joined);
  return e;
}

void Lexicon::insert(LexicalEntry entry) {
  if (auto it = index_.find(entry.word); it != index_.end()) {
    entries_[it->second] = std::move(entry);
    return;
  }
  index_.emplace(entry.word, entries_.size());
  entries_.push_back(std::move(entry));
}

const LexicalEntry* Lexicon::find(std::string_view word) const {
  auto it = index_.find(word);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

std::size_t Lexicon::ambiguous_type_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const auto& e) { return e.ambiguous(); }));
}

double Lexicon::ambiguous_type_fraction() const {
  return entries_.empty() ? 0.0
                          : static_cast<double>(ambiguous_type_count()) / static_cast<double>(entries_.size());
}

double Lexicon::ambiguous_token_fraction() const {
  std::uint64_t all = 0, ambiguous = 0;
  for (const auto& e : entries_) {
    all += e.tag_counts.total();
    if (e.ambiguous()) ambiguous += e.tag_counts.total();
  }
  return all == 0 ? 0.0 : static_cast<double>(ambiguous) / static_cast<double>(all);
}

std::vector<Symbol> Lexicon::ambiguous_tagset() const {
  std::vector<Symbol> out;
  for (const auto& e : entries_) {
    out.push_back(e.ambiguous_tag);
    for (const auto& [tag, n] : e.tag_counts.entries()) out.push_back(tag);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void Lexicon::write(BinaryWriter& out) const {
  out.u32(static_cast<std::uint32_t>(entries_.size()));
  for (const auto& e : entries_) {
    out.str(e.word);
    out.u32(e.ambiguous_tag.id);
    out.u32(static_cast<std::uint32_t>(e.tags.size()));
    for (auto t : e.tags) out.u32(t.id);
    out.u32(static_cast<std::uint32_t>(e.tag_counts.distinct()));
    for (const auto& [tag, n] : e.tag_counts.entries()) {
      out.u32(tag.id);
      out.u64(n);
    }
  }
}

Lexicon Lexicon::read(BinaryReader& in, const SymbolTable& symbols) {
  auto symbol = [&](std::uint32_t id) {
    if (id >= symbols.size()) throw ModelFormatError("lexicon refers to an unknown symbol");
    return Symbol{id};
  };
  Lexicon lex;
  const auto n = in.u32();
  for (std::uint32_t i = 0; i < n; ++i) {
    LexicalEntry e;
    e.word = in.str();
    e.ambiguous_tag = symbol(in.u32());
    const auto tags = in.u32();
    if (tags == 0 || tags > in.remaining()) throw ModelFormatError("lexical entry without surviving tags");
    for (std::uint32_t t = 0; t < tags; ++t) e.tags.push_back(symbol(in.u32()));
    const auto counts = in.u32();
    if (counts == 0 || counts > in.remaining()) throw ModelFormatError("lexical entry without counts");
    for (std::uint32_t c = 0; c < counts; ++c) {
      auto tag = symbol(in.u32());
      auto count = in.u64();
      if (count == 0) throw ModelFormatError("lexical entry with a zero count");
      e.tag_counts.add(tag, count);
    }
    if (lex.find(e.word)) throw ModelFormatError("duplicate lexicon word '" + e.word + "'");
    lex.insert(std::move(e));
  }
  return lex;
}

Lexicon build_lexicon(const Corpus& corpus, double threshold, SymbolTable& symbols) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) throw ParameterError("lexicon threshold must lie in [0, 1]");
  if (corpus.empty()) throw ParameterError("cannot build a lexicon from an empty corpus");

  std::vector<std::string> order;
  std::unordered_map<std::string, ClassDistribution> counts;
  for (const auto& s : corpus.sentences()) {
    for (const auto& t : s.tokens) {
      auto tag = symbols.intern(t.tag);
      auto [it, fresh] = counts.try_emplace(t.word);
      if (fresh) order.push_back(t.word);
      it->second.add(tag);
    }
  }
  Lexicon lex;
  for (auto& word : order) {
    const auto& dist = counts.at(word);
    lex.insert(make_lexical_entry(std::move(word), dist, threshold, symbols));
  }
  return lex;
}

}  // namespace mbt

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mbt/binary_io.hpp"
#include "mbt/casebase.hpp"
#include "mbt/corpus.hpp"

namespace mbt {

struct LexicalEntry {
  std::string word;
  ClassDistribution tag_counts;  // gold tag frequencies before filtering
  std::vector<Symbol> tags;      // surviving tags, most frequent first
  Symbol ambiguous_tag;          // surviving tags joined by '-'

  bool ambiguous() const noexcept { return tags.size() > 1; }
  bool operator==(const LexicalEntry&) const = default;
};

/// Builds an entry from raw tag counts: tags whose share of the word's
/// tokens is below `threshold` are dropped, but the most frequent tag always
/// survives. Survivors are ordered by the global tie rule and their texts
/// joined by '-' into the ambiguous tag, which is interned.
LexicalEntry make_lexical_entry(std::string word, const ClassDistribution& counts, double threshold,
                                SymbolTable& symbols);

class Lexicon {
 public:
  /// Adds or replaces the entry for entry.word.
  void insert(LexicalEntry entry);
  const LexicalEntry* find(std::string_view word) const;

  /// Entries in order of first occurrence in the training corpus.
  const std::vector<LexicalEntry>& entries() const noexcept { return entries_; }

  std::size_t type_count() const noexcept { return entries_.size(); }
  std::size_t ambiguous_type_count() const;
  double ambiguous_type_fraction() const;
  /// Share of training tokens whose word type is ambiguous.
  double ambiguous_token_fraction() const;
  /// Every single gold tag seen plus every synthesized ambiguous tag,
  /// sorted by id.
  std::vector<Symbol> ambiguous_tagset() const;

  void write(BinaryWriter& out) const;
  static Lexicon read(BinaryReader& in, const SymbolTable& symbols);

  bool operator==(const Lexicon& other) const { return entries_ == other.entries_; }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept { return std::hash<std::string_view>{}(s); }
  };
  std::vector<LexicalEntry> entries_;
  std::unordered_map<std::string, std::size_t, Hash, std::equal_to<>> index_;
};

/// Counts word/tag co-occurrences over `corpus` and builds one entry per word
/// type. Throws ParameterError for a threshold outside [0, 1].
Lexicon build_lexicon(const Corpus& corpus, double threshold, SymbolTable& symbols);

}  // namespace mbt
